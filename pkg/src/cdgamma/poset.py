"""Graded posets with a bottom and a top element.

Posets are immutable.  Elements are arbitrary hashable ids; face lattices use
frozensets of vertex names so that ids are canonical.
"""

from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass, field
from functools import cached_property
from itertools import combinations
from typing import Hashable, Iterable

from .errors import (
    BoundaryNotContainedError,
    CycleError,
    NoBoundedStructureError,
    NotGradedError,
)

__all__ = [
    "GradedPoset",
    "SimplicialComplex",
    "VertexFacetIncidence",
    "build_from_covers",
    "face_lattice",
    "mobius",
    "is_eulerian",
    "ordinal_sum",
    "join",
    "suspension",
    "dual",
    "cap_ball",
    "order_complex",
    "sort_key",
]


def sort_key(x):
    """Total order on mixed ids (ints, strings, tuples, frozensets)."""
    if isinstance(x, bool):
        return (0, int(x))
    if isinstance(x, int):
        return (0, x)
    if isinstance(x, str):
        return (1, x)
    if isinstance(x, (frozenset, set)):
        return (2, len(x), tuple(sorted((sort_key(v) for v in x))))
    if isinstance(x, tuple):
        return (3, tuple(sort_key(v) for v in x))
    return (4, repr(x))


class GradedPoset:
    """A finite graded poset with unique minimum and maximum.

    Use :func:`build_from_covers` rather than calling the constructor with
    unvalidated data.
    """

    def __init__(self, elements, covers, rank, bottom, top, name=None):
        self.elements = frozenset(elements)
        self.covers = frozenset(covers)
        self.rank = dict(rank)
        self.bottom = bottom
        self.top = top
        self.name = name

    def __repr__(self):
        label = f" {self.name!r}" if self.name else ""
        return f"<GradedPoset{label} rank={self.n + 1} size={len(self.elements)}>"

    def __len__(self):
        return len(self.elements)

    def __eq__(self, other):
        if not isinstance(other, GradedPoset):
            return NotImplemented
        return (self.elements, self.covers, self.bottom, self.top) == (
            other.elements, other.covers, other.bottom, other.top)

    def __hash__(self):
        return hash((self.elements, self.covers, self.bottom, self.top))

    def __getstate__(self):
        # cached properties are cheap to rebuild and bulky to pickle
        return {k: self.__dict__[k] for k in
                ("elements", "covers", "rank", "bottom", "top", "name")}

    def __setstate__(self, state):
        self.__dict__.update(state)

    @property
    def n(self) -> int:
        """``rank(top) - 1``; flags are indexed by subsets of ``[n]``."""
        return self.rank[self.top] - 1

    @cached_property
    def upper_covers(self) -> dict:
        up = {x: set() for x in self.elements}
        for a, b in self.covers:
            up[a].add(b)
        return {x: frozenset(v) for x, v in up.items()}

    @cached_property
    def lower_covers(self) -> dict:
        down = {x: set() for x in self.elements}
        for a, b in self.covers:
            down[b].add(a)
        return {x: frozenset(v) for x, v in down.items()}

    @cached_property
    def levels(self) -> list:
        """Elements grouped by rank, each level in canonical order."""
        out = [[] for _ in range(self.rank[self.top] + 1)]
        for x in self.elements:
            out[self.rank[x]].append(x)
        for lev in out:
            lev.sort(key=sort_key)
        return out

    @cached_property
    def down_sets(self) -> dict:
        """``x -> frozenset`` of all ``y <= x``."""
        result = {}
        for lev in self.levels:
            for x in lev:
                acc = {x}
                for y in self.lower_covers[x]:
                    acc |= result[y]
                result[x] = frozenset(acc)
        return result

    @cached_property
    def up_sets(self) -> dict:
        result = {}
        for lev in reversed(self.levels):
            for x in lev:
                acc = {x}
                for y in self.upper_covers[x]:
                    acc |= result[y]
                result[x] = frozenset(acc)
        return result

    def leq(self, x, y) -> bool:
        return x in self.down_sets[y]

    def interval(self, x, y) -> frozenset:
        return self.up_sets[x] & self.down_sets[y]

    def proper_part(self) -> frozenset:
        return self.elements - {self.bottom, self.top}

    def coatoms(self) -> list:
        return sorted(self.lower_covers[self.top], key=sort_key)

    def atoms(self) -> list:
        return sorted(self.upper_covers[self.bottom], key=sort_key)

    def relabel(self, mapping) -> "GradedPoset":
        """Return an isomorphic poset with ids ``mapping[x]``."""
        return GradedPoset(
            (mapping[x] for x in self.elements),
            ((mapping[a], mapping[b]) for a, b in self.covers),
            {mapping[x]: r for x, r in self.rank.items()},
            mapping[self.bottom], mapping[self.top], self.name)


def build_from_covers(elements: Iterable[Hashable], covers, bottom=None,
                      top=None, name=None) -> GradedPoset:
    """Validate cover relations and return a :class:`GradedPoset`.

    Ranks are recomputed from longest chains.  ``bottom``/``top`` are checked
    against the unique minimal/maximal elements when given.
    """
    covers = {(a, b) for a, b in covers}
    elems = set(elements)
    for a, b in covers:
        elems.add(a)
        elems.add(b)
    if not elems:
        raise NoBoundedStructureError("empty poset")
    up = defaultdict(set)
    indeg = {x: 0 for x in elems}
    for a, b in covers:
        if a == b:
            raise CycleError(f"self-cover on {a!r}")
        up[a].add(b)
        indeg[b] += 1

    minimal = [x for x in elems if indeg[x] == 0]
    maximal = [x for x in elems if not up[x]]
    if len(minimal) != 1 or len(maximal) != 1:
        raise NoBoundedStructureError(
            f"{len(minimal)} minimal and {len(maximal)} maximal elements")
    if bottom is not None and minimal[0] != bottom:
        raise NoBoundedStructureError(f"{bottom!r} is not the unique minimum")
    if top is not None and maximal[0] != top:
        raise NoBoundedStructureError(f"{top!r} is not the unique maximum")
    bottom, top = minimal[0], maximal[0]

    # Kahn order; leftover elements lie on a cycle
    rank = {bottom: 0}
    queue = [bottom]
    remaining = dict(indeg)
    seen = 0
    while queue:
        x = queue.pop()
        seen += 1
        for y in up[x]:
            rank[y] = max(rank.get(y, 0), rank[x] + 1)
            remaining[y] -= 1
            if remaining[y] == 0:
                queue.append(y)
    if seen != len(elems):
        raise CycleError("cover relation contains a cycle")

    for a, b in covers:
        if rank[b] != rank[a] + 1:
            raise NotGradedError(
                f"cover {a!r} < {b!r} jumps from rank {rank[a]} to {rank[b]}")
    return GradedPoset(elems, covers, rank, bottom, top, name)


@dataclass(frozen=True)
class VertexFacetIncidence:
    vertices: tuple
    facets: tuple

    def __post_init__(self):
        facets = tuple(frozenset(f) for f in self.facets)
        object.__setattr__(self, "facets", facets)
        object.__setattr__(self, "vertices", tuple(self.vertices))
        vs = set(self.vertices)
        for f in facets:
            if not f:
                raise ValueError("empty facet")
            if not f <= vs:
                raise ValueError(f"facet {sorted(f, key=sort_key)} uses unknown vertices")
        if set().union(*facets) != vs:
            raise ValueError("some vertex lies in no facet")
        for f, g in combinations(facets, 2):
            if f <= g or g <= f:
                raise ValueError("one facet contains another")


def face_lattice(inc: VertexFacetIncidence, name=None) -> GradedPoset:
    """Face lattice of a polytope boundary from its vertex-facet incidence.

    Proper faces are the intersections of facet subsets; the bottom is the
    empty set and the top is the full vertex set.  Upper covers of a face are
    the minimal closures of the face plus one vertex.
    """
    facets = list(inc.facets)
    top = frozenset(inc.vertices)
    on = {v: frozenset(i for i, f in enumerate(facets) if v in f) for v in top}
    all_idx = frozenset(range(len(facets)))

    def closure(idx):
        if not idx:
            return top
        return frozenset.intersection(*(facets[i] for i in idx))

    def containing(face):
        idx = all_idx
        for v in face:
            idx = idx & on[v]
        return idx

    bottom = frozenset()
    faces = {bottom}
    covers = set()
    frontier = [bottom]
    while frontier:
        nxt = []
        for f in frontier:
            if f == top:
                continue
            base = containing(f)
            cands = {closure(base & on[v]) for v in top - f}
            for g in cands:
                if any(h < g for h in cands):
                    continue
                covers.add((f, g))
                if g not in faces:
                    faces.add(g)
                    nxt.append(g)
        frontier = nxt
    return build_from_covers(faces, covers, bottom, top, name=name)


def mobius(p: GradedPoset) -> dict:
    """Mobius function as ``{(x, y): mu}`` over all pairs ``x <= y``."""
    mu = {}
    for x in p.elements:
        above = sorted(p.up_sets[x], key=lambda z: p.rank[z])
        for y in above:
            if y == x:
                mu[x, y] = 1
                continue
            mu[x, y] = -sum(mu[x, z] for z in p.interval(x, y) if z != y)
    return mu


def is_eulerian(p: GradedPoset) -> bool:
    mu = mobius(p)
    return all(m == (-1) ** (p.rank[y] - p.rank[x]) for (x, y), m in mu.items())


def _tagged(p: GradedPoset, tag, drop) -> tuple:
    elems = [x for x in p.elements if x not in drop]
    covers = [(a, b) for a, b in p.covers if a not in drop and b not in drop]
    return ([(tag, x) for x in elems], [((tag, a), (tag, b)) for a, b in covers])


def ordinal_sum(q1: GradedPoset, q2: GradedPoset, name=None) -> GradedPoset:
    """``q1 + q2``: everything in ``q1`` lies below everything in ``q2``."""
    e1, c1 = _tagged(q1, 0, ())
    e2, c2 = _tagged(q2, 1, ())
    covers = c1 + c2 + [((0, q1.top), (1, q2.bottom))]
    return build_from_covers(e1 + e2, covers, name=name)


def join(q1: GradedPoset, q2: GradedPoset, name=None) -> GradedPoset:
    """``(q1 - top) + (q2 - bottom)``.

    Ids are tagged ``(0, x)`` and ``(1, y)``.
    """
    e1, c1 = _tagged(q1, 0, {q1.top})
    e2, c2 = _tagged(q2, 1, {q2.bottom})
    low = q1.lower_covers[q1.top] or {q1.bottom}
    high = q2.upper_covers[q2.bottom] or {q2.top}
    cross = [((0, a), (1, b)) for a in low for b in high]
    return build_from_covers(e1 + e2, c1 + c2 + cross, name=name)


def boolean_lattice(m: int, name=None) -> GradedPoset:
    """Subsets of ``{1..m}`` ordered by inclusion."""
    ground = range(1, m + 1)
    subsets = [frozenset(c) for r in range(m + 1) for c in combinations(ground, r)]
    covers = [(s, s | {i}) for s in subsets for i in ground if i not in s]
    return build_from_covers(subsets, covers, name=name or f"B{m}")


def suspension(q: GradedPoset, name=None) -> GradedPoset:
    return join(q, boolean_lattice(2), name=name)


def dual(p: GradedPoset, name=None) -> GradedPoset:
    return build_from_covers(p.elements, ((b, a) for a, b in p.covers), name=name)


def cap_ball(ambient: GradedPoset, ball_faces, boundary_faces,
             new_cell="cap", name=None) -> GradedPoset:
    """Close a ball into a sphere by adding one cell over its boundary.

    ``ball_faces`` and ``boundary_faces`` are sets of proper faces of
    ``ambient``; the ambient bottom and top are reused for the result.
    """
    ball = set(ball_faces) - {ambient.bottom, ambient.top}
    bnd = set(boundary_faces) - {ambient.bottom, ambient.top}
    if not bnd <= ball:
        raise BoundaryNotContainedError("boundary faces outside the ball")
    if new_cell in ambient.elements:
        raise ValueError(f"id {new_cell!r} already used")
    if not bnd and any(ambient.rank[x] > 1 for x in ball):
        raise BoundaryNotContainedError(
            "empty boundary on a ball of positive dimension (a sphere cannot be capped)")
    keep = ball | {ambient.bottom}
    covers = {(a, b) for a, b in ambient.covers if a in keep and b in ball}
    maximal_ball = [x for x in ball if not (ambient.upper_covers[x] & ball)]
    maximal_bnd = [x for x in bnd if not (ambient.upper_covers[x] & bnd)]
    covers |= {(x, ambient.top) for x in maximal_ball}
    covers |= {(x, new_cell) for x in (maximal_bnd or [ambient.bottom])}
    covers.add((new_cell, ambient.top))
    return build_from_covers(keep | {new_cell, ambient.top}, covers,
                             ambient.bottom, ambient.top, name=name)


@dataclass(frozen=True)
class SimplicialComplex:
    """Downward-closed family of vertex sets, always containing the empty set."""

    faces: frozenset = field(default_factory=lambda: frozenset({frozenset()}))

    @classmethod
    def from_facets(cls, facets) -> "SimplicialComplex":
        faces = {frozenset()}
        for f in facets:
            f = tuple(f)
            for r in range(len(f) + 1):
                faces.update(frozenset(c) for c in combinations(f, r))
        return cls(frozenset(faces))

    def __post_init__(self):
        faces = frozenset(frozenset(f) for f in self.faces) | {frozenset()}
        object.__setattr__(self, "faces", faces)
        for f in faces:
            for v in f:
                if f - {v} not in faces:
                    raise ValueError("family is not downward closed")

    @property
    def vertices(self) -> list:
        return sorted((v for f in self.faces if len(f) == 1 for v in f), key=sort_key)

    @property
    def dimension(self) -> int:
        return max(len(f) for f in self.faces) - 1

    def f_vector(self) -> list:
        """``(f_{-1}, f_0, ..., f_{d})``."""
        out = [0] * (self.dimension + 2)
        for f in self.faces:
            out[len(f)] += 1
        return out

    def facets(self) -> list:
        maximal = [f for f in self.faces
                   if not any(f < g for g in self.faces if len(g) == len(f) + 1)]
        return sorted(maximal, key=sort_key)


def order_complex(p: GradedPoset) -> SimplicialComplex:
    """Chains of the proper part of ``p``, including the empty chain."""
    proper = p.proper_part()
    faces = [frozenset()]

    def extend(chain, last):
        for y in p.up_sets[last]:
            if y in proper and y != last:
                new = chain | {y}
                faces.append(new)
                extend(new, y)

    for x in proper:
        faces.append(frozenset({x}))
        extend(frozenset({x}), x)
    return SimplicialComplex(frozenset(faces))

"""Colored simplicial complexes and Frankl-Furedi-Kalai realizability.

The compression model places vertices on ``0, 1, 2, ...`` with vertex ``v``
colored ``v mod k``.  A face is admissible when its vertices have pairwise
distinct residues.  Compression takes, for every size ``i``, the first
``f_{i-1}`` admissible ``i``-sets in colex order; a vector is k-FFK exactly
when that family is closed under taking subsets.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from itertools import combinations, count, islice

from .errors import (
    BudgetExceededError,
    CollapseCollisionError,
    ImproperColoringError,
    NotDominatedError,
    NotKFFKError,
    TooManyLevelsError,
)
from .flags import all_subsets
from .poset import SimplicialComplex, sort_key
from .words import WordPolynomial, specialize_c1

__all__ = [
    "ColoredComplex",
    "CompressedFamily",
    "rainbow_colex",
    "ffk_compress",
    "is_k_ffk",
    "is_k_ffk_bruteforce",
    "double_complex",
    "ffk_extend",
    "Verdict",
    "is_k_good_witnessed",
    "greedy_primitive_split",
    "color_collapse",
]


class ColoredComplex:
    """A simplicial complex with a proper vertex coloring into ``[k]``."""

    def __init__(self, complex_: SimplicialComplex, colors: dict, k: int):
        self.complex = complex_
        self.colors = dict(colors)
        self.k = k
        for v in complex_.vertices:
            if v not in self.colors:
                raise ImproperColoringError(f"vertex {v!r} has no color")
            if not 1 <= self.colors[v] <= k:
                raise ImproperColoringError(f"color {self.colors[v]} of {v!r} outside [1, {k}]")
        for f in complex_.faces:
            if len(f) == 2:
                x, y = tuple(f)
                if self.colors[x] == self.colors[y]:
                    raise ImproperColoringError(f"edge {{{x!r}, {y!r}}} is monochromatic")

    @classmethod
    def from_facets(cls, facets, colors, k):
        return cls(SimplicialComplex.from_facets(facets), colors, k)

    @property
    def faces(self):
        return self.complex.faces

    def __repr__(self):
        return f"<ColoredComplex k={self.k} f={self.f_vector()}>"

    def f_vector(self) -> list:
        return self.complex.f_vector()

    def color_set(self, face) -> frozenset:
        return frozenset(self.colors[v] for v in face)

    def flag_f_by_color(self) -> dict:
        counts = Counter(self.color_set(f) for f in self.faces)
        return {s: counts.get(s, 0) for s in all_subsets(self.k)}


@dataclass(frozen=True)
class CompressedFamily:
    k: int
    levels: tuple  # levels[i] = tuple of sorted i-tuples

    def vertices(self) -> tuple:
        return tuple(v for (v,) in self.levels[1]) if len(self.levels) > 1 else ()

    def is_downward_closed(self) -> bool:
        present = [set(lev) for lev in self.levels]
        for i in range(2, len(self.levels)):
            for face in self.levels[i]:
                for sub in combinations(face, i - 1):
                    if sub not in present[i - 1]:
                        return False
        return True

    def to_colored_complex(self) -> ColoredComplex:
        faces = {frozenset(f) for lev in self.levels for f in lev}
        verts = {v for f in faces for v in f}
        colors = {v: v % self.k + 1 for v in verts}
        return ColoredComplex(SimplicialComplex(frozenset(faces)), colors, self.k)


def _rainbow_below(size, bound, k, used):
    # admissible `size`-sets inside range(bound) avoiding residues in `used`, colex order
    if size == 0:
        yield ()
        return
    for top in range(size - 1, bound):
        r = top % k
        if r in used:
            continue
        for rest in _rainbow_below(size - 1, top, k, used | {r}):
            yield rest + (top,)


def rainbow_colex(size: int, k: int):
    """Admissible ``size``-subsets of the naturals, in colex order (infinite)."""
    if size == 0:
        yield ()
        return
    if size > k:
        return
    for top in count(size - 1):
        for rest in _rainbow_below(size - 1, top, k, frozenset({top % k})):
            yield rest + (top,)


def ffk_compress(fvec, k: int) -> CompressedFamily:
    fvec = [int(v) for v in fvec]
    if not fvec or fvec[0] != 1:
        raise ValueError("f-vector must start with f_{-1} = 1")
    if any(v < 0 for v in fvec):
        raise ValueError("f-vector entries must be nonnegative")
    for i, v in enumerate(fvec):
        if i > k and v > 0:
            raise TooManyLevelsError(f"{v} faces of size {i} need more than {k} colors")
    levels = [((),)]
    for i in range(1, len(fvec)):
        levels.append(tuple(islice(rainbow_colex(i, k), fvec[i])) if fvec[i] else ())
    return CompressedFamily(k, tuple(levels))


def is_k_ffk(fvec, k: int) -> bool:
    fvec = [int(v) for v in fvec]
    if not fvec or fvec[0] != 1 or any(v < 0 for v in fvec):
        return False
    try:
        family = ffk_compress(fvec, k)
    except TooManyLevelsError:
        return False
    return family.is_downward_closed()


def is_k_ffk_bruteforce(fvec, k: int, budget: int = 1_000_000) -> bool:
    """Exhaustive search for a k-colored complex with f-vector ``fvec``.

    Color classes are enumerated up to permutation of colors; each higher
    level is chosen among rainbow sets whose facets were already chosen.
    """
    fvec = [int(v) for v in fvec]
    while len(fvec) > 1 and fvec[-1] == 0:
        fvec.pop()
    if not fvec or fvec[0] != 1 or any(v < 0 for v in fvec):
        return False
    if len(fvec) == 1:
        return True
    nverts = fvec[1]
    if len(fvec) - 1 > k:
        return False
    steps = [0]

    def tick():
        steps[0] += 1
        if steps[0] > budget:
            raise BudgetExceededError(f"more than {budget} search nodes")

    def extend(level, chosen, colors):
        if level == len(fvec):
            return True
        prev = set(chosen)
        cands = []
        for base in chosen:
            for v in range(nverts):
                if v > base[-1] and colors[v] not in {colors[u] for u in base}:
                    face = base + (v,)
                    if all(sub in prev for sub in combinations(face, level - 1)):
                        cands.append(face)
        if len(cands) < fvec[level]:
            return False
        for pick in combinations(cands, fvec[level]):
            tick()
            if extend(level + 1, pick, colors):
                return True
        return False

    for sizes in _partitions(nverts, k):
        tick()
        colors = [c for c, s in enumerate(sizes) for _ in range(s)]
        if extend(2, [(v,) for v in range(nverts)], colors):
            return True
    return False


def _partitions(total, parts, cap=None):
    # nonincreasing tuples of at most `parts` positive integers summing to total
    if cap is None:
        cap = total
    if total == 0:
        yield ()
        return
    if parts == 0:
        return
    for first in range(min(total, cap), 0, -1):
        for rest in _partitions(total - first, parts - 1, first):
            yield (first,) + rest


def double_complex(cc: ColoredComplex) -> ColoredComplex:
    """Replace every vertex ``v`` by ``('x', v)`` and ``('y', v)``.

    Faces are ``x_G | y_{F-G}`` for ``G <= F`` in the original complex, so
    ``f_{i-1}`` gets multiplied by ``2^i``.
    """
    faces = set()
    for f in cc.faces:
        verts = sorted(f, key=sort_key)
        for r in range(len(verts) + 1):
            for g in combinations(verts, r):
                faces.add(frozenset([("x", v) for v in g] +
                                    [("y", v) for v in verts if v not in g]))
    colors = {}
    for v, c in cc.colors.items():
        colors["x", v] = c
        colors["y", v] = c
    return ColoredComplex(SimplicialComplex(frozenset(faces)), colors, cc.k)


def _pad(vec, length):
    return list(vec) + [0] * (length - len(vec))


def ffk_extend(phi_delta, summands, k: int) -> ColoredComplex:
    """Cone compressed subcomplexes over new vertices of color ``k + 1``.

    ``phi_delta`` and every summand are f-vectors; each summand must be
    k-FFK and coefficientwise at most ``phi_delta``.  The result has f-vector
    ``phi_delta + shift(sum of summands)``.
    """
    phi_delta = [int(v) for v in phi_delta]
    if not is_k_ffk(phi_delta, k):
        raise NotKFFKError(f"{phi_delta} is not {k}-FFK")
    base = ffk_compress(phi_delta, k)
    faces = {frozenset(f) for lev in base.levels for f in lev}
    colors = {v: v % k + 1 for f in faces for v in f} if k else {}
    for j, summand in enumerate(summands, start=1):
        summand = [int(v) for v in summand]
        if not is_k_ffk(summand, k):
            raise NotKFFKError(f"summand {summand} is not {k}-FFK")
        width = max(len(summand), len(phi_delta))
        if any(s > p for s, p in zip(_pad(summand, width), _pad(phi_delta, width))):
            raise NotDominatedError(f"summand {summand} exceeds {phi_delta}")
        apex = f"v{j}"
        colors[apex] = k + 1
        for lev in ffk_compress(summand, k).levels:
            for f in lev:
                faces.add(frozenset(f) | {apex})
    return ColoredComplex(SimplicialComplex(frozenset(faces)), colors, k + 1)


@dataclass(frozen=True)
class Verdict:
    ok: bool
    reason: str = ""

    def __bool__(self):
        return self.ok


def is_k_good_witnessed(summands, phi: WordPolynomial, k: int) -> Verdict:
    """Check a witness that a sum of primitive polynomials is k-good for ``phi``."""
    target = specialize_c1(phi) if phi else [0]
    for idx, psi in enumerate(summands):
        if not isinstance(psi, WordPolynomial):
            psi = WordPolynomial("cd", {"": int(psi)})
        deg = psi.degree
        if psi["c" * deg] != 1:
            return Verdict(False, f"summand {idx} is not primitive")
        delta = specialize_c1(psi)
        if not is_k_ffk(delta, k):
            return Verdict(False, f"summand {idx} is not {k}-FFK")
        width = max(len(delta), len(target))
        if any(s > t for s, t in zip(_pad(delta, width), _pad(target, width))):
            return Verdict(False, f"summand {idx} is not dominated")
    return Verdict(True)


def greedy_primitive_split(psi: WordPolynomial) -> list | None:
    """Split ``psi`` into primitive summands, spreading non-c-power terms evenly.

    Returns None when ``psi`` has negative coefficients or its c-power
    coefficient is too small to carry the remaining terms.
    """
    if any(v < 0 for v in psi.terms.values()):
        return None
    deg = psi.degree
    lead = psi["c" * deg]
    rest = [(w, v) for w, v in sorted(psi.terms.items()) if w != "c" * deg]
    if lead == 0:
        return [] if not rest else None
    parts = [dict({"c" * deg: 1}) for _ in range(lead)]
    loads = [0] * lead
    for w, v in rest:
        for _ in range(v):
            j = min(range(lead), key=lambda i: (loads[i], i))
            parts[j][w] = parts[j].get(w, 0) + 1
            loads[j] += 1
    return [WordPolynomial("cd", p) for p in parts]


def color_collapse(cc: ColoredComplex) -> ColoredComplex:
    """Recolor ``c -> floor((c + 1) / 2)``, merging colors ``2j-1`` and ``2j``."""
    colors = {v: (c + 1) // 2 for v, c in cc.colors.items()}
    for f in cc.faces:
        if len(f) == 2:
            x, y = tuple(f)
            if colors[x] == colors[y]:
                raise CollapseCollisionError(
                    f"edge {{{x!r}, {y!r}}} with colors {cc.colors[x]}, {cc.colors[y]}")
    return ColoredComplex(cc.complex, colors, (cc.k + 1) // 2)

"""Stanley's cd-index recursion along an explicit facet order of a sphere.

Regions are sets of proper faces of the ambient face poset, closed under
going down.  A ball is turned into a sphere by capping it with one new cell
over its boundary.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property

from .errors import IndexOutOfRangeError, NotPureError
from .poset import GradedPoset, build_from_covers, cap_ball, sort_key
from .words import WordPolynomial, cd_index, dominates

__all__ = [
    "ShellingOrder",
    "BallRegion",
    "omega",
    "boundary",
    "gamma_region",
    "capped_cd",
    "sphere_cd",
    "StanleyStep",
    "stanley_step",
    "verify_stanley_step",
    "verify_c2_lower_bound",
    "telescoped_cd",
    "builtin_shelling",
]

C = WordPolynomial("cd", {"c": 1})
D = WordPolynomial("cd", {"d": 1})


@dataclass(frozen=True, eq=False)
class ShellingOrder:
    poset: GradedPoset
    order: tuple

    def __post_init__(self):
        order = tuple(self.order)
        object.__setattr__(self, "order", order)
        coatoms = set(self.poset.lower_covers[self.poset.top])
        if len(order) != len(set(order)) or set(order) != coatoms:
            raise ValueError("order must list every facet exactly once")

    @property
    def r(self) -> int:
        return len(self.order)

    def closure(self, facet) -> frozenset:
        return self.poset.down_sets[facet] - {self.poset.bottom}


@dataclass(frozen=True, eq=False)
class BallRegion:
    faces: frozenset
    ambient: GradedPoset

    def __post_init__(self):
        faces = frozenset(self.faces) - {self.ambient.bottom, self.ambient.top}
        object.__setattr__(self, "faces", faces)
        for x in faces:
            if not self.ambient.lower_covers[x] - {self.ambient.bottom} <= faces:
                raise ValueError(f"region is not closed downward at {x!r}")

    def __eq__(self, other):
        if not isinstance(other, BallRegion):
            return NotImplemented
        return self.faces == other.faces and self.ambient is other.ambient

    def __hash__(self):
        return hash(self.faces)

    def __len__(self):
        return len(self.faces)

    @cached_property
    def maximal(self) -> list:
        up = self.ambient.upper_covers
        return sorted((x for x in self.faces if not up[x] & self.faces), key=sort_key)

    def dimension(self) -> int:
        """Topological dimension; -1 for the empty region."""
        if not self.faces:
            return -1
        return max(self.ambient.rank[x] for x in self.faces) - 1


def _closure(p: GradedPoset, elems) -> frozenset:
    out = set()
    for x in elems:
        out |= p.down_sets[x]
    return frozenset(out - {p.bottom})


def omega(so: ShellingOrder, i: int) -> BallRegion:
    """Union of the closed facets ``sigma_1 .. sigma_i`` (``1 <= i <= r-1``)."""
    if not 1 <= i <= so.r - 1:
        raise IndexOutOfRangeError(f"i = {i} outside [1, {so.r - 1}]")
    return BallRegion(_closure(so.poset, so.order[:i]), so.poset)


def boundary(region: BallRegion) -> BallRegion:
    """Closure of the codimension-one faces lying in exactly one maximal face."""
    p = region.ambient
    if not region.faces:
        return region
    ranks = {p.rank[x] for x in region.maximal}
    if len(ranks) != 1:
        raise NotPureError(f"maximal faces have ranks {sorted(ranks)}")
    top_rank = ranks.pop()
    maximal = set(region.maximal)
    ridges = [x for x in region.faces if p.rank[x] == top_rank - 1
              and len(p.upper_covers[x] & maximal) == 1]
    return BallRegion(_closure(p, ridges), p)


def gamma_region(so: ShellingOrder, j: int) -> BallRegion:
    """Closure of the part of the boundary of ``sigma_j`` outside ``Omega_{j-1}``."""
    if not 2 <= j <= so.r - 1:
        raise IndexOutOfRangeError(f"j = {j} outside [2, {so.r - 1}]")
    facet = so.order[j - 1]
    bnd = so.closure(facet) - {facet}
    prev = omega(so, j - 1).faces
    return BallRegion(_closure(so.poset, bnd - prev), so.poset)


def capped_cd(region: BallRegion, jobs: int = 1) -> WordPolynomial:
    """cd-index of the sphere obtained by capping the ball ``region``."""
    bnd = boundary(region)
    capped = cap_ball(region.ambient, region.faces, bnd.faces, new_cell=("cap",))
    return cd_index(capped, jobs=jobs)


def sphere_cd(region: BallRegion, jobs: int = 1) -> WordPolynomial:
    """cd-index of ``region`` viewed as a sphere on its own.

    The empty region is the sphere ``{emptyset}`` with cd-index 1.
    """
    p = region.ambient
    keep = region.faces | {p.bottom}
    covers = {(a, b) for a, b in p.covers if a in keep and b in region.faces}
    covers |= {(x, p.top) for x in (region.maximal or [p.bottom])}
    sub = build_from_covers(keep | {p.top}, covers, p.bottom, p.top)
    return cd_index(sub, jobs=jobs)


@dataclass(frozen=True)
class StanleyStep:
    """Both sides of one step of the recursion, all as cd-polynomials."""

    i: int
    before: WordPolynomial       # Phi of Omega_i capped
    after: WordPolynomial        # Phi of Omega_{i+1} capped
    gamma_capped: WordPolynomial  # Phi of Gamma_{i+1} capped
    gamma_boundary: WordPolynomial  # Phi of the boundary of Gamma_{i+1}

    @property
    def psi(self) -> WordPolynomial:
        """``Phi(Gamma') - Phi(Suspension of boundary Gamma)``."""
        return self.gamma_capped - self.gamma_boundary * C

    @property
    def increment(self) -> WordPolynomial:
        return self.psi * C + self.gamma_boundary * D

    @property
    def predicted(self) -> WordPolynomial:
        return self.before + self.increment

    @property
    def holds(self) -> bool:
        return self.predicted == self.after


def stanley_step(so: ShellingOrder, i: int) -> StanleyStep:
    if not 1 <= i <= so.r - 2:
        raise IndexOutOfRangeError(f"i = {i} outside [1, {so.r - 2}]")
    gam = gamma_region(so, i + 1)
    return StanleyStep(
        i=i,
        before=capped_cd(omega(so, i)),
        after=capped_cd(omega(so, i + 1)),
        gamma_capped=capped_cd(gam),
        gamma_boundary=sphere_cd(boundary(gam)),
    )


def verify_stanley_step(so: ShellingOrder, i: int) -> bool:
    return stanley_step(so, i).holds


def verify_c2_lower_bound(so: ShellingOrder, i: int) -> bool:
    """``Phi(Omega_i capped) >= Phi(boundary Gamma_{i+1}) * c^2`` coefficientwise."""
    if not 2 <= i <= so.r - 2:
        raise IndexOutOfRangeError(f"i = {i} outside [2, {so.r - 2}]")
    lhs = capped_cd(omega(so, i))
    rhs = sphere_cd(boundary(gamma_region(so, i + 1))) * C * C
    return dominates(lhs, rhs)


def telescoped_cd(so: ShellingOrder) -> WordPolynomial:
    """Run the recursion from ``Omega_1`` using only the right-hand sides."""
    phi = capped_cd(omega(so, 1))
    for i in range(1, so.r - 1):
        gam = gamma_region(so, i + 1)
        gb = sphere_cd(boundary(gam))
        phi = phi + (capped_cd(gam) - gb * C) * C + gb * D
    return phi


def builtin_shelling(kind: str, n: int) -> ShellingOrder:
    """Fixture facet orders for the built-in polytopes.

    ``simplex``: facets in canonical order (every order is a shelling).
    ``polygon``: edges around the cycle.  ``cube``: ``x1=0, .., xn=0,
    xn=1, .., x1=1``.  ``crosspoly``: sign vectors in lex order with + first.
    """
    from . import polytopes

    if kind == "simplex":
        p = polytopes.simplex(n)
        order = p.coatoms()
    elif kind == "polygon":
        p = polytopes.polygon(n)
        order = [frozenset({i, i % n + 1}) for i in range(1, n + 1)]
    elif kind == "cube":
        p = polytopes.cube(n)
        inc = polytopes.cube_incidence(n)
        by_fix = {}
        for f in inc.facets:
            i = next(i for i in range(n) if len({v[i] for v in f}) == 1)
            by_fix[i, next(iter(f))[i]] = f
        order = [by_fix[i, "0"] for i in range(n)] + [by_fix[i, "1"] for i in reversed(range(n))]
    elif kind == "crosspoly":
        p = polytopes.crosspolytope(n)
        order = list(polytopes.crosspolytope_incidence(n).facets)
    else:
        raise ValueError(f"no built-in shelling for {kind!r}")
    return ShellingOrder(p, tuple(order))

"""Built-in polytopes given by vertex-facet incidence, and their face lattices."""

from itertools import combinations, product

from .poset import (
    GradedPoset,
    VertexFacetIncidence,
    boolean_lattice,
    build_from_covers,
    face_lattice,
    join,
    suspension,
)


def simplex_incidence(n: int) -> VertexFacetIncidence:
    """Boundary of the ``n``-simplex: vertices ``1..n+1``, facets all ``n``-subsets."""
    if n < 1:
        raise ValueError("simplex dimension must be >= 1")
    verts = tuple(range(1, n + 2))
    return VertexFacetIncidence(verts, tuple(combinations(verts, n)))


def cube_incidence(n: int) -> VertexFacetIncidence:
    """Vertices are 0/1 strings of length ``n``; facets fix one coordinate."""
    if n < 1:
        raise ValueError("cube dimension must be >= 1")
    verts = tuple("".join(bits) for bits in product("01", repeat=n))
    facets = []
    for i in range(n):
        for b in "01":
            facets.append(tuple(v for v in verts if v[i] == b))
    return VertexFacetIncidence(verts, tuple(facets))


def crosspolytope_incidence(n: int) -> VertexFacetIncidence:
    """Vertices ``p1, m1, ..., pn, mn`` (plus/minus unit vectors)."""
    if n < 1:
        raise ValueError("cross-polytope dimension must be >= 1")
    verts = tuple(f"{s}{i}" for i in range(1, n + 1) for s in "pm")
    facets = tuple(
        tuple(f"{s}{i}" for i, s in enumerate(signs, start=1))
        for signs in product("pm", repeat=n))
    return VertexFacetIncidence(verts, facets)


def polygon_incidence(m: int) -> VertexFacetIncidence:
    if m < 2:
        raise ValueError("polygon needs at least 2 vertices")
    verts = tuple(range(1, m + 1))
    if m == 2:
        # the digon is not a vertex-facet incidence of a polytope; see digon()
        raise ValueError("use digon() for m = 2")
    return VertexFacetIncidence(verts, tuple((i, i % m + 1) for i in verts))


def simplex(n: int) -> GradedPoset:
    return face_lattice(simplex_incidence(n), name=f"simplex{n}")


def cube(n: int) -> GradedPoset:
    return face_lattice(cube_incidence(n), name=f"cube{n}")


def crosspolytope(n: int) -> GradedPoset:
    return face_lattice(crosspolytope_incidence(n), name=f"crosspoly{n}")


def polygon(m: int) -> GradedPoset:
    return face_lattice(polygon_incidence(m), name=f"polygon{m}")


def digon() -> GradedPoset:
    """Two vertices joined by two edges (a 1-sphere with two cells)."""
    return join(boolean_lattice(2), boolean_lattice(2), name="digon")


def chain(length: int) -> GradedPoset:
    """The chain ``0 < 1 < ... < length``."""
    return build_from_covers(range(length + 1),
                             [(i, i + 1) for i in range(length)], name=f"chain{length}")


def empty_sphere() -> GradedPoset:
    """The face poset of ``{emptyset}``: a chain of rank 1, cd-index 1."""
    return chain(1)


def builtin(kind: str, *args) -> GradedPoset:
    table = {
        "simplex": simplex,
        "cube": cube,
        "crosspoly": crosspolytope,
        "polygon": polygon,
    }
    if kind == "suspension":
        return suspension(*args)
    if kind == "join":
        return join(*args)
    return table[kind](*args)


def golden_polytopes() -> list:
    """Polytopes whose cd-indices are pinned by the acceptance suite."""
    out = [simplex(n) for n in range(2, 7)]
    out += [cube(3), crosspolytope(3)]
    out += [polygon(m) for m in range(3, 9)]
    return out


def polytopes_up_to_rank(max_rank: int) -> list:
    """Every built-in polytope lattice of rank ``<= max_rank``."""
    out = [polygon(m) for m in range(3, 9)] if max_rank >= 3 else []
    for n in range(2, max_rank):
        out.append(simplex(n))
    for n in range(3, max_rank):
        out.append(cube(n))
        out.append(crosspolytope(n))
    return out

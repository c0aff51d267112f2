import json
from pathlib import Path

import pytest

from cdgamma.colored import greedy_primitive_split, is_k_ffk, is_k_good_witnessed
from cdgamma.errors import IndexOutOfRangeError
from cdgamma.poset import build_from_covers, suspension
from cdgamma.shelling import (
    BallRegion,
    ShellingOrder,
    boundary,
    builtin_shelling,
    capped_cd,
    gamma_region,
    omega,
    sphere_cd,
    stanley_step,
    telescoped_cd,
    verify_c2_lower_bound,
    verify_stanley_step,
)
from cdgamma.words import WordPolynomial, cd_index, specialize_c1, suffix_decompose, truncate

P = WordPolynomial.parse
C = P("c")

FIXTURES = [("simplex", n) for n in range(2, 6)] + [("cube", 3), ("cube", 4), ("crosspoly", 3),
            ("crosspoly", 4)] + [("polygon", m) for m in range(3, 9)]
IDS = [f"{k}{n}" for k, n in FIXTURES]
WITNESS_FILE = Path(__file__).parent / "fixtures" / "stanley_witnesses.json"


@pytest.fixture(scope="module", params=FIXTURES, ids=IDS)
def shelling(request):
    return builtin_shelling(*request.param)


def test_triangle_regions():
    so = builtin_shelling("polygon", 3)
    first = omega(so, 1)
    assert first.faces == {frozenset({1}), frozenset({2}), frozenset({1, 2})}
    assert boundary(first).faces == {frozenset({1}), frozenset({2})}
    assert capped_cd(first) == P("cc")
    assert capped_cd(omega(so, 2)) == P("cc + d")
    assert sphere_cd(boundary(first)) == C


def test_cube_first_facet():
    so = builtin_shelling("cube", 3)
    assert capped_cd(omega(so, 1)) == P("ccc + 2*dc")
    assert sphere_cd(boundary(omega(so, 1))) == P("cc + 2*d")


def test_empty_region_is_unit_sphere(triangle):
    assert sphere_cd(BallRegion(frozenset(), triangle)) == WordPolynomial.one()


def test_gamma_regions_of_cube():
    so = builtin_shelling("cube", 3)
    sizes = [len(gamma_region(so, j).maximal) for j in range(2, so.r)]
    # x2=0 meets x1=0 in one edge, x2=1 meets three earlier facets
    assert sizes == [3, 2, 2, 1]
    last = gamma_region(so, so.r - 1)
    assert len(boundary(last).faces) == 2


def test_cube_steps():
    so = builtin_shelling("cube", 3)
    psis = [stanley_step(so, i).psi for i in range(1, 5)]
    assert psis == [P("2*d"), P("d"), P("d"), WordPolynomial("cd")]


def test_index_ranges():
    so = builtin_shelling("polygon", 4)
    with pytest.raises(IndexOutOfRangeError):
        omega(so, 0)
    with pytest.raises(IndexOutOfRangeError):
        omega(so, so.r)
    with pytest.raises(IndexOutOfRangeError):
        gamma_region(so, 1)
    with pytest.raises(IndexOutOfRangeError):
        verify_c2_lower_bound(so, 1)
    with pytest.raises(IndexOutOfRangeError):
        stanley_step(so, so.r - 1)


def test_order_must_cover_all_facets(triangle):
    with pytest.raises(ValueError):
        ShellingOrder(triangle, triangle.coatoms()[:2])


def test_stanley_recursion(shelling):
    assert all(verify_stanley_step(shelling, i) for i in range(1, shelling.r - 1))


def test_c2_lower_bound(shelling):
    assert all(verify_c2_lower_bound(shelling, i) for i in range(2, shelling.r - 1))


def test_telescoping_gives_cd_index(shelling):
    assert telescoped_cd(shelling) == cd_index(shelling.poset)


def test_last_prefix_is_the_sphere(shelling):
    assert capped_cd(omega(shelling, shelling.r - 1)) == cd_index(shelling.poset)


def test_psi_terms_nonnegative(shelling):
    for i in range(1, shelling.r - 1):
        step = stanley_step(shelling, i)
        assert all(v >= 0 for v in step.psi.terms.values())
        assert all(v >= 0 for v in step.after.terms.values())


def test_every_prefix_delta_is_ffk(shelling):
    n = shelling.poset.n
    for i in range(1, shelling.r):
        assert is_k_ffk(specialize_c1(capped_cd(omega(shelling, i))), n // 2)


def test_suspension_of_region(shelling):
    # a region's boundary sphere, suspended, has cd-index Phi * c
    region = boundary(omega(shelling, 1))
    sub = shelling.poset
    keep = region.faces | {sub.bottom, sub.top}
    covers = {(a, b) for a, b in sub.covers if a in keep and b in region.faces}
    covers |= {(x, sub.top) for x in region.maximal}
    sphere = build_from_covers(keep, covers, sub.bottom, sub.top)
    assert cd_index(suspension(sphere)) == sphere_cd(region) * C


def _witness_data():
    return json.loads(WITNESS_FILE.read_text())


def test_witness_file_covers_fixtures():
    data = _witness_data()
    assert sorted(data) == sorted(IDS)


@pytest.mark.parametrize("name", IDS)
def test_stored_step_witnesses_are_k_good(name):
    so = builtin_shelling(*FIXTURES[IDS.index(name)])
    n = so.poset.n
    stored = _witness_data()[name]
    for i in range(1, so.r - 1):
        step = stanley_step(so, i)
        buckets = suffix_decompose(step.psi) if step.psi else {}
        parts = stored.get(str(i), {})
        assert {k for k, v in buckets.items() if k >= 2 and v} == {int(k) for k in parts}
        for key, strings in parts.items():
            k = int(key)
            summands = [P(s) for s in strings]
            assert sum(summands, WordPolynomial("cd")) == buckets[k]
            target = truncate(step.before, k - 2) + truncate(step.psi * C, k - 2)
            assert is_k_good_witnessed(summands, target, max(k // 2 - 1, 0)), (i, k)
        assert step.after.degree == n


@pytest.mark.parametrize("kind,n", FIXTURES, ids=IDS)
def test_sphere_buckets_are_good_and_truncations_ffk(kind, n):
    phi = cd_index(builtin_shelling(kind, n).poset)
    dim = phi.degree
    for k, part in suffix_decompose(phi).items():
        if k >= 2 and part:
            split = greedy_primitive_split(part)
            assert split is not None
            assert is_k_good_witnessed(split, truncate(phi, k - 2), max(k // 2 - 1, 0))
    for k in range(dim + 1):
        assert is_k_ffk(specialize_c1(truncate(phi, k)), k // 2)

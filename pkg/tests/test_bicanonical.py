import pytest
from hypothesis import given
from hypothesis import strategies as st

from quadcover.bicanonical import (
    MAIN_THEOREM,
    beta_surjective,
    factor_degree,
    genus2_pencil,
    graded_map,
    h1_pullback,
    h1_pullback_terms,
    image_projectively_normal,
    normal_generation,
    pushed_sections,
    singular_obstruction,
)
from quadcover.covers import ALL_TYPES, SINGULAR_TYPES, SMOOTH_TYPES, invariants, iter_covers, make_cover, y_splitting
from quadcover.divisors import Divisor

SMOOTH = list(iter_covers(6, SMOOTH_TYPES))


def test_pushed_sections_type1():
    ps = pushed_sections(make_cover("1"), 2)
    assert ps.h0_list() == [6, 1, 1, 0]
    assert ps.total == 8


@pytest.mark.parametrize("m", [1, 2, 5])
def test_pushed_sections_type7(m):
    ps = pushed_sections(make_cover("7", m), 2)
    live = [x.divisor for x in ps.entries if x.h0]
    assert live == [Divisor(2, 2 * m), Divisor(2, m - 1)]


@given(st.sampled_from(list(iter_covers(5))))
def test_degree_one_sections(c):
    ps = pushed_sections(c, 1)
    assert [x.h0 for x in ps.entries if x.h0] == [invariants(c).p_g]


@given(st.sampled_from(list(iter_covers(5))), st.integers(2, 5))
def test_pushed_sections_riemann_roch(c, n):
    # h0(nK) = chi + n(n-1)/2 K^2 for n >= 2
    inv = invariants(c)
    assert pushed_sections(c, n).total == inv.chi + n * (n - 1) * inv.K2 // 2


def test_pushed_sections_needs_positive_n():
    with pytest.raises(ValueError):
        pushed_sections(make_cover("1"), 0)


@pytest.mark.parametrize("m,e", [(1, 0), (2, 1), (3, 2), (6, 0)])
def test_beta_type3(m, e):
    assert beta_surjective(make_cover("3", m, e)).surjective


def test_beta_type51_misses_3C0_f():
    rep = beta_surjective(make_cover("5.1"))
    assert not rep.surjective and rep.certified_failure
    missed = {s.target: s for s in rep.missed()}
    assert Divisor(3, 1) in missed
    assert missed[Divisor(3, 1)].dim_target == 8 and missed[Divisor(3, 1)].rank == 0


def test_beta_type81():
    rep = beta_surjective(make_cover("8.1"))
    assert rep.coker_dim > 0


def test_beta_rejects_singular():
    with pytest.raises(ValueError):
        beta_surjective(make_cover("10"))


def test_normal_generation_examples():
    assert normal_generation(make_cover("4", 3, 1), 4)
    assert normal_generation(make_cover("6.2", 2), 4)
    ng = normal_generation(make_cover("7", 2), 4)
    assert not ng and ng.witness[0] == 1 and ng.witness[1].certified
    with pytest.raises(ValueError):
        normal_generation(make_cover("1"), 0)


def test_factor_degree_examples():
    r = factor_degree(make_cover("8.1"))
    assert r.degree == 4 and not r.birational
    assert "2C0+2f" in r.image_descriptor and "F0" in r.image_descriptor
    r = factor_degree(make_cover("7", 3))
    assert r.degree == 2 and "genus 3" in r.image_descriptor and "degree 12" in r.image_descriptor
    r = factor_degree(make_cover("11"))
    assert (r.degree, r.birational, r.embedding, r.obstruction_h1) == (1, True, False, 1)


@pytest.mark.parametrize("c", list(iter_covers(4)), ids=lambda c: c.label())
def test_factor_degree_main_theorem(c):
    r = factor_degree(c)
    t = c.type_id
    if t in MAIN_THEOREM["embedding"]:
        assert (r.degree, r.embedding) == (1, True)
    elif t in MAIN_THEOREM["birational"]:
        assert (r.degree, r.birational, r.embedding) == (1, True, False)
    elif t in MAIN_THEOREM["degree2"]:
        assert r.degree == 2
    else:
        assert r.degree == 4


def test_main_theorem_partition():
    cases = [x for v in MAIN_THEOREM.values() for x in v]
    assert sorted(cases) == sorted(ALL_TYPES)


def test_genus2_pencil():
    assert genus2_pencil(make_cover("5.1")) == 1
    assert genus2_pencil(make_cover("6.1")) == 1
    for m in range(1, 6):
        assert genus2_pencil(make_cover("7", m)) == m
    for m in range(2, 6):
        assert genus2_pencil(make_cover("8.2", m)) == m + 1
    assert genus2_pencil(make_cover("8.1")) == 2
    assert genus2_pencil(make_cover("3", 2, 0)) is None
    assert genus2_pencil(make_cover("12")) is None


@pytest.mark.parametrize("t,m", [("5.1", None), ("6.1", None), ("8.1", None), ("7", 2), ("7", 5), ("8.2", 3)])
def test_image_projectively_normal(t, m):
    ok, checks = image_projectively_normal(make_cover(t, m), r_max=4)
    assert ok
    assert {ch.r for ch in checks} == {1, 2, 3, 4}


def test_image_check_rejects_embedding_types():
    with pytest.raises(ValueError):
        image_projectively_normal(make_cover("3", 2, 0))


def test_h1_pullback_examples():
    ten, twelve = y_splitting(make_cover("10")), y_splitting(make_cover("12"))
    assert h1_pullback(ten, Divisor(1, 4)) == 1
    assert h1_pullback(twelve, Divisor(0, -2)) == 1
    # the -3C0-6f summand twists to -2C0, which has h1 = 3
    assert h1_pullback_terms(ten, Divisor(1, 6))[2] == (Divisor(-1, 3), 0)
    assert dict(h1_pullback_terms(ten, Divisor(1, 6)))[Divisor(-2, 0)] == 3
    assert h1_pullback(ten, Divisor(1, 6)) == 3


@pytest.mark.parametrize("t", SINGULAR_TYPES)
def test_singular_obstruction(t):
    c = make_cover(t)
    assert singular_obstruction(c) == 1


def test_singular_obstruction_surviving_terms():
    for t in ("9", "10", "11"):
        terms = h1_pullback_terms(y_splitting(make_cover(t)), Divisor(1, 4))
        assert [(D, v) for D, v in terms if v] == [(Divisor(-2, -2), 1)]
    terms = h1_pullback_terms(y_splitting(make_cover("12")), Divisor(0, -2))
    assert [(D, v) for D, v in terms if v] == [(Divisor(0, -2), 1)]
    with pytest.raises(ValueError):
        singular_obstruction(make_cover("3", 2, 0))


@given(st.sampled_from(list(SINGULAR_TYPES)), st.integers(3, 8), st.integers(0, 6))
def test_h1_pullback_vanishes_far_in_ample_cone(t, a, extra):
    assert h1_pullback(y_splitting(make_cover(t)), Divisor(a, 2 * a + extra)) == 0


@given(st.sampled_from(SMOOTH), st.integers(1, 3), st.integers(1, 3))
def test_graded_map_symmetric(c, n1, n2):
    assert graded_map(c, n1, n2).rank == graded_map(c, n2, n1).rank


@given(st.sampled_from(SMOOTH))
def test_certified_means_unreachable(c):
    rep = beta_surjective(c)
    for s in rep.summands:
        if s.certified:
            assert s.rank == 0

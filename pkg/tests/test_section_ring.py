import pytest
from hypothesis import given
from hypothesis import strategies as st

from quadcover.divisors import PLANE, Divisor, F, h0
from quadcover.sections import (
    chain_surjective,
    dense_rank,
    exact_rank,
    explicit_image,
    image_rank,
    monomial_basis,
    mult_map,
    surjonhirz_condition,
)

small = st.builds(Divisor, st.integers(-1, 3), st.integers(-2, 6))
e012 = st.integers(0, 2)


def test_monomial_basis_examples():
    assert monomial_basis(Divisor(0, 1), F(0)).exponents == {(1, 0, 0, 0), (0, 1, 0, 0)}
    assert len(monomial_basis(Divisor(-1, 5), F(1))) == 0
    assert len(monomial_basis(Divisor(1, 1), F(1))) == 3
    assert len(monomial_basis(Divisor(3), PLANE)) == 10


def test_mult_map_examples():
    rep = mult_map(Divisor(2), Divisor(2), PLANE, oracle=True)
    assert rep.surjective and rep.coker_dim == 0
    assert mult_map(Divisor(2, 2), Divisor(2, 2), F(0), oracle=True).surjective
    rep = mult_map(Divisor(1, 0), Divisor(0, 1), F(0), oracle=True)
    assert (rep.dim_target, rep.rank, rep.surjective) == (4, 4, True)


def test_mult_map_not_surjective():
    # C0 has a single section on F_1; C0 x f misses half of C0+f
    rep = mult_map(Divisor(1, 0), Divisor(0, 1), F(1), oracle=True)
    assert (rep.dim_source1, rep.dim_source2, rep.dim_target, rep.rank) == (1, 2, 3, 2)
    assert rep.as_dict()["coker_dim"] == 1


def test_image_rank_needs_common_target():
    with pytest.raises(ValueError):
        image_rank([(Divisor(1, 0), Divisor(0, 1)), (Divisor(1, 1), Divisor(0, 1))], F(0))
    assert image_rank([], F(0)) == 0


def test_image_rank_union():
    S = F(1)
    pairs = [(Divisor(1, 0), Divisor(0, 1)), (Divisor(0, 1), Divisor(1, 0))]
    assert image_rank(pairs, S) == len(explicit_image(pairs, S)) == 2


def test_exact_rank():
    assert exact_rank([[1, 2], [2, 4]]) == 1
    assert exact_rank([[0, 0], [0, 0]]) == 0
    assert exact_rank([[2, 3, 1], [4, 1, 0], [0, 5, 2]]) == 2
    assert exact_rank([[1, 0, 0], [0, 1, 0], [0, 0, 1]]) == 3


def test_surjonhirz_examples():
    for m in range(1, 6):
        assert surjonhirz_condition(Divisor(2, 2 * m), Divisor(2, 2 * m), 0) is not None
    for m in range(2, 7):
        assert surjonhirz_condition(Divisor(2, 2 * m), Divisor(1, m - 1), 1) == "b"
    assert surjonhirz_condition(Divisor(1, 0), Divisor(1, 0), 1) is None
    assert surjonhirz_condition(Divisor(1, 1), Divisor(1, 1), 3) is None
    assert surjonhirz_condition(Divisor(1, 3), Divisor(0, 2), 1) == "c"


def test_chain_examples():
    assert chain_surjective(Divisor(2, 2), [Divisor(1, 1), Divisor(1, 1)], F(0))
    assert chain_surjective(Divisor(2, 2), [Divisor(0, 0)], F(0))
    assert chain_surjective(Divisor(1, 0), [Divisor(0, 1)], F(0))
    assert not chain_surjective(Divisor(1, 0), [Divisor(0, 1)], F(1))
    with pytest.raises(ValueError):
        chain_surjective(Divisor(1, 0), [], F(0))


@given(e012, small, small)
def test_fast_rank_matches_oracles(e, D1, D2):
    S = F(e)
    rep = mult_map(D1, D2, S, oracle=True)
    assert rep.rank == len(explicit_image([(D1, D2)], S)) == dense_rank(D1, D2, S)


@given(st.integers(-1, 4), st.integers(-1, 4))
def test_plane_maps_surject(d1, d2):
    rep = mult_map(Divisor(d1), Divisor(d2), PLANE, oracle=True)
    assert rep.surjective == (d1 >= 0 and d2 >= 0 or d1 + d2 < 0)


@given(e012, small, small)
def test_mult_map_symmetric(e, D1, D2):
    S = F(e)
    assert mult_map(D1, D2, S) == _swap(mult_map(D2, D1, S))


def _swap(rep):
    return type(rep)(rep.dim_source2, rep.dim_source1, rep.dim_target, rep.rank)


@given(e012, small, small)
def test_rank_bounds(e, D1, D2):
    S = F(e)
    rep = mult_map(D1, D2, S)
    assert 0 <= rep.rank <= rep.dim_target
    if rep.dim_source1 and rep.dim_source2:
        assert rep.rank >= max(rep.dim_source1, rep.dim_source2)
    else:
        assert rep.rank == 0


@given(e012, st.integers(0, 6), st.integers(0, 10), st.integers(0, 6), st.integers(0, 10))
def test_lemma_conditions_are_sound(e, a1, b1, a2, b2):
    D1, D2 = Divisor(a1, b1), Divisor(a2, b2)
    if surjonhirz_condition(D1, D2, e) is not None:
        assert mult_map(D1, D2, F(e)).surjective


@given(e012, small)
def test_basis_size_is_h0(e, D):
    assert len(monomial_basis(D, F(e))) == h0(D, F(e))

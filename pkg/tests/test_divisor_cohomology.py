import pytest
from hypothesis import given
from hypothesis import strategies as st

from quadcover.divisors import (
    PLANE,
    Cohomology,
    Divisor,
    F,
    Surface,
    SurfaceMismatch,
    canonical_class,
    cohomology,
    euler_char,
    h0,
    h1,
    h2,
    intersect,
    leray_cohomology,
    oracle_h0,
    parse_divisor,
    parse_surface,
)

C0 = Divisor(1, 0)
f = Divisor(0, 1)

es = st.integers(0, 4)
coeffs = st.integers(-12, 12)
hirz = st.builds(lambda e, a, b: (Divisor(a, b), F(e)), es, coeffs, coeffs)
plane = st.builds(lambda d: (Divisor(d), PLANE), coeffs)
anywhere = st.one_of(hirz, plane)


# --- frozen values -------------------------------------------------------


def test_intersection_generators():
    assert intersect(C0, C0, F(2)) == -2
    assert intersect(f, f, F(0)) == 0
    assert intersect(C0, f, F(3)) == 1


@pytest.mark.parametrize("e,m", [(0, 1), (1, 3), (2, 5), (2, 3)])
def test_intersection_of_hyperplane(e, m):
    H = Divisor(1, m)
    assert intersect(H, H, F(e)) == 2 * m - e


def test_canonical_classes():
    assert canonical_class(F(2)) == Divisor(-2, -4)
    assert canonical_class(F(0)) == Divisor(-2, -2)
    assert canonical_class(PLANE) == Divisor(-3)


@pytest.mark.parametrize("e,m", [(0, 1), (0, 4), (1, 2), (2, 3), (2, 7)])
def test_hyperplane_sections(e, m):
    assert euler_char(Divisor(1, m), F(e)) == 2 * m - e + 2
    assert h0(Divisor(1, m), F(e)) == 2 * m - e + 2


def test_euler_char_values():
    assert euler_char(Divisor(0, 0), F(1)) == 1
    assert euler_char(Divisor(0), PLANE) == 1
    assert euler_char(Divisor(0, -2), F(2)) == -1


def test_h0_values():
    assert h0(Divisor(-1, 7), F(1)) == 0
    assert h0(Divisor(2, 2), F(0)) == 9
    assert h0(Divisor(2), PLANE) == 6
    assert h0(Divisor(-1), PLANE) == 0


def test_cohomology_values():
    assert cohomology(Divisor(0, -2), F(2)).as_tuple() == (0, 1, 0)
    assert cohomology(Divisor(0, 0), F(2)).as_tuple() == (1, 0, 0)
    assert cohomology(Divisor(-3, -8), F(2)).as_tuple() == (0, 0, 8)
    assert cohomology(Divisor(-2, 0), F(2)).h1 == 3
    assert cohomology(Divisor(-3), PLANE).as_tuple() == (0, 0, 1)


def test_oracle_values():
    assert oracle_h0(Divisor(1, 1), F(0)) == 4
    assert oracle_h0(Divisor(0, 0), F(3)) == 1
    # only y1-free monomials fit: x-degree 1 with gamma = 3
    assert oracle_h0(Divisor(3, 1), F(2)) == 2
    assert oracle_h0(Divisor(3), PLANE) == 10


def test_leray_values():
    assert leray_cohomology(Divisor(-1, 5), F(1)).as_tuple() == (0, 0, 0)
    assert leray_cohomology(Divisor(-2, 0), F(2)).as_tuple() == (0, 3, 0)


def test_mismatched_surface():
    with pytest.raises(SurfaceMismatch):
        h0(Divisor(2), F(1))
    with pytest.raises(SurfaceMismatch):
        intersect(Divisor(1, 1), Divisor(1), F(0))
    with pytest.raises(SurfaceMismatch):
        Divisor(1) + Divisor(1, 0)


def test_bad_surface():
    with pytest.raises(ValueError):
        Surface(-1)


def test_inconsistent_cohomology_rejected():
    with pytest.raises(ArithmeticError):
        Cohomology(1, 0, 0, 2)


def test_formatting():
    assert str(Divisor(2, 3)) == "2C0+3f"
    assert str(Divisor(-1, -3)) == "-C0-3f"
    assert str(Divisor(0, -2)) == "-2f"
    assert str(Divisor(0, 0)) == "0"
    assert str(Divisor(4)) == "4L"
    assert str(F(2)) == "F2" and str(PLANE) == "P2"


def test_parsing():
    assert parse_surface("F:2") == F(2)
    assert parse_surface("p2") == PLANE
    assert parse_divisor("0,-2", F(2)) == Divisor(0, -2)
    assert parse_divisor("3", PLANE) == Divisor(3)
    for bad in ("F2", "G:1", "F:x", ""):
        with pytest.raises(ValueError, match="expected"):
            parse_surface(bad)
    with pytest.raises(ValueError, match="1,4"):
        parse_divisor("2", F(0))
    with pytest.raises(ValueError, match="'3'"):
        parse_divisor("1,2", PLANE)


# --- properties -------------------------------------------------------------


@given(anywhere)
def test_h0_matches_monomial_count(pair):
    D, S = pair
    assert h0(D, S) == oracle_h0(D, S)


@given(anywhere)
def test_serre_duality(pair):
    D, S = pair
    K = canonical_class(S)
    co, dual = cohomology(D, S), cohomology(K - D, S)
    assert (co.h0, co.h1, co.h2) == (dual.h2, dual.h1, dual.h0)
    assert h2(D, S) == h0(K - D, S)


@given(anywhere)
def test_euler_characteristic(pair):
    D, S = pair
    co = cohomology(D, S)
    assert co.h0 - co.h1 + co.h2 == euler_char(D, S)
    assert min(co.as_tuple()) >= 0
    assert h1(D, S) == co.h1


@given(hirz)
def test_riemann_roch(pair):
    D, S = pair
    K = canonical_class(S)
    # 2 chi = D.(D - K) + 2
    assert 2 * euler_char(D, S) == intersect(D, D - K, S) + 2


@given(hirz)
def test_leray_agrees(pair):
    D, S = pair
    assert leray_cohomology(D, S) == cohomology(D, S)


@given(hirz, st.integers(0, 3), st.integers(0, 3))
def test_h0_monotone_in_effective_directions(pair, da, db):
    D, S = pair
    assert h0(D + Divisor(da, db), S) >= h0(D, S)


@given(es, st.integers(-6, 6), st.integers(-6, 6), st.integers(-6, 6), st.integers(-6, 6))
def test_intersection_symmetric_bilinear(e, a1, b1, a2, b2):
    S = F(e)
    D1, D2 = Divisor(a1, b1), Divisor(a2, b2)
    assert intersect(D1, D2, S) == intersect(D2, D1, S)
    assert intersect(D1 + D2, C0, S) == intersect(D1, C0, S) + intersect(D2, C0, S)
    assert intersect(2 * D1, D2, S) == 2 * intersect(D1, D2, S)

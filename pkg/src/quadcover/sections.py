"""Monomial bases of H^0 and exact ranks of multiplication maps.

Sections of O(D) have a basis of Cox ring monomials and the product of two
monomials is a monomial, so the image of H^0(D1) x H^0(D2) -> H^0(D1+D2) is
spanned by the sumset of the two exponent sets.  Its dimension is the size of
that sumset.

Counting is done column by column.  A Hirzebruch monomial is fixed by its
y1-exponent delta (the column) and its x0-exponent alpha; inside a column the
alpha values form an interval starting at 0.  Plane monomials are grouped the
same way by their first exponent.  Sums of intervals are intervals, so a
sumset is a union of intervals per column and can be counted without forming
all products.  :func:`explicit_image` and :func:`dense_rank` do it the slow
way and serve as oracles.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Sequence

from .divisors import Divisor, Surface, h0


@dataclass(frozen=True)
class MonomialBasis:
    divisor: Divisor
    surface: Surface
    exponents: frozenset

    def __len__(self):
        return len(self.exponents)


@dataclass(frozen=True)
class MultMapReport:
    dim_source1: int
    dim_source2: int
    dim_target: int
    rank: int

    @property
    def coker_dim(self) -> int:
        return self.dim_target - self.rank

    @property
    def surjective(self) -> bool:
        return self.coker_dim == 0

    def as_dict(self) -> dict:
        return {
            "dim_source1": self.dim_source1,
            "dim_source2": self.dim_source2,
            "dim_target": self.dim_target,
            "rank": self.rank,
            "coker_dim": self.coker_dim,
            "surjective": self.surjective,
        }


@lru_cache(maxsize=None)
def monomial_basis(D: Divisor, S: Surface) -> MonomialBasis:
    """Exponent tuples (alpha, beta, gamma, delta) on F_e, (i, j, k) on P^2."""
    exps = []
    if S.is_plane:
        d = D.d
        for i in range(d + 1):
            for j in range(d - i + 1):
                exps.append((i, j, d - i - j))
    elif D.a >= 0:
        a, b, e = D.a, D.b, S.e
        for delta in range(a + 1):
            free = b - e * delta
            for alpha in range(free + 1):
                exps.append((alpha, free - alpha, a - delta, delta))
    return MonomialBasis(D, S, frozenset(exps))


def _column_key(exp: tuple, S: Surface) -> tuple[int, int]:
    if S.is_plane:
        return exp[0], exp[1]
    return exp[3], exp[0]


@lru_cache(maxsize=None)
def _columns(D: Divisor, S: Surface) -> dict[int, tuple[int, int]]:
    cols: dict[int, list[int]] = {}
    for exp in monomial_basis(D, S).exponents:
        key, pos = _column_key(exp, S)
        cols.setdefault(key, []).append(pos)
    out = {}
    for key, vals in cols.items():
        lo, hi = min(vals), max(vals)
        if hi - lo + 1 != len(vals):
            raise ArithmeticError(f"column {key} of {D} is not an interval")
        out[key] = (lo, hi)
    return out


def _merge(intervals: list[tuple[int, int]]) -> int:
    total = 0
    cur_lo = cur_hi = None
    for lo, hi in sorted(intervals):
        if cur_hi is None or lo > cur_hi + 1:
            if cur_hi is not None:
                total += cur_hi - cur_lo + 1
            cur_lo, cur_hi = lo, hi
        else:
            cur_hi = max(cur_hi, hi)
    if cur_hi is not None:
        total += cur_hi - cur_lo + 1
    return total


def image_rank(pairs: Iterable[tuple[Divisor, Divisor]], S: Surface) -> int:
    """Dimension of the span of all products coming from ``pairs``.

    Every pair must have the same sum; the images all sit in that H^0 and the
    result is the size of the union of the sumsets.
    """
    pairs = list(pairs)
    if not pairs:
        return 0
    target = pairs[0][0] + pairs[0][1]
    per_column: dict[int, list[tuple[int, int]]] = {}
    for D1, D2 in pairs:
        if D1 + D2 != target:
            raise ValueError(f"pairs land in different classes: {target} vs {D1 + D2}")
        c1, c2 = _columns(D1, S), _columns(D2, S)
        for k1, (lo1, hi1) in c1.items():
            for k2, (lo2, hi2) in c2.items():
                per_column.setdefault(k1 + k2, []).append((lo1 + lo2, hi1 + hi2))
    return sum(_merge(iv) for iv in per_column.values())


def explicit_image(pairs: Iterable[tuple[Divisor, Divisor]], S: Surface) -> frozenset:
    """The union of sumsets as an explicit set of exponent tuples."""
    out = set()
    for D1, D2 in pairs:
        b1 = monomial_basis(D1, S).exponents
        b2 = monomial_basis(D2, S).exponents
        out.update(tuple(x + y for x, y in zip(m1, m2)) for m1 in b1 for m2 in b2)
    return frozenset(out)


def exact_rank(rows: Sequence[Sequence[int]]) -> int:
    """Rank over Q of an integer matrix, by fraction-free elimination."""
    mat = [list(r) for r in rows if any(r)]
    if not mat:
        return 0
    ncols = len(mat[0])
    rank = 0
    for col in range(ncols):
        pivot = next((i for i in range(rank, len(mat)) if mat[i][col] != 0), None)
        if pivot is None:
            continue
        mat[rank], mat[pivot] = mat[pivot], mat[rank]
        p = mat[rank]
        for i in range(rank + 1, len(mat)):
            r = mat[i]
            if r[col]:
                c = r[col]
                mat[i] = [p[col] * x - c * y for x, y in zip(r, p)]
        rank += 1
        if rank == len(mat):
            break
    return rank


def dense_rank(D1: Divisor, D2: Divisor, S: Surface) -> int:
    """Rank of the multiplication matrix in the monomial bases.

    Each basis vector of the source tensor product becomes a coordinate row
    in the target basis; rank is computed by elimination, not by counting.
    """
    target = sorted(monomial_basis(D1 + D2, S).exponents)
    index = {m: i for i, m in enumerate(target)}
    rows = []
    for m1 in sorted(monomial_basis(D1, S).exponents):
        for m2 in sorted(monomial_basis(D2, S).exponents):
            row = [0] * len(target)
            prod_exp = tuple(x + y for x, y in zip(m1, m2))
            row[index[prod_exp]] += 1
            rows.append(row)
    if not rows or not target:
        return 0
    return exact_rank(rows)


def mult_map(D1: Divisor, D2: Divisor, S: Surface, oracle: bool = False) -> MultMapReport:
    """Report on H^0(D1) x H^0(D2) -> H^0(D1 + D2).

    With ``oracle=True`` the rank is recomputed from the explicit sumset and
    the dense matrix and any disagreement raises ``ArithmeticError``.
    """
    rank = image_rank([(D1, D2)], S)
    report = MultMapReport(h0(D1, S), h0(D2, S), h0(D1 + D2, S), rank)
    if oracle:
        slow = len(explicit_image([(D1, D2)], S))
        dense = dense_rank(D1, D2, S)
        if not rank == slow == dense:
            raise ArithmeticError(f"rank mismatch for {D1} x {D2} on {S}: {rank}, {slow}, {dense}")
    return report


def surjonhirz_condition(D1: Divisor, D2: Divisor, e: int) -> str | None:
    """First sufficient condition of the Hirzebruch surjectivity lemma that holds.

    Standing hypotheses: e in {0, 1, 2}, a_i >= 0 and b_i >= a_i e.  Labels
    are tried in order (a)..(e); each is tested on (D1, D2) and on (D2, D1)
    since the multiplication map is symmetric.
    """
    if e not in (0, 1, 2):
        return None
    for D in (D1, D2):
        if D.is_plane or D.a < 0 or D.b < D.a * e:
            return None
    for label, test in _CONDITIONS:
        if test(D1, D2, e) or test(D2, D1, e):
            return label
    return None


def _cond_a(L1, L2, e):
    a1, b1, a2, b2 = L1.a, L1.b, L2.a, L2.b
    if a1 < 1 or a2 % a1:
        return False
    n = a2 // a1
    return n >= 1 and b2 == n * b1 and b1 > a1 * e


def _cond_b(L1, L2, e):
    a1, b1, a2, b2 = L1.a, L1.b, L2.a, L2.b
    if a1 < 1:
        return False
    bound = 2 * a1 - 2 + e if e >= 1 else 2 * a1 - 1
    return a2 >= bound and b2 - b1 >= (a2 - a1) * e - 1


def _cond_c(L1, L2, e):
    return L1.a > 0 and L2.a == 0


def _cond_d(L1, L2, e):
    return L1.a == L2.a == 1 and L2.b >= L1.b - 1


def _cond_e(L1, L2, e):
    return e == 0


_CONDITIONS = (("a", _cond_a), ("b", _cond_b), ("c", _cond_c), ("d", _cond_d), ("e", _cond_e))


def chain_surjective(E: Divisor, factors: Sequence[Divisor], S: Surface) -> bool:
    """True when every step E+L1+..+L_{i-1} (x) L_i of the chain surjects.

    Surjectivity of all steps implies surjectivity of E (x) (L1+...+Lr).
    """
    if not factors:
        raise ValueError("need at least one factor")
    acc = E
    for L in factors:
        if not mult_map(acc, L, S).surjective:
            return False
        acc = acc + L
    return True

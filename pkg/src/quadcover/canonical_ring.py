"""Generators of the canonical ring R(X) = sum_n H^0(n K_X).

The number of extra generators in degree n+1 beyond products with degree 1
is the cokernel of gamma_n: H^0(K) x H^0(nK) -> H^0((n+1)K).  Only the trivial
summand of phi_* K_X has sections, so the image in the summand
(n+1)H + Li* is the image of H^0(H) x H^0(nH + Li*).
"""

from __future__ import annotations

from dataclasses import dataclass

from .bicanonical import STRUCTURE_PAIRS, graded_map
from .covers import SINGULAR_TYPES, CoverDescriptor, base_splitting, invariants
from .divisors import Divisor, h0
from .sections import image_rank


def deg2_extra_generators(n: int, p_g: int, q: int) -> int:
    """(n-2)(p_g-2) - q, the count of new degree 2 generators (never below 0)."""
    if n < 2:
        raise ValueError("cover degree must be >= 2")
    return max(0, (n - 2) * (p_g - 2) - q)


def gamma_coker(c: CoverDescriptor, n: int) -> tuple[int, list[tuple[Divisor, int]]]:
    """Cokernel of gamma_n with its per-summand contributions."""
    if c.singular:
        raise ValueError(f"{c.label()}: gamma_n is computed for smooth-base types only")
    if n < 1:
        raise ValueError("n must be >= 1")
    rep = graded_map(c, 1, n)
    per = [(s.target, s.coker_dim) for s in rep.summands]
    return rep.coker_dim, per


def delta(c: CoverDescriptor) -> int:
    """Number of extra degree 3 generators, in closed form per type."""
    t = c.type_id
    if t in ("5.1", "6.1"):
        return 4
    if t == "7":
        return 5 * c.m - 1
    if t == "8.1":
        return 9
    if t == "8.2":
        return 5 * c.m
    return invariants(c).p_g - 3


def generators_in_degree(c: CoverDescriptor, d: int) -> int:
    """Dimension of H^0(dK) modulo all products R_i R_{d-i}, 0 < i < d.

    Uses the multiplication structure of phi_* O_X, so zero is a proof that no
    new generator is needed in degree d.
    """
    if c.singular:
        raise ValueError(f"{c.label()}: computed for smooth-base types only")
    if d < 2:
        raise ValueError("d must be >= 2")
    split = base_splitting(c)
    S = split.surface
    total = 0
    for t, L in enumerate(split.summands):
        target = d * c.H + L
        pairs = []
        for i in range(1, d // 2 + 1):
            for a, b in STRUCTURE_PAIRS[t]:
                x = i * c.H + split.summands[a]
                y = (d - i) * c.H + split.summands[b]
                if h0(x, S) and h0(y, S):
                    pairs.append((x, y))
        total += h0(target, S) - image_rank(pairs, S)
    return total


@dataclass(frozen=True)
class GeneratorProfile:
    deg1: int
    deg2_extra: int
    deg3_extra: int
    generated_in_degree: int
    per_summand_coker: tuple[tuple[Divisor, int], ...] = ()

    def as_tuple(self) -> tuple[int, int, int, int]:
        return (self.deg1, self.deg2_extra, self.deg3_extra, self.generated_in_degree)


def generator_profile(c: CoverDescriptor) -> GeneratorProfile:
    """Generator counts per degree; gamma_1 and gamma_2 are cross-checked on W."""
    inv = invariants(c)
    deg2 = deg2_extra_generators(4, inv.p_g, inv.q)
    deg3 = delta(c)
    per = ()
    if c.type_id not in SINGULAR_TYPES:
        g1, _ = gamma_coker(c, 1)
        g2, per = gamma_coker(c, 2)
        if g1 != deg2 or g2 != deg3:
            raise ArithmeticError(f"{c.label()}: closed forms ({deg2}, {deg3}) vs computed ({g1}, {g2})")
    return GeneratorProfile(inv.p_g, deg2, deg3, 3 if deg3 else 2, tuple(per))

"""Verification suites run by ``quadcover verify``.

Each suite counts its checks and collects failure messages.  Grids default
to sizes that finish in seconds.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from itertools import product

from .bicanonical import (
    MAIN_THEOREM,
    beta_surjective,
    h1_pullback_terms,
    image_projectively_normal,
    normal_generation,
    singular_obstruction,
    OBSTRUCTION_CLASS,
)
from .canonical_ring import gamma_coker
from .covers import (
    SINGULAR_TYPES,
    SMOOTH_TYPES,
    fiber_genus,
    invariants,
    iter_covers,
    make_cover,
    product_invariants,
    splitting,
    y_splitting,
)
from .divisors import PLANE, Divisor, F, canonical_class, cohomology, euler_char, h0, h2, leray_cohomology, oracle_h0
from .sections import dense_rank, explicit_image, image_rank, mult_map, surjonhirz_condition
from .tables import build_table, expected_splitting


@dataclass
class SuiteResult:
    name: str
    checked: int = 0
    failures: list[str] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.failures

    def check(self, ok: bool, msg: str) -> None:
        self.checked += 1
        if not ok:
            self.failures.append(msg)

    def summary(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        return f"{status}  {self.name}: {self.checked} checks, {len(self.failures)} failures"


@dataclass(frozen=True)
class VerifyConfig:
    m_max: int = 8
    n_max: int = 5
    oracle: bool = False
    e_max: int = 4
    ab_max: int = 12


def _hirz_grid(cfg: VerifyConfig):
    for e in range(cfg.e_max + 1):
        S = F(e)
        for a, b in product(range(-cfg.ab_max, cfg.ab_max + 1), repeat=2):
            yield Divisor(a, b), S
    for d in range(-cfg.ab_max, cfg.ab_max + 1):
        yield Divisor(d), PLANE


def suite_oracle(cfg: VerifyConfig) -> SuiteResult:
    """h0 against monomial enumeration; h0, h1, h2 against the ruling."""
    r = SuiteResult("oracle")
    for D, S in _hirz_grid(cfg):
        r.check(h0(D, S) == oracle_h0(D, S), f"h0 {D} on {S}")
        if not S.is_plane:
            r.check(cohomology(D, S) == leray_cohomology(D, S), f"Leray {D} on {S}")
    return r


def suite_duality(cfg: VerifyConfig) -> SuiteResult:
    r = SuiteResult("duality")
    for D, S in _hirz_grid(cfg):
        K = canonical_class(S)
        r.check(h0(D, S) == h2(K - D, S), f"Serre {D} on {S}")
        co = cohomology(D, S)
        r.check(co.h0 - co.h1 + co.h2 == euler_char(D, S), f"chi {D} on {S}")
    return r


def suite_surjonhirz(cfg: VerifyConfig, a_max: int = 8, b_max: int = 12) -> SuiteResult:
    """Every tuple meeting a condition of the lemma gives a surjective map."""
    r = SuiteResult("surjonhirz")
    for e in range(3):
        S = F(e)
        classes = [Divisor(a, b) for a in range(a_max + 1) for b in range(a * e, b_max + 1)]
        for i, D1 in enumerate(classes):
            for D2 in classes[i:]:
                label = surjonhirz_condition(D1, D2, e)
                if label is None:
                    continue
                rep = mult_map(D1, D2, S, oracle=cfg.oracle and h0(D1, S) * h0(D2, S) <= 400)
                r.check(rep.surjective, f"({label}) {D1} x {D2} on {S}: coker {rep.coker_dim}")
    return r


def suite_sections(cfg: VerifyConfig) -> SuiteResult:
    """Column counts against explicit sumsets and, with --oracle, dense ranks."""
    r = SuiteResult("sections")
    for e in range(3):
        S = F(e)
        for a1, b1, a2, b2 in product(range(3), range(5), range(3), range(5)):
            D1, D2 = Divisor(a1, b1), Divisor(a2, b2)
            fast = image_rank([(D1, D2)], S)
            r.check(fast == len(explicit_image([(D1, D2)], S)), f"sumset {D1} x {D2} on {S}")
            if cfg.oracle:
                r.check(fast == dense_rank(D1, D2, S), f"dense {D1} x {D2} on {S}")
    for d1, d2 in product(range(5), repeat=2):
        D1, D2 = Divisor(d1), Divisor(d2)
        r.check(mult_map(D1, D2, PLANE, oracle=cfg.oracle).surjective, f"plane {d1} x {d2}")
    return r


def suite_classification(cfg: VerifyConfig) -> SuiteResult:
    r = SuiteResult("classification")
    for row in build_table("classification", m_max=cfg.m_max):
        r.check(row["status"] == "PASS", f"Type {row['type']} m={row['m']} e={row['e']}")
    for c in iter_covers(cfg.m_max, SMOOTH_TYPES):
        inv = invariants(c)
        split = splitting(c)
        r.check(Counter(split.summands) == Counter(expected_splitting(c)), f"{c.label()} splitting")
        r.check(split.multiplicative, f"{c.label()} L3* != L1* + L2*")
        trivial = h0(c.H, c.surface)
        r.check(trivial == inv.p_g, f"{c.label()} p_g not carried by the trivial summand")
    return r


def suite_bicanonical(cfg: VerifyConfig) -> SuiteResult:
    r = SuiteResult("bicanonical")
    for row in build_table("bicanonical", m_max=cfg.m_max, n_max=cfg.n_max):
        r.check(row["status"] == "PASS", f"Type {row['type']} m={row['m']} e={row['e']}: case {row['case']}")
    for c in iter_covers(cfg.m_max, SMOOTH_TYPES):
        beta = beta_surjective(c)
        if c.type_id in MAIN_THEOREM["embedding"]:
            r.check(bool(normal_generation(c, cfg.n_max)), f"{c.label()} not normally generated")
        else:
            r.check(beta.coker_dim > 0 and beta.certified_failure, f"{c.label()} beta should miss a summand")
            ok, _ = image_projectively_normal(c)
            r.check(ok, f"{c.label()} image not projectively normal")
    return r


def suite_generators(cfg: VerifyConfig) -> SuiteResult:
    r = SuiteResult("generators")
    for row in build_table("generators", m_max=cfg.m_max):
        r.check(row["status"] == "PASS", f"Type {row['type']} m={row['m']} e={row['e']}")
    return r


def suite_gamma_higher(cfg: VerifyConfig) -> SuiteResult:
    """gamma_n surjective for 3 <= n <= 6 on every smooth-base type."""
    r = SuiteResult("gamma_higher")
    for c in iter_covers(cfg.m_max, SMOOTH_TYPES):
        for n in range(3, 7):
            coker, _ = gamma_coker(c, n)
            r.check(coker == 0, f"{c.label()} gamma_{n} cokernel {coker}")
    return r


def suite_obstruction(cfg: VerifyConfig) -> SuiteResult:
    r = SuiteResult("obstruction")
    for t in SINGULAR_TYPES:
        c = make_cover(t)
        r.check(singular_obstruction(c) == 1, f"Type {t} obstruction")
        live = [(D, v) for D, v in h1_pullback_terms(y_splitting(c), OBSTRUCTION_CLASS[t]) if v]
        want = Divisor(0, -2) if t == "12" else Divisor(-2, -2)
        r.check(live == [(want, 1)], f"Type {t} surviving terms {live}")
    return r


def suite_consistency(cfg: VerifyConfig) -> SuiteResult:
    r = SuiteResult("consistency")
    for c in iter_covers(cfg.m_max, ("8.1", "8.2")):
        inv = invariants(c)
        want = product_invariants(2, c.m + 1)
        r.check((inv.p_g, inv.q, inv.K2) == want, f"{c.label()} vs C2 x C{c.m + 1}")
        r.check(inv.K2 == 8 * c.m, f"{c.label()} K2")
    for t in SINGULAR_TYPES:
        c = make_cover(t)
        r.check(c.exceptional.pullback_square() == -8, f"Type {t} k^2 F^2")
    r.check(fiber_genus(make_cover("11")) == 4, "Type 11 fiber genus")
    return r


SUITES = {
    "oracle": suite_oracle,
    "duality": suite_duality,
    "sections": suite_sections,
    "surjonhirz": suite_surjonhirz,
    "classification": suite_classification,
    "bicanonical": suite_bicanonical,
    "generators": suite_generators,
    "gamma_higher": suite_gamma_higher,
    "obstruction": suite_obstruction,
    "consistency": suite_consistency,
}


def run(cfg: VerifyConfig, only: list[str] | None = None) -> list[SuiteResult]:
    names = only or list(SUITES)
    unknown = [n for n in names if n not in SUITES]
    if unknown:
        raise ValueError(f"unknown suite(s) {', '.join(unknown)}; expected one of {', '.join(SUITES)}")
    return [SUITES[n](cfg) for n in names]


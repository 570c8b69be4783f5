"""The fifteen types of quadruple Galois canonical covers X -> W.

A descriptor carries the base W, the hyperplane class H, the Galois group and
the branch classes D1, D2 (smooth W), or the data of the desingularized
diagram over Y = F_2 (W the quadric cone).  The splitting of phi_* O_X is
derived from (G, D1, D2), never typed in, and the numerical invariants are
computed from it.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any

from .divisors import PLANE, Divisor, F, Surface, cohomology, h0, intersect

Z4 = "Z4"
Z2xZ2 = "Z2xZ2"

SMOOTH_TYPES = ("1", "2", "3", "4", "5.1", "5.2", "6.1", "6.2", "7", "8.1", "8.2")
SINGULAR_TYPES = ("9", "10", "11", "12")
ALL_TYPES = SMOOTH_TYPES + SINGULAR_TYPES

CHARACTERS = {
    Z4: (0, 1, 2, 3),
    Z2xZ2: ((0, 0), (1, 0), (0, 1), (1, 1)),
}

Y = F(2)
H_Y = Divisor(1, 2)


class ConstraintViolation(ValueError):
    """Parameters outside the range allowed for a cover type."""


class SplittingError(ArithmeticError):
    """The branch data produced a non-integral or inconsistent splitting."""


def char_add(group: str, x, y):
    if group == Z4:
        return (x + y) % 4
    return ((x[0] + y[0]) % 2, (x[1] + y[1]) % 2)


def generated_subgroup(group: str, gens) -> frozenset:
    zero_ = CHARACTERS[group][0]
    elems = {zero_}
    frontier = [zero_]
    while frontier:
        x = frontier.pop()
        for g in gens:
            y = char_add(group, x, g)
            if y not in elems:
                elems.add(y)
                frontier.append(y)
    return frozenset(elems)


@dataclass(frozen=True)
class Splitting:
    """phi_* O = O + L1* + L2* + L3*, with the Galois character of each summand."""

    summands: tuple[Divisor, Divisor, Divisor, Divisor]
    characters: tuple
    surface: Surface

    def __post_init__(self):
        if len(self.summands) != 4 or len(self.characters) != 4:
            raise SplittingError("a splitting has exactly four summands")
        if self.summands[0] != self.summands[0] * 0:
            raise SplittingError("first summand must be trivial")

    @property
    def multiplicative(self) -> bool:
        """L3* = L1* + L2*."""
        return self.summands[3] == self.summands[1] + self.summands[2]

    def multiset(self) -> list[Divisor]:
        return sorted(self.summands)

    def twist(self, D: Divisor) -> list[Divisor]:
        return [D + L for L in self.summands]


@dataclass(frozen=True)
class ExceptionalComponent:
    name: str
    pullback_multiplicity: int
    self_intersection: Fraction
    canonical_coefficient: int
    fiber_intersection: Fraction


@dataclass(frozen=True)
class ExceptionalRecord:
    components: tuple[ExceptionalComponent, ...]
    crepant: bool
    fiber_point_count: int

    def pullback_square(self) -> Fraction:
        """(p^* C0)^2 computed from the exceptional components."""
        return sum((Fraction(c.pullback_multiplicity) ** 2 * c.self_intersection for c in self.components), Fraction(0))


@dataclass(frozen=True)
class Invariants:
    p_g: int
    q: int
    K2: int
    chi: int


@dataclass(frozen=True)
class CoverDescriptor:
    type_id: str
    group: str
    surface: Surface
    H: Divisor
    base_label: str
    m: int | None = None
    e: int | None = None
    D1: Divisor | None = None
    D2: Divisor | None = None
    exceptional: ExceptionalRecord | None = field(default=None, compare=False)

    @property
    def singular(self) -> bool:
        return self.type_id in SINGULAR_TYPES

    @property
    def characters(self) -> tuple:
        return CHARACTERS[self.group]

    @property
    def order(self) -> int:
        return 4

    def key(self) -> tuple:
        return (ALL_TYPES.index(self.type_id), self.m or 0, self.e or 0)

    def label(self) -> str:
        params = []
        if self.m is not None and self.type_id not in ("5.1", "6.1", "8.1"):
            params.append(f"m={self.m}")
        if self.type_id in ("3", "4"):
            params.append(f"e={self.e}")
        return f"Type {self.type_id}" + (f" ({', '.join(params)})" if params else "")

    def to_dict(self) -> dict[str, Any]:
        split = y_splitting(self) if self.singular else splitting(self)
        inv = invariants(self)
        out = {
            "type_id": self.type_id,
            "m": self.m,
            "e": self.e,
            "group": self.group,
            "W": self.base_label,
            "H": str(self.H),
            "D1": None if self.D1 is None else str(self.D1),
            "D2": None if self.D2 is None else str(self.D2),
            "splitting": [
                {"class": str(L), "character": list(ch) if isinstance(ch, tuple) else ch}
                for L, ch in zip(split.summands, split.characters)
            ],
            "invariants": {"p_g": inv.p_g, "q": inv.q, "K2": inv.K2, "chi": inv.chi},
        }
        if self.exceptional is not None:
            out["exceptional"] = {
                "crepant": self.exceptional.crepant,
                "fiber_point_count": self.exceptional.fiber_point_count,
                "components": [
                    {
                        "name": c.name,
                        "pullback_multiplicity": c.pullback_multiplicity,
                        "self_intersection": str(c.self_intersection),
                        "canonical_coefficient": c.canonical_coefficient,
                    }
                    for c in self.exceptional.components
                ],
            }
        return out


def _need(cond: bool, msg: str) -> None:
    if not cond:
        raise ConstraintViolation(msg)


def _fixed(type_id: str, m, e, m_val: int, e_val: int):
    _need(m in (None, m_val), f"Type {type_id} forces m = {m_val}, got m = {m}")
    _need(e in (None, e_val), f"Type {type_id} forces e = {e_val}, got e = {e}")
    return m_val, e_val


def _exceptional(type_id: str) -> ExceptionalRecord:
    half = Fraction(-1, 2)
    if type_id == "9":
        comps = (ExceptionalComponent("F", 2, Fraction(-2), 0, Fraction(2)),)
        return ExceptionalRecord(comps, True, 1)
    if type_id == "10":
        comps = (ExceptionalComponent("F", 4, half, 0, Fraction(1)),)
        return ExceptionalRecord(comps, True, 1)
    if type_id == "11":
        comps = (
            ExceptionalComponent("F1", 2, Fraction(-1), 1, Fraction(1)),
            ExceptionalComponent("F2", 2, Fraction(-1), 1, Fraction(1)),
        )
        return ExceptionalRecord(comps, False, 2)
    comps = (ExceptionalComponent("F", 4, half, 2, Fraction(1)),)
    return ExceptionalRecord(comps, False, 1)


def make_cover(type_id, m: int | None = None, e: int | None = None) -> CoverDescriptor:
    """Build the descriptor of a cover type, validating its parameters."""
    t = str(type_id)
    if t not in ALL_TYPES:
        raise ConstraintViolation(f"unknown type {type_id!r}; expected one of {', '.join(ALL_TYPES)}")

    if t in ("1", "2"):
        _need(m is None and e is None, f"Type {t} takes no parameters")
        D1 = Divisor(2) if t == "1" else Divisor(4)
        return CoverDescriptor(t, Z4 if t == "1" else Z2xZ2, PLANE, Divisor(1), "P2", D1=D1, D2=Divisor(4))

    if t in SINGULAR_TYPES:
        _need(m is None and e is None, f"Type {t} takes no parameters")
        group = Z2xZ2 if t in ("9", "11") else Z4
        return CoverDescriptor(t, group, Y, H_Y, "S(0,2)", exceptional=_exceptional(t))

    if t in ("3", "4"):
        _need(m is not None and e is not None, f"Type {t} needs m and e")
        _need(0 <= e <= 2, f"Type {t} needs 0 <= e <= 2, got e = {e}")
        _need(m >= e + 1, f"Type {t} needs m >= e + 1, got m = {m}, e = {e}")
        D2 = Divisor(4, 2 * e + 2)
        if t == "3":
            D1, group = Divisor(0, 2 * m - e + 1), Z4
        else:
            D1, group = Divisor(2, 2 * m + 2), Z2xZ2
        label = f"S({m},{m - e})"
    elif t in ("5.1", "6.1", "8.1"):
        m, e = _fixed(t, m, e, 1, 0)
        D1, D2 = {
            "5.1": (Divisor(0, 6), Divisor(4, 0)),
            "6.1": (Divisor(4, 0), Divisor(2, 6)),
            "8.1": (Divisor(0, 6), Divisor(6, 0)),
        }[t]
        group = Z4 if t == "5.1" else Z2xZ2
        label = "S(1,1)"
    else:
        _need(m is not None, f"Type {t} needs m")
        _need(e in (None, 0), f"Type {t} needs e = 0, got e = {e}")
        e = 0
        if t == "7":
            _need(m >= 1, f"Type 7 needs m >= 1, got m = {m}")
            D1, D2, group = Divisor(0, 2 * m + 2), Divisor(6, 2), Z2xZ2
        else:
            _need(m >= 2, f"Type {t} needs m >= 2, got m = {m}")
            D1, D2, group = {
                "5.2": (Divisor(0, 2 * m + 4), Divisor(4, 0), Z4),
                "6.2": (Divisor(2, 2 * m + 4), Divisor(4, 0), Z2xZ2),
                "8.2": (Divisor(0, 2 * m + 4), Divisor(6, 0), Z2xZ2),
            }[t]
        label = f"S({m},{m})"
    return CoverDescriptor(t, group, F(e), Divisor(1, m), label, m=m, e=e, D1=D1, D2=D2)


def _frac(D: Divisor) -> tuple[Fraction, ...]:
    return (Fraction(D.a),) if D.is_plane else (Fraction(D.a), Fraction(D.b))


def _to_divisor(v: tuple[Fraction, ...]) -> Divisor:
    if any(x.denominator != 1 for x in v):
        shown = ", ".join(str(x) for x in v)
        raise SplittingError(f"non-integral summand ({shown})")
    if len(v) == 1:
        return Divisor(int(v[0]))
    return Divisor(int(v[0]), int(v[1]))


def splitting(c: CoverDescriptor) -> Splitting:
    """phi_* O_X for a smooth base, from the branch data.

    Z2xZ2: L1* = -D2/2, L2* = -D1/2.  Z4: L1* = -D1/2 - D2/4, L2* = -D2/2.
    In both cases L3* = L1* + L2*.
    """
    if c.singular:
        raise ValueError(f"{c.label()} has singular base; use y_splitting")
    d1, d2 = _frac(c.D1), _frac(c.D2)
    if c.group == Z2xZ2:
        l1 = tuple(-x / 2 for x in d2)
        l2 = tuple(-x / 2 for x in d1)
    else:
        l1 = tuple(-x / 2 - y / 4 for x, y in zip(d1, d2))
        l2 = tuple(-y / 2 for y in d2)
    L1, L2 = _to_divisor(l1), _to_divisor(l2)
    return Splitting((L1 * 0, L1, L2, L1 + L2), c.characters, c.surface)


def y_splitting(c: CoverDescriptor) -> Splitting:
    """p_* O of the desingularized diagram over Y = F_2 (Types 9-12)."""
    if not c.singular:
        raise ValueError(f"{c.label()} has smooth base; use splitting")
    first = Divisor(-2, -3) if c.type_id in ("11", "12") else Divisor(-1, -3)
    summands = (Divisor(0, 0), first, Divisor(-2, -3), Divisor(-3, -6))
    return Splitting(summands, c.characters, Y)


def base_splitting(c: CoverDescriptor) -> Splitting:
    return y_splitting(c) if c.singular else splitting(c)


def invariants(c: CoverDescriptor) -> Invariants:
    """(p_g, q, K^2, chi) computed from the splitting.

    p_g = sum h0(H + Li*), q = sum h1(Li*), K^2 = 4 H^2.  For the singular
    types the same sums are taken on Y with H = C0 + 2f.
    """
    split = base_splitting(c)
    S = split.surface
    p_g = sum(h0(c.H + L, S) for L in split.summands)
    q = sum(cohomology(L, S).h1 for L in split.summands)
    K2 = 4 * intersect(c.H, c.H, S)
    return Invariants(p_g, q, K2, 1 - q + p_g)


def product_invariants(g1: int, g2: int) -> tuple[int, int, int]:
    """(p_g, q, K^2) of a product of curves of genus g1 and g2."""
    if g1 < 0 or g2 < 0:
        raise ValueError("genera must be nonnegative")
    return g1 * g2, g1 + g2, 8 * (g1 - 1) * (g2 - 1)


def fiber_genus(c: CoverDescriptor) -> Fraction:
    """Genus of the pullback to the resolution of a general fiber f of Y.

    Adjunction with (p^* f)^2 = 0 and
    K.p^* f = deg(p) (H_Y . f) + sum_i c_i (F_i . p^* f).
    """
    if not c.singular:
        raise ValueError("defined for the singular types only")
    K_dot = 4 * intersect(H_Y, Divisor(0, 1), Y)
    K_dot += sum(comp.canonical_coefficient * comp.fiber_intersection for comp in c.exceptional.components)
    return 1 + Fraction(0 + K_dot, 2)


def iter_covers(m_max: int = 12, types=ALL_TYPES):
    """Every admissible descriptor with m <= m_max, sorted by type then m, e."""
    if m_max < 1:
        raise ValueError("m_max must be >= 1")
    for t in types:
        if t in ("1", "2") or t in SINGULAR_TYPES or t in ("5.1", "6.1", "8.1"):
            yield make_cover(t)
        elif t in ("3", "4"):
            for m in range(1, m_max + 1):
                for e in range(min(2, m - 1) + 1):
                    yield make_cover(t, m, e)
        elif t == "7":
            for m in range(1, m_max + 1):
                yield make_cover(t, m)
        else:
            for m in range(2, m_max + 1):
                yield make_cover(t, m)

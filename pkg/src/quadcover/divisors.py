"""Intersection theory and line bundle cohomology on P^2 and Hirzebruch surfaces.

On F_e a divisor class is written a*C0 + b*f with C0^2 = -e, C0.f = 1 and
f^2 = 0.  On P^2 a class is d times a line.  Every number here is an exact
integer; h^1 is obtained from h^0, h^2 and Riemann-Roch.

Two independent routes check the closed forms: :func:`oracle_h0` enumerates
Cox ring monomials directly, and :func:`leray_cohomology` reads all three
cohomology groups off the ruling F_e -> P^1.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import product
from math import comb


class SurfaceMismatch(ValueError):
    """A divisor class was used on a surface of the other kind."""


@dataclass(frozen=True)
class Surface:
    """The projective plane (``e is None``) or the Hirzebruch surface F_e."""

    e: int | None = None

    def __post_init__(self):
        if self.e is not None and self.e < 0:
            raise ValueError(f"Hirzebruch invariant must be >= 0, got {self.e}")

    @classmethod
    def plane(cls) -> Surface:
        return cls(None)

    @classmethod
    def hirzebruch(cls, e: int) -> Surface:
        return cls(e)

    @property
    def is_plane(self) -> bool:
        return self.e is None

    def __str__(self):
        return "P2" if self.is_plane else f"F{self.e}"


PLANE = Surface.plane()


def F(e: int) -> Surface:
    return Surface.hirzebruch(e)


@dataclass(frozen=True, order=True)
class Divisor:
    """Divisor class: ``a*C0 + b*f`` on F_e, or ``a`` lines on P^2 (``b is None``)."""

    a: int
    b: int | None = None

    @classmethod
    def line(cls, d: int) -> Divisor:
        return cls(d, None)

    @property
    def is_plane(self) -> bool:
        return self.b is None

    @property
    def d(self) -> int:
        if not self.is_plane:
            raise SurfaceMismatch(f"{self} is not a plane class")
        return self.a

    def _check(self, other: Divisor) -> None:
        if self.is_plane != other.is_plane:
            raise SurfaceMismatch(f"cannot combine {self} and {other}")

    def __add__(self, other: Divisor) -> Divisor:
        self._check(other)
        if self.is_plane:
            return Divisor(self.a + other.a)
        return Divisor(self.a + other.a, self.b + other.b)

    def __neg__(self) -> Divisor:
        return Divisor(-self.a, None if self.is_plane else -self.b)

    def __sub__(self, other: Divisor) -> Divisor:
        return self + (-other)

    def __mul__(self, k: int) -> Divisor:
        return Divisor(k * self.a, None if self.is_plane else k * self.b)

    __rmul__ = __mul__

    def fits(self, surface: Surface) -> bool:
        return self.is_plane == surface.is_plane

    def __str__(self):
        if self.is_plane:
            return f"{self.a}L"
        return format_hirzebruch(self.a, self.b)


def format_hirzebruch(a: int, b: int) -> str:
    if a == 0 and b == 0:
        return "0"
    parts = []
    for coeff, name in ((a, "C0"), (b, "f")):
        if coeff == 0:
            continue
        sign = "-" if coeff < 0 else "+"
        mag = "" if abs(coeff) == 1 else str(abs(coeff))
        parts.append(f"{sign}{mag}{name}")
    out = "".join(parts)
    return out[1:] if out.startswith("+") else out


def zero(surface: Surface) -> Divisor:
    return Divisor(0) if surface.is_plane else Divisor(0, 0)


def _require(D: Divisor, S: Surface) -> None:
    if not D.fits(S):
        raise SurfaceMismatch(f"divisor {D} does not live on {S}")


@dataclass(frozen=True)
class Cohomology:
    h0: int
    h1: int
    h2: int
    chi: int

    def __post_init__(self):
        if self.chi != self.h0 - self.h1 + self.h2:
            raise ArithmeticError(f"inconsistent cohomology {self}")
        if min(self.h0, self.h1, self.h2) < 0:
            raise ArithmeticError(f"negative cohomology {self}")

    def as_tuple(self) -> tuple[int, int, int]:
        return (self.h0, self.h1, self.h2)


def intersect(D1: Divisor, D2: Divisor, S: Surface) -> int:
    _require(D1, S)
    _require(D2, S)
    if S.is_plane:
        return D1.a * D2.a
    return -S.e * D1.a * D2.a + D1.a * D2.b + D1.b * D2.a


def canonical_class(S: Surface) -> Divisor:
    if S.is_plane:
        return Divisor(-3)
    return Divisor(-2, -S.e - 2)


def euler_char(D: Divisor, S: Surface) -> int:
    """chi(O_S(D)) by Riemann-Roch."""
    _require(D, S)
    if S.is_plane:
        return (D.a + 1) * (D.a + 2) // 2
    a, b = D.a, D.b
    return (a + 1) * (b + 1) - S.e * a * (a + 1) // 2


@lru_cache(maxsize=None)
def h0(D: Divisor, S: Surface) -> int:
    _require(D, S)
    if S.is_plane:
        return comb(D.a + 2, 2) if D.a >= 0 else 0
    if D.a < 0:
        return 0
    return sum(max(0, D.b - i * S.e + 1) for i in range(D.a + 1))


def h2(D: Divisor, S: Surface) -> int:
    return h0(canonical_class(S) - D, S)


@lru_cache(maxsize=None)
def cohomology(D: Divisor, S: Surface) -> Cohomology:
    top = h0(D, S)
    bottom = h2(D, S)
    chi = euler_char(D, S)
    return Cohomology(top, top + bottom - chi, bottom, chi)


def h1(D: Divisor, S: Surface) -> int:
    return cohomology(D, S).h1


def oracle_h0(D: Divisor, S: Surface) -> int:
    """Count Cox ring monomials of class D by direct enumeration.

    F_e has Cox ring k[x0, x1, y0, y1] with x0^alpha x1^beta y0^gamma y1^delta
    of class (gamma + delta) C0 + (alpha + beta + e*delta) f.  P^2 has
    k[x, y, z] graded by total degree.
    """
    _require(D, S)
    if S.is_plane:
        d = D.a
        if d < 0:
            return 0
        return sum(1 for i, j, k in product(range(d + 1), repeat=3) if i + j + k == d)
    a, b, e = D.a, D.b, S.e
    if a < 0 or b < 0:
        return 0
    count = 0
    for gamma, delta, alpha in product(range(a + 1), range(a + 1), range(b + 1)):
        beta = b - e * delta - alpha
        if gamma + delta == a and beta >= 0:
            count += 1
    return count


def _p1_h0(n: int) -> int:
    return max(0, n + 1)


def _p1_h1(n: int) -> int:
    return max(0, -n - 1)


def leray_cohomology(D: Divisor, S: Surface) -> Cohomology:
    """(h0, h1, h2) of a*C0 + b*f on F_e via the projection to P^1.

    For a >= 0, pi_* splits as sum_{i=0..a} O(b - i*e) and R^1 pi_* = 0.
    For a <= -2, pi_* = 0 and R^1 pi_* splits as sum_{i=a+1..-1} O(b - i*e).
    For a = -1 both vanish.
    """
    _require(D, S)
    if S.is_plane:
        raise SurfaceMismatch("the plane has no ruling")
    a, b, e = D.a, D.b, S.e
    top = mid = bottom = 0
    if a >= 0:
        for i in range(a + 1):
            top += _p1_h0(b - i * e)
            mid += _p1_h1(b - i * e)
    elif a <= -2:
        for i in range(a + 1, 0):
            mid += _p1_h0(b - i * e)
            bottom += _p1_h1(b - i * e)
    return Cohomology(top, mid, bottom, top - mid + bottom)


def parse_surface(text: str) -> Surface:
    """Parse ``P2`` or ``F:e``."""
    t = text.strip()
    if t.upper() == "P2":
        return PLANE
    if t[:2].upper() == "F:":
        try:
            return F(int(t[2:]))
        except ValueError:
            pass
    raise ValueError(f"bad surface {text!r}; expected 'P2' or 'F:e' (e.g. F:2)")


def parse_divisor(text: str, S: Surface) -> Divisor:
    """Parse ``d`` on the plane or ``a,b`` on F_e."""
    fields = [p.strip() for p in text.split(",")]
    try:
        nums = [int(p) for p in fields]
    except ValueError:
        nums = []
    if S.is_plane and len(nums) == 1:
        return Divisor(nums[0])
    if not S.is_plane and len(nums) == 2:
        return Divisor(nums[0], nums[1])
    example = "3" if S.is_plane else "1,4"
    raise ValueError(f"bad divisor {text!r} for {S}; expected e.g. {example!r}")

"""The bicanonical map of a quadruple cover, studied through phi_* O_X.

Sections of n K_X = phi^*(nH) split into the four eigen-summands
H^0(nH + Li*).  A multiplication map on X splits the same way, and the part
landing in a target summand is fed by products of summands whose characters
add up to the target character.  Images are computed on W with the
multiplication structure

    O x O -> O,   O x Li* -> Li*,   L1* x L2* -> L3*

(both orders).  The remaining products of the algebra pass through branch
equations and are left out, so a surjective verdict is a rigorous lower
bound.  A summand that is missed is flagged ``certified`` when no pair of the
full character table can reach it at all.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .covers import (
    SINGULAR_TYPES,
    CoverDescriptor,
    Splitting,
    base_splitting,
    char_add,
    generated_subgroup,
    invariants,
    splitting,
    y_splitting,
)
from .divisors import Divisor, cohomology, h0
from .sections import MultMapReport, image_rank, mult_map

# summand index -> source index pairs allowed by the multiplication structure
STRUCTURE_PAIRS = {
    0: ((0, 0),),
    1: ((0, 1), (1, 0)),
    2: ((0, 2), (2, 0)),
    3: ((0, 3), (3, 0), (1, 2), (2, 1)),
}


@dataclass(frozen=True)
class PushedEntry:
    divisor: Divisor
    character: object
    h0: int


@dataclass(frozen=True)
class PushedSections:
    n: int
    entries: tuple[PushedEntry, ...]

    @property
    def total(self) -> int:
        return sum(x.h0 for x in self.entries)

    def h0_list(self) -> list[int]:
        return [x.h0 for x in self.entries]


def pushed_sections(c: CoverDescriptor, n: int) -> PushedSections:
    """H^0(n K_X) split into H^0(nH + Li*) by character."""
    if n < 1:
        raise ValueError("n must be >= 1")
    split = base_splitting(c)
    entries = tuple(
        PushedEntry(n * c.H + L, ch, h0(n * c.H + L, split.surface))
        for L, ch in zip(split.summands, split.characters)
    )
    return PushedSections(n, entries)


@dataclass(frozen=True)
class SummandImage:
    index: int
    character: object
    target: Divisor
    dim_target: int
    rank: int
    certified: bool

    @property
    def coker_dim(self) -> int:
        return self.dim_target - self.rank


@dataclass(frozen=True)
class GradedMapReport:
    """H^0(n1 K) x H^0(n2 K) -> H^0((n1+n2) K), summand by summand."""

    n1: int
    n2: int
    summands: tuple[SummandImage, ...]

    @property
    def dim_target(self) -> int:
        return sum(s.dim_target for s in self.summands)

    @property
    def rank(self) -> int:
        return sum(s.rank for s in self.summands)

    @property
    def coker_dim(self) -> int:
        return self.dim_target - self.rank

    @property
    def surjective(self) -> bool:
        return self.coker_dim == 0

    def missed(self) -> list[SummandImage]:
        return [s for s in self.summands if s.coker_dim > 0]

    @property
    def certified_failure(self) -> bool:
        return any(s.certified for s in self.missed())


def _full_pairs(split: Splitting, group: str, target: int):
    chars = split.characters
    want = chars[target]
    return [(i, j) for i in range(4) for j in range(4) if char_add(group, chars[i], chars[j]) == want]


def graded_map(c: CoverDescriptor, n1: int, n2: int, split: Splitting | None = None) -> GradedMapReport:
    split = split or splitting(c)
    S = split.surface
    A1 = [n1 * c.H + L for L in split.summands]
    A2 = [n2 * c.H + L for L in split.summands]
    out = []
    for t, L in enumerate(split.summands):
        target = (n1 + n2) * c.H + L
        pairs = [(A1[i], A2[j]) for i, j in STRUCTURE_PAIRS[t]]
        live = [(x, y) for x, y in pairs if h0(x, S) and h0(y, S)]
        rank = image_rank(live, S)
        full = _full_pairs(split, c.group, t)
        certified = all(h0(A1[i], S) == 0 or h0(A2[j], S) == 0 for i, j in full)
        out.append(SummandImage(t, split.characters[t], target, h0(target, S), rank, certified))
    return GradedMapReport(n1, n2, tuple(out))


def _smooth(c: CoverDescriptor) -> None:
    if c.singular:
        raise ValueError(f"{c.label()}: defined for smooth-base types only")


def beta_surjective(c: CoverDescriptor) -> GradedMapReport:
    """H^0(2K) x H^0(2K) -> H^0(4K)."""
    _smooth(c)
    return graded_map(c, 2, 2)


@dataclass(frozen=True)
class NormalGeneration:
    normally_generated: bool
    steps: tuple[GradedMapReport, ...]
    witness: tuple[int, SummandImage] | None = None

    def __bool__(self):
        return self.normally_generated


def normal_generation(c: CoverDescriptor, n_max: int = 5) -> NormalGeneration:
    """Check H^0(2K) x H^0(2nK) -> H^0((2n+2)K) for 1 <= n <= n_max.

    Stops at the first failing step and records the first missed summand.
    """
    _smooth(c)
    if n_max < 1:
        raise ValueError("n_max must be >= 1")
    steps = []
    for n in range(1, n_max + 1):
        rep = graded_map(c, 2, 2 * n)
        steps.append(rep)
        if not rep.surjective:
            missed = rep.missed()
            pick = next((s for s in missed if s.certified), missed[0])
            return NormalGeneration(False, tuple(steps), (n, pick))
    return NormalGeneration(True, tuple(steps))


MAIN_THEOREM = {
    "embedding": ("1", "2", "3", "4", "5.2", "6.2"),
    "birational": SINGULAR_TYPES,
    "degree2": ("5.1", "6.1", "7", "8.2"),
    "degree4": ("8.1",),
}


def _image_descriptor(c: CoverDescriptor) -> str:
    t, m = c.type_id, c.m
    if t in MAIN_THEOREM["embedding"]:
        return "X embedded as a projectively normal surface"
    if t in SINGULAR_TYPES:
        if t == "11":
            return "birational; the two points over the vertex are identified, local embedding at each"
        return "birational; directions not separated at the point over the vertex"
    if t in ("5.1", "6.1"):
        return "P1 x elliptic curve; conic x projectively normal quartic curve, by |2D+4G|"
    if t == "7":
        return f"P1 x curve of genus {m}; conic x projectively normal curve of degree {4 * m}, by |2D+{4 * m}G|"
    if t == "8.1":
        return "F0 embedded by |2C0+2f|"
    return f"conic x projectively normal curve of genus {m + 1} and degree {4 * m}"


@dataclass(frozen=True)
class BicanonicalReport:
    degree: int
    birational: bool
    embedding: bool
    image_descriptor: str
    obstruction_h1: int | None = None
    characters: tuple = field(default=(), compare=False)

    def __post_init__(self):
        if self.embedding and not (self.degree == 1 and self.birational):
            raise ArithmeticError("an embedding has degree 1")
        if self.degree > 1 and self.birational:
            raise ArithmeticError("degree > 1 is not birational")


def factor_degree(c: CoverDescriptor, n_max: int = 2) -> BicanonicalReport:
    """Degree of phi_2 from the characters carrying sections of 2K.

    phi_2 factors through the quotient of X by the subgroup of G killing every
    character V with H^0(2H + L_V*) != 0, so its degree is |G| / |<V>|.
    Degree one is refined with the normal generation check (smooth base) or
    the obstruction of the singular case.
    """
    live = tuple(x.character for x in pushed_sections(c, 2).entries if x.h0 > 0)
    degree = c.order // len(generated_subgroup(c.group, live))
    obstruction = None
    if degree > 1:
        embedding = False
    elif c.singular:
        obstruction = singular_obstruction(c)
        embedding = obstruction == 0
    else:
        embedding = normal_generation(c, n_max).normally_generated
    return BicanonicalReport(degree, degree == 1, embedding, _image_descriptor(c), obstruction, live)


def genus2_pencil(c: CoverDescriptor) -> int | None:
    """Genus of the base curve of the pencil of genus 2 curves, if X has one."""
    t = c.type_id
    if t in ("5.1", "6.1"):
        g = 1
    elif t == "7":
        g = c.m
    elif t in ("8.1", "8.2"):
        g = c.m + 1
    else:
        return None
    if invariants(c).q < g:
        raise ArithmeticError(f"{c.label()}: q < genus of the pencil base")
    return g


# summand of phi_* O belonging to the intermediate double cover p1: X' -> W
_P1_SUMMAND = {"5.1": 2, "6.1": 2, "7": 2, "8.2": 2}


@dataclass(frozen=True)
class ImageCheck:
    r: int
    target: Divisor
    sources: tuple[tuple[Divisor, Divisor, MultMapReport], ...]
    rank: int
    dim_target: int

    @property
    def surjective(self) -> bool:
        return self.rank == self.dim_target


def image_projectively_normal(c: CoverDescriptor, r_max: int = 4) -> tuple[bool, list[ImageCheck]]:
    """Check H^0(L) x H^0(rL) -> H^0((r+1)L) on the image of phi_2, r <= r_max.

    L corresponds to 2H on W twisted by the subalgebra O + M* of the double
    cover that phi_2 factors through (Type 8.1: phi_2 factors through phi and
    only O is kept).
    """
    if c.type_id not in ("5.1", "6.1", "7", "8.1", "8.2"):
        raise ValueError(f"{c.label()}: phi_2 is not of degree > 1")
    S = c.surface
    parts = [Divisor(0, 0)]
    if c.type_id in _P1_SUMMAND:
        parts.append(splitting(c).summands[_P1_SUMMAND[c.type_id]])
    L = 2 * c.H
    checks = []
    for r in range(1, r_max + 1):
        for k, M in enumerate(parts):
            target = (r + 1) * L + M
            if k == 0:
                pairs = [(L, r * L)]
            else:
                pairs = [(L, r * L + M), (L + M, r * L)]
            pairs = [(x, y) for x, y in pairs if h0(x, S) and h0(y, S)]
            sources = tuple((x, y, mult_map(x, y, S)) for x, y in pairs)
            checks.append(ImageCheck(r, target, sources, image_rank(pairs, S), h0(target, S)))
    return all(ch.surjective for ch in checks), checks


def h1_pullback_terms(split: Splitting, D: Divisor) -> list[tuple[Divisor, int]]:
    """(D + Li*, h1) for each summand, on the surface of the splitting."""
    return [(D + L, cohomology(D + L, split.surface).h1) for L in split.summands]


def h1_pullback(split: Splitting, D: Divisor) -> int:
    """h1(p^* O(D)) = sum_i h1(D + Li*) by the projection formula and Leray."""
    return sum(v for _, v in h1_pullback_terms(split, D))


# divisor on Y carrying the obstruction for each singular type
OBSTRUCTION_CLASS = {
    "9": Divisor(1, 4),
    "10": Divisor(1, 4),
    "11": Divisor(1, 4),
    "12": Divisor(0, -2),
}


def singular_obstruction(c: CoverDescriptor) -> int:
    """h1 of 2K_X twisted by the square of the ideal of the point(s) over the vertex.

    Types 9, 10, 11 reduce to h1(p^*(C0+4f)); Type 12 to h1(p^*(-2f)) by
    Serre duality on the resolution.
    """
    if c.type_id not in SINGULAR_TYPES:
        raise ValueError(f"{c.label()}: obstruction is defined for Types 9-12 only")
    return h1_pullback(y_splitting(c), OBSTRUCTION_CLASS[c.type_id])

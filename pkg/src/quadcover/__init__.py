"""Exact numerics for quadruple Galois canonical covers of surfaces of minimal degree."""

from .covers import ALL_TYPES, SINGULAR_TYPES, SMOOTH_TYPES, make_cover
from .divisors import PLANE, Divisor, F, Surface, cohomology, h0

__all__ = [
    "ALL_TYPES",
    "SINGULAR_TYPES",
    "SMOOTH_TYPES",
    "PLANE",
    "Divisor",
    "F",
    "Surface",
    "cohomology",
    "h0",
    "make_cover",
]

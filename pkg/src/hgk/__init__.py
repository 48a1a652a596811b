"""Exact symbolic kernel for Hopf-Galois objects, quantum doubles and braided joins."""

from .scalars import (
    RationalField,
    CyclotomicField,
    PhaseRing,
    PhaseFractionField,
    parse_scalar,
)

__all__ = [
    "RationalField",
    "CyclotomicField",
    "PhaseRing",
    "PhaseFractionField",
    "parse_scalar",
]

__version__ = "0.1.0"

"""Helpers for exact rational scalars and vectors.

All combinatorial quantities in kstab (volumes, barycenters, invariants) are
`fractions.Fraction` values, which are always stored in lowest terms with a
positive denominator.  This module only adds parsing/formatting glue used by
the JSON interfaces and the CLI.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Sequence

Vec = tuple[Fraction, ...]


def rational(value) -> Fraction:
    """Coerce ints, "p/q" strings and Fractions to a Fraction.

    Floats are rejected: exactness is part of every combinatorial contract.
    """
    if isinstance(value, float):
        raise TypeError(f"refusing float {value!r} where an exact rational is required")
    return Fraction(value)


def rational_vec(values: Iterable) -> Vec:
    return tuple(rational(v) for v in values)


def format_rational(value: Fraction) -> str:
    """Lossless "p/q" string (bare "p" when the denominator is 1)."""
    return str(Fraction(value))


def format_vec(values: Sequence[Fraction]) -> list[str]:
    return [format_rational(v) for v in values]


def dot(a: Sequence[Fraction], b: Sequence[Fraction]) -> Fraction:
    return sum((x * y for x, y in zip(a, b, strict=True)), Fraction(0))

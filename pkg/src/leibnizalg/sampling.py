"""Deterministic rational sampling for seeded oracle checks.

All randomized checks in the package and its test suite draw from here so
that a seed pins the exact sequence of vectors on every platform.
"""

from __future__ import annotations

import random
from fractions import Fraction

from .exactlin import Vector


def rational(rng: random.Random, num_bound: int = 9, den_bound: int = 4) -> Fraction:
    return Fraction(rng.randint(-num_bound, num_bound), rng.randint(1, den_bound))


def rational_vector(rng: random.Random, dim: int,
                    num_bound: int = 9, den_bound: int = 4) -> Vector:
    return tuple(rational(rng, num_bound, den_bound) for _ in range(dim))

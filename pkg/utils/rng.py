# utils/rng.py

import random
from fractions import Fraction
from typing import Tuple

from config import GRID_MAX, PROBE_RANGE


def make_rng(seed: int) -> random.Random:
    """Single seeded generator; every random choice in a run draws from it"""
    return random.Random(seed)


def grid_fraction(rng: random.Random, allow_zero: bool = False) -> Fraction:
    """Nonnegative rational p/q with 1 <= q <= GRID_MAX and p <= GRID_MAX"""
    low = 0 if allow_zero else 1
    return Fraction(rng.randint(low, GRID_MAX), rng.randint(1, GRID_MAX))


def grid_weights(
    rng: random.Random, n: int, allow_zero: bool = False
) -> Tuple[Fraction, ...]:
    return tuple(grid_fraction(rng, allow_zero) for _ in range(n))


def signed_weights(rng: random.Random, n: int) -> Tuple[Fraction, ...]:
    """Rationals in [-PROBE_RANGE, PROBE_RANGE] with denominators up to 10"""
    weights = []
    for _ in range(n):
        den = rng.randint(1, 10)
        weights.append(Fraction(rng.randint(-PROBE_RANGE * den, PROBE_RANGE * den), den))
    return tuple(weights)

"""Échantillonnage déterministe pour les audits (random.Random avec graine)."""

import math
import random
from fractions import Fraction

from src.utils.config import DEFAULT_SEED, SAMPLE_MAX_DENOMINATOR


def make_rng(seed: int = DEFAULT_SEED) -> random.Random:
    """Return a private generator so audits never touch the global state."""
    return random.Random(seed)


def random_fraction(
    rng: random.Random, low: Fraction, high: Fraction, max_denominator: int = SAMPLE_MAX_DENOMINATOR
) -> Fraction:
    """Draw a rational in [low, high] with denominator at most ``max_denominator``."""
    q = rng.randint(1, max_denominator)
    lo, hi = math.ceil(low * q), math.floor(high * q)
    if lo > hi:
        return Fraction(low)
    return Fraction(rng.randint(lo, hi), q)


def random_unit_fraction(rng: random.Random, max_denominator: int = SAMPLE_MAX_DENOMINATOR) -> Fraction:
    """Draw a rational in [0, 1)."""
    q = rng.randint(1, max_denominator)
    return Fraction(rng.randrange(q), q)


def random_weights(rng: random.Random, count: int, low: int = 1, high: int = 4) -> list[Fraction]:
    """Return ``count`` positive rationals summing to 1."""
    raw = [rng.randint(low, high) for _ in range(count)]
    total = sum(raw)
    return [Fraction(w, total) for w in raw]

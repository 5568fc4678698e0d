"""Shared test oracles, kept independent of the library code paths."""

from fractions import Fraction
from math import comb

import pytest

from ordstat import Exponential, Uniform, Weibull


def exact_binom_tail(n: int, lo: int, p) -> Fraction:
    """Upper binomial tail by direct summation in exact rationals."""
    p = Fraction(p)
    return sum(
        (Fraction(comb(n, i)) * p**i * (1 - p) ** (n - i) for i in range(lo, n + 1)),
        start=Fraction(0),
    )


def model_triplet():
    """One representative of each absolutely continuous model family."""
    return [Exponential(1.0), Weibull(2.0, 1.0), Uniform(0.0, 3.0)]


@pytest.fixture
def models():
    return model_triplet()

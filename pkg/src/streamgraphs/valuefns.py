"""Triplet value functions for generalized weighted clustering.

Each takes the two weights adjacent to the centre.  ``geo_mean`` stays
exact when the product is a perfect rational square and falls back to a
float otherwise.
"""

from fractions import Fraction
from math import isqrt, sqrt

VALUE_FUNCTIONS = ("product", "arith_mean", "geo_mean", "min", "max")


def _exact_sqrt(x: Fraction):
    if x < 0:
        raise ValueError("geometric mean of negative weights")
    x = Fraction(x)
    p, q = x.numerator, x.denominator
    rp, rq = isqrt(p), isqrt(q)
    if rp * rp == p and rq * rq == q:
        return Fraction(rp, rq)
    return sqrt(p / q)


def arith_mean(a, b):
    return (a + b) / 2


def geo_mean(a, b):
    if isinstance(a, float) or isinstance(b, float):
        return sqrt(a * b)
    return _exact_sqrt(Fraction(a) * Fraction(b))


def product(a, b):
    return a * b


PAIR_VALUE = {
    "product": product,
    "arith_mean": arith_mean,
    "geo_mean": geo_mean,
    "min": min,
    "max": max,
}


def pair_value(name: str):
    try:
        return PAIR_VALUE[name]
    except KeyError:
        raise ValueError(f"unknown value function {name!r}; pick one of {VALUE_FUNCTIONS}") from None

"""Certified interval arithmetic over exact rational endpoints.

The tail-estimate verifications need to compare exact binomial ratios against
thresholds involving pi and e^(-j^2/32).  Those two constants are enclosed by
converging rational bounds (bracketing partial sums of alternating series and
scaled integer square roots), so every decision reduces to exact Fraction
comparisons: there is no floating point and no rounding mode anywhere.

A comparison against a threshold is decisive only when the whole interval
falls on one side; callers escalate precision (more series terms / more bits)
until it does, or give up and report the check as inconclusive.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction


@dataclass(frozen=True)
class Interval:
    """Closed interval [lo, hi] with Fraction endpoints, lo <= hi."""

    lo: Fraction
    hi: Fraction

    def __post_init__(self) -> None:
        if self.lo > self.hi:
            raise ValueError(f"inverted interval [{self.lo}, {self.hi}]")

    @staticmethod
    def point(x: Fraction | int) -> "Interval":
        x = Fraction(x)
        return Interval(x, x)

    def __add__(self, other: "Interval") -> "Interval":
        return Interval(self.lo + other.lo, self.hi + other.hi)

    def __sub__(self, other: "Interval") -> "Interval":
        return Interval(self.lo - other.hi, self.hi - other.lo)

    def __mul__(self, other: "Interval") -> "Interval":
        products = (
            self.lo * other.lo,
            self.lo * other.hi,
            self.hi * other.lo,
            self.hi * other.hi,
        )
        return Interval(min(products), max(products))

    def scale(self, c: Fraction | int) -> "Interval":
        c = Fraction(c)
        if c >= 0:
            return Interval(self.lo * c, self.hi * c)
        return Interval(self.hi * c, self.lo * c)

    def reciprocal(self) -> "Interval":
        if self.lo <= 0:
            raise ValueError("reciprocal requires a strictly positive interval")
        return Interval(1 / self.hi, 1 / self.lo)

    def width(self) -> Fraction:
        return self.hi - self.lo

    def contains(self, x: Fraction) -> bool:
        return self.lo <= x <= self.hi

    def entirely_above(self, x: Fraction) -> bool:
        return self.lo > x

    def entirely_below(self, x: Fraction) -> bool:
        return self.hi < x


def _arctan_enclosure(x: Fraction, terms: int) -> Interval:
    """Bracketing partial sums of arctan(x) = x - x^3/3 + x^5/5 - ...

    Valid for 0 < x < 1, where the terms decrease monotonically, so
    consecutive partial sums straddle the limit.
    """
    if not 0 < x < 1:
        raise ValueError("arctan enclosure needs 0 < x < 1")
    if terms < 1:
        raise ValueError("need at least one term")
    s = Fraction(0)
    power = x
    x2 = x * x
    prev = None
    for k in range(terms + 1):
        term = power / (2 * k + 1)
        s = s + term if k % 2 == 0 else s - term
        power *= x2
        if k == terms - 1:
            prev = s
    assert prev is not None
    return Interval(min(prev, s), max(prev, s))


def pi_enclosure(terms: int) -> Interval:
    """Rational bounds on pi via pi = 16*arctan(1/5) - 4*arctan(1/239)."""
    a5 = _arctan_enclosure(Fraction(1, 5), terms)
    a239 = _arctan_enclosure(Fraction(1, 239), max(2, terms // 2))
    return a5.scale(16) - a239.scale(4)


def exp_enclosure(x: Fraction, terms: int) -> Interval:
    """Rational bounds on e^x for -1 < x <= 0 via the alternating Taylor series.

    With |x| < 1 the terms x^k / k! decrease in absolute value from the start,
    so consecutive partial sums bracket the limit.
    """
    if not -1 < x <= 0:
        raise ValueError("exp enclosure implemented for -1 < x <= 0 only")
    if x == 0:
        return Interval.point(Fraction(1))
    if terms < 1:
        raise ValueError("need at least one term")
    s = Fraction(1)
    term = Fraction(1)
    prev = None
    for k in range(1, terms + 2):
        term = term * x / k
        s += term
        if k == terms:
            prev = s
    assert prev is not None
    return Interval(min(prev, s), max(prev, s))


def sqrt_enclosure(x: Fraction, bits: int) -> Interval:
    """Rational bounds on sqrt(x) with 2^-bits resolution, via integer isqrt."""
    if x < 0:
        raise ValueError("sqrt of a negative rational")
    if x == 0:
        return Interval.point(Fraction(0))
    # sqrt(n/d) = sqrt(n*d)/d; bracket sqrt(n*d * 4^bits) between s and s+1
    n, d = x.numerator, x.denominator
    s = math.isqrt(n * d << (2 * bits))
    den = d << bits
    return Interval(Fraction(s, den), Fraction(s + 1, den))

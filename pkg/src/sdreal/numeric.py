"""Exact scalar and affine primitives: rationals, closed intervals, and
increasing affine maps of the line.

Everything in this module (and in the rest of the package) is exact
rational arithmetic; floats are rejected at the boundary because they
carry silent binary rounding error.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

Rational = Fraction

ZERO = Fraction(0)
ONE = Fraction(1)
HALF = Fraction(1, 2)


def rational(value) -> Fraction:
    """Coerce an int, Fraction, or string ("p/q" or a decimal literal)
    to an exact Fraction."""
    if isinstance(value, float):
        raise TypeError(f"refusing inexact float {value!r}; pass a string or Fraction")
    return Fraction(value)


def clamp_unit(x: Fraction) -> Fraction:
    """Clamp x into [-1, 1]."""
    if x < -1:
        return -ONE
    if x > 1:
        return ONE
    return x


@dataclass(frozen=True, slots=True)
class Interval:
    """Closed interval [lo, hi] with rational endpoints; lo <= hi.

    Degenerate intervals (lo == hi) are allowed.
    """

    lo: Fraction
    hi: Fraction

    def __post_init__(self):
        object.__setattr__(self, "lo", rational(self.lo))
        object.__setattr__(self, "hi", rational(self.hi))
        if self.lo > self.hi:
            raise ValueError(f"interval endpoints out of order: {self.lo} > {self.hi}")

    @property
    def width(self) -> Fraction:
        return self.hi - self.lo

    @property
    def midpoint(self) -> Fraction:
        return (self.lo + self.hi) / 2

    def contains(self, x: Fraction) -> bool:
        return self.lo <= x <= self.hi

    def encloses(self, other: "Interval") -> bool:
        return self.lo <= other.lo and other.hi <= self.hi

    def intersects(self, other: "Interval") -> bool:
        return self.lo <= other.hi and other.lo <= self.hi

    def __str__(self) -> str:
        return f"[{self.lo}, {self.hi}]"


#: The carrier of the whole package: the unit interval [-1, 1].
UNIT = Interval(Fraction(-1), Fraction(1))


@dataclass(frozen=True, slots=True)
class Palm:
    """Positive affine linear map x -> slope * x + offset with slope > 0.

    These maps form a group under composition (the inverse of an
    increasing affine map is again one), and monotonicity makes interval
    images trivial to compute exactly.  They are the workhorse for digit
    maps, their inverses, and attractor extraction.
    """

    slope: Fraction
    offset: Fraction

    def __post_init__(self):
        object.__setattr__(self, "slope", rational(self.slope))
        object.__setattr__(self, "offset", rational(self.offset))
        if self.slope <= 0:
            raise ValueError(f"slope must be positive, got {self.slope}")

    def apply(self, x: Fraction) -> Fraction:
        return self.slope * x + self.offset

    __call__ = apply

    def compose(self, other: "Palm") -> "Palm":
        """The map x -> self(other(x)), exactly."""
        return Palm(self.slope * other.slope, self.slope * other.offset + self.offset)

    def inverse(self) -> "Palm":
        """The map k with k(self(x)) == x for all x."""
        return Palm(1 / self.slope, -self.offset / self.slope)

    def maps_unit_into_unit(self) -> bool:
        """True iff the image of [-1, 1] stays inside [-1, 1].

        Equivalent to slope + |offset| <= 1: the image is
        [offset - slope, offset + slope].
        """
        return self.slope + abs(self.offset) <= 1

    def image(self, iv: Interval) -> Interval:
        """Image of a closed interval; exact since the map is increasing."""
        return Interval(self.apply(iv.lo), self.apply(iv.hi))

    def __str__(self) -> str:
        return f"x -> {self.slope}*x + {self.offset}"


IDENTITY = Palm(ONE, ZERO)

"""Lazy signed-digit streams and their exchange with precision-indexed
rational oracles.

A stream of digits d0 d1 d2 ... denotes the unique point lying in every
nested interval (av_d0 o ... o av_dn-1)[-1, 1]; the interval at depth n
has width exactly 2**(1-n), so finite prefixes certify the value to any
accuracy.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Callable, Iterable, Optional

from .digitspace import SIGNED, SignedDigitSpace, check_digit
from .numeric import IDENTITY, Interval, Palm, UNIT, clamp_unit, rational


class DigitStream:
    """Lazy infinite sequence of signed digits.

    A cell holds its head digit and a deferred tail, built on first
    access and cached.  Step functions are required to be pure, so
    forcing is idempotent: concurrent prefix requests return identical
    digits even if two threads race to build the same tail.
    """

    __slots__ = ("head", "_make_tail", "_tail")

    def __init__(self, head: int, make_tail: Callable[[], "DigitStream"]):
        self.head = check_digit(head)
        self._make_tail = make_tail
        self._tail: Optional[DigitStream] = None

    @property
    def tail(self) -> "DigitStream":
        if self._tail is None:
            self._tail = self._make_tail()
        return self._tail

    def prefix(self, n: int) -> list[int]:
        """The first n digits, forcing exactly n cells."""
        if n < 0:
            raise ValueError(f"prefix length must be nonnegative, got {n}")
        out = []
        cell = self
        for i in range(n):
            out.append(cell.head)
            if i + 1 < n:
                cell = cell.tail
        return out

    @classmethod
    def unfold(cls, seed, step: Callable) -> "DigitStream":
        """Corecursion: step(seed) -> (digit, next_seed); the head is
        computed now, everything after on demand."""
        digit, nxt = step(seed)
        return cls(digit, lambda: cls.unfold(nxt, step))

    @classmethod
    def constant(cls, d: int) -> "DigitStream":
        check_digit(d)
        stream = cls(d, lambda: stream)
        return stream

    @classmethod
    def from_digits(cls, digits: Iterable[int], then: "DigitStream") -> "DigitStream":
        """A stream starting with the given digits and continuing as ``then``."""
        stream = then
        for d in reversed(list(digits)):
            stream = cons(d, stream)
        return stream


def cons(d: int, stream: DigitStream) -> DigitStream:
    return DigitStream(d, lambda: stream)


class CauchyReal:
    """Precision-indexed oracle for a point of [-1, 1]: query(n) must
    return a rational within 2**-n of the represented value.

    Results are cached, so an oracle is deterministic per index; returned
    values are checked to lie in the carrier.
    """

    def __init__(self, fn: Callable[[int], Fraction]):
        self._fn = fn
        self._cache: dict[int, Fraction] = {}

    def query(self, n: int) -> Fraction:
        if n < 0:
            raise ValueError(f"precision must be nonnegative, got {n}")
        value = self._cache.get(n)
        if value is None:
            value = rational(self._fn(n))
            if not UNIT.contains(value):
                raise ValueError(f"oracle answer {value} outside the carrier [-1, 1]")
            self._cache[n] = value
        return value

    @classmethod
    def constant(cls, x) -> "CauchyReal":
        """The oracle of an exactly known rational point."""
        point = rational(x)
        if not UNIT.contains(point):
            raise ValueError(f"point {point} outside the carrier [-1, 1]")
        return cls(lambda n: point)

    @classmethod
    def from_levels(cls, levels) -> "CauchyReal":
        """Oracle backed by a finite table: query(n) is levels[n], with the
        last entry repeated forever.  Valid only when the final entry is
        the represented point exactly."""
        table = [rational(x) for x in levels]
        if not table:
            raise ValueError("need at least one level")
        return cls(lambda n: table[min(n, len(table) - 1)])


def prefix_palm(stream: DigitStream, n: int, space: SignedDigitSpace = SIGNED) -> Palm:
    """The composite of the first n digit maps, leftmost digit outermost."""
    palm = IDENTITY
    cell = stream
    for i in range(n):
        palm = palm.compose(space.digit(cell.head))
        if i + 1 < n:
            cell = cell.tail
    return palm


def value_interval(stream: DigitStream, n: int, space: SignedDigitSpace = SIGNED) -> Interval:
    """The depth-n certificate interval: the image of the carrier under
    the first n digit maps.  Width is exactly 2**(1-n); the intervals
    are nested and all contain the stream's value."""
    return prefix_palm(stream, n, space).image(UNIT)


def to_cauchy(stream: DigitStream, space: SignedDigitSpace = SIGNED) -> CauchyReal:
    """Oracle for the stream's value.

    query(n) evaluates a prefix long enough that its certificate interval
    is narrower than 2**-n at the base point; the value and the answer
    both lie in that interval, so the answer is strictly within 2**-n.
    """
    def answer(n: int) -> Fraction:
        depth = space.depth_for_width(n)
        return prefix_palm(stream, depth, space).apply(space.base_point)

    return CauchyReal(answer)


def from_cauchy(oracle: CauchyReal, space: SignedDigitSpace = SIGNED) -> DigitStream:
    """Extract a digit stream for the point an oracle approximates.

    Each step queries the oracle at the anchor precision, which pins the
    point inside the chosen digit's image; the tail works on the residual
    oracle obtained by pulling answers back through the digit's right
    inverse (clamped into the carrier, a no-op for honest oracles).
    """
    anchor = space.anchor_precision()
    radius = space.well_covering_radius

    def residual(parent: CauchyReal, d: int) -> CauchyReal:
        def answer(n: int, _parent=parent, _d=d) -> Fraction:
            u = _parent.query(space.right_inverse_modulus(n))
            return clamp_unit(2 * u - _d)

        return CauchyReal(answer)

    def step(current: CauchyReal):
        d = space.covering_digit(current.query(anchor), radius)
        return d, residual(current, d)

    return DigitStream.unfold(oracle, step)


def word_from_basic(u, n: int, space: SignedDigitSpace = SIGNED) -> list[int]:
    """A digit word whose evaluation at the base point is within 2**-n of
    the rational u.

    Since basic points are exact, this reduces to extracting a stream for
    the constant oracle of u and taking a prefix one digit longer than
    the width threshold requires.
    """
    depth = space.depth_for_width(n - 1) + 1
    return from_cauchy(CauchyReal.constant(u), space).prefix(depth)

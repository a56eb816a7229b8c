"""The signed digit space: [-1, 1] covered by the three halving maps
av_d(x) = (x + d) / 2 for d in {-1, 0, +1}.

The class below bundles the digits (as palms) with the effectivity data
the stream and tree algorithms consume:

* ``contraction`` -- a common contraction factor q < 1 for all digits,
* ``bound`` -- a bound M on the diameter of the carrier,
* ``well_covering_radius`` -- a rational eps > 0 such that around every
  point of the carrier the open eps-ball (clipped to the carrier) fits
  inside some digit image,
* ``base_point`` -- a distinguished rational used to evaluate digit
  words to points.

Only this instance ships.  A hypothetical replacement space must supply
the same surface with exactly the guarantees documented on each method;
in particular approximate preimage selection under a digit must be
(1) stable under the choice of tolerance, (2) uniformly continuous in
the queried point with a computable modulus, and (3) correct, i.e. the
selected point is within tolerance of an exact preimage.  For the
signed digits all three are trivial because the right inverse
x -> 2x - d is exact.
"""

from __future__ import annotations

from fractions import Fraction

from .numeric import HALF, Interval, Palm, UNIT

#: Fixed digit order; every "pick a digit" in the package scans in this
#: order, which makes all extracted streams and trees deterministic.
SIGNED_DIGITS = (-1, 0, 1)

_SYMBOL_OF = {-1: "-", 0: "0", 1: "+"}
_DIGIT_OF = {"-": -1, "0": 0, "+": 1}


def check_digit(d: int) -> int:
    if d not in (-1, 0, 1):
        raise ValueError(f"not a signed digit: {d!r}")
    return d


def word_to_text(word) -> str:
    """Render a digit word over the alphabet -, 0, + (e.g. [1,-1,0] -> "+-0")."""
    return "".join(_SYMBOL_OF[check_digit(d)] for d in word)


def word_from_text(text: str) -> tuple[int, ...]:
    try:
        return tuple(_DIGIT_OF[c] for c in text)
    except KeyError as exc:
        raise ValueError(f"bad digit symbol {exc.args[0]!r} in {text!r}") from None


class SignedDigitSpace:
    """Descriptor for the signed digit space; immutable and pure."""

    digits = SIGNED_DIGITS

    def __init__(self):
        self._palm = {d: Palm(HALF, Fraction(d, 2)) for d in SIGNED_DIGITS}
        self._image = {d: self._palm[d].image(UNIT) for d in SIGNED_DIGITS}
        self.contraction = HALF
        self.bound = Fraction(2)
        self.well_covering_radius = Fraction(1, 4)
        self.base_point = Fraction(0)

    def digit(self, d: int) -> Palm:
        """The halving map indexed by d."""
        return self._palm[check_digit(d)]

    def digit_image(self, d: int) -> Interval:
        """The image of the carrier under digit d: [-1,0], [-1/2,1/2] or [0,1]."""
        return self._image[check_digit(d)]

    def apply_digit(self, d: int, u: Fraction, precision: int = 0) -> Fraction:
        """Apply digit d to a carrier point, exactly.

        ``precision`` is part of the generic surface (a replacement space
        may only answer to within 2**-precision); here it is ignored
        because the result is exact.
        """
        if not UNIT.contains(u):
            raise ValueError(f"point {u} outside the carrier [-1, 1]")
        return self.digit(d).apply(u)

    def ball_in_digit_range(self, u: Fraction, radius: Fraction, d: int) -> bool:
        """Decide whether the open ball around u, clipped to the carrier,
        fits inside the image of digit d.

        The clipped ball is a nonempty interval of positive length, so
        inclusion in the closed digit image is equivalent to inclusion of
        its closure, which is a pair of exact endpoint comparisons.
        """
        if radius <= 0:
            raise ValueError(f"ball radius must be positive, got {radius}")
        if not UNIT.contains(u):
            raise ValueError(f"point {u} outside the carrier [-1, 1]")
        image = self.digit_image(d)
        lo = max(u - radius, UNIT.lo)
        hi = min(u + radius, UNIT.hi)
        return image.lo <= lo and hi <= image.hi

    def right_inverse(self, d: int, u: Fraction, precision: int = 0) -> Fraction:
        """The exact preimage of u under digit d, i.e. 2u - d.

        Requires u in the image of digit d; then the result lies in the
        carrier and applying the digit gives back u exactly.
        """
        if not self.digit_image(d).contains(u):
            raise ValueError(f"point {u} outside the image of digit {d}")
        return 2 * u - d

    def right_inverse_modulus(self, n: int) -> int:
        """A modulus k(n) for the right inverses: points of a digit image
        closer than 2**-k(n) have preimages closer than 2**-(n+1).

        Right inverses double distances, so k(n) = n + 2 works.
        """
        return n + 2

    def covering_digit(self, u: Fraction, radius: Fraction) -> int:
        """First digit (in the fixed order) whose image contains the
        clipped open ball around u.

        Guaranteed to exist whenever radius <= well_covering_radius.
        """
        for d in SIGNED_DIGITS:
            if self.ball_in_digit_range(u, radius, d):
                return d
        raise ValueError(f"no digit image contains the ball of radius {radius} around {u}")

    def depth_for_width(self, n: int) -> int:
        """Least word length whose prefix images have diameter below 2**-n.

        Computed by exact comparison from the contraction factor and the
        bound; for the signed digits this is n + 2.
        """
        tolerance = Fraction(2) ** (-n)
        depth = 0
        diameter = self.bound
        while diameter >= tolerance:
            depth += 1
            diameter *= self.contraction
        return depth

    def anchor_precision(self) -> int:
        """Least n with 2**-n below half the well-covering radius; querying
        an oracle at this precision pins the point well inside some digit
        image."""
        half_radius = self.well_covering_radius / 2
        n = 0
        while Fraction(2) ** (-n) >= half_radius:
            n += 1
        return n


#: The one shipped instance.
SIGNED = SignedDigitSpace()

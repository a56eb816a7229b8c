"""Corecursive extraction of the middle-thirds attractor on [-1, 1] as a
digital tree, plus the exact iterated-function-system oracle used to
check it.

The attractor is the fixed point of A -> f_minus[A] union f_plus[A] with
f_minus(x) = (x - 2) / 3 and f_plus(x) = (x + 2) / 3.  The extraction
maintains one increasing affine map per tree node, whose image of the
carrier is the piece of the attractor that node represents.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .digitspace import SIGNED, SIGNED_DIGITS
from .numeric import IDENTITY, Interval, Palm, UNIT

F_MINUS = Palm(Fraction(1, 3), Fraction(-2, 3))
F_PLUS = Palm(Fraction(1, 3), Fraction(2, 3))

_MINUS_HALF = Fraction(-1, 2)
_PLUS_HALF = Fraction(1, 2)


@dataclass(frozen=True)
class PalmState:
    """A node state of the extraction: an increasing affine map that
    keeps the carrier inside itself."""

    palm: Palm

    def __post_init__(self):
        if not self.palm.maps_unit_into_unit():
            raise ValueError(f"palm {self.palm} does not map [-1, 1] into itself")


def cantor_step(state: PalmState) -> dict[int, PalmState]:
    """One unfolding step: digits covering the state's piece of the
    attractor, with the child state per digit.

    If the state's whole carrier image already fits inside one digit
    image (checked in the fixed digit order), that digit alone suffices
    and the child simply strips it off.  Otherwise the image straddles 0
    and splits along the two attractor maps: the left piece fits the
    digit -1 or 0 image depending on where the left endpoint sits, the
    right piece symmetrically fits 0 or +1, and the two chosen digits
    always differ.
    """
    h = state.palm
    lo = h.apply(UNIT.lo)
    hi = h.apply(UNIT.hi)
    span = Interval(lo, hi)
    for d in SIGNED_DIGITS:
        if SIGNED.digit_image(d).encloses(span):
            return {d: PalmState(SIGNED.digit(d).inverse().compose(h))}
    assert lo < 0 < hi
    i = -1 if lo <= _MINUS_HALF else 0
    j = 1 if hi >= _PLUS_HALF else 0
    assert i != j
    left = PalmState(SIGNED.digit(i).inverse().compose(h.compose(F_MINUS)))
    right = PalmState(SIGNED.digit(j).inverse().compose(h.compose(F_PLUS)))
    return {i: left, j: right}


def cantor_tree():
    """The attractor as a digital tree, unfolded from the identity map."""
    from .trees import DigitalTree

    return DigitalTree.unfold(PalmState(IDENTITY), cantor_step)


def ifs_iterate(n: int) -> list[Interval]:
    """The n-th iterate of the attractor maps on the carrier: 2**n
    pairwise disjoint intervals of width 2 * 3**-n, sorted.

    All left images sit below all right images, so mapping a sorted level
    keeps it sorted.
    """
    if n < 0:
        raise ValueError(f"iteration count must be nonnegative, got {n}")
    level = [UNIT]
    for _ in range(n):
        level = [F_MINUS.image(iv) for iv in level] + [F_PLUS.image(iv) for iv in level]
    return level

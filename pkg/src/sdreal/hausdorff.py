"""Exact Hausdorff-metric computations on finite rational sets and on
unions of closed intervals, plus the two converters between digital
trees and precision-indexed set oracles.

The converter from oracles to trees works by repeatedly *splitting* an
approximated compact set into per-digit residuals: points of a
sufficiently precise approximation are grouped by which digit image
safely contains a ball around them, the groups are chained forward
through finer approximations, and each group is pulled back through the
digit's right inverse to drive the corecursion.
"""

from __future__ import annotations

from bisect import bisect_left, bisect_right
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Iterable, Sequence

from .digitspace import SIGNED, SignedDigitSpace
from .numeric import Interval, UNIT, clamp_unit, rational
from .trees import DigitalTree, evaluation_points


class OracleContractError(RuntimeError):
    """An oracle's answers are inconsistent with representing a nonempty
    compact subset of the carrier (detectable only semi-decidably)."""


@dataclass(frozen=True)
class BasicSet:
    """Nonempty finite set of rationals in [-1, 1]; points are kept
    sorted and distinct."""

    points: tuple[Fraction, ...]

    def __post_init__(self):
        pts = tuple(sorted(set(rational(p) for p in self.points)))
        if not pts:
            raise ValueError("a basic set must be nonempty")
        for p in pts:
            if not UNIT.contains(p):
                raise ValueError(f"point {p} outside the carrier [-1, 1]")
        object.__setattr__(self, "points", pts)

    def __iter__(self):
        return iter(self.points)

    def __len__(self):
        return len(self.points)

    def __str__(self):
        return "{" + ", ".join(str(p) for p in self.points) + "}"


def directed_distance(a: BasicSet, b: BasicSet) -> Fraction:
    """max over y in b of the distance from y to the set a, exact.

    The points are sorted, so the nearest point of a is one of the two
    bisection neighbours of y.
    """
    pts = a.points
    worst = Fraction(0)
    for y in b.points:
        idx = bisect_left(pts, y)
        best = None
        if idx < len(pts):
            best = pts[idx] - y
        if idx > 0 and (best is None or y - pts[idx - 1] < best):
            best = y - pts[idx - 1]
        if best > worst:
            worst = best
    return worst


def hausdorff_finite(a: BasicSet, b: BasicSet) -> Fraction:
    """Hausdorff distance between finite sets: the larger of the two
    directed distances."""
    return max(directed_distance(a, b), directed_distance(b, a))


def normalize_intervals(intervals: Sequence[Interval]) -> list[Interval]:
    """Collapse a list of closed intervals into disjoint sorted blocks
    (touching blocks merge: their union is again a closed interval)."""
    if not intervals:
        raise ValueError("empty interval list")
    blocks: list[Interval] = []
    for iv in sorted(intervals, key=lambda iv: (iv.lo, iv.hi)):
        if blocks and iv.lo <= blocks[-1].hi:
            if iv.hi > blocks[-1].hi:
                blocks[-1] = Interval(blocks[-1].lo, iv.hi)
        else:
            blocks.append(iv)
    return blocks


def _distance_to_blocks(x: Fraction, blocks: list[Interval], los: list[Fraction]) -> Fraction:
    idx = bisect_right(los, x) - 1
    if idx >= 0 and x <= blocks[idx].hi:
        return Fraction(0)
    candidates = []
    if idx >= 0:
        candidates.append(x - blocks[idx].hi)
    if idx + 1 < len(blocks):
        candidates.append(blocks[idx + 1].lo - x)
    return min(candidates)


def _directed_union_distance(a: list[Interval], b: list[Interval]) -> Fraction:
    """max over the union of a of the distance to the union of b.

    The distance function to a union of closed intervals is piecewise
    linear with slopes +-1, vanishing on the union; over a closed block
    its maximum sits at a block endpoint or at an interior local maximum,
    and the only interior local maxima are midpoints of gaps of b.
    """
    b_los = [iv.lo for iv in b]
    candidates = []
    for iv in a:
        candidates.append(iv.lo)
        candidates.append(iv.hi)
    a_los = [iv.lo for iv in a]
    for left, right in zip(b, b[1:]):
        mid = (left.hi + right.lo) / 2
        idx = bisect_right(a_los, mid) - 1
        if idx >= 0 and mid <= a[idx].hi:
            candidates.append(mid)
    return max(_distance_to_blocks(x, b, b_los) for x in candidates)


def hausdorff_interval_unions(a: Sequence[Interval], b: Sequence[Interval]) -> Fraction:
    """Exact Hausdorff distance between two unions of closed intervals."""
    a_blocks = normalize_intervals(a)
    b_blocks = normalize_intervals(b)
    return max(
        _directed_union_distance(a_blocks, b_blocks),
        _directed_union_distance(b_blocks, a_blocks),
    )


class CauchyCompact:
    """Precision-indexed oracle for a nonempty compact subset of the
    carrier: query(n) must return a basic set within 2**-n of the
    represented set in the Hausdorff metric.

    Answers are cached, so an oracle is deterministic per index.
    """

    def __init__(self, fn: Callable[[int], BasicSet]):
        self._fn = fn
        self._cache: dict[int, BasicSet] = {}

    def query(self, n: int) -> BasicSet:
        if n < 0:
            raise ValueError(f"precision must be nonnegative, got {n}")
        answer = self._cache.get(n)
        if answer is None:
            answer = self._fn(n)
            if not isinstance(answer, BasicSet):
                answer = BasicSet(tuple(answer))
            self._cache[n] = answer
        return answer

    @classmethod
    def constant(cls, points: Iterable) -> "CauchyCompact":
        """Oracle of an exactly known finite set."""
        fixed = BasicSet(tuple(points))
        return cls(lambda n: fixed)

    @classmethod
    def from_levels(cls, levels: Sequence[Iterable]) -> "CauchyCompact":
        """Oracle backed by a finite table: query(n) is levels[n], with the
        last level repeated forever.  Valid only when the final level is
        the represented set exactly."""
        table = [BasicSet(tuple(level)) for level in levels]
        if not table:
            raise ValueError("need at least one level")
        return cls(lambda n: table[min(n, len(table) - 1)])


def tree_to_cauchy_compact(tree: DigitalTree, space: SignedDigitSpace = SIGNED) -> CauchyCompact:
    """Oracle for the value of a tree.

    query(n) evaluates every word of a truncation deep enough that word
    images are far narrower than 2**-n; every value point is that close
    to some evaluation and vice versa, so the Hausdorff contract holds
    with slack.
    """
    def answer(n: int) -> BasicSet:
        depth = space.depth_for_width(n + 2)
        return BasicSet(tuple(evaluation_points(tree, depth)))

    return CauchyCompact(answer)


@dataclass(frozen=True)
class SplitResult:
    """Branch digits of an approximated compact set together with one
    residual oracle per digit."""

    branches: tuple[int, ...]
    residuals: dict[int, CauchyCompact]


class _ResidualLevels:
    """The per-digit filtered point chain behind a split residual.

    Level 0 keeps the base-precision points whose safety ball fits the
    digit image; level j+1 keeps the points of the next finer
    approximation within the chain tolerance of level j.  Levels are
    built on demand and cached; an empty level means the source oracle
    lied about representing a compact set.
    """

    def __init__(self, source: CauchyCompact, digit: int, base: int, level0: BasicSet):
        self._source = source
        self._digit = digit
        self._base = base
        self._levels = [level0]

    def level(self, n: int) -> BasicSet:
        while len(self._levels) <= n:
            j = len(self._levels)
            tolerance = Fraction(2) ** (1 - (self._base + j - 1))
            previous = self._levels[-1].points
            kept = []
            for y in self._source.query(self._base + j).points:
                idx = bisect_left(previous, y)
                if (idx < len(previous) and previous[idx] - y <= tolerance) or (
                    idx > 0 and y - previous[idx - 1] <= tolerance
                ):
                    kept.append(y)
            if not kept:
                raise OracleContractError(
                    f"residual chain for digit {self._digit} died at level {j}: "
                    f"no point of the finer approximation stays near the previous level"
                )
            self._levels.append(BasicSet(tuple(kept)))
        return self._levels[n]


def split_base_precision(space: SignedDigitSpace = SIGNED) -> int:
    """Least precision m > 2 with 2**-m below an eighth of the
    well-covering radius; the split's safety margins all scale from it."""
    threshold = space.well_covering_radius / 8
    m = 3
    while Fraction(2) ** (-m) >= threshold:
        m += 1
    return m


def split(compact: CauchyCompact, space: SignedDigitSpace = SIGNED) -> SplitResult:
    """Decompose an approximated compact set along the digits.

    A digit joins the branch set when some base-precision point carries a
    half-radius ball inside the digit's image; its residual oracle serves
    the filtered chain of that digit's points through ever finer
    approximations.  For honest oracles every branch chain stays
    nonempty, the chains are Cauchy with modulus 2**(1-(m+n)), and the
    residual limits reassemble the represented set.
    """
    m = split_base_precision(space)
    half_radius = space.well_covering_radius / 2
    base_points = compact.query(m)
    residuals: dict[int, CauchyCompact] = {}
    for d in space.digits:
        kept = tuple(y for y in base_points if space.ball_in_digit_range(y, half_radius, d))
        if kept:
            chain = _ResidualLevels(compact, d, m, BasicSet(kept))
            residuals[d] = CauchyCompact(chain.level)
    if not residuals:
        raise OracleContractError(
            "no digit image safely contains any base-precision point; "
            "the oracle cannot represent a compact subset of the carrier"
        )
    return SplitResult(tuple(sorted(residuals)), residuals)


def cauchy_compact_to_tree(compact: CauchyCompact, space: SignedDigitSpace = SIGNED) -> DigitalTree:
    """Build a digital tree for the set an oracle approximates.

    Each node's branches come from splitting the node's oracle; a child's
    oracle pulls the residual through the digit's right inverse at the
    modulus index, clamped into the carrier (a no-op for honest oracles).
    The resulting tree's value equals the represented set.
    """
    def child_oracle(residual: CauchyCompact, d: int) -> CauchyCompact:
        def answer(n: int, _residual=residual, _d=d) -> BasicSet:
            level = _residual.query(space.right_inverse_modulus(n) + 1)
            return BasicSet(tuple(clamp_unit(2 * u - _d) for u in level.points))

        return CauchyCompact(answer)

    def step(oracle: CauchyCompact):
        parts = split(oracle, space)
        return {d: child_oracle(parts.residuals[d], d) for d in parts.branches}

    return DigitalTree.unfold(compact, step)

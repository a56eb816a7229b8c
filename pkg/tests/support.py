"""Shared generators and brute-force oracles for the test suite."""

from __future__ import annotations

import random
from fractions import Fraction
from itertools import chain, combinations

from sdreal import BasicSet, DigitStream, DigitalTree, Interval

NONEMPTY_BRANCH_SETS = tuple(
    tuple(sorted(subset))
    for size in (1, 2, 3)
    for subset in combinations((-1, 0, 1), size)
)


def random_rational(rng: random.Random, max_den: int = 64) -> Fraction:
    den = rng.randint(1, max_den)
    num = rng.randint(-den, den)
    return Fraction(num, den)


def random_basic_set(rng: random.Random, max_size: int = 8, max_den: int = 32) -> BasicSet:
    size = rng.randint(1, max_size)
    return BasicSet(tuple(random_rational(rng, max_den) for _ in range(size)))


def random_stream(rng: random.Random, depth: int, continuation: int = 0) -> DigitStream:
    digits = [rng.choice((-1, 0, 1)) for _ in range(depth)]
    return DigitStream.from_digits(digits, DigitStream.constant(continuation))


def random_tree(rng: random.Random, depth: int, continuation: int = 0) -> DigitalTree:
    """Random branch sets per node to the given depth, then a constant
    single-branch continuation; the tree is determined by its depth-n
    truncation."""
    table: dict[tuple[int, ...], tuple[int, ...]] = {}

    def fill(word):
        if len(word) >= depth:
            return
        branches = rng.choice(NONEMPTY_BRANCH_SETS)
        table[word] = branches
        for d in branches:
            fill(word + (d,))

    fill(())

    def step(word):
        branches = table.get(word, (continuation,))
        return {d: word + (d,) for d in branches}

    return DigitalTree.unfold((), step)


def word_distance(a, b) -> Fraction:
    """Distance between equal-length digit words: 2**-(k+1) where k is
    the first differing position (counting agreement including the root),
    0 for equal words."""
    for k, (x, y) in enumerate(zip(a, b)):
        if x != y:
            return Fraction(1, 2 ** (k + 1))
    return Fraction(0)


def brute_level_hausdorff(words_a, words_b) -> Fraction:
    """Hausdorff distance between two finite sets of equal-length words
    under the word metric, by the double loop."""
    def directed(src, dst):
        return max(min(word_distance(a, b) for b in dst) for a in src)

    return max(directed(words_a, words_b), directed(words_b, words_a))


def brute_set_hausdorff(a: BasicSet, b: BasicSet) -> Fraction:
    """Hausdorff distance between finite rational sets by the double loop."""
    d_ab = max(min(abs(x - y) for x in a.points) for y in b.points)
    d_ba = max(min(abs(x - y) for x in b.points) for y in a.points)
    return max(d_ab, d_ba)


def brute_union_hausdorff(a: list[Interval], b: list[Interval], grid_den: int) -> Fraction:
    """Hausdorff distance between unions of closed intervals by scanning
    a rational grid.

    Exact provided 2 * grid_den is a multiple of twice every endpoint
    denominator: the distance function to a union has slopes +-1, so its
    maxima over the other union sit at endpoints or gap midpoints, all of
    which are then grid points.
    """
    step = Fraction(1, 2 * grid_den)

    def point_distance(x, intervals):
        return min(
            Fraction(0) if iv.lo <= x <= iv.hi else min(abs(x - iv.lo), abs(x - iv.hi))
            for iv in intervals
        )

    def directed(src, dst):
        worst = Fraction(0)
        for k in range(-2 * 2 * grid_den, 2 * 2 * grid_den + 1):
            x = k * step
            if any(iv.lo <= x <= iv.hi for iv in src):
                worst = max(worst, point_distance(x, dst))
        return worst

    return max(directed(a, b), directed(b, a))


def grid_denominator(intervals_lists) -> int:
    import math

    den = 1
    for iv in chain.from_iterable(intervals_lists):
        den = den * iv.lo.denominator // math.gcd(den, iv.lo.denominator)
        den = den * iv.hi.denominator // math.gcd(den, iv.hi.denominator)
    return den

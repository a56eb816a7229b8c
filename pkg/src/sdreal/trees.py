"""Lazy digital trees: finitely branching, prefix-closed, no dead ends.

A tree node carries a nonempty subset of the signed digits and one
subtree per branch; its value is the nonempty compact set of the values
of its infinite paths.  The node shape enforces prefix closure and
productivity by construction, so every finite truncation is a
well-formed finite word set.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Optional

from .digitspace import SIGNED_DIGITS, check_digit
from .numeric import Interval
from .streams import DigitStream

Word = tuple[int, ...]


class DigitalTree:
    """Lazy tree of signed digits.

    The branch set of a node is computed when the node is built; children
    are deferred, built on first access, and cached.  Step functions must
    be pure, so concurrent forcing is idempotent.
    """

    __slots__ = ("branches", "_make_child", "_children")

    def __init__(self, branches, make_child: Callable[[int], "DigitalTree"]):
        branch_tuple = tuple(sorted(set(branches)))
        if not branch_tuple:
            raise ValueError("a tree node needs at least one branch")
        for d in branch_tuple:
            check_digit(d)
        self.branches = branch_tuple
        self._make_child = make_child
        self._children: dict[int, DigitalTree] = {}

    def child(self, d: int) -> "DigitalTree":
        if d not in self.branches:
            raise KeyError(f"digit {d} is not a branch of this node")
        node = self._children.get(d)
        if node is None:
            node = self._make_child(d)
            self._children[d] = node
        return node

    @classmethod
    def unfold(cls, seed, step: Callable) -> "DigitalTree":
        """Corecursion: step(seed) -> mapping digit -> child seed."""
        children = step(seed)
        return cls(children.keys(), lambda d: cls.unfold(children[d], step))

    @classmethod
    def from_stream(cls, stream: DigitStream) -> "DigitalTree":
        """The single-path tree of a stream; its value is the singleton of
        the stream's value."""
        return cls((stream.head,), lambda d: cls.from_stream(stream.tail))

    @classmethod
    def full(cls) -> "DigitalTree":
        """The tree with all three branches everywhere; its value is the
        whole carrier."""
        node = cls(SIGNED_DIGITS, lambda d: node)
        return node


@dataclass(frozen=True)
class TreePrefix:
    """Finite truncation of a tree: all its words of length <= depth,
    sorted, as the canonical comparable form."""

    depth: int
    words: tuple[Word, ...]

    def restrict(self, depth: int) -> "TreePrefix":
        if depth > self.depth:
            raise ValueError(f"cannot restrict depth-{self.depth} prefix to depth {depth}")
        return TreePrefix(depth, tuple(w for w in self.words if len(w) <= depth))

    def level(self, k: int) -> tuple[Word, ...]:
        return tuple(w for w in self.words if len(w) == k)

    def to_json_dict(self) -> dict:
        return {"depth": self.depth, "words": [list(w) for w in self.words]}


def truncate(tree: DigitalTree, depth: int) -> TreePrefix:
    """The depth-n truncation, forcing nodes level by level.

    Nodes at the final level are never built: their words follow from the
    branch sets one level up.
    """
    if depth < 0:
        raise ValueError(f"depth must be nonnegative, got {depth}")
    words: list[Word] = [()]
    level: dict[Word, DigitalTree] = {(): tree}
    for remaining in range(depth, 0, -1):
        if remaining == 1:
            words.extend(w + (d,) for w, node in level.items() for d in node.branches)
            break
        nxt: dict[Word, DigitalTree] = {}
        for word, node in level.items():
            for d in node.branches:
                nxt[word + (d,)] = node.child(d)
        words.extend(nxt.keys())
        level = nxt
    return TreePrefix(depth, tuple(sorted(words)))


def _depth_offsets(tree: DigitalTree, depth: int) -> set[int]:
    """Integer offsets o with o / 2**depth the base-point evaluation of a
    depth-`depth` word of the tree.

    Signed digits halve and recentre, so the composite map of a word of
    length k sends x to (x + o) / 2**k with o an integer; tracking o
    keeps the bulk walk exact without rational arithmetic.
    """
    if depth == 0:
        return {0}
    out: set[int] = set()
    stack = [(tree, 1, 0)]
    add = out.add
    push = stack.append
    while stack:
        node, k, off = stack.pop()
        off += off
        if k == depth:
            for d in node.branches:
                add(off + d)
            continue
        k += 1
        for d in node.branches:
            push((node.child(d), k, off + d))
    return out


def value_cover(tree: DigitalTree, depth: int) -> list[Interval]:
    """The distinct carrier images of the tree's depth-n words, sorted.

    Each interval has width 2**(1-n); their union contains the tree's
    value and every listed interval meets it, so the union is within
    2**(1-n) of the value in the Hausdorff metric.
    """
    if depth < 0:
        raise ValueError(f"depth must be nonnegative, got {depth}")
    scale = 2 ** depth
    return [
        Interval(Fraction(off - 1, scale), Fraction(off + 1, scale))
        for off in sorted(_depth_offsets(tree, depth))
    ]


def evaluation_points(tree: DigitalTree, depth: int) -> list[Fraction]:
    """Base-point evaluations of the tree's depth-n words: the distinct
    midpoints of the depth-n cover, sorted."""
    if depth < 0:
        raise ValueError(f"depth must be nonnegative, got {depth}")
    scale = 2 ** depth
    return [Fraction(off, scale) for off in sorted(_depth_offsets(tree, depth))]


def metric_resolve(a: DigitalTree, b: DigitalTree, max_depth: int) -> Optional[Fraction]:
    """Tree metric by truncation comparison.

    Returns 2**-n0 for the least n0 <= max_depth at which the two
    truncations differ, or None when they agree to max_depth (the
    distance is then at most 2**-max_depth).
    """
    if max_depth < 0:
        raise ValueError(f"max_depth must be nonnegative, got {max_depth}")
    level_a: dict[Word, DigitalTree] = {(): a}
    level_b: dict[Word, DigitalTree] = {(): b}
    for n in range(1, max_depth + 1):
        words_a = {w + (d,) for w, node in level_a.items() for d in node.branches}
        words_b = {w + (d,) for w, node in level_b.items() for d in node.branches}
        if words_a != words_b:
            return Fraction(1, 2 ** n)
        if n < max_depth:
            level_a = {w + (d,): node.child(d) for w, node in level_a.items() for d in node.branches}
            level_b = {w + (d,): node.child(d) for w, node in level_b.items() for d in node.branches}
    return None


def union(a: DigitalTree, b: DigitalTree) -> DigitalTree:
    """Tree whose value is the union of the two values: branch sets are
    merged and shared branches recurse into both children."""
    def make(d: int) -> DigitalTree:
        in_a = d in a.branches
        in_b = d in b.branches
        if in_a and in_b:
            return union(a.child(d), b.child(d))
        return a.child(d) if in_a else b.child(d)

    return DigitalTree(set(a.branches) | set(b.branches), make)

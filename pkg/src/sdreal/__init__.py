"""Exact computation with points and nonempty compact subsets of [-1, 1].

Points are represented by lazy streams of signed digits, compact sets by
lazy digital trees; both convert to and from precision-indexed rational
oracles, and all arithmetic is exact.
"""

from .numeric import IDENTITY, Interval, Palm, Rational, UNIT, clamp_unit, rational
from .digitspace import SIGNED, SIGNED_DIGITS, SignedDigitSpace, word_from_text, word_to_text
from .streams import (
    CauchyReal,
    DigitStream,
    cons,
    from_cauchy,
    prefix_palm,
    to_cauchy,
    value_interval,
    word_from_basic,
)
from .trees import DigitalTree, TreePrefix, evaluation_points, metric_resolve, truncate, union, value_cover
from .hausdorff import (
    BasicSet,
    CauchyCompact,
    OracleContractError,
    SplitResult,
    cauchy_compact_to_tree,
    directed_distance,
    hausdorff_finite,
    hausdorff_interval_unions,
    normalize_intervals,
    split,
    split_base_precision,
    tree_to_cauchy_compact,
)
from .cantor import F_MINUS, F_PLUS, PalmState, cantor_step, cantor_tree, ifs_iterate

__all__ = [
    "BasicSet",
    "CauchyCompact",
    "CauchyReal",
    "DigitStream",
    "DigitalTree",
    "F_MINUS",
    "F_PLUS",
    "IDENTITY",
    "Interval",
    "OracleContractError",
    "Palm",
    "PalmState",
    "Rational",
    "SIGNED",
    "SIGNED_DIGITS",
    "SignedDigitSpace",
    "SplitResult",
    "TreePrefix",
    "UNIT",
    "cantor_step",
    "cantor_tree",
    "cauchy_compact_to_tree",
    "clamp_unit",
    "cons",
    "directed_distance",
    "evaluation_points",
    "from_cauchy",
    "hausdorff_finite",
    "hausdorff_interval_unions",
    "ifs_iterate",
    "metric_resolve",
    "normalize_intervals",
    "prefix_palm",
    "rational",
    "split",
    "split_base_precision",
    "to_cauchy",
    "tree_to_cauchy_compact",
    "truncate",
    "union",
    "value_cover",
    "value_interval",
    "word_from_basic",
    "word_from_text",
    "word_to_text",
]

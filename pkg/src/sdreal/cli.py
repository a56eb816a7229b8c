"""Command-line front end.

Every subcommand is a thin wrapper over the library with deterministic,
machine-readable output: sets and words are sorted, rationals are
canonical.  Depth-like arguments are guarded by a safety cap (default
24) because node counts can grow with the third power of the depth;
raise it explicitly with --cap.
"""

from __future__ import annotations

import argparse
import json
import re
import sys
from fractions import Fraction

from .cantor import cantor_tree, ifs_iterate
from .hausdorff import (
    BasicSet,
    CauchyCompact,
    OracleContractError,
    cauchy_compact_to_tree,
    hausdorff_finite,
    hausdorff_interval_unions,
    tree_to_cauchy_compact,
)
from .numeric import Interval, rational
from .streams import CauchyReal, from_cauchy, to_cauchy, value_interval
from .trees import DigitalTree, metric_resolve, truncate, value_cover

DEFAULT_CAP = 24


def _check_bounded(value: int, cap: int, name: str) -> int:
    if value < 0:
        raise ValueError(f"{name} must be nonnegative, got {value}")
    if value > cap:
        raise ValueError(f"{name} {value} exceeds the safety cap {cap}; pass --cap to raise it")
    return value


def _parse_oracle(spec: str) -> CauchyReal:
    kind, sep, body = spec.partition(":")
    if not sep:
        raise ValueError(f"bad oracle spec {spec!r}; expected const:p/q, decimal:<digits> or file:<path>")
    if kind == "const":
        return CauchyReal.constant(rational(body))
    if kind == "decimal":
        if "/" in body:
            raise ValueError(f"decimal oracle {body!r} must be a decimal literal, not a fraction")
        return CauchyReal.constant(rational(body))
    if kind == "file":
        with open(body, "r", encoding="utf-8") as handle:
            payload = json.load(handle)
        levels = payload.get("levels")
        if not isinstance(levels, list) or not levels:
            raise ValueError(f"{body}: expected a JSON object with a nonempty 'levels' array")
        return CauchyReal.from_levels(levels)
    raise ValueError(f"unknown oracle kind {kind!r}; expected const, decimal or file")


def _load_compact_file(path: str) -> CauchyCompact:
    with open(path, "r", encoding="utf-8") as handle:
        payload = json.load(handle)
    levels = payload.get("levels")
    if not isinstance(levels, list) or not levels:
        raise ValueError(f"{path}: expected a JSON object with a nonempty 'levels' array")
    return CauchyCompact.from_levels([[rational(p) for p in level] for level in levels])


def _parse_tree_source(source: str) -> DigitalTree:
    if source == "cantor":
        return cantor_tree()
    if source.startswith("stream:"):
        return DigitalTree.from_stream(from_cauchy(_parse_oracle(source[len("stream:"):])))
    if source.startswith("file:"):
        return cauchy_compact_to_tree(_load_compact_file(source[len("file:"):]))
    raise ValueError(f"unknown tree source {source!r}; expected cantor, stream:<oracle> or file:<path>")


def _parse_point_set(text: str) -> BasicSet:
    body = text.strip()
    if not (body.startswith("{") and body.endswith("}")):
        raise ValueError(f"bad set literal {text!r}; expected {{r1,r2,...}}")
    return BasicSet(tuple(rational(part) for part in body[1:-1].split(",")))


def _parse_interval_list(text: str) -> list[Interval]:
    pairs = re.findall(r"\[([^\[\]]+)\]", text)
    if not pairs:
        raise ValueError(f"bad interval list {text!r}; expected [[lo,hi],...]")
    out = []
    for pair in pairs:
        parts = pair.split(",")
        if len(parts) != 2:
            raise ValueError(f"bad interval {pair!r}; expected lo,hi")
        out.append(Interval(rational(parts[0].strip()), rational(parts[1].strip())))
    return out


def _parse_distance_operand(text: str):
    if text.strip().startswith("{"):
        return _parse_point_set(text)
    return _parse_interval_list(text)


def _interval_json(iv: Interval) -> list[str]:
    return [str(iv.lo), str(iv.hi)]


def _cmd_stream_approx(args) -> dict:
    digits = _check_bounded(args.digits, args.cap, "digit count")
    stream = from_cauchy(_parse_oracle(args.oracle))
    return {
        "digits": stream.prefix(digits),
        "interval": _interval_json(value_interval(stream, digits)),
    }


def _cmd_stream_to_cauchy(args) -> dict:
    precision = _check_bounded(args.precision, args.cap, "precision")
    oracle = to_cauchy(from_cauchy(_parse_oracle(args.oracle)))
    return {"approximations": [str(oracle.query(n)) for n in range(precision + 1)]}


def _cmd_tree_cover(args) -> dict:
    depth = _check_bounded(args.depth, args.cap, "depth")
    cover = value_cover(_parse_tree_source(args.source), depth)
    return {"depth": depth, "intervals": [_interval_json(iv) for iv in cover]}


def _cmd_tree_metric(args) -> dict:
    maxdepth = _check_bounded(args.maxdepth, args.cap, "maxdepth")
    distance = metric_resolve(_parse_tree_source(args.a), _parse_tree_source(args.b), maxdepth)
    if distance is None:
        return {"maxdepth": maxdepth, "resolved": False, "bound": str(Fraction(1, 2 ** maxdepth))}
    return {"maxdepth": maxdepth, "resolved": True, "distance": str(distance)}


def _cmd_convert_tree_to_hausdorff(args) -> dict:
    precision = _check_bounded(args.precision, args.cap, "precision")
    oracle = tree_to_cauchy_compact(_parse_tree_source(args.source))
    return {"levels": [[str(p) for p in oracle.query(n)] for n in range(precision + 1)]}


def _cmd_convert_hausdorff_to_tree(args) -> dict:
    depth = _check_bounded(args.depth, args.cap, "depth")
    tree = cauchy_compact_to_tree(_load_compact_file(args.file))
    return truncate(tree, depth).to_json_dict()


def _cmd_hausdorff_distance(args) -> dict:
    a = _parse_distance_operand(args.a)
    b = _parse_distance_operand(args.b)
    if isinstance(a, BasicSet) and isinstance(b, BasicSet):
        return {"distance": str(hausdorff_finite(a, b))}
    a_ivs = [Interval(p, p) for p in a] if isinstance(a, BasicSet) else a
    b_ivs = [Interval(p, p) for p in b] if isinstance(b, BasicSet) else b
    return {"distance": str(hausdorff_interval_unions(a_ivs, b_ivs))}


def _cmd_cantor_tree(args) -> dict:
    depth = _check_bounded(args.depth, args.cap, "depth")
    return truncate(cantor_tree(), depth).to_json_dict()


def _cmd_cantor_cover(args) -> dict:
    depth = _check_bounded(args.depth, args.cap, "depth")
    return {"depth": depth, "intervals": [_interval_json(iv) for iv in value_cover(cantor_tree(), depth)]}


def _cmd_cantor_oracle(args) -> dict:
    depth = _check_bounded(args.depth, args.cap, "depth")
    return {"depth": depth, "intervals": [_interval_json(iv) for iv in ifs_iterate(depth)]}


def _cmd_cantor_check(args) -> dict:
    depth = _check_bounded(args.depth, args.cap, "depth")
    distance = hausdorff_interval_unions(value_cover(cantor_tree(), depth), ifs_iterate(depth))
    bound = Fraction(2) ** (1 - depth) + 2 * Fraction(3) ** (-depth)
    return {
        "depth": depth,
        "distance": str(distance),
        "bound": str(bound),
        "within_bound": distance <= bound,
    }


def _add_common(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--format", choices=("json", "text"), default="json")
    parser.add_argument("--cap", type=int, default=DEFAULT_CAP, help="safety cap for depth-like arguments")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="sdreal", description=__doc__)
    top = parser.add_subparsers(dest="command", required=True)

    stream = top.add_parser("stream", help="signed-digit streams").add_subparsers(
        dest="subcommand", required=True
    )
    p = stream.add_parser("approx", help="extract digits and the certificate interval")
    p.add_argument("--oracle", required=True)
    p.add_argument("--digits", type=int, required=True)
    _add_common(p)
    p.set_defaults(handler=_cmd_stream_approx)
    p = stream.add_parser("to-cauchy", help="rational approximations of a stream's value")
    p.add_argument("--oracle", required=True)
    p.add_argument("--precision", type=int, required=True)
    _add_common(p)
    p.set_defaults(handler=_cmd_stream_to_cauchy)

    tree = top.add_parser("tree", help="digital trees").add_subparsers(dest="subcommand", required=True)
    p = tree.add_parser("cover", help="interval cover of a tree's value")
    p.add_argument("--source", required=True)
    p.add_argument("--depth", type=int, required=True)
    _add_common(p)
    p.set_defaults(handler=_cmd_tree_cover)
    p = tree.add_parser("metric", help="tree metric by truncation comparison")
    p.add_argument("--a", required=True)
    p.add_argument("--b", required=True)
    p.add_argument("--maxdepth", type=int, required=True)
    _add_common(p)
    p.set_defaults(handler=_cmd_tree_metric)

    convert = top.add_parser("convert", help="representation converters").add_subparsers(
        dest="subcommand", required=True
    )
    p = convert.add_parser("tree-to-hausdorff", help="tree to precision-indexed basic sets")
    p.add_argument("--source", required=True)
    p.add_argument("--precision", type=int, required=True)
    _add_common(p)
    p.set_defaults(handler=_cmd_convert_tree_to_hausdorff)
    p = convert.add_parser("hausdorff-to-tree", help="basic-set table to a tree truncation")
    p.add_argument("--file", required=True)
    p.add_argument("--depth", type=int, required=True)
    _add_common(p)
    p.set_defaults(handler=_cmd_convert_hausdorff_to_tree)

    hausdorff = top.add_parser("hausdorff", help="exact Hausdorff distances").add_subparsers(
        dest="subcommand", required=True
    )
    p = hausdorff.add_parser("distance", help="distance between sets or interval unions")
    p.add_argument("--a", required=True)
    p.add_argument("--b", required=True)
    _add_common(p)
    p.set_defaults(handler=_cmd_hausdorff_distance)

    cantor = top.add_parser("cantor", help="attractor extraction").add_subparsers(
        dest="subcommand", required=True
    )
    for name, handler, help_text in (
        ("tree", _cmd_cantor_tree, "truncation of the extracted tree"),
        ("cover", _cmd_cantor_cover, "interval cover of the extracted tree"),
        ("oracle", _cmd_cantor_oracle, "exact iterated-function-system intervals"),
        ("check", _cmd_cantor_check, "distance between cover and oracle, with its bound"),
    ):
        p = cantor.add_parser(name, help=help_text)
        p.add_argument("--depth", type=int, required=True)
        _add_common(p)
        p.set_defaults(handler=handler)

    return parser


def _render_text(payload: dict) -> str:
    lines = []
    for key, value in payload.items():
        if isinstance(value, list):
            lines.append(f"{key}:")
            for item in value:
                if isinstance(item, list):
                    lines.append("  " + " ".join(str(x) for x in item))
                else:
                    lines.append(f"  {item}")
        else:
            lines.append(f"{key}: {value}")
    return "\n".join(lines)


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        payload = args.handler(args)
    except OracleContractError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except (ValueError, OSError, json.JSONDecodeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    if args.format == "text":
        print(_render_text(payload))
    else:
        print(json.dumps(payload, sort_keys=True))
    return 0


if __name__ == "__main__":
    sys.exit(main())

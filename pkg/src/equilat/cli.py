"""Command-line front end.

Every command prints one JSON report on stdout. Exit status: 0 on success,
2 when ``--assert`` was given and the boolean result is false, 1 on any
input or validation error (the report then carries an ``error`` object).
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from typing import Callable, Optional

from . import families as fam
from . import generators as gen
from . import io
from . import maximality as mx
from . import supnorm as sn
from .errors import EquilatError, NotLinkedError, UsageError
from .msearch import m_search

VERBS = (
    "verify-linked", "verify-equilateral", "verify-separated", "convert", "extend",
    "maximal", "region", "forced", "generate", "msearch", "roundtrip",
)

CONVERSIONS = (
    "points-to-family", "family-to-points", "family-to-2eq", "separated-to-family",
    "unit-box", "normalize", "fresh-coordinate", "augment", "family-extension",
    "family-to-witness", "witness-to-family",
)

GENERATORS = (
    "branch", "antichain", "tree-family", "antichains", "departures", "eventually-constant", "limit-model", "half-block",
)


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def _rational_list(text: str) -> list:
    return [io.parse_rational(x) for x in text.split(",") if x.strip()]


def _sigma(args) -> gen.SigmaSequence:
    if args.sigma is None:
        raise UsageError("--sigma is required")
    if args.sigma.lstrip().startswith("{"):
        try:
            return io.sigma_from_doc(json.loads(args.sigma))
        except json.JSONDecodeError as exc:
            raise UsageError(f"--sigma is not valid JSON: {exc.msg}") from None
    if (args.tail_onset is None) != (args.tail_value is None):
        raise UsageError("--tail-onset and --tail-value go together")
    return gen.SigmaSequence.parse(args.sigma, args.tail_onset, args.tail_value)


def _need(args, *names):
    missing = [n for n in names if getattr(args, n) is None]
    if missing:
        raise UsageError("missing " + ", ".join("--" + m.replace("_", "-") for m in missing))


def _family(path):
    return io.family_from_doc(io.load_json(path))


def _points(path):
    return io.points_from_doc(io.load_json(path))


# --- command handlers; each returns the JSON-ready result ---------------


def cmd_verify_linked(args, caps):
    F = _family(args.input)
    if args.mode == "linked":
        return fam.is_linked(F)
    if args.mode == "nonempty":
        return fam.is_nonempty_linked(F)
    if args.mode == "facts":
        return fam.family_facts_check(F)
    return fam.is_linked(F) and fam.is_maximal_linked(F, enforce_caps=caps)


def cmd_verify_equilateral(args, caps):
    return sn.is_equilateral(_points(args.input), io.parse_rational(args.lam))


def cmd_verify_separated(args, caps):
    _need(args, "delta")
    return sn.is_separated(_points(args.input), io.parse_rational(args.delta))


def cmd_convert(args, caps):
    mode = args.mode
    if mode == "points-to-family":
        F, linked = sn.family_from_points(_points(args.input))
        return {"family": io.family_to_doc(F), "linked": linked}
    if mode == "family-to-points":
        S = sn.points_from_family(_family(args.input), io.parse_rational(args.interior),
                                  anchored=not args.plain)
        return io.points_to_doc(S)
    if mode == "family-to-2eq":
        return io.points_to_doc(sn.two_equilateral_from_family(_family(args.input)))
    if mode == "separated-to-family":
        _need(args, "epsilon")
        return io.family_to_doc(sn.separated_to_family(_points(args.input), io.parse_rational(args.epsilon)))
    if mode == "unit-box":
        return io.points_to_doc(sn.reduce_to_unit_box(_points(args.input)))
    if mode == "normalize":
        _need(args, "x0")
        S = _points(args.input)
        if not 0 <= args.x0 < len(S):
            raise UsageError(f"--x0 must index a member (0..{len(S) - 1})")
        return io.points_to_doc(sn.normalize_to_sphere(S, io.parse_rational(args.lam), S[args.x0]))
    if mode == "fresh-coordinate":
        _need(args, "coord")
        return io.points_to_doc(sn.fresh_coordinate_extension(_points(args.input), args.coord))
    if mode == "augment":
        return io.family_to_doc(fam.augment_with_extremes(_family(args.input)))
    if mode == "family-extension":
        p = fam.find_family_extension(_family(args.input), enforce_caps=caps)
        return None if p is None else {"A": sorted(p.A), "B": sorted(p.B)}
    if mode == "family-to-witness":
        F = _family(args.input)
        return io.witness_to_doc(fam.weak_separation_from_family(F), F.ground_size)
    if mode == "witness-to-family":
        W, n = io.witness_from_doc(io.load_json(args.input))
        return io.family_to_doc(fam.family_from_weak_separation(W, n))
    raise UsageError(f"unknown conversion {mode!r}")


def cmd_extend(args, caps):
    S = _points(args.input)
    finder = mx.grid_oracle_extension if args.oracle else mx.find_extension
    alpha = finder(S, enforce_caps=caps)
    return None if alpha is None else io.point_to_doc(alpha)


def cmd_maximal(args, caps):
    return mx.is_maximal_equilateral(_points(args.input), enforce_caps=caps)


def cmd_region(args, caps):
    return io.region_to_doc(mx.extension_region(_points(args.input), enforce_caps=caps))


def cmd_forced(args, caps):
    return io.forced_to_doc(mx.forced_coordinates(_points(args.input), enforce_caps=caps))


def cmd_generate(args, caps):
    kind = args.kind
    t = _rational_list(args.t) if args.t is not None else None
    if kind == "branch":
        _need(args, "depth")
        return io.antichain_to_doc(gen.branch_from_sigma(_sigma(args), args.depth))
    if kind == "antichain":
        _need(args, "depth")
        return io.antichain_to_doc(gen.antichain_from_sigma(_sigma(args), args.depth))
    if kind == "tree-family":
        _need(args, "nodes")
        nodes = [gen.node(s) for s in args.nodes.split(",") if s]
        ground = args.ground if args.ground is not None else max((len(s) for s in nodes), default=1)
        F = gen.family_from_antichain(nodes, ground)
        return {"family": io.family_to_doc(F), "antichain": gen.is_antichain(nodes),
                "linked": fam.is_linked(F)}
    if kind == "antichains":
        _need(args, "depth")
        return [io.antichain_to_doc(a) for a in gen.enumerate_antichains(args.depth, enforce_caps=caps)]
    if kind == "departures":
        _need(args, "N", "M")
        return io.points_to_doc(gen.departure_points(_sigma(args), t, args.N, args.M))
    if kind == "eventually-constant":
        _need(args, "M")
        return io.points_to_doc(gen.eventually_constant_points(_sigma(args), t, args.M))
    if kind == "limit-model":
        _need(args, "t", "N", "isolated")
        model = gen.CompactModel.sized(args.isolated, args.limit, args.rest)
        return io.points_to_doc(gen.limit_model_points(_sigma(args), t, model, args.N))
    if kind == "half-block":
        _need(args, "M", "k_size")
        return io.points_to_doc(gen.half_block_points(_sigma(args), args.k_size, args.M))
    raise UsageError(f"unknown generator {kind!r}")


def cmd_msearch(args, caps):
    _need(args, "dim")
    return io.msearch_to_doc(m_search(args.dim, args.kmax, args.trials, args.seed, enforce_caps=caps))


def cmd_roundtrip(args, caps):
    S = _points(args.input)
    F, linked = sn.family_from_points(S)
    if not linked:
        raise NotLinkedError("the zero/one family of the input is not linked")
    realized = sn.points_from_family(F, io.parse_rational(args.interior))
    F2, _ = sn.family_from_points(realized)
    rows = [
        {"index": i, "A_subset": p.a & ~q.a == 0, "B_subset": p.b & ~q.b == 0,
         "A_equal": p.a == q.a, "B_equal": p.b == q.b}
        for i, (p, q) in enumerate(zip(F.pairs, F2.pairs))
    ]
    return {
        "family": io.family_to_doc(F),
        "realized": io.points_to_doc(realized),
        "refamily": io.family_to_doc(F2),
        "containments": rows,
        "all_hold": all(r["A_subset"] and r["B_subset"] for r in rows),
        "fixed_point": F == F2,
    }


HANDLERS: dict[str, Callable] = {
    "verify-linked": cmd_verify_linked,
    "verify-equilateral": cmd_verify_equilateral,
    "verify-separated": cmd_verify_separated,
    "convert": cmd_convert,
    "extend": cmd_extend,
    "maximal": cmd_maximal,
    "region": cmd_region,
    "forced": cmd_forced,
    "generate": cmd_generate,
    "msearch": cmd_msearch,
    "roundtrip": cmd_roundtrip,
}

# the boolean that --assert checks, for verbs whose result is not itself a bool
ASSERT_KEYS = {"roundtrip": "all_hold"}


def build_parser() -> argparse.ArgumentParser:
    common = _Parser(add_help=False)
    common.add_argument("--assert", dest="assert_", action="store_true",
                        help="exit 2 if the boolean result is false")
    common.add_argument("--unsafe-caps", action="store_true",
                        help="lift the instance-size caps")
    common.add_argument("--timing", action="store_true",
                        help="add wall-clock milliseconds to the report")

    parser = _Parser(prog="equilat", description="Equilateral sets in sup-norm space, exactly.")
    sub = parser.add_subparsers(dest="verb", required=True, parser_class=_Parser)

    p = sub.add_parser("verify-linked", parents=[common], help="check a pair family")
    p.add_argument("input")
    p.add_argument("--mode", choices=("linked", "nonempty", "maximal", "facts"), default="linked")

    p = sub.add_parser("verify-equilateral", parents=[common], help="check a point set is lambda-equilateral")
    p.add_argument("input")
    p.add_argument("--lambda", dest="lam", default="1")

    p = sub.add_parser("verify-separated", parents=[common], help="check pairwise distances >= delta")
    p.add_argument("input")
    p.add_argument("--delta")

    p = sub.add_parser("convert", parents=[common], help="convert between families and point sets")
    p.add_argument("mode", choices=CONVERSIONS)
    p.add_argument("input")
    p.add_argument("--interior", default="1/2")
    p.add_argument("--plain", action="store_true", help="skip the anchoring of one-sided pairs")
    p.add_argument("--epsilon")
    p.add_argument("--lambda", dest="lam", default="1")
    p.add_argument("--x0", type=int, help="index of the base point for normalize")
    p.add_argument("--coord", type=int)

    for verb, text in (("extend", "least one-point extension"), ("maximal", "decide maximality"),
                       ("region", "exact extension region"), ("forced", "forced-coordinate report")):
        p = sub.add_parser(verb, parents=[common], help=text)
        p.add_argument("input")
        if verb == "extend":
            p.add_argument("--oracle", action="store_true", help="use the brute-force grid oracle")

    p = sub.add_parser("generate", parents=[common], help="tree and sequence constructions")
    p.add_argument("kind", choices=GENERATORS)
    p.add_argument("--sigma", help='bit string like 101, or JSON {"bits": ..., "tail": {...}}')
    p.add_argument("--tail-onset", type=int)
    p.add_argument("--tail-value", type=int)
    p.add_argument("--t", help="comma-separated interior values, e.g. 1/3,1/2")
    p.add_argument("--depth", type=int)
    p.add_argument("--nodes", help="comma-separated bit strings")
    p.add_argument("--ground", type=int)
    p.add_argument("--N", type=int)
    p.add_argument("--M", type=int)
    p.add_argument("--isolated", type=int)
    p.add_argument("--limit", action="store_true")
    p.add_argument("--rest", type=int, default=0)
    p.add_argument("--k-size", type=int)

    p = sub.add_parser("msearch", parents=[common], help="search for m of d-dimensional sup-norm space")
    p.add_argument("--dim", type=int)
    p.add_argument("--kmax", type=int, default=None)
    p.add_argument("--trials", type=int, default=100)
    p.add_argument("--seed", type=int, default=0)

    p = sub.add_parser("roundtrip", parents=[common], help="points -> family -> points -> family")
    p.add_argument("input")
    p.add_argument("--interior", default="1/2")
    return parser


def run(argv: Optional[list[str]] = None) -> tuple[int, dict]:
    """Execute one command; returns ``(exit_status, report)``."""
    report: dict = {"schema": io.SCHEMA_VERSION, "verb": None}
    try:
        args = build_parser().parse_args(argv)
        report["verb"] = args.verb
        if args.verb == "msearch" and args.kmax is None and args.dim is not None:
            args.kmax = args.dim + 2
        start = time.perf_counter()
        result = HANDLERS[args.verb](args, not args.unsafe_caps)
        elapsed = time.perf_counter() - start
    except EquilatError as exc:
        report["error"] = {"code": exc.code, "message": str(exc)}
        return 1, report
    report["exact"] = True
    report["result"] = result
    if args.timing:
        report["timing_ms"] = round(elapsed * 1000, 3)
    status = 0
    if args.assert_:
        flag = result.get(ASSERT_KEYS[args.verb]) if args.verb in ASSERT_KEYS else result
        if not isinstance(flag, bool):
            report["error"] = {"code": "usage", "message": "--assert needs a boolean result"}
            return 1, report
        status = 0 if flag else 2
    return status, report


def main(argv: Optional[list[str]] = None) -> int:
    status, report = run(argv)
    sys.stdout.write(io.dumps(report) + "\n")
    return status


if __name__ == "__main__":
    sys.exit(main())

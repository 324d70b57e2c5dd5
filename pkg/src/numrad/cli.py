"""Command-line interface.

Subcommands:
  compute  <matrix.json> [--what w|r|norm|ell|aluthge] [--tol X]
  check    <matrix.json|pair.json> --bound <bound_id> [params]
  sweep    --config <suite.json> [--out-dir DIR]
  block    <partition.json> --scheme t1|t2|t3|a|b|c|d [--alpha X] [--tol X]

All outputs are JSON on stdout (plus report files for sweep).  sweep exits
zero iff the run produced no unexpected violations.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import product_bounds, scalar_bounds
from .block_bounds import PinchScheme, block_bound, pinch, two_by_two_closed_form
from .exceptions import ArityMismatch, NumradError, UnknownBoundId
from .linalg import PowerFunction, aluthge, min_gauge, operator_norm, spectral_radius
from .matio import (
    load_json,
    matrix_from_json,
    matrix_to_json,
    pair_from_json,
    partition_from_json,
)
from .radius import numerical_radius
from .records import BoundRecord
from .sweep import REGISTRY, run_from_config, tightness_csv

__all__ = ["main"]


def _emit(obj) -> None:
    print(json.dumps(obj, sort_keys=True, indent=2))


def _cmd_compute(args) -> int:
    M = matrix_from_json(load_json(args.matrix))
    what = args.what
    if what == "w":
        est = numerical_radius(M, args.tol)
        _emit(
            {
                "what": "w",
                "value": est.value,
                "certified_error": est.certified_error,
                "argmax_angle": est.argmax_angle,
                "iterations": est.iterations,
            }
        )
    elif what == "r":
        _emit({"what": "r", "value": spectral_radius(M)})
    elif what == "norm":
        _emit({"what": "norm", "value": operator_norm(M)})
    elif what == "ell":
        _emit({"what": "ell", "value": min_gauge(M)})
    else:  # aluthge
        _emit({"what": "aluthge", "matrix": matrix_to_json(aluthge(M))})
    return 0


def _single_checks(args):
    return {
        "eq1.1.lower": lambda T: scalar_bounds.eq11_sandwich(T)[0],
        "eq1.1.upper": lambda T: scalar_bounds.eq11_sandwich(T)[1],
        "eq1.2": scalar_bounds.kittaneh2003,
        "eq1.3.lower": lambda T: scalar_bounds.kittaneh2005(T)[0],
        "eq1.3.upper": lambda T: scalar_bounds.kittaneh2005(T)[1],
        "eq1.4.first": lambda T: scalar_bounds.yamazaki(T)[0],
        "eq1.4.second": lambda T: scalar_bounds.yamazaki(T)[1],
        "eq1.5.as_printed": lambda T: scalar_bounds.dragomir(T, "as_printed"),
        "eq1.5.squared_norm": lambda T: scalar_bounds.dragomir(T, "squared_norm"),
        "cor5": lambda T: product_bounds.cor5_bound(T, args.p),
    }


def _pair_checks(args):
    def holder():
        return product_bounds.HolderPair(args.holder_alpha, args.holder_beta)

    def powers():
        return PowerFunction(args.alpha), PowerFunction(1.0 - args.alpha)

    def thm1(A, B, index):
        f, g = powers()
        inp = product_bounds.ProductBoundInput(A=A, B=B, f=f, g=g)
        return product_bounds.thm1_bounds(inp)[index]

    def thm2(A, B, index):
        f, g = powers()
        inp = product_bounds.ProductBoundInput(
            A=A, B=B, f=f, g=g, p=args.p, holder=holder()
        )
        return product_bounds.thm2_bounds(inp)[index]

    return {
        "eq2.1.first": lambda A, B: thm1(A, B, 0),
        "eq2.1.second": lambda A, B: thm1(A, B, 1),
        "eq3.2": lambda A, B: product_bounds.cor1_alpha_bounds(A, B, args.alpha)[0],
        "eq3.3": product_bounds.cor2_bound,
        "eq3.4.first": lambda A, B: thm2(A, B, 0),
        "eq3.4.second": lambda A, B: thm2(A, B, 1),
        "eq3.5": lambda A, B: thm2(A, B, 2),
        "eq3.6": lambda A, B: product_bounds.thm3_bound(
            A, B, *powers(), args.p, holder()
        ),
        "thm4": lambda A, B: product_bounds.thm4_bound(A, B, args.p),
        "fact1": scalar_bounds.norm_sum_estimate,
        "fact2": scalar_bounds.fact2_check,
        "fact3": scalar_bounds.spectral_radius_product_estimate,
    }


def _cmd_check(args) -> int:
    payload = load_json(args.input)
    singles = _single_checks(args)
    pairs = _pair_checks(args)
    if args.bound in singles:
        record: BoundRecord = singles[args.bound](matrix_from_json(payload))
    elif args.bound in pairs:
        A, B = pair_from_json(payload)
        record = pairs[args.bound](A, B)
    elif args.bound in REGISTRY:
        raise ArityMismatch(
            f"{args.bound!r} needs vectors or a partition; run it through "
            f"`numrad sweep` or `numrad block` instead"
        )
    else:
        raise UnknownBoundId(
            f"unknown bound {args.bound!r}; matrix/pair bounds: "
            f"{sorted(singles) + sorted(pairs)}"
        )
    _emit(record.to_dict())
    return 0


def _cmd_sweep(args) -> int:
    config = load_json(args.config)
    report = run_from_config(config)
    out_dir = Path(args.out_dir)
    out_dir.mkdir(parents=True, exist_ok=True)
    report_path = out_dir / "report.json"
    report_path.write_bytes(report.to_bytes())
    csv_path = out_dir / "tightness.csv"
    csv_path.write_text(tightness_csv(report), encoding="utf-8")
    summary = {
        "report": str(report_path),
        "tightness": str(csv_path),
        "totals": report.totals,
    }
    _emit(summary)
    return 0 if report.totals["unexpected_violations"] == 0 else 1


def _cmd_block(args) -> int:
    partition = partition_from_json(load_json(args.partition))
    if args.scheme in ("c", "d"):
        scheme = PinchScheme(args.scheme, PowerFunction(args.alpha), PowerFunction(1.0 - args.alpha))
    else:
        scheme = PinchScheme(args.scheme)
    P = pinch(partition, scheme, args.tol)
    record = block_bound(partition, scheme, args.tol)
    out = {"pinch": [[float(v) for v in row] for row in P], "record": record.to_dict()}
    if partition.n_blocks == 2:
        out["two_by_two"] = two_by_two_closed_form(partition, args.tol).to_dict()
    _emit(out)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="numrad",
        description="Numerical radius computations and inequality verification.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_compute = sub.add_parser("compute", help="spectral quantities of one matrix")
    p_compute.add_argument("matrix", help="matrix JSON file")
    p_compute.add_argument(
        "--what", choices=["w", "r", "norm", "ell", "aluthge"], default="w"
    )
    p_compute.add_argument("--tol", type=float, default=None)
    p_compute.set_defaults(func=_cmd_compute)

    p_check = sub.add_parser("check", help="evaluate one bound on a matrix or pair")
    p_check.add_argument("input", help="matrix or pair JSON file")
    p_check.add_argument("--bound", required=True)
    p_check.add_argument("--alpha", type=float, default=0.5, help="power split exponent")
    p_check.add_argument("--p", type=float, default=2.0)
    p_check.add_argument("--holder-alpha", type=float, default=2.0)
    p_check.add_argument("--holder-beta", type=float, default=2.0)
    p_check.set_defaults(func=_cmd_check)

    p_sweep = sub.add_parser("sweep", help="run a randomized verification suite")
    p_sweep.add_argument("--config", required=True, help="suite config JSON")
    p_sweep.add_argument("--out-dir", default="sweep-out")
    p_sweep.set_defaults(func=_cmd_sweep)

    p_block = sub.add_parser("block", help="pinch a block partition and bound it")
    p_block.add_argument("partition", help="partition JSON file")
    p_block.add_argument("--scheme", required=True, choices=["t1", "t2", "t3", "a", "b", "c", "d"])
    p_block.add_argument("--alpha", type=float, default=0.5, help="power split for schemes c/d")
    p_block.add_argument("--tol", type=float, default=None)
    p_block.set_defaults(func=_cmd_block)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (NumradError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    raise SystemExit(main())

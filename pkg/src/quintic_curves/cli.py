"""Command-line front end.

Three subcommands:

  cohomology   ideal-sheaf cohomology of a curve (from a file or a sampler)
  dims         the strata dimension/verdict table over a degree range
  experiment   run a seeded Monte Carlo experiment from a JSON config

Exit codes: 0 success, 1 internal property violation, 2 usage/input error.
All randomness flows from --seed; identical flags give byte-identical output.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys

from .cohomology import ideal_cohomology
from .curves import curve_from_json, curve_in_hyperplane, curve_on_quadric, random_curve, rational_normal_curve
from .field import DEFAULT_PRIME, FieldConfig, FieldError
from .linalg import ConsistencyError
from .strata import (
    ExperimentConfig,
    dim_J,
    dim_K,
    hypersurface_family_bound,
    reducibility_verdict,
    run_experiment,
)

USAGE_ERROR = 2
PROPERTY_ERROR = 1


class UsageError(ValueError):
    pass


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="quintic-curves")
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--prime", type=int, default=DEFAULT_PRIME)
    common.add_argument("--seed", type=int, default=0)
    sub = parser.add_subparsers(dest="command", required=True)

    coh = sub.add_parser("cohomology", parents=[common],
                         help="ideal-sheaf cohomology of a curve")
    src = coh.add_mutually_exclusive_group(required=True)
    src.add_argument("--line", action="store_true")
    src.add_argument("--rnc", action="store_true")
    src.add_argument("--random", action="store_true")
    src.add_argument("--in-hyperplane", action="store_true")
    src.add_argument("--on-quadric", action="store_true")
    src.add_argument("--curve-file")
    coh.add_argument("--d", type=int)
    coh.add_argument("--k", type=int, default=5)
    coh.add_argument("--out")

    dims = sub.add_parser("dims", parents=[common], help="strata dimension table")
    dims.add_argument("--d-min", type=int, default=1)
    dims.add_argument("--d-max", type=int, default=30)
    dims.add_argument("--format", choices=("json", "csv"), default="json")
    dims.add_argument("--out")

    exp = sub.add_parser("experiment", parents=[common], help="run a seeded experiment")
    exp.add_argument("config", help="JSON config file")
    exp.add_argument("--out")
    return parser


def _load_curve(args):
    field = FieldConfig(args.prime)
    if args.curve_file:
        try:
            with open(args.curve_file) as fh:
                text = fh.read()
        except OSError as exc:
            raise UsageError(f"cannot read curve file: {exc}") from exc
        try:
            return curve_from_json(text)
        except (ValueError, KeyError) as exc:
            raise UsageError(f"malformed curve file: {exc}") from exc
    if args.line:
        return rational_normal_curve(1, field)
    if args.rnc:
        if args.d is None:
            raise UsageError("--rnc requires --d")
        return rational_normal_curve(args.d, field)
    if args.d is None:
        raise UsageError("sampler selectors require --d")
    if args.random:
        return random_curve(args.d, field, args.seed)
    if args.in_hyperplane:
        return curve_in_hyperplane(args.d, field, args.seed)
    return curve_on_quadric(args.d, field, args.seed)


def _emit(text: str, out_path: str | None) -> None:
    if out_path:
        with open(out_path, "w") as fh:
            fh.write(text + "\n")
    print(text)


def _cmd_cohomology(args) -> int:
    if args.k is None or args.k < 1:
        raise UsageError("twist --k must be >= 1")
    c = _load_curve(args)
    rep = ideal_cohomology(c, args.k)
    obj = {"d": rep.d, "k": rep.k, "rank": rep.rank, "h0": rep.h0_ideal, "h1": rep.h1_ideal}
    _emit(json.dumps(obj, sort_keys=True, separators=(",", ":")), args.out)
    return 0


def _dims_row(d: int) -> dict:
    verdict = reducibility_verdict(d)
    row: dict = {"d": d, "verdict": verdict.status}
    row["dim_J2"] = dim_J(d, 2).value if d >= 10 else None
    row["dim_J3"] = dim_J(d, 3).value if d >= 15 else None
    row["dim_J4_bound"] = dim_J(d, 4).value if d >= 20 else None
    k = dim_K(d)
    row["dim_K"] = k.value if k.kind == "exact" else "empty"
    for t in (2, 3, 4):
        row[f"hyp_bound_t{t}"] = hypersurface_family_bound(d, t)
    row["extra_component_dim"] = verdict.extra_component_dim
    return row


def _cmd_dims(args) -> int:
    if not 1 <= args.d_min <= args.d_max <= 30:
        raise UsageError("need 1 <= d-min <= d-max <= 30")
    rows = [_dims_row(d) for d in range(args.d_min, args.d_max + 1)]
    if args.format == "csv":
        buf = io.StringIO()
        writer = csv.DictWriter(buf, fieldnames=list(rows[0]))
        writer.writeheader()
        writer.writerows(rows)
        _emit(buf.getvalue().rstrip("\n"), args.out)
    else:
        _emit(json.dumps(rows, sort_keys=True, separators=(",", ":")), args.out)
    return 0


def _cmd_experiment(args) -> int:
    try:
        with open(args.config) as fh:
            raw = json.load(fh)
    except OSError as exc:
        raise UsageError(f"cannot read config: {exc}") from exc
    except json.JSONDecodeError as exc:
        raise UsageError(f"config is not valid JSON: {exc}") from exc
    known = {"sampler", "d", "property", "samples", "seed", "prime"}
    unknown = sorted(set(raw) - known)
    missing = sorted({"sampler", "d", "property", "samples"} - set(raw))
    if unknown or missing:
        parts = []
        if unknown:
            parts.append(f"unknown config fields: {', '.join(unknown)}")
        if missing:
            parts.append(f"missing config fields: {', '.join(missing)}")
        raise UsageError("; ".join(parts))
    try:
        config = ExperimentConfig(
            sampler=raw["sampler"],
            d=int(raw["d"]),
            prop=raw["property"],
            samples=int(raw["samples"]),
            seed=int(raw.get("seed", args.seed)),
            prime=int(raw.get("prime", args.prime)),
        )
    except (TypeError, ValueError) as exc:
        raise UsageError(str(exc)) from exc
    report = run_experiment(config)
    text = report.to_json()
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(text + "\n")
    print(f"frequency {report.frequency}")
    if not args.out:
        print(text)
    return 0


def main(argv: list[str] | None = None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        if args.command == "cohomology":
            return _cmd_cohomology(args)
        if args.command == "dims":
            return _cmd_dims(args)
        return _cmd_experiment(args)
    except (UsageError, FieldError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return USAGE_ERROR
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return USAGE_ERROR
    except ConsistencyError as exc:
        print(f"internal consistency violation: {exc}", file=sys.stderr)
        return PROPERTY_ERROR


if __name__ == "__main__":
    sys.exit(main())

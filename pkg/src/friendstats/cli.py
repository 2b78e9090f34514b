"""``friendstats`` command-line entry point.

Subcommands: ``analyze``, ``generate``, ``bounds``, ``equilibrium``.

Exit codes:
    0  success
    2  usage error (bad flags or out-of-range parameters)
    3  input error (unreadable edge list or degree file, empty input)
    4  precondition error (bound or model outside its domain, curves that do not cross)
    5  I/O error (file missing or unwritable)
"""

from __future__ import annotations

import argparse
import csv
import sys
from pathlib import Path
from typing import Any, Sequence

from . import fixtures
from .attention import (
    LinearCurve,
    equilibrium,
    sample_curves,
    shift_supply,
    translate_supply,
)
from .degree_stats import (
    REFERENCE_MODELS,
    PointDistribution,
    fit_point_model,
    mallows_sigma_lower_bound,
    tail_bound,
    validate_point_model,
)
from .errors import (
    EdgeListParseError,
    GraphValidationError,
    ParameterError,
    PreconditionError,
    UndefinedStatisticError,
)
from .generators import GeneratorConfig, degree_cap, generate
from .graph import degrees, parse_edge_list
from .report import (
    SCHEMA_VERSION,
    analysis_report,
    distribution_section,
    dumps,
    point_model_dict,
    render_table,
    tail_dict,
)

EXIT_OK = 0
EXIT_USAGE = 2
EXIT_INPUT = 3
EXIT_PRECONDITION = 4
EXIT_IO = 5

# GeneratorConfig field -> CLI flag, for error messages.
_GEN_FLAGS = {
    "n_individuals": "--n",
    "edge_prob": "--p",
    "n_institutions": "--institutions",
    "institution_attach_prob": "--attach",
    "dormant_fraction": "--dormant",
    "dormant_activity": "--activity",
    "seed": "--seed",
}


class CliError(Exception):
    def __init__(self, message: str, code: int) -> None:
        super().__init__(message)
        self.code = code


def _emit(args: argparse.Namespace, report: dict[str, Any], out, *, quiet: bool = False) -> None:
    text = dumps(report)
    if args.json:
        Path(args.json).write_text(text, encoding="utf-8")
    elif not quiet:
        out.write(text)


def _read_text(path: str) -> str:
    try:
        with open(path, encoding="utf-8", newline="") as fh:
            return fh.read()
    except OSError as exc:
        raise CliError(f"cannot read {path}: {exc.strerror}", EXIT_IO) from None


def cmd_analyze(args: argparse.Namespace, out) -> int:
    if args.fixture:
        g = fixtures.network(args.fixture)
        source: dict[str, Any] = {"fixture": args.fixture}
        title = args.fixture
    else:
        text = _read_text(args.graph)
        if not any(line.strip() for line in text.splitlines()):
            raise CliError(f"{args.graph}: empty edge list", EXIT_INPUT)
        g = parse_edge_list(text)
        source = {"path": args.graph}
        title = Path(args.graph).name
    report = analysis_report(g, source, table=args.table)
    if args.table:
        out.write(render_table(g, title))
    _emit(args, report, out, quiet=args.table)
    return EXIT_OK


def _config_from_args(args: argparse.Namespace) -> GeneratorConfig:
    values: dict[str, str] = {}
    if args.config:
        base = GeneratorConfig.from_text(_read_text(args.config))
        values = {k: str(v) for k, v in vars(base).items()}
    for field, flag in _GEN_FLAGS.items():
        value = getattr(args, flag.lstrip("-"))
        if value is not None:
            values[field] = str(value)
    try:
        return GeneratorConfig.from_mapping(values)
    except ParameterError as exc:
        msg = str(exc)
        for field, flag in _GEN_FLAGS.items():
            msg = msg.replace(field, flag)
        raise CliError(msg, EXIT_USAGE) from None


def cmd_generate(args: argparse.Namespace, out) -> int:
    cfg = _config_from_args(args)
    lg = generate(cfg)
    if args.cap is not None:
        if args.cap < 1:
            raise CliError("--cap must be a positive integer", EXIT_USAGE)
        lg = degree_cap(lg, args.cap)
    try:
        edge_path, label_path = lg.write(args.output)
    except OSError as exc:
        raise CliError(f"cannot write {args.output}: {exc.strerror}", EXIT_IO) from None
    report = {
        "schema_version": SCHEMA_VERSION,
        "command": "generate",
        "config": vars(cfg) | {"cap": args.cap},
        "config_digest": cfg.digest(),
        "seed": cfg.seed,
        "n": lg.graph.n,
        "edges": lg.graph.edge_count,
        "edge_list": str(edge_path),
        "labels": str(label_path),
    }
    _emit(args, report, out)
    return EXIT_OK


def _read_degrees(path: str) -> list[int]:
    values = []
    for lineno, line in enumerate(_read_text(path).splitlines(), start=1):
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        try:
            value = int(line)
        except ValueError:
            raise CliError(f"{path}: line {lineno}: expected one integer, got {line!r}", EXIT_INPUT) from None
        if value < 0:
            raise CliError(f"{path}: line {lineno}: degrees must be non-negative", EXIT_INPUT)
        values.append(value)
    if not values:
        raise CliError(f"{path}: no degrees found", EXIT_INPUT)
    return values


def cmd_bounds(args: argparse.Namespace, out) -> int:
    notes: list[str] = []
    report: dict[str, Any] = {
        "schema_version": SCHEMA_VERSION,
        "command": "bounds",
        "distribution": None,
        "mallows": None,
        "tail_bound": None,
        "point_model": None,
        "notes": notes,
    }
    if args.degrees or args.graph:
        if args.graph:
            values = list(degrees(parse_edge_list(_read_text(args.graph))))
            report["input"] = {"graph": args.graph}
        else:
            values = _read_degrees(args.degrees)
            report["input"] = {"degrees": args.degrees}
        section, dist_notes = distribution_section(values)
        report["distribution"] = section["summary"]
        report["mallows"] = section["mallows"]
        report["tail_bound"] = section["tail_bound"]
        notes.extend(dist_notes)
        mu, med = section["summary"]["mean"], section["summary"]["median"]
        sigma = section["summary"]["std_dev"]
        if args.chebyshev and section["tail_bound"] is None:
            tail_bound(mu, med, sigma)  # raises with the explanation
    elif args.mu is None or args.median is None:
        if not args.reference:
            raise CliError(
                "bounds needs --degrees, --graph, --reference, or both --mu and --median", EXIT_USAGE
            )
        if args.fit_k is not None:
            raise CliError("--fit-k needs --mu and --median or a data file", EXIT_USAGE)
        report["input"] = {"reference": args.reference}
    else:
        mu, med, sigma = args.mu, args.median, args.sigma
        report["input"] = {"mu": mu, "median": med, "sigma": sigma}
        lower = mallows_sigma_lower_bound(mu, med)
        report["mallows"] = {
            "sigma_lower_bound": lower,
            "holds": None if sigma is None else sigma >= lower,
            "slack": None if sigma is None else sigma - lower,
        }
        notes.append(f"sigma ≥ {lower:g}")
        if sigma is not None and sigma < lower:
            notes.append(f"given sigma {sigma:g} is below the Mallows lower bound")
        if sigma is not None or args.chebyshev:
            try:
                if sigma is None:
                    if not mu > med:
                        tail_bound(mu, med, 1.0)
                    raise PreconditionError("tail bound needs --sigma")
                t = tail_bound(mu, med, sigma)
            except PreconditionError as exc:
                if args.chebyshev:
                    raise
                notes.append(f"tail bound skipped: {exc}")
            else:
                report["tail_bound"] = tail_dict(t)
                notes.append(f"P(X ≥ {t.threshold:g}) ≤ {t.bound:g}")
                if t.vacuous:
                    notes.append("tail bound is vacuous (clamped to 1)")

    if args.reference:
        ref = REFERENCE_MODELS[args.reference]
        v = validate_point_model(ref.distribution(), ref.median, ref.mean, quoted_sigma=ref.quoted_sigma)
        report["point_model"] = point_model_dict(ref.points, v) | {"reference": ref.name}
        notes.extend(v.notes)
    elif args.fit_k is not None:
        target_sigma = sigma if sigma else None
        try:
            p: PointDistribution = fit_point_model(med, mu, target_sigma, args.fit_k)
        except ParameterError as exc:
            raise CliError(str(exc), EXIT_USAGE) from None
        v = validate_point_model(p, med, mu, target_sigma)
        report["point_model"] = point_model_dict(p.points, v)
        if v.sigma_ok is False:
            notes.append(f"sigma target not reachable with {args.fit_k} points; closest {v.std_dev:.4g}")
    _emit(args, report, out)
    return EXIT_OK


def cmd_equilibrium(args: argparse.Namespace, out) -> int:
    demand = LinearCurve(args.demand_intercept, args.demand_slope)
    supply = LinearCurve(args.supply_intercept, args.supply_slope)
    eq = equilibrium(demand, supply)
    report: dict[str, Any] = {
        "schema_version": SCHEMA_VERSION,
        "command": "equilibrium",
        "demand": vars(demand),
        "supply": vars(supply),
        "equilibrium": vars(eq),
    }
    shifted_supply = None
    if args.shift is not None:
        shifted_supply = shift_supply(supply, args.shift)
        report["shift"] = {"mode": "slope", "factor": args.shift}
    elif args.translate is not None:
        shifted_supply = translate_supply(supply, args.translate)
        report["shift"] = {"mode": "translate", "offset": args.translate}
    if shifted_supply is not None:
        moved = equilibrium(demand, shifted_supply)
        report["shifted_supply"] = vars(shifted_supply)
        report["shifted_equilibrium"] = vars(moved)
        report["friend_count_delta"] = moved.friend_count - eq.friend_count
    if args.csv:
        n_max = args.n_max if args.n_max is not None else 2 * eq.friend_count
        with open(args.csv, "w", encoding="utf-8", newline="") as fh:
            writer = csv.writer(fh, lineterminator="\n")
            writer.writerow(["n", "demand", "supply"] + (["supply_shifted"] if shifted_supply else []))
            for n, d, s in sample_curves(demand, supply, n_max, args.points):
                row = [repr(n), repr(d), repr(s)]
                if shifted_supply:
                    row.append(repr(shifted_supply(n)))
                writer.writerow(row)
    _emit(args, report, out)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", metavar="PATH", help="write the JSON report to PATH instead of stdout")
    common.add_argument("--seed", type=int, help="random seed (unsigned 64-bit)")
    common.add_argument("--table", action="store_true", help="print the human-readable paradox table")

    parser = argparse.ArgumentParser(prog="friendstats", description=__doc__.split("\n")[0], parents=[common])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("analyze", parents=[common], help="paradox table and degree statistics of a graph")
    src = p.add_mutually_exclusive_group(required=True)
    src.add_argument("graph", nargs="?", help="edge-list file")
    src.add_argument("--fixture", choices=sorted(fixtures.NETWORK_EDGES), help="built-in example network")
    p.set_defaults(func=cmd_analyze)

    p = sub.add_parser("generate", parents=[common], help="write a synthetic labelled graph")
    p.add_argument("--config", metavar="FILE", help="key = value config file; flags override it")
    p.add_argument("--n", type=int, help="number of individuals")
    p.add_argument("--p", type=float, help="individual-individual edge probability")
    p.add_argument("--institutions", type=int, help="number of institutional nodes")
    p.add_argument("--attach", type=float, help="institution-individual edge probability")
    p.add_argument("--dormant", type=float, help="fraction of dormant individuals")
    p.add_argument("--activity", type=float, help="edge-probability multiplier for dormant endpoints")
    p.add_argument("--cap", type=int, help="maximum degree (off by default)")
    p.add_argument("-o", "--output", required=True, help="edge-list path; labels go to OUTPUT.labels")
    p.set_defaults(func=cmd_generate)

    p = sub.add_parser("bounds", parents=[common], help="median/mean/sigma bounds")
    p.add_argument("--degrees", metavar="FILE", help="one degree per line")
    p.add_argument("--graph", metavar="FILE", help="edge-list file; its degrees are analysed")
    p.add_argument("--mu", type=float, help="mean")
    p.add_argument("--median", type=float, help="median")
    p.add_argument("--sigma", type=float, help="standard deviation")
    p.add_argument("--chebyshev", action="store_true", help="fail if the tail bound does not apply")
    p.add_argument("--fit-k", type=int, metavar="K", help="fit a K-point model to median/mean(/sigma)")
    p.add_argument("--reference", choices=sorted(REFERENCE_MODELS), help="validate a reference point model")
    p.set_defaults(func=cmd_bounds)

    p = sub.add_parser("equilibrium", parents=[common], help="attention/information equilibrium")
    p.add_argument("demand_intercept", type=float)
    p.add_argument("demand_slope", type=float)
    p.add_argument("supply_intercept", type=float)
    p.add_argument("supply_slope", type=float)
    shift = p.add_mutually_exclusive_group()
    shift.add_argument("--shift", type=float, metavar="FACTOR", help="scale supply slope by FACTOR in (0, 1]")
    shift.add_argument("--translate", type=float, metavar="OFFSET", help="move supply right by OFFSET friends")
    p.add_argument("--csv", metavar="PATH", help="write sampled (n, demand, supply) rows")
    p.add_argument("--n-max", type=float, help="upper end of the CSV grid (default 2 n*)")
    p.add_argument("--points", type=int, default=101, help="CSV grid size")
    p.set_defaults(func=cmd_equilibrium)
    return parser


def main(argv: Sequence[str] | None = None, out=None) -> int:
    out = out or sys.stdout
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args, out)
    except CliError as exc:
        print(f"friendstats: error: {exc}", file=sys.stderr)
        return exc.code
    except (EdgeListParseError, GraphValidationError) as exc:
        print(f"friendstats: input error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except (PreconditionError, UndefinedStatisticError) as exc:
        print(f"friendstats: precondition error: {exc}", file=sys.stderr)
        return EXIT_PRECONDITION
    except ParameterError as exc:
        print(f"friendstats: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except OSError as exc:
        print(f"friendstats: I/O error: {exc}", file=sys.stderr)
        return EXIT_IO


if __name__ == "__main__":
    sys.exit(main())

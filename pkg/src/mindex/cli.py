"""mindex command line.

    mindex verify --family L --indices 1I --g 1 --y min --nmax 8
    mindex appendixb L.Ex1 --g 1
    mindex appendixb --equiv J --g 13/3 --h 17/4
    mindex calibrate --family W --a 1/3,2/7,3/5,5/11
    mindex sweep sweep.toml --out reports/

Exit codes: 0 all checks pass, 2 a recurrence system was inconsistent
(the counterexample report is still written), 1 usage or infrastructure
error, including a failed golden comparison.
"""
from __future__ import annotations

import argparse
import logging
import sys
from pathlib import Path

import tomli

from . import report as rep
from .errors import MindexError, UsageError
from .families import FamilySpec

log = logging.getLogger("mindex")

EXIT_OK = 0
EXIT_FAIL = 1
EXIT_INCONSISTENT = 2


def _add_instance_args(p: argparse.ArgumentParser, need_family: bool = True):
    p.add_argument("--family", choices=["L", "J", "W", "AW"], required=need_family)
    p.add_argument("--indices", default="1I", help="comma-separated seeds such as 1I,2II")
    p.add_argument("--g")
    p.add_argument("--h")
    p.add_argument("--a", help="a1,a2,a3,a4 as rational strings")
    p.add_argument("--t", help="t = q^(1/2) for Askey-Wilson")


def _params(args) -> dict:
    return {k: getattr(args, k) for k in ("g", "h", "a", "t") if getattr(args, k, None) is not None}


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="mindex", description=__doc__.splitlines()[0])
    parser.add_argument("-v", "--verbose", action="store_true")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("verify", help="solve the recurrence for one instance")
    _add_instance_args(p)
    p.add_argument("--y", default="min", help="'min' or coefficients c0,c1,... of Y")
    p.add_argument("--x", help="explicit X coefficients 0,c1,c2,... (overrides --y; for negative controls)")
    p.add_argument("--nmax", type=int, default=6)
    p.add_argument("--out", help="JSON report path (default: stdout)")
    p.add_argument("--csv", help="also write the r-table as CSV")
    p.add_argument("--checked", action="store_true", help="enable per-call ring verifications")

    p = sub.add_parser("appendixb", help="compare against the printed worked examples")
    p.add_argument("case", nargs="?", help="L.Ex1 ... J.Ex3, W.Ex1, AW.Ex1")
    p.add_argument("--equiv", choices=["L", "J"], help="check the printed equivalences instead")
    _add_instance_args(p, need_family=False)
    p.add_argument("--nmax", type=int, default=6)
    p.add_argument("--out")

    p = sub.add_parser("calibrate", help="show the calibrated conventions and constants")
    _add_instance_args(p)
    p.add_argument("--out")

    p = sub.add_parser("sweep", help="run every instance of a TOML sweep file")
    p.add_argument("config", help="TOML file with [[instance]] tables")
    p.add_argument("--out", required=True, help="directory for per-instance reports")
    p.add_argument("--force", action="store_true", help="recompute reports that already exist")
    return parser


def _emit(report: dict, out: str | None):
    text = rep.dumps(report)
    if out:
        Path(out).parent.mkdir(parents=True, exist_ok=True)
        Path(out).write_text(text)
        log.info("wrote %s", out)
    else:
        sys.stdout.write(text)


def _spec_from_args(family: str, args) -> FamilySpec:
    return rep.RunConfig(family=family, params=_params(args), mode="calibrate").spec()


def cmd_verify(args) -> int:
    cfg = rep.RunConfig(family=args.family, indices=args.indices, params=_params(args),
                        y=args.y, nmax=args.nmax, out=args.out, checked=args.checked, x=args.x)
    report = rep.run_verify(cfg)
    _emit(report, args.out)
    if args.csv:
        Path(args.csv).write_text(rep.rtable_csv(report["r_table"]))
    return _code(report)


def _code(report: dict) -> int:
    v = report["verdict"]
    if v == "pass":
        return EXIT_OK
    if v == "inconsistent":
        return EXIT_INCONSISTENT
    return EXIT_FAIL


def cmd_appendixb(args) -> int:
    if args.equiv:
        fam = args.equiv
        if not _params(args):
            raise UsageError("--equiv needs the family parameters (e.g. --g 7/3)")
        report = rep.run_equivalences(fam, _spec_from_args(fam, args), min(args.nmax, 5))
    else:
        if not args.case:
            raise UsageError("appendixb needs a case id or --equiv")
        case = rep.CASES.get(args.case)
        if case is None:
            raise UsageError(f"unknown case {args.case!r}; choose from {', '.join(rep.CASES)}")
        spec = _spec_from_args(case.family, args) if _params(args) else None
        report = rep.run_appendixb(args.case, spec, args.nmax)
    _emit(report, args.out)
    return EXIT_OK if report["verdict"] == "pass" else EXIT_FAIL


def cmd_calibrate(args) -> int:
    cfg = rep.RunConfig(family=args.family, indices=args.indices, params=_params(args), mode="calibrate")
    _emit(rep.run_calibrate(cfg), args.out)
    return EXIT_OK


def cmd_sweep(args) -> int:
    with open(args.config, "rb") as fh:
        data = tomli.load(fh)
    unknown = set(data) - {"instance", "defaults"}
    if unknown:
        raise UsageError(f"unknown top-level keys in sweep file: {', '.join(sorted(unknown))}")
    defaults = data.get("defaults", {})
    instances = data.get("instance", [])
    if not instances:
        raise UsageError("sweep file has no [[instance]] tables")
    outdir = Path(args.out)
    outdir.mkdir(parents=True, exist_ok=True)
    worst = EXIT_OK
    index = []
    for raw in instances:
        cfg = rep.RunConfig.from_mapping({**defaults, **raw}, mode="verify")
        path = outdir / f"{cfg.content_hash()}.json"
        if path.exists() and not args.force:
            report = rep.loads(path.read_text())
            log.info("reuse %s", path.name)
        else:
            report = rep.run_verify(cfg)
            path.write_text(rep.dumps(report))
            log.info("wrote %s (%s)", path.name, report["verdict"])
        code = _code(report)
        if code == EXIT_INCONSISTENT or (code == EXIT_FAIL and worst == EXIT_OK):
            worst = code
        index.append({"config": cfg.canonical(), "report": path.name, "verdict": report["verdict"]})
    (outdir / "index.json").write_text(rep.dumps({"schema": rep.SCHEMA, "tool": "mindex",
                                                   "instances": index}))
    return worst


COMMANDS = {"verify": cmd_verify, "appendixb": cmd_appendixb,
            "calibrate": cmd_calibrate, "sweep": cmd_sweep}


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        # argparse uses 2 for usage errors; that code is reserved here
        return EXIT_FAIL if exc.code else EXIT_OK
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING,
                        format="%(levelname)s %(message)s")
    try:
        return COMMANDS[args.command](args)
    except MindexError as exc:
        print(f"mindex: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_FAIL
    except (OSError, ArithmeticError, tomli.TOMLDecodeError) as exc:
        print(f"mindex: {exc}", file=sys.stderr)
        return EXIT_FAIL


if __name__ == "__main__":
    sys.exit(main())

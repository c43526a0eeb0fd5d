"""Run configuration, report assembly and serialization.

Reports are JSON with every rational written as a "p/q" string, so a
report loads and dumps back to the identical text.
"""
from __future__ import annotations

import csv
import hashlib
import io
import json
import time
from dataclasses import dataclass, field

from . import __version__
from .algebra.poly import Poly
from .algebra.scalars import Q, qstr
from .darboux import system
from .errors import UsageError
from .families import FAMILIES, FamilySpec, IndexSet
from .golden import CASES, EQUIVALENCES
from .recurrence import (band_check, invariants, invariants_from_r, necessary_condition,
                         route2_coeffs, route_ratio, solve_recurrence)
from .xbuilder import custom, make_x

SCHEMA = 1
MODES = ("verify", "appendixb", "calibrate", "sweep")
CONFIG_KEYS = {"family", "indices", "g", "h", "a", "t", "y", "x", "nmax", "out", "mode", "checked", "case"}


def parse_rational(text) -> object:
    if isinstance(text, int):
        return Q(text)
    if not isinstance(text, str):
        raise UsageError(f"rational values must be 'p/q' strings, got {text!r}")
    try:
        return Q(text)
    except (ValueError, TypeError) as exc:
        raise UsageError(f"not an exact rational: {text!r}") from exc


def parse_rational_list(text) -> list:
    if isinstance(text, (list, tuple)):
        return [parse_rational(v) for v in text]
    return [parse_rational(v) for v in str(text).split(",") if v.strip()]


@dataclass
class RunConfig:
    family: str
    indices: str = "1I"
    params: dict = field(default_factory=dict)  # name -> rational string(s)
    y: str = "min"
    nmax: int = 6
    out: str | None = None
    mode: str = "verify"
    checked: bool = False
    case: str | None = None
    x: str | None = None  # explicit X coefficients, for negative controls

    def __post_init__(self):
        if self.family not in FAMILIES:
            raise UsageError(f"unknown family {self.family!r}; choose from {', '.join(FAMILIES)}")
        if self.mode not in MODES:
            raise UsageError(f"unknown mode {self.mode!r}")
        if self.nmax < 0:
            raise UsageError("nmax must be non-negative")
        IndexSet.parse(self.indices)  # validates, raises on duplicates
        self.y_poly()
        if self.x is not None:
            self.x_poly()
        self.spec()

    @classmethod
    def from_mapping(cls, data: dict, mode: str = "verify") -> "RunConfig":
        unknown = set(data) - CONFIG_KEYS
        if unknown:
            raise UsageError(f"unknown config keys: {', '.join(sorted(unknown))}")
        if "family" not in data:
            raise UsageError("config needs a family")
        params = {k: data[k] for k in ("g", "h", "a", "t") if data.get(k) is not None}
        return cls(family=data["family"], indices=str(data.get("indices", "1I")),
                   params=params, y=str(data.get("y", "min")), nmax=int(data.get("nmax", 6)),
                   out=data.get("out"), mode=data.get("mode", mode),
                   checked=bool(data.get("checked", False)), case=data.get("case"),
                   x=None if data.get("x") is None else str(data["x"]))

    def spec(self) -> FamilySpec:
        p = self.params
        try:
            if self.family == "L":
                return FamilySpec.laguerre(parse_rational(p["g"]))
            if self.family == "J":
                return FamilySpec.jacobi(parse_rational(p["g"]), parse_rational(p["h"]))
            a = parse_rational_list(p["a"])
            if len(a) != 4:
                raise UsageError("--a needs four comma-separated rationals")
            if self.family == "W":
                return FamilySpec.wilson(*a)
            return FamilySpec.askey_wilson(*a, parse_rational(p["t"]))
        except KeyError as exc:
            raise UsageError(f"family {self.family} needs parameter --{exc.args[0]}") from exc

    def index_set(self) -> IndexSet:
        return IndexSet.parse(self.indices)

    def y_poly(self) -> Poly:
        if self.y.strip() == "min":
            return Poly.const(1)
        y = Poly(parse_rational_list(self.y))
        if y.is_zero():
            raise UsageError("Y = 0 gives X = 0")
        return y

    def x_poly(self) -> Poly:
        x = Poly(parse_rational_list(self.x))
        if x.is_zero() or x.coeff(0) != 0:
            raise UsageError("explicit X must be nonzero with zero constant term")
        return x

    def canonical(self) -> dict:
        """Exact, order-independent echo (the output path is not part of it)."""
        params = {}
        for k, v in sorted(self.params.items()):
            if isinstance(v, (list, tuple)) or (isinstance(v, str) and "," in v):
                params[k] = [qstr(x) for x in parse_rational_list(v)]
            else:
                params[k] = qstr(parse_rational(v))
        y = "min" if self.y.strip() == "min" else [qstr(c) for c in parse_rational_list(self.y)]
        return {"family": self.family, "indices": self.index_set().token(), "params": params,
                "y": y, "nmax": self.nmax, "mode": self.mode, "checked": self.checked,
                "case": self.case,
                "x": None if self.x is None else [qstr(c) for c in parse_rational_list(self.x)]}

    def content_hash(self) -> str:
        blob = json.dumps(self.canonical(), sort_keys=True, separators=(",", ":"))
        return hashlib.sha256(blob.encode()).hexdigest()[:16]


# --------------------------------------------------------------------------
# serialization


def dumps(report: dict) -> str:
    return json.dumps(report, sort_keys=True, indent=2, ensure_ascii=False) + "\n"


def loads(text: str) -> dict:
    data = json.loads(text)
    if data.get("schema") != SCHEMA:
        raise UsageError(f"unsupported report schema {data.get('schema')!r}")
    return data


def rtable_csv(table_dict: dict) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(["n", "k", "r"])
    for n, row in sorted(table_dict.items(), key=lambda kv: int(kv[0])):
        for k, v in sorted(row["r"].items(), key=lambda kv: int(kv[0])):
            w.writerow([n, k, "" if v is None else v])
    return buf.getvalue()


class _Clock:
    def __init__(self):
        self.phases = {}

    def run(self, name, fn, *args, **kwargs):
        start = time.perf_counter()
        try:
            return fn(*args, **kwargs)
        finally:
            self.phases[name] = round(time.perf_counter() - start, 4)


def _header(cfg: RunConfig) -> dict:
    return {"schema": SCHEMA, "tool": "mindex", "version": __version__, "config": cfg.canonical()}


# --------------------------------------------------------------------------
# verify


def run_verify(cfg: RunConfig) -> dict:
    """Build the system and X, solve both routes, check band and divisibility.

    ``report["verdict"]`` is "pass" or "inconsistent".
    """
    clock = _Clock()
    spec, D = cfg.spec(), cfg.index_set()
    sys_ = clock.run("build", system, spec, D, checked=cfg.checked)
    if cfg.x is not None:
        x = custom(cfg.x_poly())
    else:
        x = clock.run("xbuilder", make_x, sys_, cfg.y_poly())
    table = clock.run("route1", solve_recurrence, sys_, x, cfg.nmax)
    band = band_check(table)
    cond = necessary_condition(sys_, x)
    route2 = clock.run("route2", route2_coeffs, sys_, x, cfg.nmax)
    ratio = route_ratio(table, route2)
    inv = clock.run("invariants", invariants, table)
    expected_L = x.L if cfg.x is not None else sys_.ell + cfg.y_poly().degree + 1
    checks = {
        "consistent": table.consistent,
        "band": band["passed"],
        "band_width": x.L == expected_L,
        "necessary_condition": cond.passed,
        "route2_polynomial": route2.consistent,
        "cross_route_constant": ratio["constant"],
    }
    report = _header(cfg)
    report.update({
        "calibration": sys_.calibration.describe(),
        "ell": sys_.ell,
        "L": x.L,
        "xi": str(sys_.xi),
        "x": x.describe(),
        "x_divisible_by_eta": x.x_poly.coeff(0) == 0,
        "absent_members": [n for n in range(cfg.nmax + 1) if sys_.p(n).is_zero()],
        "per_n": {str(n): row.status for n, row in sorted(table.rows.items())},
        "r_table": table.as_dict(),
        "route2": {"table": route2.as_dict(), "ratio": ratio},
        "band_check": band,
        "necessary_condition": cond.as_dict(),
        "invariants": inv.as_dict(),
        "checks": checks,
        "timing": clock.phases,
    })
    report["verdict"] = "pass" if all(checks.values()) else (
        "inconsistent" if not table.consistent else "fail")
    return report


# --------------------------------------------------------------------------
# worked examples


def _shape_match(a: Poly, b: Poly):
    if a.degree != b.degree or a.is_zero():
        return False, None
    c = a.lc() / b.lc()
    return a == b * c, c


def compare_invariants(solver_inv, printed_inv, keys) -> dict:
    out = {"matched": 0, "undefined": [], "mismatches": []}
    for key in keys:
        mine, theirs = getattr(solver_inv, key), getattr(printed_inv, key)
        for idx in sorted(mine):
            a, b = mine[idx], theirs.get(idx)
            label = f"{key}[{idx if not isinstance(idx, tuple) else ','.join(map(str, idx))}]"
            if a is None or b is None:
                out["undefined"].append({"entry": label,
                                         "solver": None if a is None else qstr(a),
                                         "printed": None if b is None else qstr(b)})
            elif a == b:
                out["matched"] += 1
            else:
                out["mismatches"].append({"entry": label, "solver": qstr(a), "printed": qstr(b)})
    return out


def run_appendixb(case_id: str, spec: FamilySpec | None = None, nmax: int = 6) -> dict:
    if case_id not in CASES:
        raise UsageError(f"unknown case {case_id!r}; choose from {', '.join(CASES)}")
    case = CASES[case_id]
    spec = spec or case.sample_params[0]
    if spec.family != case.family:
        raise UsageError(f"case {case_id} is a {case.family} case")
    clock = _Clock()
    sys_ = clock.run("build", system, spec, case.D)
    x = clock.run("xbuilder", make_x, sys_, Poly.const(1))
    table = clock.run("route1", solve_recurrence, sys_, x, nmax)
    inv = invariants(table)
    printed = invariants_from_r(lambda n, k: case.r(spec, n, k), nmax, case.L)
    keys = ("rho", "sigma", "pi") if case.has_diagonal else ("pi",)
    cmp_ = compare_invariants(inv, printed, keys)
    shape_ok, const = _shape_match(x.x_poly, case.xmin(spec))
    out = {
        "schema": SCHEMA, "tool": "mindex", "version": __version__,
        "case": case_id, "spec": spec.describe(), "D": case.D, "nmax": nmax,
        "L": x.L, "printed_L": case.L,
        "xmin": {"solver": str(x.x_poly), "printed": str(case.xmin(spec)),
                 "shape_match": shape_ok, "constant": None if const is None else qstr(const)},
        "consistent": table.consistent,
        "comparison": cmp_,
        "timing": clock.phases,
    }
    if not case.has_diagonal:
        r2 = route2_coeffs(sys_, x, nmax)
        out["diagonal"] = {
            "status": "external data unavailable",
            "replacement": "route-1 / route-2 cross-check",
            "cross_route": route_ratio(table, r2),
        }
    ok = shape_ok and table.consistent and not cmp_["mismatches"] and x.L == case.L
    if not case.has_diagonal:
        ok = ok and out["diagonal"]["cross_route"]["constant"]
    out["verdict"] = "pass" if ok else "fail"
    return out


def run_equivalences(family: str, spec: FamilySpec, nmax: int = 5) -> dict:
    if family not in EQUIVALENCES:
        raise UsageError(f"no printed equivalences for family {family!r}")
    results = []
    for eq in EQUIVALENCES[family]:
        left = system(spec, eq.left)
        right = system(eq.right_params(spec), eq.right)
        consts = set()
        bad = []
        for n in range(nmax + 1):
            a = left.p(n)
            b = right.p(n) * eq.factor(spec, n)
            ok, c = _shape_match(a, b)
            if ok:
                consts.add(c)
            else:
                bad.append(n)
        single = len(consts) == 1 and not bad
        results.append({"label": eq.label, "holds": single,
                        "constant": qstr(next(iter(consts))) if single else None,
                        "failed_n": bad})
    return {"schema": SCHEMA, "tool": "mindex", "version": __version__,
            "family": family, "spec": spec.describe(), "nmax": nmax,
            "equivalences": results,
            "verdict": "pass" if all(r["holds"] for r in results) else "fail"}


def run_calibrate(cfg: RunConfig) -> dict:
    spec, D = cfg.spec(), cfg.index_set()
    sys_ = system(spec, D)
    report = _header(cfg)
    report.update({"calibration": sys_.calibration.describe(), "xi": str(sys_.xi),
                   "ell": sys_.ell, "verdict": "pass"})
    return report

"""Constant-coefficient recurrences X·P_{D,n} = Σ_k r_{n,k} P_{D,n+k}.

Route 1 solves for the r's directly in coefficient space.  Route 2 maps
X·P_{D,n} down the backward chain to the classical basis, expands there,
and divides by the energy products.  Invariants built from the table are
insensitive to rescaling X or any individual P_{D,n}.
"""
from __future__ import annotations

from dataclasses import dataclass, field

from .algebra.linalg import solve_exact
from .algebra.poly import Poly
from .algebra.scalars import ZERO, qstr
from .darboux import NonPolynomial
from .families import classical_poly
from .rings import idqm_ring

UNDEFINED = None


@dataclass
class RowResult:
    n: int
    status: str  # consistent | inconsistent | absent
    r: dict = field(default_factory=dict)  # k -> value, or None when undetermined
    witness: dict | None = None


@dataclass
class RecurrenceTable:
    spec: object
    D: object
    x: object
    L: int
    n_max: int
    rows: dict = field(default_factory=dict)  # n -> RowResult
    route: str = "direct"

    def r(self, n: int, k: int):
        """r_{n,k}; zero outside the stored window, None when undetermined."""
        row = self.rows.get(n)
        if row is None:
            raise KeyError(n)
        if k < -n:
            return ZERO
        return row.r.get(k, ZERO)

    @property
    def consistent(self) -> bool:
        return all(row.status != "inconsistent" for row in self.rows.values())

    def inconsistent_rows(self) -> list[int]:
        return [n for n, row in sorted(self.rows.items()) if row.status == "inconsistent"]

    def as_dict(self) -> dict:
        out = {}
        for n, row in sorted(self.rows.items()):
            entry = {"status": row.status,
                     "r": {str(k): (None if v is None else qstr(v)) for k, v in sorted(row.r.items())}}
            if row.witness is not None:
                entry["witness"] = row.witness
            out[str(n)] = entry
        return out


# --------------------------------------------------------------------------
# route 1


def _coefficient_matrix(basis: list[Poly], target: Poly):
    size = max([target.degree] + [b.degree for b in basis]) + 1
    a = [[b.coeff(i) for b in basis] for i in range(size)]
    rhs = [target.coeff(i) for i in range(size)]
    return a, rhs


def solve_row(system, x: Poly, n: int, lo: int, hi: int) -> RowResult:
    """Solve X·P_{D,n} = Σ_{k=lo}^{hi} r_k P_{D,n+k} exactly."""
    pn = system.p(n)
    if pn.is_zero():
        return RowResult(n, "absent")
    ks = [k for k in range(lo, hi + 1) if n + k >= 0]
    usable = [k for k in ks if not system.p(n + k).is_zero()]
    basis = [system.p(n + k) for k in usable]
    a, rhs = _coefficient_matrix(basis, x * pn)
    res = solve_exact(a, rhs)
    if not res.consistent:
        return RowResult(n, "inconsistent",
                         witness={"eta_power": res.witness_row, "residual": qstr(res.witness_value)})
    r = {k: UNDEFINED for k in ks}
    for k, v in zip(usable, res.solution):
        r[k] = v
    # distinct degrees make the solution unique; a free column means a bug
    if res.free:
        raise ArithmeticError(f"row {n}: basis with distinct degrees was rank deficient")
    return RowResult(n, "consistent", r)


def solve_recurrence(system, x, n_max: int, wide: bool = True) -> RecurrenceTable:
    """Route 1 over n = 0..n_max with unknowns k = −n..L (wide) or −L..L."""
    xp = x.x_poly if hasattr(x, "x_poly") else x
    L = xp.degree
    table = RecurrenceTable(system.spec, system.D, x, L, n_max)
    for n in range(n_max + 1):
        lo = -n if wide else -L
        table.rows[n] = solve_row(system, xp, n, lo, L)
    return table


def band_check(table: RecurrenceTable) -> dict:
    """Every r_{n,k} with k < −L must vanish."""
    bad = []
    for n, row in sorted(table.rows.items()):
        for k, v in row.r.items():
            if k < -table.L and v:
                bad.append({"n": n, "k": k, "value": qstr(v)})
    return {"passed": not bad, "violations": bad}


# --------------------------------------------------------------------------
# invariants


@dataclass
class InvariantTable:
    rho: dict  # (n, k) -> value or None
    sigma: dict  # n -> value or None
    pi: dict = field(default_factory=dict)  # (n, k), k > 0 -> value or None

    def defined_rho(self) -> dict:
        return {key: v for key, v in self.rho.items() if v is not None}

    def as_dict(self) -> dict:
        def fmt(v):
            return None if v is None else qstr(v)
        return {"rho": {f"{n},{k}": fmt(v) for (n, k), v in sorted(self.rho.items())},
                "sigma": {str(n): fmt(v) for n, v in sorted(self.sigma.items())},
                "pi": {f"{n},{k}": fmt(v) for (n, k), v in sorted(self.pi.items())}}


def _entry(table, n, k):
    row = table.rows.get(n)
    if row is None or row.status != "consistent":
        return UNDEFINED
    if k < -n:
        return ZERO
    return row.r.get(k, ZERO)


def invariants(table: RecurrenceTable) -> InvariantTable:
    """ρ_{n,k} = r_{n,k}r_{n+k,−k}/(r_{n,0}r_{n+k,0}) and σ_n = r_{n,0}/r_{0,0}.

    π_{n,k} = r_{n,k}r_{n+k,−k}/(r_{0,1}r_{1,−1}) (k > 0) avoids the diagonal
    entries altogether, for tables whose r_{n,0} is unavailable.
    """
    rho, sigma, pi = {}, {}, {}
    ref = None
    if table.n_max >= 1 and table.L >= 1:
        e1, e2 = _entry(table, 0, 1), _entry(table, 1, -1)
        if e1 is not None and e2 is not None:
            ref = e1 * e2
    r00 = _entry(table, 0, 0)
    for n in range(table.n_max + 1):
        rn0 = _entry(table, n, 0)
        if rn0 is None or not r00:
            sigma[n] = UNDEFINED
        else:
            sigma[n] = rn0 / r00
        for k in range(-table.L, table.L + 1):
            m = n + k
            if k == 0 or m < 0 or m > table.n_max:
                continue
            pair = [_entry(table, n, k), _entry(table, m, -k)]
            vals = pair + [rn0, _entry(table, m, 0)]
            if any(v is None for v in vals) or not vals[2] or not vals[3]:
                rho[(n, k)] = UNDEFINED
            else:
                rho[(n, k)] = vals[0] * vals[1] / (vals[2] * vals[3])
            if k > 0:
                if any(v is None for v in pair) or not ref:
                    pi[(n, k)] = UNDEFINED
                else:
                    pi[(n, k)] = pair[0] * pair[1] / ref
    return InvariantTable(rho, sigma, pi)


def invariants_from_r(r, n_max: int, L: int) -> InvariantTable:
    """Invariants of an externally given r(n, k) (None for undefined values)."""
    table = RecurrenceTable(None, None, None, L, n_max)
    for n in range(n_max + 1):
        row = RowResult(n, "consistent")
        for k in range(-min(n, L), L + 1):
            row.r[k] = r(n, k)
        table.rows[n] = row
    return invariants(table)


# --------------------------------------------------------------------------
# route 2


def _expand_classical(spec, q: Poly, lo: int, hi: int) -> dict:
    """Coefficients of q in P_lo..P_hi (triangular solve, top degree first)."""
    out = {}
    rest = q
    for m in range(hi, lo - 1, -1):
        pm = classical_poly(spec, m)
        c = rest.coeff(m) / pm.lc()
        out[m] = c
        rest = rest - c * pm
    if not rest.is_zero():
        raise ArithmeticError("classical expansion left a remainder")
    return out


def backward_chain(system, q: Poly):
    """B̂_{d1}⋯B̂_{d1..dM} q, returning (polynomial, None) or (None, witness)."""
    for step in range(len(system.D), 0, -1):
        q = system.apply_B(q, step=step)
        if isinstance(q, NonPolynomial):
            return None, {"level": step, **q.describe()}
    return q, None


def route2_coeffs(system, x, n_max: int) -> RecurrenceTable:
    """r_{n,k} = scale·r^{(0)}_{n,k}/∏_j(E_{n+k} − Ẽ_{d_j}).

    ``scale`` is the fixed factor between P_{D,m} and the raw forward chain,
    so route 2 agrees with route 1 exactly when both are defined.
    """
    xp = x.x_poly if hasattr(x, "x_poly") else x
    L = xp.degree
    table = RecurrenceTable(system.spec, system.D, x, L, n_max, route="backward-chain")
    scale = system.p_scale
    for n in range(n_max + 1):
        pn = system.p(n)
        if pn.is_zero():
            table.rows[n] = RowResult(n, "absent")
            continue
        q, witness = backward_chain(system, xp * pn)
        if q is None:
            table.rows[n] = RowResult(n, "inconsistent", witness=witness)
            continue
        if q.degree > n + L:
            table.rows[n] = RowResult(n, "inconsistent",
                                      witness={"level": 0, "degree": q.degree, "expected_max": n + L})
            continue
        coeffs = _expand_classical(system.spec, q, 0, max(q.degree, 0))
        row = RowResult(n, "consistent")
        for m, c in coeffs.items():
            k = m - n
            denom = system.norm_ratio(m)
            if denom == 0:
                row.r[k] = UNDEFINED if c else ZERO
            else:
                row.r[k] = scale * c / denom
        table.rows[n] = row
    return table


def route_ratio(t1: RecurrenceTable, t2: RecurrenceTable) -> dict:
    """Entrywise ratio t2/t1 over entries defined and nonzero in both."""
    ratios = set()
    mismatch = []
    for n, row in t1.rows.items():
        other = t2.rows.get(n)
        if other is None or row.status != "consistent" or other.status != "consistent":
            continue
        for k in set(row.r) | set(other.r):
            a, b = row.r.get(k, ZERO), other.r.get(k, ZERO)
            if a is None or b is None:
                continue
            if not a or not b:
                if a or b:
                    mismatch.append({"n": n, "k": k})
                continue
            ratios.add(b / a)
    constant = len(ratios) == 1 and not mismatch
    return {"constant": constant, "ratio": qstr(next(iter(ratios))) if constant else None,
            "distinct_ratios": len(ratios), "zero_pattern_mismatch": mismatch}


# --------------------------------------------------------------------------
# necessary condition


@dataclass
class ConditionResult:
    passed: bool
    quotient: Poly | None = None
    remainder: Poly | None = None

    def as_dict(self) -> dict:
        return {"passed": self.passed,
                "Y": None if self.quotient is None else str(self.quotient),
                "remainder": None if self.remainder is None else str(self.remainder)}


def necessary_condition(system, x) -> ConditionResult:
    """Ξ_D must divide dX/dη (oQM) or the difference quotient of X̌ (idQM)."""
    xp = x.x_poly if hasattr(x, "x_poly") else x
    spec = system.spec
    if spec.is_oqm:
        d = xp.derivative()
    else:
        ring = idqm_ring(spec.family, spec.t if spec.family == "AW" else None)
        d = ring.first_quotient(xp)
    q, r = d.divmod(system.xi)
    if r.is_zero():
        return ConditionResult(True, quotient=q)
    return ConditionResult(False, remainder=r)


"""Denominator polynomials Ξ_D, multi-indexed polynomials P_{D,n}, and the
forward/backward shift operators F̂, B̂.

oQM (L, J): Ξ_D comes from the Wronskian of the seed wavefunctions.
Each column holds F_j(x)·ξ_j(η) with F_j an explicit prefactor whose
log-derivative is u_j = w·N_j(η)/Δ(η).  Writing d^r/dx^r (F ξ) =
F·w^r S_r/Δ^r gives the twisted recursion

    S_0 = ξ,   S_{r+1} = κΔ S_r' − (rκ/2)Δ' S_r + N S_r,

so the Wronskian is (∏F_j)·w^{Σr}Δ^{−Σr}·det(S) and det(S) is a polynomial
in η.  Left-over powers of the boundary factors (η for L, 1∓η for J) are
removed to reach the degree ℓ_D.

P_{D,n} is the image of P_n under the forward chain F̂_{d1..dM}⋯F̂_{d1}.
The bordered Wronskian gives the same polynomial up to a parameter
dependent constant, but that constant vanishes when a seed coincides with
an eigenstate (E_n = Ẽ_v), while the chain stays valid.  The Wronskian
form is kept as an independent cross-check.

idQM (W, AW): M = 1 only.  Ξ_d is the virtual polynomial and P_{d,n} is
the F̂-image of P_n (the Casoratian of two columns reduces to exactly this
combination).
"""
from __future__ import annotations

import itertools
import threading
from dataclasses import dataclass

from .algebra.linalg import det_fraction_free
from .algebra.poly import Poly
from .algebra.scalars import ONE, Rational, qstr
from .errors import (CalibrationError, ConventionError, DegenerateParameterError,
                     InternalConsistencyError, NotCheckPolynomialError,
                     UnsupportedError)
from .families import (C_F_CANDIDATES, IDQM_SHIFT_CANDIDATES, FamilySpec, IndexSet,
                       classical_poly, eigen_energy, eigen_prefactor_num, ell, idqm_table,
                       oqm_table, seed_conventions, virtual_seed)
from .rings import OqmRing, idqm_ring

ETA = Poly.gen()


# --------------------------------------------------------------------------
# results that are not polynomials


@dataclass(frozen=True)
class NonPolynomial:
    """B̂ output whose final division by Ξ left a remainder."""

    numerator: Poly
    divisor: Poly
    remainder: Poly

    def __bool__(self):
        return True

    def describe(self) -> dict:
        return {"numerator": str(self.numerator), "divisor": str(self.divisor),
                "remainder": str(self.remainder)}


# --------------------------------------------------------------------------
# oQM Wronskians


def _oqm_consts(family: str):
    ring = OqmRing(family)
    strip = [ETA] if family == "L" else [1 - ETA, 1 + ETA]
    return ring, strip


def twisted_rows(family: str, xi: Poly, num: Poly, rows: int) -> list[Poly]:
    """[S_0, ..., S_{rows−1}] of the twisted-derivative recursion."""
    ring, _ = _oqm_consts(family)
    k, d = ring.kappa, ring.delta
    dd = d.derivative()
    out = [xi]
    s = xi
    for r in range(rows - 1):
        s = k * d * s.derivative() - (r * k / 2) * dd * s + num * s
        out.append(s)
    return out


def _wronskian_core(family: str, columns: list[tuple[Poly, Poly]]) -> Poly:
    m = len(columns)
    cols = [twisted_rows(family, xi, num, m) for xi, num in columns]
    matrix = [[cols[j][r] for j in range(m)] for r in range(m)]
    return det_fraction_free(matrix)


def boundary_pattern(family: str, types: list[str], with_eigen: bool) -> tuple:
    """Exponents of the boundary factors carried by det(S) for generic parameters.

    Near a boundary point every column behaves like (local coordinate)^α
    times an even series.  Columns sharing α form a group; a group of k
    columns contributes k(k−1)/2 powers of the squared local coordinate,
    i.e. of η (L) or of 1 ∓ η (J).  Since det(S) is polynomial in the
    parameters, the generic exponents hold identically.
    """
    n_I = sum(1 for t in types if t == "I")
    n_II = len(types) - n_I
    e = 1 if with_eigen else 0

    def pairs(k):
        return k * (k - 1) // 2

    # x → 0: type I and eigen columns share α = g, type II has α = 1 − g
    at_zero = pairs(n_I + e) + pairs(n_II)
    if family == "L":
        return (at_zero,)
    # x → π/2 (η = −1): type II and eigen share α = h, type I has 1 − h
    return (at_zero, pairs(n_I) + pairs(n_II + e))


def _strip(family: str, p: Poly, target: int, pattern: tuple) -> Poly:
    """Divide out the boundary factors given by ``pattern``; check deg = target."""
    _, strip = _oqm_consts(family)
    for f, e in zip(strip, pattern):
        for _ in range(e):
            q, r = p.divmod(f)
            if not r.is_zero():
                raise ConventionError("Wronskian lacks the expected boundary factor")
            p = q
    if p.degree != target:
        raise ConventionError(
            f"Wronskian polynomial has degree {p.degree} after removing boundary factors; "
            f"expected {target}")
    return p


# --------------------------------------------------------------------------
# calibration record


@dataclass(frozen=True)
class Calibration:
    family: str
    conventions: tuple  # ((type, convention id), ...)
    c_F: Rational | None = None  # oQM
    delta: Rational | None = None  # idQM parameter-shift exponent
    c_phi: Rational | None = None
    c_F_idqm: Rational = ONE
    c_B_idqm: Rational = ONE
    checked_n: tuple = ()
    anchors: tuple = ()

    def convention(self, type_: str) -> str:
        return dict(self.conventions)[type_]

    def describe(self) -> dict:
        out = {"family": self.family, "conventions": dict(self.conventions),
               "checked_n": list(self.checked_n), "anchors": list(self.anchors)}
        if self.c_F is not None:
            out["c_F"] = qstr(self.c_F)
        if self.delta is not None:
            out["shift_delta"] = qstr(self.delta)
            out["c_phi"] = qstr(self.c_phi)
            out["c_F_hat"] = qstr(self.c_F_idqm)
            out["c_B_hat"] = qstr(self.c_B_idqm)
        return out


# --------------------------------------------------------------------------
# the system


class MultiIndexedSystem:
    """Ξ_D, P_{D,n} (memoized) and chain operators for one (spec, D)."""

    def __init__(self, spec: FamilySpec, D: IndexSet, calibration: Calibration | None = None,
                 stretch: bool = False, checked: bool = False):
        if not isinstance(D, IndexSet):
            D = IndexSet(tuple(D))
        if not spec.is_oqm and len(D) > 1 and not stretch:
            raise UnsupportedError("multi-step Wilson/Askey-Wilson systems are not supported (M ≥ 2)")
        if not spec.is_oqm and len(D) > 1:
            raise UnsupportedError("multi-step Casoratian construction is not implemented")
        self.spec = spec
        self.D = D
        self.checked = checked
        self.ell = ell(D)
        self._lock = threading.Lock()
        self._p_cache: dict[int, Poly] = {}
        self._prefix_cache: dict[int, "MultiIndexedSystem"] = {}
        self.ring = None if spec.is_oqm else idqm_ring(spec.family, spec.t if spec.family == "AW" else None)
        self.calibration = calibration if calibration is not None else calibrate(spec, D)
        self.seeds = [virtual_seed(spec, v, t, self.calibration.convention(t)) for v, t in D]
        self._build_xi()

    # -- construction -------------------------------------------------
    def energy_coincidences(self, horizon: int) -> list[tuple[int, int]]:
        """Pairs (n, j) with E_n = Ẽ_{d_j}, n < horizon.

        Such parameters are allowed; only operations that divide by
        E_n − Ẽ_{d_j} reject them (lazily, with this diagnostic).
        """
        out = []
        for n in range(horizon):
            e = eigen_energy(self.spec, n)
            for j, s in enumerate(self.seeds):
                if s.energy == e:
                    out.append((n, j))
        return out

    def is_coincident(self, n: int) -> bool:
        """True when E_n equals some seed energy Ẽ_{d_j}."""
        e = eigen_energy(self.spec, n)
        return any(s.energy == e for s in self.seeds)

    def _build_xi(self):
        spec, D = self.spec, self.D
        if not D:
            self._raw_scale = ONE
            self.p_scale = ONE
            self.xi = Poly.const(1)
            return
        if spec.is_oqm:
            cols = [(s.xi, s.prefactor_num) for s in self.seeds]
            raw = _wronskian_core(spec.family, cols)
            if raw.is_zero():
                raise DegenerateParameterError(
                    f"seed Wronskian vanishes identically for {D} at {spec.describe()}")
            types = [t for _, t in D]
            try:
                raw = _strip(spec.family, raw, self.ell, boundary_pattern(spec.family, types, False))
            except ConventionError as exc:
                raise DegenerateParameterError(f"Ξ_D degenerates at {spec.describe()}: {exc}") from exc
        else:
            raw = self.seeds[0].xi
        if raw.degree != self.ell:
            raise ConventionError(f"deg Ξ = {raw.degree}, expected ℓ_D = {self.ell}")
        scale = raw.content() * (1 if raw.lc() > 0 else -1) * D.sort_sign()
        self._raw_scale = scale
        self.xi = raw / scale
        # P_{D,n} = (forward chain on P_n) / p_scale.  The idQM chain is built
        # on the already normalized Ξ, so it needs no further scaling.
        self.p_scale = scale if spec.is_oqm else ONE

    def p(self, n: int) -> Poly:
        """P_{D,n}; the zero polynomial for n < 0.

        Also zero when E_n coincides with a seed energy and the forward chain
        annihilates P_n (see :meth:`is_coincident`).
        """
        if n < 0:
            return Poly.zero()
        with self._lock:
            hit = self._p_cache.get(n)
        if hit is not None:
            return hit
        out = self._build_p(n)
        if out.is_zero() and self.is_coincident(n):
            # F̂ annihilates P_n when a seed shares its energy; the member is
            # absent at these parameters and consumers treat it as such.
            pass
        elif out.degree != self.ell + n:
            raise DegenerateParameterError(f"deg P_{{D,{n}}} = {out.degree}, expected {self.ell + n}")
        with self._lock:
            self._p_cache[n] = out
        return out

    def _build_p(self, n: int) -> Poly:
        spec = self.spec
        pn = classical_poly(spec, n)
        if not self.D:
            return pn
        return self.chain_F(n) / self.p_scale

    def wronskian_p(self, n: int) -> Poly:
        """P_{D,n} from the bordered Wronskian (oQM), in its own normalization.

        Proportional to :meth:`p` with an n-independent constant; the zero
        polynomial when the constant vanishes at these parameters.
        """
        if not self.spec.is_oqm:
            raise UnsupportedError("bordered Wronskian is an oQM construction")
        cols = [(s.xi, s.prefactor_num) for s in self.seeds]
        cols.append((classical_poly(self.spec, n), eigen_prefactor_num(self.spec)))
        raw = _wronskian_core(self.spec.family, cols)
        if raw.is_zero():
            return raw
        types = [t for _, t in self.D]
        return _strip(self.spec.family, raw, self.ell + n,
                      boundary_pattern(self.spec.family, types, True))

    def prefix_system(self, s: int) -> "MultiIndexedSystem":
        """System for the first s seeds (shares this calibration)."""
        if s == len(self.D):
            return self
        with self._lock:
            hit = self._prefix_cache.get(s)
        if hit is None:
            hit = MultiIndexedSystem(self.spec, self.D.prefix(s), self.calibration, checked=self.checked)
            with self._lock:
                self._prefix_cache[s] = hit
        return hit

    # -- energies -----------------------------------------------------
    def energy(self, n: int) -> Rational:
        return eigen_energy(self.spec, n)

    def virtual_energy(self, j: int) -> Rational:
        return self.seeds[j].energy

    def norm_ratio(self, n: int) -> Rational:
        """h_{D,n}/h_n = ∏_j (E_n − Ẽ_{d_j})."""
        out = ONE
        for s in self.seeds:
            out *= self.energy(n) - s.energy
        return out

    # -- shift operators ----------------------------------------------
    def table(self, step: int):
        prefix = self.D.prefix(step - 1)
        d_s = self.D.entries[step - 1]
        if self.spec.is_oqm:
            return oqm_table(self.spec, prefix, d_s)
        return idqm_table(self.spec, self.ring, prefix, d_s, self.calibration.delta)

    def apply_F(self, p: Poly, xi_prev: Poly | None = None, xi_full: Poly | None = None,
                step: int | None = None):
        """F̂ of chain step ``step`` (default: the last) applied to p."""
        step = len(self.D) if step is None else step
        if xi_prev is None:
            xi_prev = self.prefix_system(step - 1).xi
        if xi_full is None:
            xi_full = self.prefix_system(step).xi
        tab = self.table(step)
        if self.spec.is_oqm:
            c = self.calibration.c_F
            return forward_oqm(tab, c, xi_prev, xi_full, p)
        return forward_idqm(self.ring, tab, self.calibration, xi_prev, xi_full, p)

    def apply_B(self, p: Poly, step: int | None = None):
        """B̂ of chain step ``step`` applied to p; NonPolynomial when the division fails."""
        step = len(self.D) if step is None else step
        xi_prev = self.prefix_system(step - 1).xi
        xi_full = self.prefix_system(step).xi
        tab = self.table(step)
        if self.spec.is_oqm:
            return backward_oqm(tab, self.calibration.c_F, xi_prev, xi_full, p)
        return backward_idqm(self.ring, tab, self.calibration, xi_prev, xi_full, p)

    def chain_F(self, n: int) -> Poly:
        """Rodrigues chain F̂_{d1..dM} ⋯ F̂_{d1} P_n with the normalized intermediate Ξ's."""
        out = classical_poly(self.spec, n)
        for s in range(1, len(self.D) + 1):
            prev = out
            out = self.apply_F(out, step=s)
            if isinstance(out, NonPolynomial):
                raise ConventionError(f"forward chain left a remainder at step {s}")
            if self.checked:
                back = self.apply_B(out, step=s)
                want = (self.energy(n) - self.seeds[s - 1].energy) * prev
                if isinstance(back, NonPolynomial) or back != want:
                    raise InternalConsistencyError(f"B̂F̂ ≠ (E_n − Ẽ)·id at step {s}, n = {n}")
        return out


# --------------------------------------------------------------------------
# operator formulas


def forward_oqm(tab, c, xi_prev: Poly, xi_full: Poly, p: Poly) -> Poly:
    """(1/Ξ_prev)(e^F(Ξ P' − Ξ' P) + c^{-1} ẽ^F Ξ P)."""
    if p.is_zero():
        return p
    num = tab.e_F * (xi_full * p.derivative() - xi_full.derivative() * p) + (tab.et_F / c) * xi_full * p
    q, r = num.divmod(xi_prev)
    if not r.is_zero():
        raise ConventionError("1/Ξ_prev factor of F̂ did not cancel")
    return q


def backward_oqm(tab, c, xi_prev: Poly, xi_full: Poly, p: Poly):
    """(c²/Ξ)(e^B(−Ξ_prev P' + Ξ_prev' P) + c^{-1} ẽ^B Ξ_prev P)."""
    if p.is_zero():
        return p
    num = c * c * (tab.e_B * (xi_prev.derivative() * p - xi_prev * p.derivative())) \
        + c * tab.et_B * xi_prev * p
    q, r = num.divmod(xi_full)
    if not r.is_zero():
        return NonPolynomial(num, xi_full, r)
    return q


def forward_idqm(ring, tab, cal: Calibration, xi_prev: Poly, xi_full: Poly, p: Poly) -> Poly:
    """(c^F/c_φ)(e^F Ξ(x+iγ/2) P(x−iγ/2) − e^F* Ξ(x−iγ/2) P(x+iγ/2)) / ((η⁻ − η⁺) Ξ_prev)."""
    if p.is_zero():
        return p
    num = (tab.e_F * ring.shift_eval(xi_full, 1) * ring.shift_eval(p, -1)
           - ring.star(tab.e_F) * ring.shift_eval(xi_full, -1) * ring.shift_eval(p, 1))
    try:
        sym = ring.quotient_to_poly(num)
    except (InternalConsistencyError, NotCheckPolynomialError) as exc:
        raise ConventionError(f"forward shift numerator is not a check polynomial: {exc}") from exc
    sym = sym * (cal.c_F_idqm / cal.c_phi)
    q, r = sym.divmod(xi_prev)
    if not r.is_zero():
        raise ConventionError("1/Ξ_prev factor of F̂ did not cancel")
    return q


def backward_idqm(ring, tab, cal: Calibration, xi_prev: Poly, xi_full: Poly, p: Poly):
    """(c^B/c_φ)(e^B Ξ_prev(x+iγ/2) P(x−iγ/2) − e^B* Ξ_prev(x−iγ/2) P(x+iγ/2)) / ((η⁻ − η⁺) Ξ)."""
    if p.is_zero():
        return p
    num = (tab.e_B * ring.shift_eval(xi_prev, 1) * ring.shift_eval(p, -1)
           - ring.star(tab.e_B) * ring.shift_eval(xi_prev, -1) * ring.shift_eval(p, 1))
    try:
        sym = ring.quotient_to_poly(num)
    except (InternalConsistencyError, NotCheckPolynomialError) as exc:
        raise ConventionError(f"backward shift numerator is not a check polynomial: {exc}") from exc
    sym = sym * (cal.c_B_idqm / cal.c_phi)
    q, r = sym.divmod(xi_full)
    if not r.is_zero():
        return NonPolynomial(sym, xi_full, r)
    return q


# --------------------------------------------------------------------------
# calibration


CALIBRATION_NS = (0, 1, 2, 3)


def calibrate(spec: FamilySpec, D: IndexSet, ns=CALIBRATION_NS) -> Calibration:
    """Select seed conventions and fix the chain constants by the round trip
    B̂F̂ = (E_n − Ẽ_{d_s})·id on P_{prefix,n}, n in ``ns``.

    The first three n fix the constants; the remaining ones are checked.
    """
    if not isinstance(D, IndexSet):
        D = IndexSet(tuple(D))
    types = sorted({t for _, t in D}) or ["I"]
    options = [[(t, c.id) for c in seed_conventions(spec.family, t)] for t in types]
    failures = []
    for combo in itertools.product(*options):
        try:
            if spec.is_oqm:
                cal = _calibrate_oqm(spec, D, combo, ns)
            else:
                cal = _calibrate_idqm(spec, D, combo, ns)
        except (ConventionError, CalibrationError) as exc:
            failures.append(f"{dict(combo)}: {exc}")
            continue
        if cal is not None:
            return cal
        failures.append(f"{dict(combo)}: round trip has no consistent constant")
    raise CalibrationError(
        f"no convention reproduces B̂F̂ = (E_n − Ẽ)·id for {spec.family} {D}: " + "; ".join(failures))


def _calibrate_oqm(spec, D, combo, ns) -> Calibration | None:
    combo = tuple(combo)
    probe = D if D else IndexSet(((1, "I"),))
    for c in C_F_CANDIDATES[spec.family]:
        cal = Calibration(spec.family, combo, c_F=c)
        full = MultiIndexedSystem(spec, probe, cal)
        anchors = []
        ok = True
        for step in range(1, len(probe) + 1):
            prefix = full.prefix_system(step - 1)
            et = full.seeds[step - 1].energy
            for n in ns:
                p = prefix.p(n)
                f = full.apply_F(p, step=step)
                b = full.apply_B(f, step=step)
                if isinstance(b, NonPolynomial) or b != (eigen_energy(spec, n) - et) * p:
                    ok = False
                    break
            if not ok:
                break
            d = probe.entries[step - 1]
            anchors.append(f"step {step} ({d[0]}{d[1]}): B̂F̂ = (E_n − Ẽ) on n = {list(ns)}")
        if ok:
            return Calibration(spec.family, combo, c_F=c, checked_n=tuple(ns),
                               anchors=tuple(anchors))
    return None


def _calibrate_idqm(spec, D, combo, ns) -> Calibration | None:
    if len(D) > 1:
        raise UnsupportedError("multi-step Wilson/Askey-Wilson calibration is not supported")
    probe = D if D else IndexSet(((1, "I"),))
    ring = idqm_ring(spec.family, spec.t if spec.family == "AW" else None)
    v, typ = probe.entries[0]
    seed = virtual_seed(spec, v, typ, dict(combo)[typ])
    for delta in IDQM_SHIFT_CANDIDATES:
        cal = Calibration(spec.family, tuple(combo), delta=delta, c_phi=ring.c_phi)
        tab = idqm_table(spec, ring, IndexSet(()), (v, typ), delta)
        ok = True
        for n in ns:
            pn = classical_poly(spec, n)
            try:
                f = forward_idqm(ring, tab, cal, Poly.const(1), seed.xi, pn)
            except ConventionError:
                ok = False
                break
            b = backward_idqm(ring, tab, cal, Poly.const(1), seed.xi, f)
            if isinstance(b, NonPolynomial) or b != (eigen_energy(spec, n) - seed.energy) * pn:
                ok = False
                break
        if ok:
            return Calibration(spec.family, tuple(combo), delta=delta, c_phi=ring.c_phi,
                               checked_n=tuple(ns),
                               anchors=(f"step 1 ({v}{typ}): B̂F̂ = (E_n − Ẽ) on n = {list(ns)} "
                                        f"with c^F̂·c^B̂ = 1",))
    return None


# --------------------------------------------------------------------------
# module-level conveniences


_SYSTEMS: dict = {}
_SYSTEMS_LOCK = threading.Lock()


def system(spec: FamilySpec, D, checked: bool = False) -> MultiIndexedSystem:
    """Memoized MultiIndexedSystem."""
    if not isinstance(D, IndexSet):
        D = IndexSet.parse(D) if isinstance(D, str) else IndexSet(tuple(D))
    key = (spec, D, checked)
    with _SYSTEMS_LOCK:
        hit = _SYSTEMS.get(key)
    if hit is None:
        hit = MultiIndexedSystem(spec, D, checked=checked)
        with _SYSTEMS_LOCK:
            _SYSTEMS[key] = hit
    return hit


def build_xi(spec: FamilySpec, D) -> Poly:
    return system(spec, D).xi


def build_p(spec: FamilySpec, D, n: int) -> Poly:
    return system(spec, D).p(n)


def apply_F(spec: FamilySpec, D, p: Poly):
    return system(spec, D).apply_F(p)


def apply_B(spec: FamilySpec, D, p: Poly):
    return system(spec, D).apply_B(p)

"""Candidate multipliers X(η) for constant-coefficient recurrences.

oQM: X is the ordinary antiderivative of Ξ_D·Y.  idQM: X = I[Ξ_D·Y], the
discrete antiderivative whose difference quotient
(X̌(x−iγ/2) − X̌(x+iγ/2))/(η(x−iγ/2) − η(x+iγ/2)) returns Ξ_D·Y.
Every candidate has X(0) = 0.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from math import comb, factorial

from .algebra.poly import Poly
from .algebra.scalars import ONE, ZERO, Q, Rational
from .errors import InternalConsistencyError, UsageError
from .rings import idqm_ring

KINDS = ("continuous-antiderivative", "discrete-antiderivative", "xi-squared-times-p", "custom")


@dataclass(frozen=True)
class XCandidate:
    x_poly: Poly
    y_poly: Poly | None
    L: int
    kind: str

    def __post_init__(self):
        if self.kind not in KINDS:
            raise UsageError(f"unknown X kind {self.kind!r}")
        if self.x_poly.is_zero():
            raise UsageError("X = 0 gives no recurrence")
        if self.x_poly.coeff(0) != 0:
            raise UsageError("X must have zero constant term")
        if self.L != self.x_poly.degree:
            raise InternalConsistencyError(f"L = {self.L} but deg X = {self.x_poly.degree}")

    def describe(self) -> dict:
        return {"kind": self.kind, "L": self.L, "X": str(self.x_poly),
                "Y": None if self.y_poly is None else str(self.y_poly)}


def custom(x: Poly) -> XCandidate:
    """Wrap an arbitrary X (used for negative controls)."""
    return XCandidate(x, None, x.degree, "custom")


# --------------------------------------------------------------------------
# antiderivatives


def antiderivative_continuous(p: Poly) -> Poly:
    return p.antiderivative()


def _bracket(m: int, t: Rational) -> Rational:
    """[[m]]' = (t^{−m} − t^m)/(t^{−1} − t)."""
    return (t ** -m - t ** m) / (1 / t - t)


@lru_cache(maxsize=None)
def gprime(family: str, n: int, k: int, t=None) -> Rational:
    """g'_n^{(k)}: coefficient of η^{n−k} in (η1^{n+1} − η2^{n+1})/(η1 − η2)."""
    if not 0 <= k <= n:
        raise UsageError(f"g' index out of range: n={n}, k={k}")
    if family == "W":
        return Q((-1) ** k * comb(2 * n + 2, 2 * k + 1), 2 ** (2 * k + 1))
    if family != "AW":
        raise UsageError(f"g' is defined for W and AW, not {family!r}")
    if t is None:
        raise UsageError("Askey-Wilson g' needs t")
    if k % 2:
        return ZERO
    t = Q(t)
    h = k // 2
    acc = ZERO
    for r in range(h + 1):
        acc += (Q(comb(n - k + r, r)) * (-1) ** r * _bracket(n - k + 1 + 2 * r, t)
                / (factorial(h - r) * factorial(n - h + 1 + r)))
    return Q(factorial(n + 1)) / 2 ** k * acc


def gprime_row(family: str, n: int, t=None) -> Poly:
    """Σ_k g'_n^{(k)} η^{n−k}."""
    return Poly([gprime(family, n, n - j, t) for j in range(n + 1)])


def discrete_antiderivative(p: Poly, family: str, t=None, checked: bool = True) -> Poly:
    """I[p] by the descending b-recursion, b_0 = 0."""
    if p.is_zero():
        return p
    n = p.degree
    b = [ZERO] * (n + 2)
    for k in range(n, -1, -1):
        acc = p.coeff(k)
        for j in range(k + 1, n + 1):
            acc -= gprime(family, j, j - k, t) * b[j + 1]
        b[k + 1] = acc / gprime(family, k, 0, t)
    out = Poly(b)
    if checked:
        ring = idqm_ring(family, t)
        if ring.first_quotient(out) != p:
            raise InternalConsistencyError("I[p] fails its defining difference-quotient identity")
    return out


# --------------------------------------------------------------------------
# candidates for a system


def _ring_t(spec):
    return spec.t if spec.family == "AW" else None


def _integrate(system, integrand: Poly) -> Poly:
    spec = system.spec
    if spec.is_oqm:
        return antiderivative_continuous(integrand)
    return discrete_antiderivative(integrand, spec.family, _ring_t(spec), checked=True)


def make_x(system, y: Poly) -> XCandidate:
    """X = ∫_0^η Ξ_D Y (oQM) or I[Ξ_D Y] (idQM); deg X = ℓ_D + deg Y + 1."""
    if not isinstance(y, Poly):
        y = Poly.const(y)
    if y.is_zero():
        raise UsageError("Y = 0 gives X = 0")
    x = _integrate(system, system.xi * y)
    expected = system.ell + y.degree + 1
    if x.degree != expected:
        raise InternalConsistencyError(f"deg X = {x.degree}, expected ℓ_D + deg Y + 1 = {expected}")
    kind = "continuous-antiderivative" if system.spec.is_oqm else "discrete-antiderivative"
    return XCandidate(x, y, x.degree, kind)


def x_min(system) -> XCandidate:
    return make_x(system, Poly.const(ONE))


def xi_squared_times(system, p: Poly) -> XCandidate:
    """The candidate equal to Ξ_D²p (oQM) or Ξ̌(x−iγ/2)Ξ̌(x+iγ/2)p̌ (idQM), minus its value at 0.

    oQM uses Y = 2Ξ'p + Ξp'.  idQM uses
    Y̌ = (Ξ̌(x−iγ)p̌(x−iγ/2) − Ξ̌(x+iγ)p̌(x+iγ/2))/(η(x−iγ/2) − η(x+iγ/2)),
    and the result is checked against the ring product.
    """
    if not isinstance(p, Poly):
        p = Poly.const(p)
    if p.is_zero():
        raise UsageError("p = 0 gives X = 0")
    xi = system.xi
    spec = system.spec
    if spec.is_oqm:
        y = 2 * xi.derivative() * p + xi * p.derivative()
        target = xi * xi * p
    else:
        ring = idqm_ring(spec.family, _ring_t(spec))
        y = ring.double_quotient(xi, p)
        target = ring.sym_product(xi) * p
    x = _integrate(system, xi * y)
    if x - target != -target.coeff(0):
        raise InternalConsistencyError("Ξ²p candidate differs from its generating integral")
    return XCandidate(x, y, x.degree, "xi-squared-times-p")

"""Family data: classical polynomials, energies, virtual seeds, operator tables.

Parameters are exact rationals. Laguerre uses g, Jacobi (g, h), Wilson
a1..a4 and Askey-Wilson a1..a4 together with t = q^{1/2}.
"""
from __future__ import annotations

import re
from dataclasses import dataclass
from functools import lru_cache
from math import factorial
from typing import Callable

from .algebra.poly import Poly
from .algebra.scalars import ONE, Q, Rational, qstr
from .errors import DegenerateParameterError, DuplicateSeedError, UsageError

FAMILIES = ("L", "J", "W", "AW")
OQM = ("L", "J")
IDQM = ("W", "AW")

ETA = Poly.gen()


# --------------------------------------------------------------------------
# parameter sets and index sets


@dataclass(frozen=True)
class FamilySpec:
    family: str
    params: tuple  # L: (g,), J: (g, h), W: (a1..a4), AW: (a1..a4, t)

    def __post_init__(self):
        if self.family not in FAMILIES:
            raise UsageError(f"unknown family {self.family!r}")
        want = {"L": 1, "J": 2, "W": 4, "AW": 5}[self.family]
        if len(self.params) != want:
            raise UsageError(f"{self.family} takes {want} parameters, got {len(self.params)}")
        object.__setattr__(self, "params", tuple(Q(p) for p in self.params))
        if self.family == "AW" and self.params[4] in (0, 1, -1):
            raise UsageError("t must avoid 0, 1, -1")

    @classmethod
    def laguerre(cls, g) -> "FamilySpec":
        return cls("L", (g,))

    @classmethod
    def jacobi(cls, g, h) -> "FamilySpec":
        return cls("J", (g, h))

    @classmethod
    def wilson(cls, a1, a2, a3, a4) -> "FamilySpec":
        return cls("W", (a1, a2, a3, a4))

    @classmethod
    def askey_wilson(cls, a1, a2, a3, a4, t) -> "FamilySpec":
        return cls("AW", (a1, a2, a3, a4, t))

    @property
    def is_oqm(self) -> bool:
        return self.family in OQM

    @property
    def g(self) -> Rational:
        return self.params[0]

    @property
    def h(self) -> Rational:
        return self.params[1]

    @property
    def a(self) -> tuple:
        return self.params[:4]

    @property
    def t(self) -> Rational:
        return self.params[4]

    @property
    def q(self) -> Rational:
        return self.params[4] ** 2

    def with_params(self, params) -> "FamilySpec":
        return FamilySpec(self.family, tuple(params))

    def describe(self) -> dict:
        names = {"L": ("g",), "J": ("g", "h"), "W": ("a1", "a2", "a3", "a4"),
                 "AW": ("a1", "a2", "a3", "a4", "t")}[self.family]
        return {"family": self.family, "params": {k: qstr(v) for k, v in zip(names, self.params)}}


_TOKEN = re.compile(r"^\s*(\d+)\s*(II|I)\s*$")


@dataclass(frozen=True)
class IndexSet:
    entries: tuple = ()  # ((v, "I"|"II"), ...)

    def __post_init__(self):
        seen = set()
        clean = []
        for v, t in self.entries:
            v = int(v)
            if t not in ("I", "II"):
                raise UsageError(f"virtual-state type must be I or II, got {t!r}")
            if v < 1:
                raise UsageError(f"virtual-state degree must be >= 1, got {v}")
            if (v, t) in seen:
                raise DuplicateSeedError(f"seed {v}{t} repeated; the Wronskian vanishes identically")
            seen.add((v, t))
            clean.append((v, t))
        object.__setattr__(self, "entries", tuple(clean))

    @classmethod
    def parse(cls, text: str) -> "IndexSet":
        text = text.strip()
        if not text or text in ("-", "{}", "empty"):
            return cls(())
        out = []
        for tok in text.split(","):
            m = _TOKEN.match(tok)
            if not m:
                raise UsageError(f"bad index token {tok!r}; expected e.g. 1I or 2II")
            out.append((int(m.group(1)), m.group(2)))
        return cls(tuple(out))

    def __len__(self):
        return len(self.entries)

    def __iter__(self):
        return iter(self.entries)

    @property
    def s_I(self) -> int:
        return sum(1 for _, t in self.entries if t == "I")

    @property
    def s_II(self) -> int:
        return sum(1 for _, t in self.entries if t == "II")

    def prefix(self, s: int) -> "IndexSet":
        return IndexSet(self.entries[:s])

    def sorted(self) -> "IndexSet":
        return IndexSet(tuple(sorted(self.entries, key=lambda e: (e[1] != "I", e[0]))))

    def sort_sign(self) -> int:
        """Signature of the permutation taking ``self`` to ``self.sorted()``."""
        target = self.sorted().entries
        perm = [target.index(e) for e in self.entries]
        sign = 1
        for i in range(len(perm)):
            for j in range(i + 1, len(perm)):
                if perm[i] > perm[j]:
                    sign = -sign
        return sign

    def token(self) -> str:
        return ",".join(f"{v}{t}" for v, t in self.entries)

    def __str__(self):
        return "{" + self.token() + "}"


def ell(D: IndexSet) -> int:
    s = len(D)
    return sum(v for v, _ in D) - s * (s - 1) // 2 + 2 * D.s_I * D.s_II


# --------------------------------------------------------------------------
# helpers


def poch(a, n: int):
    """Rising factorial (a)_n for a scalar or Poly a."""
    out = ONE
    for j in range(n):
        out = out * (a + j)
    return out


def qpoch(a, q, n: int):
    """(a; q)_n."""
    out = ONE
    for j in range(n):
        out = out * (1 - a * q ** j)
    return out


def _gbinom(top, k: int) -> Rational:
    """Generalized binomial C(top, k) for rational top."""
    out = ONE
    for j in range(k):
        out = out * (top - j)
    return out / factorial(k)


# --------------------------------------------------------------------------
# classical polynomials


def laguerre(n: int, alpha) -> Poly:
    """L_n^{(alpha)}(η) = Σ_k (−1)^k C(n+alpha, n−k) η^k / k!."""
    alpha = Q(alpha)
    return Poly([(-1) ** k * _gbinom(n + alpha, n - k) / factorial(k) for k in range(n + 1)])


def jacobi(n: int, alpha, beta) -> Poly:
    """P_n^{(alpha,beta)}(η) = Σ_k C(n+α, n−k) C(n+β, k) ((η−1)/2)^k ((η+1)/2)^{n−k}."""
    alpha, beta = Q(alpha), Q(beta)
    em = (ETA - 1) / 2
    ep = (ETA + 1) / 2
    out = Poly.zero()
    for k in range(n + 1):
        c = _gbinom(n + alpha, n - k) * _gbinom(n + beta, k)
        if c:
            out = out + c * em ** k * ep ** (n - k)
    return out


def wilson(n: int, a) -> Poly:
    """W_n(η; a1..a4) in the standard normalization, η = x².

    (a1+ix)_k(a1−ix)_k = ∏_{j<k}((a1+j)² + η); the ₄F₃ denominators are
    cleared against the prefactor so no parameter division occurs.
    """
    a1, a2, a3, a4 = (Q(v) for v in a)
    b1 = a1 + a2 + a3 + a4
    out = Poly.zero()
    base = Poly.const(ONE)
    for k in range(n + 1):
        c = poch(Q(-n), k) * poch(n + b1 - 1, k) / factorial(k)
        c = c * poch(a1 + a2 + k, n - k) * poch(a1 + a3 + k, n - k) * poch(a1 + a4 + k, n - k)
        if c:
            out = out + c * base
        base = base * ((a1 + k) ** 2 + ETA)
    return out


def askey_wilson(n: int, a, t) -> Poly:
    """p_n(η; a1..a4 | q), q = t², in the standard normalization, η = cos x."""
    a1, a2, a3, a4 = (Q(v) for v in a)
    q = Q(t) ** 2
    if a1 == 0 and n > 0:
        raise DegenerateParameterError("a1 = 0 makes the a1^{-n} normalization singular")
    b4 = a1 * a2 * a3 * a4
    out = Poly.zero()
    base = Poly.const(ONE)
    for k in range(n + 1):
        qk = q ** k
        den = qpoch(q, q, k)
        c = qpoch(q ** (-n), q, k) * qpoch(b4 * q ** (n - 1), q, k) * qk / den
        c = c * qpoch(a1 * a2 * qk, q, n - k) * qpoch(a1 * a3 * qk, q, n - k) * qpoch(a1 * a4 * qk, q, n - k)
        if c:
            out = out + c * base
        base = base * (1 - 2 * a1 * qk * ETA + a1 * a1 * qk * qk)
    if n:
        out = out / a1 ** n
    return out


def classical_poly(spec: FamilySpec, n: int) -> Poly:
    if n < 0:
        return Poly.zero()
    p = _classical_cached(spec, n)
    if p.degree != n:
        raise DegenerateParameterError(
            f"{spec.family} P_{n} has degree {p.degree} at {spec.describe()['params']}")
    return p


@lru_cache(maxsize=4096)
def _classical_cached(spec: FamilySpec, n: int) -> Poly:
    f = spec.family
    if f == "L":
        return laguerre(n, spec.g - Q(1, 2))
    if f == "J":
        return jacobi(n, spec.g - Q(1, 2), spec.h - Q(1, 2))
    if f == "W":
        return wilson(n, spec.a)
    return askey_wilson(n, spec.a, spec.t)


def eigen_energy(spec: FamilySpec, n: int) -> Rational:
    f = spec.family
    if f == "L":
        return Q(4 * n)
    if f == "J":
        return 4 * n * (n + spec.g + spec.h)
    if f == "W":
        return n * (n + sum(spec.a) - 1)
    a1, a2, a3, a4 = spec.a
    q = spec.q
    return (q ** (-n) - 1) * (1 - a1 * a2 * a3 * a4 * q ** (n - 1))


# --------------------------------------------------------------------------
# virtual seeds


@dataclass(frozen=True)
class SeedDescriptor:
    v: int
    type: str
    xi: Poly
    energy: Rational
    # oQM: the log-derivative of the prefactor is w·prefactor_num/Δ in the
    # family ring. idQM: None (the M=1 path does not consume it).
    prefactor_num: Poly | None
    convention: str


@dataclass(frozen=True)
class SeedConvention:
    id: str
    family: str
    type: str
    xi: Callable  # (spec, v) -> Poly
    energy: Callable  # (spec, v) -> Rational
    prefactor_num: Callable | None = None  # (spec) -> Poly
    note: str = ""


def _L_xi_I(spec, v):
    return laguerre(v, spec.g - Q(1, 2)).compose(-ETA)


def _L_xi_II(spec, v):
    return laguerre(v, Q(1, 2) - spec.g)


def _J_xi_I(spec, v):
    return jacobi(v, spec.g - Q(1, 2), Q(1, 2) - spec.h)


def _J_xi_II(spec, v):
    return jacobi(v, Q(1, 2) - spec.g, spec.h - Q(1, 2))


def _J_prefactor(A, B):
    # F = (sin x)^A (cos x)^B with η = cos 2x: log-derivative = s·(A(1+η) − B(1−η))/(1 − η²)
    return A * (1 + ETA) - B * (1 - ETA)


def _w_twist(spec, which):
    a1, a2, a3, a4 = spec.a
    if which == "I":
        return (1 - a1, 1 - a2, a3, a4)
    return (a1, a2, 1 - a3, 1 - a4)


def _aw_twist(spec, which):
    a1, a2, a3, a4 = spec.a
    q = spec.q
    if which == "I":
        return (q / a1, q / a2, a3, a4)
    return (a1, a2, q / a3, q / a4)


def _aw_twist_inv(spec, which):
    a1, a2, a3, a4 = spec.a
    if which == "I":
        return (1 / a1, 1 / a2, a3, a4)
    return (a1, a2, 1 / a3, 1 / a4)


def _w_energy(spec, v, which):
    a1, a2, a3, a4 = spec.a
    s12, s34 = a1 + a2, a3 + a4
    if which == "I":
        return -(s12 - v - 1) * (s34 + v)
    return -(s34 - v - 1) * (s12 + v)


def _aw_energy_closed(q, p_tw, p_keep, v):
    # Ẽ_v = (p_tw q^{−v−1} − 1)(1 − p_keep q^v): the q-analogue of
    # −(σ_tw − v − 1)(σ_keep + v), with p_tw the product of the twisted pair.
    return (p_tw * q ** (-v - 1) - 1) * (1 - p_keep * q ** v)


SEED_CONVENTIONS: dict[tuple[str, str], list[SeedConvention]] = {
    ("L", "I"): [
        SeedConvention("L.I.reflect", "L", "I", _L_xi_I,
                       lambda s, v: -4 * (s.g + v + Q(1, 2)),
                       lambda s: ETA + s.g,
                       "ξ = L_v^{(g−½)}(−η), prefactor e^{x²/2}x^g"),
        SeedConvention("L.I.plain", "L", "I",
                       lambda s, v: laguerre(v, s.g - Q(1, 2)),
                       lambda s, v: -4 * (s.g + v + Q(1, 2)),
                       lambda s: ETA + s.g,
                       "negative control: eigen-type polynomial with a virtual energy"),
    ],
    ("L", "II"): [
        SeedConvention("L.II.twist", "L", "II", _L_xi_II,
                       lambda s, v: -4 * (s.g - v - Q(1, 2)),
                       lambda s: 1 - s.g - ETA,
                       "ξ = L_v^{(½−g)}(η), prefactor e^{−x²/2}x^{1−g}"),
    ],
    ("J", "I"): [
        SeedConvention("J.I.twist_h", "J", "I", _J_xi_I,
                       lambda s, v: -4 * (s.g + v + Q(1, 2)) * (s.h - v - Q(1, 2)),
                       lambda s: _J_prefactor(s.g, 1 - s.h),
                       "ξ = P_v^{(g−½, ½−h)}(η), prefactor (sin x)^g (cos x)^{1−h}"),
    ],
    ("J", "II"): [
        SeedConvention("J.II.twist_g", "J", "II", _J_xi_II,
                       lambda s, v: -4 * (s.g - v - Q(1, 2)) * (s.h + v + Q(1, 2)),
                       lambda s: _J_prefactor(1 - s.g, s.h),
                       "ξ = P_v^{(½−g, h−½)}(η), prefactor (sin x)^{1−g} (cos x)^h"),
    ],
    ("W", "I"): [
        SeedConvention("W.I.twist12", "W", "I",
                       lambda s, v: wilson(v, _w_twist(s, "I")),
                       lambda s, v: _w_energy(s, v, "I"),
                       note="ξ = W_v(η; 1−a1, 1−a2, a3, a4)"),
    ],
    ("W", "II"): [
        SeedConvention("W.II.twist34", "W", "II",
                       lambda s, v: wilson(v, _w_twist(s, "II")),
                       lambda s, v: _w_energy(s, v, "II"),
                       note="ξ = W_v(η; a1, a2, 1−a3, 1−a4)"),
    ],
    ("AW", "I"): [
        SeedConvention("AW.I.twist12", "AW", "I",
                       lambda s, v: askey_wilson(v, _aw_twist(s, "I"), s.t),
                       lambda s, v: _aw_energy_closed(s.q, s.a[0] * s.a[1], s.a[2] * s.a[3], v),
                       note="ξ = p_v(η; q/a1, q/a2, a3, a4 | q)"),
        SeedConvention("AW.I.invert12", "AW", "I",
                       lambda s, v: askey_wilson(v, _aw_twist_inv(s, "I"), s.t),
                       lambda s, v: _aw_energy_closed(s.q, s.a[0] * s.a[1], s.a[2] * s.a[3], v),
                       note="ξ = p_v(η; 1/a1, 1/a2, a3, a4 | q)"),
    ],
    ("AW", "II"): [
        SeedConvention("AW.II.twist34", "AW", "II",
                       lambda s, v: askey_wilson(v, _aw_twist(s, "II"), s.t),
                       lambda s, v: _aw_energy_closed(s.q, s.a[2] * s.a[3], s.a[0] * s.a[1], v),
                       note="ξ = p_v(η; a1, a2, q/a3, q/a4 | q)"),
        SeedConvention("AW.II.invert34", "AW", "II",
                       lambda s, v: askey_wilson(v, _aw_twist_inv(s, "II"), s.t),
                       lambda s, v: _aw_energy_closed(s.q, s.a[2] * s.a[3], s.a[0] * s.a[1], v),
                       note="ξ = p_v(η; a1, a2, 1/a3, 1/a4 | q)"),
    ],
}


def seed_conventions(family: str, type_: str) -> list[SeedConvention]:
    return SEED_CONVENTIONS[(family, type_)]


def virtual_seed(spec: FamilySpec, v: int, type_: str, convention: str | None = None) -> SeedDescriptor:
    if v < 1:
        raise UsageError(f"virtual-state degree must be >= 1, got {v}")
    cands = seed_conventions(spec.family, type_)
    conv = cands[0] if convention is None else next((c for c in cands if c.id == convention), None)
    if conv is None:
        raise UsageError(f"unknown seed convention {convention!r}")
    xi = conv.xi(spec, v)
    if xi.degree != v:
        raise DegenerateParameterError(
            f"virtual polynomial {v}{type_} has degree {xi.degree} at {spec.describe()['params']}")
    pref = conv.prefactor_num(spec) if conv.prefactor_num else None
    return SeedDescriptor(v, type_, xi, Q(conv.energy(spec, v)), pref, conv.id)


def eigen_prefactor_num(spec: FamilySpec) -> Poly:
    """oQM ground-state prefactor log-derivative numerator (see virtual_seed)."""
    if spec.family == "L":
        return spec.g - ETA
    if spec.family == "J":
        return _J_prefactor(spec.g, spec.h)
    raise UsageError("prefactor descriptors exist only for oQM families")


# --------------------------------------------------------------------------
# shift-operator tables


@dataclass(frozen=True)
class OperatorTables:
    family: str
    type: str
    s_I: int
    s_II: int
    # oQM: Poly in η; idQM: ring elements (v-functions)
    e_F: object
    e_B: object
    et_F: Rational | None = None
    et_B: Rational | None = None
    c_F: Rational | None = None
    note: str = ""


# Leading-order analysis of the Darboux step: c_F = 2 (L), −4 (J).
C_F_CANDIDATES = {"L": [Q(2), Q(-2)], "J": [Q(-4), Q(4)]}


def oqm_table(spec: FamilySpec, prefix: IndexSet, d_s: tuple) -> OperatorTables:
    full = IndexSet(prefix.entries + (d_s,))
    sI, sII = full.s_I, full.s_II
    typ = d_s[1]
    if spec.family == "L":
        g = spec.g
        if typ == "I":
            eF, eB, etF, etB = Poly.const(1), ETA, Q(-2), -2 * (g + sI - sII) + 1
        else:
            eF, eB, etF, etB = ETA, Poly.const(1), 2 * (g + sI - sII) + 1, Q(2)
    elif spec.family == "J":
        g, h = spec.g, spec.h
        if typ == "I":
            eF, eB = (1 + ETA) / 2, (1 - ETA) / 2
            etF, etB = -2 * (h + sII - sI) - 1, -2 * (g + sI - sII) + 1
        else:
            eF, eB = (1 - ETA) / 2, (1 + ETA) / 2
            etF, etB = 2 * (g + sI - sII) + 1, 2 * (h + sII - sI) - 1
    else:
        raise UsageError("oqm_table is for L and J")
    return OperatorTables(spec.family, typ, sI, sII, eF, eB, Q(etF), Q(etB), C_F_CANDIDATES[spec.family][0])


# idQM parameter shift λ^{[m_I, m_II]}: candidates for the per-step shift of
# (a1, a2) under type I and of (a3, a4) under type II.  W shifts additively,
# AW multiplicatively by t^{±1}.  Calibration picks the one satisfying the
# round-trip identity.
IDQM_SHIFT_CANDIDATES = [Q(-1, 2), Q(1, 2), Q(0), Q(-1), Q(1)]


def shifted_params(spec: FamilySpec, m_I: int, m_II: int, delta) -> tuple:
    """Parameters λ^{[m_I, m_II]} with per-step exponent ``delta``.

    Type-I steps move (a1, a2) by δ and (a3, a4) by −δ; type-II steps the
    reverse.  W: additive; AW: multiplied by t^{2δ}.
    """
    a1, a2, a3, a4 = spec.a
    step12 = (m_I - m_II) * delta
    step34 = -step12
    if spec.family == "W":
        return (a1 + step12, a2 + step12, a3 + step34, a4 + step34)
    t = spec.t
    f12 = _tpow(t, 2 * step12)
    f34 = _tpow(t, 2 * step34)
    return (a1 * f12, a2 * f12, a3 * f34, a4 * f34)


def _tpow(t, e) -> Rational:
    e = Q(e)
    if e.denominator != 1:
        raise UsageError("AW shifts must be integral powers of t")
    return t ** int(e)


def idqm_table(spec: FamilySpec, ring, prefix: IndexSet, d_s: tuple, delta) -> OperatorTables:
    full = IndexSet(prefix.entries + (d_s,))
    sI, sII = full.s_I, full.s_II
    typ = d_s[1]
    if typ == "I":
        pF = shifted_params(spec, sI, sII, delta)
        pB = shifted_params(spec, sI - 1, sII, delta)
        eF, eB = ring.v_pair(pF[0], pF[1]), ring.v_pair(pB[2], pB[3])
    else:
        pF = shifted_params(spec, sI, sII, delta)
        pB = shifted_params(spec, sI, sII - 1, delta)
        eF, eB = ring.v_pair(pF[2], pF[3]), ring.v_pair(pB[0], pB[1])
    return OperatorTables(spec.family, typ, sI, sII, eF, eB, note=f"shift δ={qstr(delta)}")


def operator_table(spec: FamilySpec, prefix: IndexSet, d_s: tuple, ring=None, delta=Q(-1, 2)):
    if spec.is_oqm:
        return oqm_table(spec, prefix, d_s)
    if ring is None:
        from .rings import idqm_ring
        ring = idqm_ring(spec.family, spec.t if spec.family == "AW" else None)
    return idqm_table(spec, ring, prefix, d_s, delta)

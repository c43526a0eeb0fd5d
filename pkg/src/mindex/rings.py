"""Function rings where wavefunction-level identities become exact algebra.

oQM (Laguerre, Jacobi): elements A(η) + B(η)·w with w² = Δ(η) and a
derivation D = d/dx acting through D(η) = κ·w.

    L: w = x,       Δ = η,       κ = 2   (η = x²)
    J: w = sin 2x,  Δ = 1 − η²,  κ = −2  (η = cos 2x)

idQM (Wilson, Askey-Wilson): check functions p̌(x) = p(η(x)).

    W:  polynomials in x with Gaussian-rational coefficients, η = x², γ = 1.
    AW: Laurent polynomials in z = e^{ix}, η = (z + 1/z)/2.  With t = q^{1/2}
        and γ = log q, the shift x → x + i·m·γ/2 is z → z·t^{−m}.
"""
from __future__ import annotations

from functools import lru_cache

from .algebra.laurent import LaurentPoly
from .algebra.poly import Poly
from .algebra.scalars import I, ONE, ZERO, GaussianRational, Q, Rational
from .errors import InternalConsistencyError, NotCheckPolynomialError, UsageError

# --------------------------------------------------------------------------
# oQM: quadratic extension with a derivation


class QuadElement:
    """``a + b·w`` in Q[η][w]/(w² − Δ)."""

    __slots__ = ("ring", "a", "b")

    def __init__(self, ring: "OqmRing", a: Poly, b: Poly | None = None):
        self.ring = ring
        self.a = a
        self.b = b if b is not None else Poly.zero()

    def _lift(self, other):
        if isinstance(other, QuadElement):
            return other
        if isinstance(other, Poly):
            return QuadElement(self.ring, other)
        if isinstance(other, (int, Rational)):
            return QuadElement(self.ring, Poly.const(other))
        return None

    def __add__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return QuadElement(self.ring, self.a + o.a, self.b + o.b)

    __radd__ = __add__

    def __neg__(self):
        return QuadElement(self.ring, -self.a, -self.b)

    def __sub__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        d = self.ring.delta
        return QuadElement(self.ring,
                           self.a * o.a + d * self.b * o.b,
                           self.a * o.b + self.b * o.a)

    __rmul__ = __mul__

    def __eq__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return self.a == o.a and self.b == o.b

    def __hash__(self):
        return hash((self.a, self.b))

    def is_zero(self) -> bool:
        return self.a.is_zero() and self.b.is_zero()

    def __repr__(self):
        return f"QuadElement({self.a} + ({self.b})·{self.ring.w_name})"


class OqmRing:
    def __init__(self, family: str):
        eta = Poly.gen()
        if family == "L":
            self.delta, self.kappa, self.w_name = eta, Q(2), "x"
        elif family == "J":
            self.delta, self.kappa, self.w_name = 1 - eta * eta, Q(-2), "s"
        else:
            raise UsageError(f"no oQM ring for family {family!r}")
        self.family = family

    def elem(self, a, b=None) -> QuadElement:
        if not isinstance(a, Poly):
            a = Poly.const(a)
        return QuadElement(self, a, b)

    def eta(self) -> QuadElement:
        return self.elem(Poly.gen())

    def w(self) -> QuadElement:
        return self.elem(Poly.zero(), Poly.const(1))

    def derive(self, e: QuadElement) -> QuadElement:
        """D(A + B·w) = κ(ΔB' + Δ'B/2) + κA'·w."""
        k, d = self.kappa, self.delta
        return QuadElement(self,
                           k * (d * e.b.derivative() + d.derivative() * e.b / 2),
                           k * e.a.derivative())

    # L only: identify the ring with Q[x]
    def from_x_poly(self, p: Poly) -> QuadElement:
        if self.family != "L":
            raise UsageError("x-polynomial view exists only for L")
        even = Poly(p.coeffs[0::2])
        odd = Poly(p.coeffs[1::2])
        return self.elem(even, odd)

    def to_x_poly(self, e: QuadElement) -> Poly:
        if self.family != "L":
            raise UsageError("x-polynomial view exists only for L")
        n = max(len(e.a), len(e.b))
        out = []
        for k in range(n):
            out.append(e.a.coeff(k))
            out.append(e.b.coeff(k))
        return Poly(out, "x")


def apply_derivation(e, family: str):
    """d/dx in the family's ring. L accepts a plain Poly in x as well."""
    if family == "L" and isinstance(e, Poly):
        return e.derivative()
    ring = e.ring if isinstance(e, QuadElement) else OqmRing(family)
    if ring.family != family:
        raise UsageError("element belongs to a different family ring")
    return ring.derive(e)


# --------------------------------------------------------------------------
# idQM: check functions and imaginary shifts


def _laurent_to_poly(e: LaurentPoly) -> tuple[Poly, int]:
    lo, hi = e.window()
    return Poly([e.coeff(k) for k in range(lo, hi + 1)], "z"), lo


def _poly_to_laurent(p: Poly, shift: int) -> LaurentPoly:
    return LaurentPoly({k + shift: c for k, c in enumerate(p.coeffs)})


class IdqmRing:
    """Check-function ring for W (``t`` ignored) or AW (``t`` required)."""

    def __init__(self, family: str, t=None):
        if family not in ("W", "AW"):
            raise UsageError(f"no idQM ring for family {family!r}")
        self.family = family
        if family == "AW":
            if t is None:
                raise UsageError("Askey-Wilson ring needs t = q^(1/2)")
            t = Q(t)
            if t in (0, 1, -1):
                raise UsageError("t must avoid 0, 1, -1")
        self.t = t
        self._eta_cache: dict[int, object] = {}

    # -- constants ----------------------------------------------------
    @property
    def c_phi(self) -> Rational:
        if self.family == "W":
            return ONE
        return 2 / (1 / self.t - self.t)

    def one(self):
        return Poly.const(GaussianRational(1), "x") if self.family == "W" else LaurentPoly.const(ONE)

    def zero(self):
        return Poly.zero("x") if self.family == "W" else LaurentPoly()

    def x(self):
        """The coordinate x (W) or z = e^{ix} (AW) as a ring element."""
        if self.family == "W":
            return Poly((ZERO, GaussianRational(1)), "x")
        return LaurentPoly.monomial(1)

    # -- check functions ----------------------------------------------
    def eta_shifted(self, m: int = 0):
        """η(x + i·m·γ/2) as a ring element."""
        if m not in self._eta_cache:
            if self.family == "W":
                xm = Poly((GaussianRational(0, Q(m, 2)), GaussianRational(1)), "x")
                val = xm * xm
            else:
                s = self.t ** (-m)
                val = LaurentPoly({1: s / 2, -1: 1 / (2 * s)})
            self._eta_cache[m] = val
        return self._eta_cache[m]

    def shift_eval(self, p: Poly, m: int = 0):
        """p̌(x + i·m·γ/2)."""
        e = self.eta_shifted(m)
        if p.is_zero():
            return self.zero()
        acc = self.one() * p.coeffs[-1]
        for c in reversed(p.coeffs[:-1]):
            acc = acc * e + c
        return acc

    def check(self, p: Poly):
        return self.shift_eval(p, 0)

    def shift(self, e, m: int):
        """Shift an arbitrary ring element: e(x) → e(x + i·m·γ/2)."""
        if self.family == "W":
            return e(Poly((GaussianRational(0, Q(m, 2)), GaussianRational(1)), "x"))
        return e.scale_var(self.t ** (-m))

    def involution(self, e):
        """x → −x (W) or z → 1/z (AW)."""
        if self.family == "W":
            return Poly([c if k % 2 == 0 else -c for k, c in enumerate(e.coeffs)], "x")
        return e.invert_var()

    def star(self, e):
        """Complex conjugate of a function of real x (coefficient conjugation composed with x → −x for AW)."""
        if self.family == "W":
            return e.conjugate()
        return e.invert_var()

    def is_zero(self, e) -> bool:
        return e.is_zero()

    # -- extraction ---------------------------------------------------
    def sym_extract(self, e) -> Poly:
        """The polynomial P with P̌ = e; raises when e is not a check polynomial."""
        if self.family == "W":
            if any(c for c in e.coeffs[1::2]):
                raise NotCheckPolynomialError("odd part present; not a function of x²")
            out = Poly([_realify(c) for c in e.coeffs[0::2]])
        else:
            if not e.is_symmetric():
                raise NotCheckPolynomialError("not invariant under z → 1/z")
            rest = e
            coeffs: dict[int, object] = {}
            two_eta = LaurentPoly({1: ONE, -1: ONE})
            while not rest.is_zero():
                k = rest.window()[1]
                if k < 0:
                    raise NotCheckPolynomialError("residue left after extraction")
                c = rest.coeff(k)
                coeffs[k] = c * Q(2) ** k
                rest = rest - two_eta ** k * c
            deg = max(coeffs) if coeffs else -1
            out = Poly([coeffs.get(k, ZERO) for k in range(deg + 1)])
        if self.check(out) != _as_ring(self, e):
            raise NotCheckPolynomialError("re-substitution does not reproduce the input")
        return out

    def exact_div(self, num, den):
        """Exact quotient in the ring; raises InternalConsistencyError on a remainder."""
        if self.family == "W":
            q, r = num.divmod(den)
            if not r.is_zero():
                raise InternalConsistencyError("ring division left a remainder")
            return q
        if num.is_zero():
            return LaurentPoly()
        pn, sn = _laurent_to_poly(num)
        pd, sd = _laurent_to_poly(den)
        q, r = pn.divmod(pd)
        if not r.is_zero():
            raise InternalConsistencyError("ring division left a remainder")
        return _poly_to_laurent(q, sn - sd)

    def dq_denominator(self):
        """η(x − iγ/2) − η(x + iγ/2)."""
        return self.eta_shifted(-1) - self.eta_shifted(1)

    def quotient_to_poly(self, num) -> Poly:
        """num / (η(x−iγ/2) − η(x+iγ/2)) extracted as a polynomial in η."""
        return self.sym_extract(self.exact_div(num, self.dq_denominator()))

    # -- the combinations that are polynomials in η ---------------------
    def sym_sum(self, p: Poly) -> Poly:
        return self.sym_extract(self.shift_eval(p, -1) + self.shift_eval(p, 1))

    def first_quotient(self, p: Poly) -> Poly:
        return self.quotient_to_poly(self.shift_eval(p, -1) - self.shift_eval(p, 1))

    def sym_product(self, p: Poly) -> Poly:
        return self.sym_extract(self.shift_eval(p, -1) * self.shift_eval(p, 1))

    def double_quotient(self, p1: Poly, p2: Poly) -> Poly:
        num = (self.shift_eval(p1, -2) * self.shift_eval(p2, -1)
               - self.shift_eval(p1, 2) * self.shift_eval(p2, 1))
        return self.quotient_to_poly(num)

    def mixed_x(self, p1: Poly, p2: Poly) -> Poly:
        """W: i·x·(p̌1(x+i/2)p̌2(x−i/2) − p̌1(x−i/2)p̌2(x+i/2)).

        The printed sum with a plus sign is odd in x; the antisymmetric
        combination is the even one.
        """
        if self.family != "W":
            raise UsageError("mixed_x is the Wilson combination")
        diff = (self.shift_eval(p1, 1) * self.shift_eval(p2, -1)
                - self.shift_eval(p1, -1) * self.shift_eval(p2, 1))
        return self.sym_extract(self.x() * diff * I)

    def mixed_exp(self, p1: Poly, p2: Poly, sign: int = 1) -> Poly:
        """AW: e^{±ix}p̌1(x+iγ/2)p̌2(x−iγ/2) + e^{∓ix}p̌1(x−iγ/2)p̌2(x+iγ/2)."""
        if self.family != "AW":
            raise UsageError("mixed_exp is the Askey-Wilson combination")
        zp = LaurentPoly.monomial(sign)
        zm = LaurentPoly.monomial(-sign)
        e = (zp * self.shift_eval(p1, 1) * self.shift_eval(p2, -1)
             + zm * self.shift_eval(p1, -1) * self.shift_eval(p2, 1))
        return self.sym_extract(e)

    # -- v-functions ----------------------------------------------------
    def v_pair(self, a, b):
        """(a + ix)(b + ix) for W; z^{-1}(1 − a z)(1 − b z) for AW."""
        if self.family == "W":
            f1 = Poly((GaussianRational(Q(a)), I), "x")
            f2 = Poly((GaussianRational(Q(b)), I), "x")
            return f1 * f2
        f1 = LaurentPoly({0: ONE, 1: -Q(a)})
        f2 = LaurentPoly({0: ONE, 1: -Q(b)})
        return LaurentPoly.monomial(-1) * f1 * f2


def _realify(c):
    if isinstance(c, GaussianRational):
        if c.im != 0:
            return c
        return c.re
    return c


def _as_ring(ring: IdqmRing, e):
    if ring.family == "W":
        return Poly([c if isinstance(c, GaussianRational) else GaussianRational(c) for c in e.coeffs], "x")
    return e


@lru_cache(maxsize=None)
def idqm_ring(family: str, t=None) -> IdqmRing:
    return IdqmRing(family, t)


def shift_eval(p: Poly, m: int, ring: IdqmRing):
    return ring.shift_eval(p, m)


def sym_extract(e, ring: IdqmRing) -> Poly:
    return ring.sym_extract(e)

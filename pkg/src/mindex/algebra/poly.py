"""Dense univariate polynomials over an exact field.

Coefficients are stored low-to-high in a tuple; the highest stored
coefficient is always nonzero, so ``Poly.coeffs == ()`` is the zero
polynomial and its degree is :data:`ZERO_DEGREE`.
"""
from __future__ import annotations

from typing import Iterable, Sequence

from gmpy2 import gcd, lcm, mpz

from ..errors import UsageError
from .scalars import ONE, ZERO, GaussianRational, Q, Rational, conj

ZERO_DEGREE = -1


def _is_scalar(value) -> bool:
    return isinstance(value, (int, Rational, GaussianRational)) or type(value).__name__ == "Fraction"


def _norm_coeff(c):
    if isinstance(c, (Rational, GaussianRational)):
        return c
    return Q(c)


class Poly:
    __slots__ = ("coeffs", "var")

    def __init__(self, coeffs: Iterable = (), var: str = "eta"):
        cs = [_norm_coeff(c) for c in coeffs]
        while cs and not cs[-1]:
            cs.pop()
        object.__setattr__(self, "coeffs", tuple(cs))
        object.__setattr__(self, "var", var)

    def __setattr__(self, name, value):
        raise AttributeError("Poly is immutable")

    # -- constructors -------------------------------------------------
    @classmethod
    def _raw(cls, coeffs: tuple, var: str) -> "Poly":
        obj = object.__new__(cls)
        object.__setattr__(obj, "coeffs", coeffs)
        object.__setattr__(obj, "var", var)
        return obj

    @classmethod
    def zero(cls, var: str = "eta") -> "Poly":
        return cls._raw((), var)

    @classmethod
    def const(cls, c, var: str = "eta") -> "Poly":
        return cls((c,), var)

    @classmethod
    def monomial(cls, k: int, c=ONE, var: str = "eta") -> "Poly":
        return cls([ZERO] * k + [c], var)

    @classmethod
    def gen(cls, var: str = "eta") -> "Poly":
        return cls((ZERO, ONE), var)

    # -- basic properties ---------------------------------------------
    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def __bool__(self):
        return bool(self.coeffs)

    def lc(self):
        if not self.coeffs:
            return ZERO
        return self.coeffs[-1]

    def coeff(self, k: int):
        if 0 <= k < len(self.coeffs):
            return self.coeffs[k]
        return ZERO

    def __len__(self):
        return len(self.coeffs)

    # -- arithmetic ---------------------------------------------------
    def _check(self, other: "Poly"):
        if other.var != self.var:
            raise UsageError(f"variable mismatch: {self.var!r} vs {other.var!r}")

    def _lift(self, other):
        if isinstance(other, Poly):
            self._check(other)
            return other
        if _is_scalar(other):
            return Poly((other,), self.var)
        return None

    def __add__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        a, b = self.coeffs, o.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] = out[i] + c
        return Poly(out, self.var)

    __radd__ = __add__

    def __neg__(self):
        return Poly._raw(tuple(-c for c in self.coeffs), self.var)

    def __sub__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return o - self

    def __mul__(self, other):
        if isinstance(other, Poly):
            self._check(other)
            a, b = self.coeffs, other.coeffs
            if not a or not b:
                return Poly._raw((), self.var)
            out = [ZERO] * (len(a) + len(b) - 1)
            for i, ai in enumerate(a):
                if not ai:
                    continue
                for j, bj in enumerate(b):
                    out[i + j] += ai * bj
            return Poly(out, self.var)
        if _is_scalar(other):
            if not other:
                return Poly._raw((), self.var)
            return Poly([c * other for c in self.coeffs], self.var)
        return NotImplemented

    __rmul__ = __mul__

    def __truediv__(self, other):
        if _is_scalar(other):
            if not other:
                raise ZeroDivisionError("polynomial divided by zero scalar")
            inv = ONE / other
            return Poly([c * inv for c in self.coeffs], self.var)
        return NotImplemented

    def __pow__(self, k: int):
        if k < 0:
            raise UsageError("negative polynomial power")
        out = Poly((ONE,), self.var)
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def divmod(self, other: "Poly") -> tuple["Poly", "Poly"]:
        """Euclidean division; ``self == q*other + r`` with ``deg r < deg other``."""
        if not isinstance(other, Poly):
            other = Poly((other,), self.var)
        self._check(other)
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self.coeffs)
        db = other.degree
        lead_inv = ONE / other.coeffs[-1]
        bc = other.coeffs
        if len(rem) - 1 < db:
            return Poly._raw((), self.var), self
        quot = [ZERO] * (len(rem) - db)
        for k in range(len(rem) - 1 - db, -1, -1):
            c = rem[k + db]
            if not c:
                continue
            c = c * lead_inv
            quot[k] = c
            for j in range(db + 1):
                rem[k + j] -= c * bc[j]
        return Poly(quot, self.var), Poly(rem[:db], self.var)

    def __divmod__(self, other):
        return self.divmod(other)

    def __floordiv__(self, other):
        return self.divmod(other)[0]

    def __mod__(self, other):
        return self.divmod(other)[1]

    def exact_div(self, other: "Poly") -> "Poly":
        """Quotient of an exact division; raises ``ArithmeticError`` on a remainder."""
        q, r = self.divmod(other)
        if not r.is_zero():
            raise ArithmeticError("polynomial division is not exact")
        return q

    def divides(self, other: "Poly") -> bool:
        """True when ``self`` divides ``other`` exactly."""
        return other.divmod(self)[1].is_zero()

    # -- calculus -----------------------------------------------------
    def derivative(self) -> "Poly":
        return Poly([k * c for k, c in enumerate(self.coeffs)][1:], self.var)

    def antiderivative(self) -> "Poly":
        """Term-wise antiderivative with zero constant term."""
        return Poly([ZERO] + [c / (k + 1) for k, c in enumerate(self.coeffs)], self.var)

    # -- evaluation / composition -------------------------------------
    def __call__(self, value):
        """Horner evaluation. ``value`` may be a scalar or any ring element."""
        if not self.coeffs:
            if isinstance(value, Poly):
                return Poly._raw((), value.var)
            return ZERO
        acc = None
        for c in reversed(self.coeffs):
            acc = c if acc is None else acc * value + c
        if isinstance(value, Poly) and not isinstance(acc, Poly):
            acc = Poly((acc,), value.var)
        return acc

    def compose(self, inner: "Poly") -> "Poly":
        return self(inner)

    def with_var(self, var: str) -> "Poly":
        return Poly._raw(self.coeffs, var)

    def map_coeffs(self, fn) -> "Poly":
        return Poly([fn(c) for c in self.coeffs], self.var)

    def conjugate(self) -> "Poly":
        """Conjugate every coefficient (the variable is taken as real)."""
        return Poly([conj(c) for c in self.coeffs], self.var)

    def monic(self) -> "Poly":
        if self.is_zero():
            return self
        return self / self.lc()

    # -- rational content ---------------------------------------------
    def content(self) -> Rational:
        """Positive rational c with ``self / c`` integer-primitive (rational coefficients only)."""
        if not self.coeffs:
            return ONE
        den = mpz(1)
        for c in self.coeffs:
            den = lcm(den, Q(c).denominator)

        g = mpz(0)
        for c in self.coeffs:
            g = gcd(g, (Q(c) * den).numerator)
        return Q(g) / den

    def primitive(self) -> "Poly":
        """Integer-primitive associate with positive leading coefficient."""
        if not self.coeffs:
            return self
        c = self.content()
        if self.lc() < 0:
            c = -c
        return self / c

    # -- comparison / display -----------------------------------------
    def __eq__(self, other):
        if isinstance(other, Poly):
            return self.var == other.var and self.coeffs == other.coeffs
        if _is_scalar(other):
            if not other:
                return not self.coeffs
            return len(self.coeffs) == 1 and self.coeffs[0] == other
        return NotImplemented

    def __hash__(self):
        return hash((self.var, self.coeffs))

    def __repr__(self):
        return f"Poly({[str(c) for c in self.coeffs]}, var={self.var!r})"

    def __str__(self):
        if not self.coeffs:
            return "0"
        name = {"eta": "η"}.get(self.var, self.var)
        terms = []
        for k in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[k]
            if not c:
                continue
            cs = str(c)
            if isinstance(c, GaussianRational) and c.re != 0 and c.im != 0:
                cs = f"({cs})"
            if k == 0:
                terms.append(cs)
            else:
                mono = name if k == 1 else f"{name}^{k}"
                if c == 1:
                    terms.append(mono)
                elif c == -1:
                    terms.append("-" + mono)
                else:
                    terms.append(f"{cs}*{mono}")
        return " + ".join(terms).replace("+ -", "- ")


def poly_arith(a: Poly, b: Poly, op: str) -> Poly:
    """Dispatch ``add``/``sub``/``mul`` by name."""
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    raise UsageError(f"unknown polynomial operation {op!r}")


def poly_divrem(a: Poly, b: Poly) -> tuple[Poly, Poly]:
    return a.divmod(b)


def poly_gcd(a: Poly, b: Poly) -> Poly:
    """Monic gcd (zero only when both inputs are zero)."""
    while not b.is_zero():
        a, b = b, a % b
    return a.monic()


def eta(var: str = "eta") -> Poly:
    return Poly.gen(var)


def from_ints(coeffs: Sequence, var: str = "eta") -> Poly:
    return Poly([Q(c) for c in coeffs], var)

"""Laurent polynomials in one variable (used for z = e^{ix} in the Askey-Wilson ring)."""
from __future__ import annotations

from ..errors import UsageError
from .scalars import ONE, ZERO, Q, Rational, GaussianRational


def _norm(c):
    if isinstance(c, (Rational, GaussianRational)):
        return c
    return Q(c)


class LaurentPoly:
    """Finite sum of c_k z^k, k in Z. Stored as an exponent -> coefficient map without zeros."""

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        clean = {}
        for k, c in (terms or {}).items():
            c = _norm(c)
            if c:
                clean[int(k)] = c
        object.__setattr__(self, "terms", clean)

    def __setattr__(self, name, value):
        raise AttributeError("LaurentPoly is immutable")

    @classmethod
    def monomial(cls, k: int, c=ONE) -> "LaurentPoly":
        return cls({k: c})

    @classmethod
    def const(cls, c) -> "LaurentPoly":
        return cls({0: c})

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def window(self) -> tuple[int, int]:
        """(lowest, highest) exponent; raises on zero."""
        if not self.terms:
            raise UsageError("zero Laurent polynomial has no exponent window")
        return min(self.terms), max(self.terms)

    def coeff(self, k: int):
        return self.terms.get(k, ZERO)

    def _lift(self, other):
        if isinstance(other, LaurentPoly):
            return other
        if isinstance(other, (int, Rational, GaussianRational)):
            return LaurentPoly({0: other})
        return None

    def __add__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        out = dict(self.terms)
        for k, c in o.terms.items():
            out[k] = out.get(k, ZERO) + c
        return LaurentPoly(out)

    __radd__ = __add__

    def __neg__(self):
        return LaurentPoly({k: -c for k, c in self.terms.items()})

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
        o = self._lift(other)
        if o is None:
            return NotImplemented
        out = {}
        for i, a in self.terms.items():
            for j, b in o.terms.items():
                out[i + j] = out.get(i + j, ZERO) + a * b
        return LaurentPoly(out)

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, (int, Rational, GaussianRational)):
            inv = ONE / other
            return LaurentPoly({k: c * inv for k, c in self.terms.items()})
        return NotImplemented

    def __pow__(self, n: int):
        if n < 0:
            raise UsageError("negative power of a Laurent polynomial")
        out = LaurentPoly({0: ONE})
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def scale_var(self, c) -> "LaurentPoly":
        """Substitute z -> c*z."""
        c = _norm(c)
        return LaurentPoly({k: v * c ** k for k, v in self.terms.items()})

    def invert_var(self) -> "LaurentPoly":
        """Substitute z -> 1/z (the ring involution)."""
        return LaurentPoly({-k: v for k, v in self.terms.items()})

    def is_symmetric(self) -> bool:
        return all(self.terms.get(-k, ZERO) == c for k, c in self.terms.items())

    def __eq__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return self.terms == o.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __repr__(self):
        items = ", ".join(f"{k}: {c}" for k, c in sorted(self.terms.items()))
        return f"LaurentPoly({{{items}}})"

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for k in sorted(self.terms, reverse=True):
            c = self.terms[k]
            parts.append(str(c) if k == 0 else f"{c}*z^{k}")
        return " + ".join(parts).replace("+ -", "- ")

"""Exact scalar, polynomial and linear-algebra kernels."""
from .laurent import LaurentPoly
from .linalg import PolyMatrix, SolveResult, det_fraction_free, solve_exact
from .poly import ZERO_DEGREE, Poly, eta, poly_arith, poly_divrem, poly_gcd
from .ratfunc import RationalFunction
from .scalars import I, ONE, ZERO, GaussianRational, Q, Rational, as_real, conj, qstr, rational_sqrt

__all__ = [
    "GaussianRational", "I", "LaurentPoly", "ONE", "Poly", "PolyMatrix", "Q", "Rational",
    "RationalFunction", "SolveResult", "ZERO", "ZERO_DEGREE", "as_real", "conj",
    "det_fraction_free", "eta", "poly_arith", "poly_divrem", "poly_gcd", "qstr",
    "rational_sqrt", "solve_exact",
]

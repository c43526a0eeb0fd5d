"""Multi-indexed orthogonal polynomials and their constant-coefficient recurrences, in exact arithmetic."""
__version__ = "0.1.0"

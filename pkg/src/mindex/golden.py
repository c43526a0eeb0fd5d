"""Printed closed forms for the worked examples (X_min and r_{n,k}).

Each case gives X_min(η) and r_{n,k} as exact functions of the parameters.
For Wilson and Askey-Wilson the diagonal r_{n,0} is not printed (it lives
on an external web page), so those cases carry k ≠ 0 only.

A formula evaluated where one of its factors has a zero denominator
returns None.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Callable

from .algebra.poly import Poly
from .algebra.scalars import ONE, Q, Rational
from .families import FamilySpec, poch, qpoch

ETA = Poly.gen()
HALF = Q(1, 2)


@dataclass(frozen=True)
class GoldenCase:
    case_id: str
    family: str
    D: str
    L: int
    xmin: Callable  # spec -> Poly
    r: Callable  # (spec, n, k) -> Rational | None
    has_diagonal: bool
    sample_params: tuple  # two parameter points used by the acceptance suite


def _safe(fn):
    def wrapped(spec, n, k):
        if k < -n:
            return Q(0)
        try:
            return fn(spec, n, k)
        except ZeroDivisionError:
            return None
    return wrapped


# --------------------------------------------------------------------------
# Laguerre


def _l1_x(s):
    g = s.g
    return HALF * ETA * (ETA + 2 * g + 1)


@_safe
def _l1_r(s, n, k):
    g = s.g
    return {
        2: HALF * (n + 1) * (n + 2),
        -2: Q(1, 8) * (2 * g + 2 * n - 3) * (2 * g + 2 * n + 3),
        1: -(n + 1) * (2 * g + 2 * n + 3),
        -1: -HALF * (2 * g + 2 * n - 1) * (2 * g + 2 * n + 3),
        0: Q(1, 8) * (24 * n ** 2 + 4 * (10 * g + 11) * n + (2 * g + 1) * (6 * g + 13)),
    }.get(k, Q(0))


def _l2_x(s):
    g = s.g
    return Q(1, 24) * ETA * (4 * ETA ** 2 + 6 * (2 * g + 1) * ETA + 3 * (2 * g + 1) * (2 * g + 3))


@_safe
def _l2_r(s, n, k):
    g = s.g
    if k == 3:
        return -Q(1, 6) * poch(Q(n + 1), 3)
    if k == -3:
        return -Q(1, 12) * (2 * g + 2 * n - 5) * poch(g + n + Q(3, 2), 2)
    if k == 2:
        return HALF * poch(Q(n + 1), 2) * (2 * g + 2 * n + 5)
    if k == -2:
        return HALF * (2 * g + 2 * n - 3) * poch(g + n + Q(3, 2), 2)
    if k == 1:
        return -Q(1, 4) * (n + 1) * (2 * g + 2 * n + 3) * (4 * g + 5 * n + 12)
    if k == -1:
        return -Q(1, 8) * (2 * g + 2 * n - 1) * (2 * g + 2 * n + 5) * (4 * g + 5 * n + 7)
    if k == 0:
        return Q(1, 48) * (160 * n ** 3 + 96 * (4 * g + 7) * n ** 2
                           + 8 * (36 * g ** 2 + 132 * g + 97) * n
                           + (2 * g + 1) * (2 * g + 5) * (14 * g + 45))
    return Q(0)


def _l3_x(s):
    g = s.g
    return Q(1, 8) * ETA * (2 * ETA ** 3 + 4 * (2 * g - 1) * ETA ** 2
                            + 3 * (2 * g - 3) * (2 * g + 1) * ETA
                            + (2 * g - 3) * (2 * g - 1) * (2 * g + 1))


@_safe
def _l3_r(s, n, k):
    g = s.g
    if k == 4:
        return poch(Q(n + 1), 4) * (2 * g + 2 * n - 3) / (4 * (2 * g + 2 * n + 5))
    if k == -4:
        return Q(1, 16) * (2 * g + 2 * n - 7) * poch(g + n - Q(3, 2), 2) * (2 * g + 2 * n + 3)
    if k == 3:
        return -poch(Q(n + 1), 3) * (2 * g + 2 * n - 3)
    if k == -3:
        return -poch(g + n - Q(5, 2), 3) * (2 * g + 2 * n + 3)
    if k == 2:
        return (poch(Q(n + 1), 2) * (2 * g + 2 * n - 3) / (4 * (2 * g + 2 * n + 1))
                * (28 * n ** 2 + 2 * (26 * g + 29) * n + 3 * (2 * g + 1) * (4 * g + 7)))
    if k == -2:
        return (Q(1, 16) * (2 * g + 2 * n - 3) * (2 * g + 2 * n + 3)
                * (28 * n ** 2 + 2 * (26 * g - 27) * n + 24 * g ** 2 - 50 * g + 17))
    if k == 1:
        return -HALF * (n + 1) * (2 * g + 2 * n - 3) * (2 * g + 2 * n + 3) * (4 * g + 7 * n + 5)
    if k == -1:
        return -poch(g + n - Q(3, 2), 2) * (2 * g + 2 * n + 3) * (4 * g + 7 * n - 2)
    if k == 0:
        return Q(1, 64) * (1120 * n ** 4 + 160 * (22 * g + 3) * n ** 3
                           + 8 * (492 * g ** 2 + 168 * g - 299) * n ** 2
                           + 8 * (224 * g ** 3 + 156 * g ** 2 - 328 * g - 135) * n
                           + (2 * g - 3) * (2 * g + 1) * (6 * g + 5) * (10 * g + 19))
    return Q(0)


# --------------------------------------------------------------------------
# Jacobi (a = g + h, b = g − h)


def _ab(s):
    return s.g + s.h, s.g - s.h


def _j1_x(s):
    a, b = _ab(s)
    return Q(1, 4) * ETA * ((b + 2) * ETA + 2 * (a - 1))


@_safe
def _j1_r(s, n, k):
    g, h = s.g, s.h
    a, b = _ab(s)
    if k == 2:
        return (poch(Q(n + 1), 2) * (b + 2) * poch(a + n, 2) * (2 * h + 2 * n - 3)
                / (poch(a + 2 * n, 4) * (2 * h + 2 * n + 1)))
    if k == -2:
        return ((b + 2) * (2 * g + 2 * n - 3) * (2 * g + 2 * n + 3) * poch(h + n - Q(3, 2), 2)
                / (4 * poch(a + 2 * n - 3, 4)))
    if k == 1:
        return ((n + 1) * (a - 1) * (a + n) * (2 * g + 2 * n + 3) * (2 * h + 2 * n - 3)
                / (poch(a + 2 * n - 1, 3) * (a + 2 * n + 3)))
    if k == -1:
        return ((a - 1) * (2 * g + 2 * n - 1) * (2 * g + 2 * n + 3) * poch(h + n - Q(3, 2), 2)
                / ((a + 2 * n - 3) * poch(a + 2 * n - 1, 3)))
    if k == 0:
        return ((b + 2) / (4 * poch(a + 2 * n - 2, 2) * poch(a + 2 * n + 1, 2))
                * (-b * (b + 4) * (2 * n * (a + n) - (a - 2) * (a - 1))
                   + (a + 2 * n - 1) * (a + 2 * n + 1) * (2 * n * (a + n) - (a - 2) * (2 * a - 1))))
    return Q(0)


def _j2_x(s):
    a, b = _ab(s)
    return (Q(1, 48) * (b + 4) * ETA
            * ((b + 2) * (b + 3) * ETA ** 2 + 3 * (b + 3) * (a - 1) * ETA
               + 3 * (a ** 2 - 2 * a + b + 3)))


@_safe
def _j2_r(s, n, k):
    g, h = s.g, s.h
    a, b = _ab(s)
    if k == 3:
        return (poch(Q(n + 1), 3) * poch(b + 2, 3) * poch(a + n, 3) * poch(h + n - Q(5, 2), 2)
                / (6 * poch(a + 2 * n, 6) * poch(h + n + HALF, 2)))
    if k == -3:
        return (poch(b + 2, 3) * (2 * g + 2 * n - 5) * poch(g + n + Q(3, 2), 2)
                * poch(h + n - Q(5, 2), 3) / (12 * poch(a + 2 * n - 5, 6)))
    if k == 2:
        return (poch(Q(n + 1), 2) * poch(b + 3, 2) * (a - 1) * poch(a + n, 2)
                * (2 * g + 2 * n + 5) * poch(h + n - Q(5, 2), 2)
                / (poch(a + 2 * n - 1, 5) * (a + 2 * n + 5) * (2 * h + 2 * n + 1)))
    if k == -2:
        return (poch(b + 3, 2) * (a - 1) * (2 * g + 2 * n - 3) * poch(g + n + Q(3, 2), 2)
                * poch(h + n - Q(5, 2), 3)
                / (2 * (a + 2 * n - 5) * poch(a + 2 * n - 3, 5)))
    if k == 1:
        pre = ((b + 4) * (a + n) * (2 * g + 2 * n + 3) * (2 * h + 2 * n - 5)
               / (8 * poch(a + 2 * n - 2, 4) * poch(a + 2 * n + 3, 2)))
        body = (b * (b + 9) * (n + 1) * (n * (n + a + 1) - poch(a - 2, 2))
                + (n + 1) * (2 * (9 - 4 * a + 2 * a ** 2) * n * (n + a + 1)
                             + poch(a - 3, 3) * (a + 6)))
        return pre * body
    if k == -1:
        pre = ((b + 4) * (2 * g + 2 * n - 1) * (2 * g + 2 * n + 5) * poch(h + n - Q(3, 2), 2)
               / (8 * poch(a + 2 * n - 4, 2) * poch(a + 2 * n - 1, 4)))
        body = (b * (b + 9) * (n * (n + a - 1) - (a - 1) ** 2 - 1)
                + 2 * n * (2 * a ** 2 - 4 * a + 9) * (n + a - 1)
                + (a - 1) ** 4 - 23 * (a - 1) ** 2 - 14)
        return pre * body
    if k == 0:
        pre = (b + 4) * (a - 1) / (48 * poch(a + 2 * n - 3, 3) * poch(a + 2 * n + 1, 3))
        body = (
            b ** 4 * (b + 17) * (6 * n * (n + a) - (a - 2) * (a - 3))
            - b ** 3 * (48 * n ** 3 * (n + 2 * a) + 48 * (a ** 2 + a - 14) * n ** 2
                        + 48 * a * (a - 14) * n - (a - 2) * (a - 3) * (3 * a ** 2 + 3 * a - 104))
            - 2 * b ** 2 * (264 * n ** 3 * (n + 2 * a) + 6 * (45 * a ** 2 + 42 * a - 181) * n ** 2
                            + 6 * a * (a ** 2 + 42 * a - 181) * n
                            - (a - 2) * (a - 3) * (15 * a ** 2 + 12 * a - 137))
            + 3 * b * (32 * n ** 5 * (n + 3 * a) + 16 * (6 * a ** 2 + 3 * a - 43) * n ** 4
                       + 32 * a * (a ** 2 + 3 * a - 43) * n ** 3
                       - 2 * (3 * a ** 4 - 36 * a ** 3 + 358 * a ** 2 + 316 * a - 625) * n ** 2
                       - 2 * a * (3 * a ** 4 - 12 * a ** 3 + 14 * a ** 2 + 316 * a - 625) * n
                       - (a - 2) * (a - 3) * (a ** 4 + 2 * a ** 3 - 32 * a ** 2 - 14 * a + 99))
            + 3 * (a + 2 * n - 1) * (a + 2 * n + 1)
            * (24 * n ** 3 * (n + 2 * a) + 2 * (7 * a ** 2 + 22 * a - 111) * n ** 2
               - 2 * a * (5 * a ** 2 - 22 * a + 111) * n
               - (a - 2) * (a - 3) * (4 * a ** 2 + 9 * a - 33)))
        return pre * body
    return Q(0)


def _j3_x(s):
    a, b = _ab(s)
    return (-Q(1, 64) * ETA
            * ((b - 2) * b * (b + 2) * ETA ** 3 + 4 * b ** 2 * (a - 1) * ETA ** 2
               + 6 * b * (a - 1) ** 2 * ETA + 4 * (a - 3) * (a - 1) * (a + 1)))


@_safe
def _j3_r(s, n, k):
    g, h = s.g, s.h
    a, b = _ab(s)
    cube = (b - 2) * b * (b + 2)
    if k == 4:
        return (-poch(Q(n + 1), 4) * cube * poch(a + n, 4) * (2 * g + 2 * n - 3) * (2 * h + 2 * n - 3)
                / (4 * poch(a + 2 * n, 8) * (2 * g + 2 * n + 5) * (2 * h + 2 * n + 5)))
    if k == -4:
        return (-cube / (64 * poch(a + 2 * n - 7, 8))
                * (2 * g + 2 * n - 7) * poch(g + n - Q(3, 2), 2) * (2 * g + 2 * n + 3)
                * (2 * h + 2 * n - 7) * poch(h + n - Q(3, 2), 2) * (2 * h + 2 * n + 3))
    if k == 3:
        return (-poch(Q(n + 1), 3) * b ** 2 * (a - 1) * poch(a + n, 3)
                * (2 * g + 2 * n - 3) * (2 * h + 2 * n - 3)
                / (2 * poch(a + 2 * n - 1, 7) * (a + 2 * n + 7)))
    if k == -3:
        return (-b ** 2 * (a - 1) * poch(g + n - Q(5, 2), 3) * (2 * g + 2 * n + 3)
                * poch(h + n - Q(5, 2), 3) * (2 * h + 2 * n + 3)
                / (2 * (a + 2 * n - 7) * poch(a + 2 * n - 5, 7)))
    if k == 2:
        pre = (poch(Q(n + 1), 2) * b * poch(a + n, 2) * (2 * g + 2 * n - 3) * (2 * h + 2 * n - 3)
               / (8 * poch(a + 2 * n - 2, 6) * poch(a + 2 * n + 5, 2)
                  * (2 * g + 2 * n + 1) * (2 * h + 2 * n + 1)))
        body = (b ** 4 * (2 * n * (n + a + 2) - 3 * (a - 1) * (a - 2))
                - b ** 2 * (8 * n ** 3 * (n + 2 * a + 4) - 2 * (7 * a ** 2 - 50 * a - 15) * n ** 2
                            - 2 * (a + 2) * (11 * a ** 2 - 34 * a + 1) * n
                            - 3 * (a - 1) * (a - 2) * (2 * a ** 2 + 9 * a + 11))
                - (a + 2 * n - 1) * (a + 2 * n + 5)
                * (4 * (3 * a ** 2 - 6 * a + 1) * n * (n + a + 2)
                   + 3 * (a - 2) * (a + 1) ** 2 * (a + 2)))
        return pre * body
    if k == -2:
        pre = (b * (2 * g + 2 * n - 3) * (2 * g + 2 * n + 3) * (2 * h + 2 * n - 3) * (2 * h + 2 * n + 3)
               / (128 * poch(a + 2 * n - 6, 2) * poch(a + 2 * n - 3, 6)))
        body = (b ** 4 * (2 * n * (n + a - 2) - 3 * a ** 2 + 5 * a - 6)
                - b ** 2 * (8 * n ** 4 + 16 * (a - 2) * n ** 3 - 2 * (7 * a ** 2 - 2 * a - 15) * n ** 2
                            - 2 * (a - 2) * (11 * a ** 2 - 18 * a + 1) * n
                            - 6 * a ** 4 + 35 * a ** 3 - 68 * a ** 2 + 49 * a - 66)
                - (2 * n + a + 1) * (2 * n + a - 5)
                * (4 * (3 * a ** 2 - 6 * a + 1) * n * (n + a - 2)
                   + (a - 3) * (3 * a ** 3 - 9 * a ** 2 + 12 * a + 4)))
        return pre * body
    if k == 1:
        pre = (-(n + 1) * (a - 1) * (a + n) * (2 * g + 2 * n - 3) * (2 * g + 2 * n + 3)
               * (2 * h + 2 * n - 3) * (2 * h + 2 * n + 3)
               / (8 * poch(a + 2 * n - 3, 5) * poch(a + 2 * n + 3, 3)))
        body = (b ** 2 * (3 * n * (n + a + 1) - (a - 2) * (a - 3))
                + (a + 1) * (a - 3) * (a + 2 * n - 2) * (a + 2 * n + 4))
        return pre * body
    if k == -1:
        pre = (-(a - 1) * poch(g + n - Q(3, 2), 2) * (2 * g + 2 * n + 3)
               * poch(h + n - Q(3, 2), 2) * (2 * h + 2 * n + 3)
               / (2 * poch(a + 2 * n - 5, 3) * poch(a + 2 * n - 1, 5)))
        body = (b ** 2 * (3 * n * (n + a - 1) - a ** 2 + 2 * a - 6)
                + (a - 3) * (a + 1) * (a + 2 * n - 4) * (a + 2 * n + 2))
        return pre * body
    if k == 0:
        pre = -b / (64 * poch(a + 2 * n - 4, 4) * poch(a + 2 * n + 1, 4))
        a4 = poch(a - 4, 4)
        body = (
            b ** 6 * (6 * n ** 3 * (n + 2 * a) - 6 * (a ** 2 - 5 * a + 5) * n ** 2
                      - 6 * a * (2 * a ** 2 - 5 * a + 5) * n + a4)
            - 2 * b ** 4 * (24 * n ** 5 * (n + 3 * a) + 6 * (a ** 2 + 28 * a - 9) * n ** 4
                            - 12 * a * (9 * a ** 2 - 28 * a + 9) * n ** 3
                            - 2 * (38 * a ** 4 - 71 * a ** 3 - 17 * a ** 2 + 5 * a + 117) * n ** 2
                            - 2 * a * (5 * a ** 4 + 13 * a ** 3 - 44 * a ** 2 + 5 * a + 117) * n
                            + a4 * (2 * a ** 2 + 3 * a + 11))
            + b ** 2 * (96 * n ** 7 * (n + 4 * a) + 48 * (a ** 2 + 26 * a - 15) * n ** 6
                        - 48 * a * (25 * a ** 2 - 78 * a + 45) * n ** 5
                        - 6 * (279 * a ** 4 - 616 * a ** 3 + 98 * a ** 2 + 376 * a - 417) * n ** 4
                        - 12 * a * (75 * a ** 4 - 96 * a ** 3 - 202 * a ** 2 + 376 * a - 417) * n ** 3
                        - 2 * (87 * a ** 6 + 153 * a ** 5 - 1139 * a ** 4 + 1262 * a ** 3
                               - 931 * a ** 2 - 1031 * a + 2775) * n ** 2
                        + 2 * a * (6 * a ** 6 - 129 * a ** 5 + 353 * a ** 4 - 134 * a ** 3
                                   - 320 * a ** 2 + 1031 * a - 2775) * n
                        + a4 * (6 * a ** 4 + 18 * a ** 3 + 37 * a ** 2 + 114 * a + 153))
            + 2 * (a + 2 * n - 3) * (a + 2 * n + 3)
            * (48 * (2 * a ** 2 - 4 * a + 1) * n ** 5 * (n + 3 * a)
               + 4 * (76 * a ** 4 - 124 * a ** 3 - 73 * a ** 2 + 124 * a - 39) * n ** 4
               + 8 * a * (16 * a ** 4 - 4 * a ** 3 - 103 * a ** 2 + 124 * a - 39) * n ** 3
               + 2 * (3 * a ** 6 + 78 * a ** 5 - 274 * a ** 4 + 142 * a ** 3 + 385 * a ** 2
                      - 544 * a - 114) * n ** 2
               - 2 * a * (5 * a ** 6 - 38 * a ** 5 + 56 * a ** 4 + 106 * a ** 3 - 463 * a ** 2
                          + 544 * a + 114) * n
               - (a - 4) * poch(a - 2, 2) * poch(a + 1, 2) * (2 * a ** 3 - 3 * a ** 2 - 2 * a + 21)))
        return pre * body
    return Q(0)


# --------------------------------------------------------------------------
# Wilson (b1 = Σa, σ1 = a1 + a2, σ2 = a1a2, σ1' = a3 + a4, σ2' = a3a4)


def _w_sym(s):
    a1, a2, a3, a4 = s.a
    return a1 + a2 + a3 + a4, a1 + a2, a1 * a2, a3 + a4, a3 * a4


def _w1_x(s):
    b1, s1, s2, t1, t2 = _w_sym(s)
    return (Q(1, 4) * ETA * (2 * (s1 - t1 - 2) * ETA
                             + 4 * (s2 * t1 - s1 * t2 - s1 * t1 + 2 * t2) + s1 + 3 * t1 - 2))


@_safe
def _w1_r(s, n, k):
    b1, s1, s2, t1, t2 = _w_sym(s)
    a = s.a
    if k == 2:
        return ((s1 - t1 - 2) * poch(b1 + n - 1, 2) * (s1 + n - 2)
                / (2 * poch(b1 + 2 * n - 1, 4) * (s1 + n)))
    if k == -2:
        prod = ONE
        for i in (0, 1):
            for j in (2, 3):
                prod *= poch(a[i] + a[j] + n - 2, 2)
        return (n * (n - 1) * (s1 - t1 - 2) / (2 * poch(b1 + 2 * n - 4, 4))
                * poch(s1 + n - 2, 2) * (t1 + n - 2) * (t1 + n + 1) * prod)
    if k == 1:
        return (-2 * (b1 + n - 1) * (s1 + n - 2) * (t1 + n + 1)
                / (poch(b1 + 2 * n - 2, 3) * (b1 + 2 * n + 2))
                * ((s1 - t1 - 2) * n * (n + b1) - (b1 - 2) * (t1 - s2 + t2 + 1)))
    if k == -1:
        prod = ONE
        for i in (0, 1):
            for j in (2, 3):
                prod *= a[i] + a[j] + n - 1
        return (2 * n * poch(s1 + n - 2, 2) * (t1 + n - 1) * (t1 + n + 1)
                / ((b1 + 2 * n - 4) * poch(b1 + 2 * n - 2, 3)) * prod
                * ((2 - s1 + t1) * n * (n + b1 - 2) + (s1 - 2) * b1 - (s2 - t2) * (b1 - 2)))
    return None  # r_{n,0} is not printed


# --------------------------------------------------------------------------
# Askey-Wilson (b4 = a1a2a3a4, q = t²; q^{1/2} = t)


def _aw_sym(s):
    a1, a2, a3, a4 = s.a
    return a1 * a2 * a3 * a4, a1 + a2, a1 * a2, a3 + a4, a3 * a4


def _aw1_x(s):
    b4, s1, s2, t1, t2 = _aw_sym(s)
    t = s.t
    q = t * t
    return (ETA / ((1 + q) * s1)
            * (2 * t * (s2 - t2 * q ** 2) * ETA
               - (1 + q) * (s1 * (1 - t2) * q + t1 * (s2 - q ** 2))))


@_safe
def _aw1_r(s, n, k):
    b4, s1, s2, t1, t2 = _aw_sym(s)
    t = s.t
    q = t * t
    a = s.a
    if k == 2:
        return (q * t * (1 - t2 * q ** 2 / s2) * qpoch(b4 * q ** (n - 1), q, 2) * (1 - s2 * q ** (n - 2))
                / (2 * (1 + q) * qpoch(b4 * q ** (2 * n - 1), q, 4) * (1 - s2 * q ** n)))
    if k == -2:
        prod = ONE
        for i in (0, 1):
            for j in (2, 3):
                prod *= qpoch(a[i] * a[j] * q ** (n - 2), q, 2)
        return (qpoch(q ** (n - 1), q, 2) * (1 - t2 * q ** 2 / s2)
                / (2 * (1 + q) * t * qpoch(b4 * q ** (2 * n - 4), q, 4))
                * qpoch(s2 * q ** (n - 2), q, 2) * (1 - t2 * q ** (n - 2)) * (1 - t2 * q ** (n + 1)) * prod)
    c1 = q * s1 * (1 - t2) + t1 * (s2 - q ** 2)
    c2 = s1 * t2 * (s2 - q ** 2) + t1 * s2 * q * (1 - t2)
    if k == 1:
        return (-(1 - b4 * q ** (n - 1)) * (1 - s2 * q ** (n - 2)) * (1 - t2 * q ** (n + 1))
                / (2 * t * s2 * qpoch(b4 * q ** (2 * n - 2), q, 3) * (1 - b4 * q ** (2 * n + 2)))
                * (q * (b4 * q ** (2 * n) + 1) * c1 - (1 + q ** 2) * q ** n * c2))
    if k == -1:
        prod = ONE
        for i in (0, 1):
            for j in (2, 3):
                prod *= 1 - a[i] * a[j] * q ** (n - 1)
        return (-(1 - q ** n) * qpoch(s2 * q ** (n - 2), q, 2) * (1 - t2 * q ** (n - 1)) * (1 - t2 * q ** (n + 1))
                / (2 * q ** 2 * t * s2 * (1 - b4 * q ** (2 * n - 4)) * qpoch(b4 * q ** (2 * n - 2), q, 3))
                * prod
                * ((b4 * q ** (2 * n) + q ** 2) * c1 - (1 + q ** 2) * q ** n * c2))
    return None


# --------------------------------------------------------------------------
# registry


def _L(g):
    return FamilySpec.laguerre(Q(g))


def _J(g, h):
    return FamilySpec.jacobi(Q(g), Q(h))


CASES: dict[str, GoldenCase] = {
    "L.Ex1": GoldenCase("L.Ex1", "L", "1I", 2, _l1_x, _l1_r, True, (_L(1), _L("7/3"))),
    "L.Ex2": GoldenCase("L.Ex2", "L", "1I,2I", 3, _l2_x, _l2_r, True, (_L(1), _L("7/3"))),
    "L.Ex3": GoldenCase("L.Ex3", "L", "1I,1II", 4, _l3_x, _l3_r, True, (_L("5/2"), _L("7/3"))),
    "J.Ex1": GoldenCase("J.Ex1", "J", "1I", 2, _j1_x, _j1_r, True, (_J(2, 1), _J("5/2", "3/2"))),
    "J.Ex2": GoldenCase("J.Ex2", "J", "1I,2I", 3, _j2_x, _j2_r, True, (_J(2, 1), _J("5/2", "3/2"))),
    "J.Ex3": GoldenCase("J.Ex3", "J", "1I,1II", 4, _j3_x, _j3_r, True, (_J(2, 1), _J("5/2", "3/2"))),
    "W.Ex1": GoldenCase("W.Ex1", "W", "1I", 2, _w1_x, _w1_r, False,
                        (FamilySpec.wilson(Q(1, 3), Q(2, 7), Q(3, 5), Q(5, 11)),
                         FamilySpec.wilson(Q(3, 4), Q(1, 5), Q(2, 3), Q(7, 9)))),
    "AW.Ex1": GoldenCase("AW.Ex1", "AW", "1I", 2, _aw1_x, _aw1_r, False,
                         (FamilySpec.askey_wilson(Q(1, 2), Q(1, 3), Q(1, 5), Q(1, 7), Q(1, 2)),
                          FamilySpec.askey_wilson(Q(2, 5), Q(1, 4), Q(1, 3), Q(3, 7), Q(1, 3)))),
}


def printed_r(case: GoldenCase, spec: FamilySpec, n: int, k: int) -> Rational | None:
    return case.r(spec, n, k)


# --------------------------------------------------------------------------
# equivalences P_A(η; λ) = f(n; λ)·P_B(η; λ')


@dataclass(frozen=True)
class Equivalence:
    label: str
    family: str
    left: str
    right: str
    right_params: Callable  # spec -> spec
    factor: Callable  # (spec, n) -> Rational


EQUIVALENCES: dict[str, tuple[Equivalence, ...]] = {
    "L": (
        Equivalence("{1I,2I}(g) ~ {2II}(g+3)", "L", "1I,2I", "2II",
                    lambda s: FamilySpec.laguerre(s.g + 3),
                    lambda s, n: 1 / (s.g + n + HALF)),
        Equivalence("{1I,1II}(g) ~ {1I,3I}(g−2)", "L", "1I,1II", "1I,3I",
                    lambda s: FamilySpec.laguerre(s.g - 2),
                    lambda s, n: -3 * (s.g + n - Q(3, 2))),
    ),
    "J": (
        Equivalence("{1I,2I}(g,h) ~ {2II}(g+3,h−3)", "J", "1I,2I", "2II",
                    lambda s: FamilySpec.jacobi(s.g + 3, s.h - 3),
                    lambda s, n: -(s.g - s.h + 4) * poch(s.h + n - Q(5, 2), 2) / (4 * (s.g + n + HALF))),
        Equivalence("{1I,1II}(g,h) ~ {1I,3I}(g−2,h+2)", "J", "1I,1II", "1I,3I",
                    lambda s: FamilySpec.jacobi(s.g - 2, s.h + 2),
                    lambda s, n: 3 * (s.g + n - Q(3, 2)) / ((s.g - s.h + 1) * (s.h + n + HALF))),
    ),
}

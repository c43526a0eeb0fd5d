import random

import pytest
from hypothesis import given, settings, strategies as st

from mindex.algebra import Poly, Q
from mindex.darboux import system
from mindex.errors import UsageError
from mindex.families import FamilySpec
from mindex.rings import idqm_ring
from mindex.xbuilder import (antiderivative_continuous, custom, discrete_antiderivative, gprime,
                             gprime_row, make_x, x_min, xi_squared_times)

ETA = Poly.gen()
T_VALUES = (Q(1, 2), Q(1, 3), Q(2, 5))
rationals = st.builds(Q, st.integers(-30, 30), st.integers(1, 9))


def test_continuous_examples():
    g = Q(7, 3)
    assert antiderivative_continuous(ETA + g + Q(1, 2)) == Q(1, 2) * ETA * (ETA + 2 * g + 1)
    assert antiderivative_continuous(Poly.const(1)) == ETA
    assert antiderivative_continuous(Poly.zero()).is_zero()


@given(st.lists(rationals, max_size=11))
@settings(max_examples=60, deadline=None)
def test_continuous_inverse(cs):
    p = Poly(cs)
    assert antiderivative_continuous(p).derivative() == p


def test_gprime_examples():
    assert gprime("W", 0, 0) == 1
    assert gprime_row("W", 1) == 2 * ETA - Q(1, 2)
    assert gprime("AW", 0, 0, Q(1, 2)) == 1


@pytest.mark.parametrize("family,t", [("W", None)] + [("AW", t) for t in T_VALUES])
def test_gprime_rows_match_ring(family, t):
    ring = idqm_ring(family, t)
    for n in range(7):
        assert gprime_row(family, n, t) == ring.first_quotient(ETA ** (n + 1))


def test_discrete_examples():
    assert discrete_antiderivative(Poly.const(1), "W") == ETA
    assert discrete_antiderivative(Poly.const(1), "AW", Q(1, 2)) == ETA
    assert discrete_antiderivative(2 * ETA - Q(1, 2), "W") == ETA ** 2


@pytest.mark.parametrize("family,t", [("W", None)] + [("AW", t) for t in T_VALUES])
def test_discrete_defining_identity(family, t):
    rng = random.Random(23)
    ring = idqm_ring(family, t)
    for _ in range(20):
        p = Poly([Q(rng.randint(-9, 9), rng.randint(1, 6)) for _ in range(rng.randint(1, 7))])
        out = discrete_antiderivative(p, family, t, checked=False)
        assert out.coeff(0) == 0
        assert ring.first_quotient(out) == p


def test_x_min_examples():
    spec = FamilySpec.laguerre(1)
    x = x_min(system(spec, "1I"))
    assert x.L == 2
    assert x.x_poly.monic() == (Q(1, 2) * ETA * (ETA + 2 * spec.g + 1)).monic()
    with pytest.raises(UsageError):
        make_x(system(spec, "1I"), Poly.zero())


@pytest.mark.parametrize("spec,D", [(FamilySpec.laguerre(Q(7, 3)), "1I,2II"),
                                    (FamilySpec.jacobi(Q(7, 3), Q(11, 4)), "3I"),
                                    (FamilySpec.wilson(Q(1, 3), Q(2, 7), Q(3, 5), Q(5, 11)), "2II"),
                                    (FamilySpec.askey_wilson(Q(1, 2), Q(1, 3), Q(1, 5), Q(1, 7), Q(1, 2)), "1I")])
def test_make_x_degree_law(spec, D):
    s = system(spec, D)
    for y in (Poly.const(1), ETA, 3 * ETA ** 2 - ETA + Q(1, 4)):
        x = make_x(s, y)
        assert x.L == s.ell + y.degree + 1
        assert x.x_poly.coeff(0) == 0


def test_xi_squared_examples():
    spec = FamilySpec.laguerre(Q(7, 3))
    s = system(spec, "1I")
    x = xi_squared_times(s, Poly.const(1))
    xi = s.xi
    assert x.x_poly == xi * xi - xi.coeff(0) ** 2
    assert x.L == 2 * s.ell
    assert xi_squared_times(s, ETA).L == 2 * s.ell + 1


def test_xi_squared_idqm_product():
    spec = FamilySpec.wilson(Q(1, 3), Q(2, 7), Q(3, 5), Q(5, 11))
    s = system(spec, "2I")
    x = xi_squared_times(s, Poly.const(1))
    target = idqm_ring("W").sym_product(s.xi)
    assert x.x_poly == target - target.coeff(0)


def test_custom_validation():
    assert custom(ETA).L == 1
    with pytest.raises(UsageError):
        custom(ETA + 1)
    with pytest.raises(UsageError):
        custom(Poly.zero())

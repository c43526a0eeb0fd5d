import pytest

from mindex.algebra import Poly, Q
from mindex.errors import DuplicateSeedError, UsageError
from mindex.families import (FamilySpec, IndexSet, classical_poly, eigen_energy, ell, oqm_table,
                             virtual_seed)

ETA = Poly.gen()

SAMPLES = {
    "L": [FamilySpec.laguerre(v) for v in (Q(1), Q(7, 3), Q(19, 5))],
    "J": [FamilySpec.jacobi(*p) for p in ((Q(2), Q(1)), (Q(7, 3), Q(11, 4)), (Q(19, 5), Q(23, 6)))],
    "W": [FamilySpec.wilson(*p) for p in ((Q(1, 3), Q(2, 7), Q(3, 5), Q(5, 11)),
                                          (Q(3, 4), Q(1, 5), Q(2, 3), Q(7, 9)),
                                          (Q(1, 2), Q(5, 4), Q(1, 6), Q(2, 5)))],
    "AW": [FamilySpec.askey_wilson(*p) for p in ((Q(1, 2), Q(1, 3), Q(1, 5), Q(1, 7), Q(1, 2)),
                                                 (Q(2, 5), Q(1, 4), Q(1, 3), Q(3, 7), Q(1, 3)),
                                                 (Q(1, 3), Q(1, 2), Q(2, 7), Q(1, 6), Q(2, 5)))],
}
ALL = [s for specs in SAMPLES.values() for s in specs]


def test_classical_examples():
    assert classical_poly(FamilySpec.laguerre(Q(5, 2)), 0) == 1
    assert classical_poly(FamilySpec.laguerre(1), 1) == Q(3, 2) - ETA


def test_energy_examples():
    spec = FamilySpec.laguerre(Q(7, 3))
    assert eigen_energy(spec, 0) == 0
    assert eigen_energy(spec, 1) == 4
    aw = SAMPLES["AW"][0]
    a1, a2, a3, a4 = aw.a
    t = aw.t
    assert eigen_energy(aw, 1) == (t ** -2 - 1) * (1 - a1 * a2 * a3 * a4)


@pytest.mark.parametrize("spec", ALL, ids=lambda s: s.family)
def test_classical_degrees(spec):
    for n in range(13):
        assert classical_poly(spec, n).degree == n


def _laguerre_step(spec, n):
    alpha = spec.g - Q(1, 2)
    p = [classical_poly(spec, m) for m in (n - 1, n, n + 1)]
    return (n + 1) * p[2] - ((2 * n + 1 + alpha) - ETA) * p[1] + (n + alpha) * p[0]


def _jacobi_step(spec, n):
    a, b = spec.g - Q(1, 2), spec.h - Q(1, 2)
    p = [classical_poly(spec, m) for m in (n - 1, n, n + 1)]
    s = 2 * n + a + b
    lhs = 2 * (n + 1) * (n + a + b + 1) * s * p[2]
    rhs = ((s + 1) * (s * (s + 2) * ETA + a * a - b * b) * p[1]
           - 2 * (n + a) * (n + b) * (s + 2) * p[0])
    return lhs - rhs


@pytest.mark.parametrize("spec", SAMPLES["L"] + SAMPLES["J"], ids=lambda s: s.family)
def test_oqm_three_term_oracle(spec):
    step = _laguerre_step if spec.family == "L" else _jacobi_step
    for n in range(1, 11):
        assert step(spec, n).is_zero()


@pytest.mark.parametrize("spec", SAMPLES["W"] + SAMPLES["AW"], ids=lambda s: s.family)
def test_idqm_three_term_property(spec):
    # η p_n lies in span(p_{n−1}, p_n, p_{n+1}) with nonzero outer coefficients
    for n in range(1, 11):
        rest = ETA * classical_poly(spec, n)
        coeffs = []
        for m in (n + 1, n, n - 1):
            pm = classical_poly(spec, m)
            c = rest.coeff(m) / pm.lc()
            coeffs.append(c)
            rest = rest - c * pm
        assert rest.is_zero()
        assert coeffs[0] and coeffs[2]


def test_seed_examples():
    spec = FamilySpec.laguerre(Q(7, 3))
    xi = virtual_seed(spec, 1, "I").xi
    assert xi.monic() == ETA + spec.g + Q(1, 2)
    j = FamilySpec.jacobi(Q(7, 3), Q(11, 4))
    xi = virtual_seed(j, 1, "I").xi
    g, h = j.g, j.h
    assert xi.monic() == ((g - h + 2) * ETA + (g + h - 1)).monic()
    with pytest.raises(UsageError):
        virtual_seed(spec, 0, "I")


@pytest.mark.parametrize("spec", ALL, ids=lambda s: s.family)
def test_seed_degrees_and_gaps(spec):
    energies = {eigen_energy(spec, n) for n in range(13)}
    for typ in ("I", "II"):
        for v in range(1, 6):
            seed = virtual_seed(spec, v, typ)
            assert seed.xi.degree == v
            if spec.family in ("L", "J") and spec.g in (Q(1), Q(2)):
                continue  # integer samples are exercised for coincidences elsewhere
            assert seed.energy not in energies


def test_oqm_tables():
    spec = FamilySpec.laguerre(Q(7, 3))
    tab = oqm_table(spec, IndexSet.parse(""), (1, "I"))
    assert (tab.e_F, tab.e_B, tab.et_F) == (Poly.const(1), ETA, -2)
    # −2(g + s_I − s_II) + 1 with s_I = 1, s_II = 0
    assert tab.et_B == -2 * (spec.g + 1) + 1
    j = FamilySpec.jacobi(Q(7, 3), Q(11, 4))
    tab = oqm_table(j, IndexSet.parse(""), (1, "II"))
    assert tab.e_F == (1 - ETA) / 2 and tab.e_B == (1 + ETA) / 2


def test_index_set():
    D = IndexSet.parse("2I,1II,1I")
    assert (D.s_I, D.s_II, len(D)) == (2, 1, 3)
    assert ell(IndexSet.parse("1I")) == 1
    assert ell(IndexSet.parse("1I,2I")) == 2
    assert ell(IndexSet.parse("1I,1II")) == 3
    with pytest.raises(DuplicateSeedError):
        IndexSet.parse("1I,1I")
    with pytest.raises(UsageError):
        IndexSet.parse("3III")


def test_spec_validation():
    with pytest.raises(UsageError):
        FamilySpec.askey_wilson(Q(1, 2), Q(1, 3), Q(1, 5), Q(1, 7), Q(1))

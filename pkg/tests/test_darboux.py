import dataclasses
import itertools

import pytest

import mindex.darboux as dx
from mindex.algebra import Poly, Q, RationalFunction
from mindex.darboux import NonPolynomial, calibrate, system
from mindex.errors import (CalibrationError, DegenerateParameterError, DuplicateSeedError,
                           UnsupportedError)
from mindex.families import FamilySpec, IndexSet, classical_poly, ell
from mindex.xbuilder import make_x

ETA = Poly.gen()
L_SPECS = [FamilySpec.laguerre(v) for v in (Q(7, 3), Q(19, 5), Q(31, 7))]
J_SPECS = [FamilySpec.jacobi(*p) for p in ((Q(7, 3), Q(11, 4)), (Q(19, 5), Q(23, 6)), (Q(29, 7), Q(17, 3)))]
W_SPECS = [FamilySpec.wilson(Q(1, 3), Q(2, 7), Q(3, 5), Q(5, 11)),
           FamilySpec.wilson(Q(3, 4), Q(1, 5), Q(2, 3), Q(7, 9)),
           FamilySpec.wilson(Q(1, 2), Q(5, 4), Q(1, 6), Q(2, 5))]
AW_SPECS = [FamilySpec.askey_wilson(Q(1, 2), Q(1, 3), Q(1, 5), Q(1, 7), Q(1, 2)),
            FamilySpec.askey_wilson(Q(2, 5), Q(1, 4), Q(1, 3), Q(3, 7), Q(1, 3)),
            FamilySpec.askey_wilson(Q(1, 3), Q(1, 2), Q(2, 7), Q(1, 6), Q(2, 5))]
SEEDS4 = [f"{v}{t}" for t in ("I", "II") for v in range(1, 5)]
SEEDS3 = [f"{v}{t}" for t in ("I", "II") for v in range(1, 4)]
OQM_DS = SEEDS4 + [f"{a},{b}" for a, b in itertools.combinations(SEEDS4, 2)]


def test_ell_examples():
    assert [ell(IndexSet.parse(d)) for d in ("1I", "1I,2I", "1I,1II")] == [1, 2, 3]


def test_xi_examples():
    spec = FamilySpec.laguerre(Q(7, 3))
    assert system(spec, "").xi == 1
    assert system(spec, "1I").xi.monic() == ETA + spec.g + Q(1, 2)
    g1 = FamilySpec.laguerre(1)
    assert system(g1, "1I,2I").xi.monic() == (4 * ETA ** 2 + 12 * ETA + 15).monic()


def test_p_examples():
    spec = FamilySpec.laguerre(Q(7, 3))
    for n in range(4):
        assert system(spec, "").p(n) == classical_poly(spec, n)
    s = system(spec, "1I")
    assert s.p(0).degree == 1
    f = s.apply_F(Poly.const(1))
    assert s.p(0) == f * (s.p(0).lc() / f.lc())
    assert system(spec, "1I,1II").p(0).degree == 3
    assert s.p(-1).is_zero()
    assert s.apply_F(Poly.zero()).is_zero()


@pytest.mark.parametrize("spec", L_SPECS + J_SPECS, ids=lambda s: f"{s.family}{s.params}")
def test_oqm_degree_laws(spec):
    for D in OQM_DS:
        s = system(spec, D)
        assert s.xi.degree == s.ell
        for n in range(9):
            assert s.p(n).degree == s.ell + n


@pytest.mark.parametrize("spec", W_SPECS + AW_SPECS, ids=lambda s: f"{s.family}{s.params}")
def test_idqm_degree_laws(spec):
    for D in SEEDS3:
        s = system(spec, D)
        assert s.xi.degree == s.ell
        for n in range(9):
            assert s.p(n).degree == s.ell + n


def test_permutation_sign():
    spec = FamilySpec.laguerre(Q(7, 3))
    a, b = system(spec, "1I,2II"), system(spec, "2II,1I")
    assert a.xi == -b.xi
    for n in range(4):
        assert a.p(n) == -b.p(n)


@pytest.mark.parametrize("spec,D", [(L_SPECS[0], "1I"), (L_SPECS[1], "1I,2II"),
                                    (J_SPECS[0], "2I,1II"), (J_SPECS[2], "1I,3I")])
def test_wronskian_matches_chain(spec, D):
    s = system(spec, D)
    ratios = set()
    for n in range(7):
        w, p = s.wronskian_p(n), s.p(n)
        c = w.lc() / p.lc()
        assert w == c * p
        ratios.add(c)
    assert len(ratios) == 1


@pytest.mark.parametrize("spec,D", [(L_SPECS[0], "1I,2II"), (J_SPECS[1], "3I,4II"),
                                    (W_SPECS[0], "2I"), (AW_SPECS[1], "3II")])
def test_round_trip_every_step(spec, D):
    s = dx.MultiIndexedSystem(spec, IndexSet.parse(D), checked=True)
    for n in range(7):
        s.p(n)
    for step in range(1, len(s.D) + 1):
        prefix = s.prefix_system(step - 1)
        for n in range(7):
            p = prefix.p(n)
            back = s.apply_B(s.apply_F(p, step=step), step=step)
            assert back == (s.energy(n) - s.seeds[step - 1].energy) * p


def test_backward_witness():
    s = system(L_SPECS[0], "1I")
    assert isinstance(s.apply_B(ETA * s.p(0)), NonPolynomial)
    x_min = (ETA * ETA / 2 + (s.spec.g + Q(1, 2)) * ETA)
    for n in range(4):
        assert not isinstance(s.apply_B(x_min * s.p(n)), NonPolynomial)


def test_calibration_examples():
    for spec in (L_SPECS[0], J_SPECS[0]):
        cal = calibrate(spec, IndexSet.parse("1I"))
        assert cal.c_F in (Q(2), Q(-4))
        assert cal.checked_n == (0, 1, 2, 3)


def test_calibration_rejects_wrong_energy(monkeypatch):
    real = dx.oqm_table

    def broken(spec, prefix, d_s):
        tab = real(spec, prefix, d_s)
        return dataclasses.replace(tab, et_B=tab.et_B + 1)

    monkeypatch.setattr(dx, "oqm_table", broken)
    with pytest.raises(CalibrationError):
        calibrate(FamilySpec.laguerre(Q(11, 3)), IndexSet.parse("1I"))


def test_coincident_member_is_absent():
    # Ẽ_1^I equals E_0 at (g, h) = (5/2, 3/2)
    s = system(FamilySpec.jacobi(Q(5, 2), Q(3, 2)), "1I")
    assert s.is_coincident(0)
    assert s.p(0).is_zero()
    assert s.p(1).degree == s.ell + 1


def test_degenerate_parameters():
    with pytest.raises(DegenerateParameterError):
        system(FamilySpec.jacobi(Q(5, 2), Q(3, 2)), "2I,3II")


def test_usage_errors():
    with pytest.raises(DuplicateSeedError):
        system(L_SPECS[0], "1I,1I")
    with pytest.raises(UnsupportedError):
        system(W_SPECS[0], "1I,2I")


def _rf(p):
    return RationalFunction(p)


@pytest.mark.parametrize("spec,D,y", [(L_SPECS[0], "1I", Poly.const(1)),
                                      (J_SPECS[0], "2II", ETA - 3)])
def test_single_step_expansion(spec, D, y):
    # B̂(X P_{d,n}) = X·B̂(P_{d,n}) − c² e^B̂ Y P_{d,n}
    s = system(spec, D)
    x = make_x(s, y).x_poly
    c, e_b = s.calibration.c_F, s.table(1).e_B
    for n in range(5):
        p = s.p(n)
        assert s.apply_B(x * p) == x * s.apply_B(p) - c * c * e_b * y * p


@pytest.mark.parametrize("spec,D,y", [(L_SPECS[0], "1I,2II", Poly.const(1)),
                                      (J_SPECS[1], "2I,1II", 2 * ETA + 1),
                                      (L_SPECS[2], "3I,1I", ETA)])
def test_two_step_expansion(spec, D, y):
    # the two-step expansion of B̂_{d1}B̂_{d1d2}(X P_{d1d2,n}) term by term
    s = system(spec, D)
    x = make_x(s, y).x_poly
    c = s.calibration.c_F
    tab1, tab2 = s.table(1), s.table(2)
    xi1, xi12 = s.prefix_system(1).xi, s.xi
    for n in range(5):
        p2 = s.p(n)
        q1 = s.apply_B(p2, step=2)
        lhs = s.apply_B(s.apply_B(x * p2, step=2), step=1)
        rhs = (_rf(x * s.apply_B(q1, step=1))
               - _rf(c ** 2 * tab1.e_B * xi12 * y * q1) / _rf(xi1)
               + _rf(c ** 4 * tab1.e_B * (tab2.e_B * y * p2).derivative())
               + _rf(c ** 4 * tab1.e_B * tab2.e_B * xi1.derivative() * y * p2) / _rf(xi1)
               - _rf(c ** 3 * tab1.et_B * tab2.e_B * y * p2))
        assert rhs.is_polynomial() and rhs.as_poly() == lhs

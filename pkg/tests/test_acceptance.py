"""Exit criteria for the package, one test per criterion.

A pass/fail line per criterion is printed in the terminal summary.
"""
import math

import numpy as np
import pytest

from bohrlab.cli import main
from bohrlab.domain import CoefficientSeries, Normalization
from bohrlab.extremal import (
    NEAR_ONE,
    ExtremalParams,
    GKind,
    extremal_cesaro_closed_form,
    extremal_coeffs,
    residual_g,
    sharpness_margin,
)
from bohrlab.figures import sign_changes
from bohrlab.operators import BoundKind, Operator, cesaro_majorant, majorant, target_bound
from bohrlab.radius import ProblemTag, RadiusProblem, radius_for
from bohrlab.testfn import bounded_test_series, check_coefficient_lemma, compose_affine_pullback

GAMMAS = (0.0, 0.25, 0.5, 0.75)
BETAS = (0.5, 1.0, 2.0, 5.0)


def root(tag, **kw):
    return radius_for(RadiusProblem(tag, **kw)).root


def test_c01a_radius_cesaro(record):
    th1 = root(ProblemTag.CESARO_TH1)
    ok = abs(th1 - 0.533589) <= 5e-6
    record("1a radius Th1 = 0.533589 +- 5e-6", ok, f"root={th1:.12f}")
    assert ok


def test_c01b_radius_cesaro_omega_at_zero(record):
    # same equation as Th1 (factor 3 + gamma = 3), so its root is 0.5335892...
    thd0 = root(ProblemTag.CESARO_OMEGA, gamma=0.0)
    ok = abs(thd0 - 0.5335) <= 5e-5
    record("1b radius ThD(0) = 0.5335 +- 5e-5", ok, f"root={thd0:.12f} |diff|={abs(thd0 - 0.5335):.2e}")
    assert ok, f"ThD(0) root {thd0:.12f} is {abs(thd0 - 0.5335):.2e} from 0.5335"


def test_c01c_radius_dft(record):
    dft = root(ProblemTag.DFT)
    ok = dft == 1 / 3
    record("1c radius Th3 = 1/3 exactly", ok, f"root={dft!r}")
    assert ok


def test_c02_cross_equation_consistency(record):
    worst = 0.0
    for beta in BETAS:
        th2 = root(ProblemTag.BERNARDI_TH2, beta=beta)
        worst = max(worst, abs(root(ProblemTag.BERNARDI_THC, beta=beta, m=0) - th2))
        worst = max(worst, abs(root(ProblemTag.BERNARDI_OMEGA, gamma=0.0, beta=beta) - th2))
    ok = worst <= 1e-10
    record("2 ThC(m=0) = Th2 = ThE(gamma=0) within 1e-10", ok, f"max diff={worst:.2e}")
    assert ok


def _independent_bisection(f, lo, hi, width=1e-14):
    flo = f(lo)
    while hi - lo > width:
        mid = (lo + hi) / 2
        if (f(mid) > 0) == (flo > 0):
            lo, flo = mid, f(mid)
        else:
            hi = mid
    return (lo + hi) / 2


def test_c03_derived_root_oracle(record):
    oracle = _independent_bisection(lambda x: 3 * x + 2 * math.log(1 - x), 0.1, 0.9)
    got = root(ProblemTag.BERNARDI_TH2, beta=1.0)
    ok = abs(got - oracle) <= 1e-8
    record("3 Th2(beta=1) vs 3x + 2log(1-x) = 0 within 1e-8", ok, f"root={got:.12f} oracle={oracle:.12f}")
    assert ok


def test_c04_lemma2_property_suite(record):
    worst = -np.inf
    for s in bounded_test_series(seed=2024, count=1000, gammas=GAMMAS):
        rep = check_coefficient_lemma(s)
        m = np.abs(s.coeffs)
        n = np.arange(1, s.order + 1)
        direct = np.max(m[1:] - (1 - s.gamma) ** n * (1 - m[0] ** 2))
        assert rep.max_violation == pytest.approx(direct, abs=1e-15)
        worst = max(worst, rep.max_violation)
    ok = worst <= 1e-9
    record("4 Lemma 2 on 1000 Blaschke pullbacks below 1e-9", ok, f"max violation={worst:.2e}")
    assert ok


def test_c05_attainment(record):
    kinds = [BoundKind.cesaro(), BoundKind.dft()] + [BoundKind.bernardi(b) for b in BETAS]
    worst = 0.0
    for kind in kinds:
        gammas = (0.0,) if kind.tag is Operator.DFT else GAMMAS
        for g in gammas:
            one = CoefficientSeries.polynomial([1.0], gamma=g)
            for rho in (0.1, 0.3, 0.5, 0.9):
                worst = max(worst, abs(majorant(kind, one, rho, 1e-14).value - target_bound(kind, rho)))
    ok = worst <= 1e-12
    record("5 constant f = 1 attains each bound within 1e-12", ok, f"max gap={worst:.2e}")
    assert ok


def _radius(kind):
    if kind.tag is Operator.CESARO:
        return root(ProblemTag.CESARO_TH1)
    if kind.tag is Operator.BERNARDI:
        return root(ProblemTag.BERNARDI_TH2, beta=kind.beta)
    return root(ProblemTag.DFT)


def test_c06_main_inequalities(record):
    base = list(bounded_test_series(seed=6, count=200, gammas=(0.0,)))
    cases = [
        (BoundKind.cesaro(), GAMMAS),
        (BoundKind.bernardi(1.0), GAMMAS),
        (BoundKind.dft(Normalization.PER_OUTER), (0.0,)),
        (BoundKind.dft(Normalization.PER_INDEX), GAMMAS),
    ]
    all_ok = True
    for kind, gammas in cases:
        rhos = np.linspace(0.0, _radius(kind), 20)
        worst = -np.inf
        for g in gammas:
            for s in base:
                pulled = compose_affine_pullback(s, g)
                for rho in rhos:
                    worst = max(worst, majorant(kind, pulled, rho).value - target_bound(kind, rho))
        ok = worst <= 1e-9
        all_ok &= ok
        record(f"6 majorant <= bound + 1e-9 [{kind.label}, gamma in {list(gammas)}]", ok,
               f"max excess={worst:.2e}")
    assert all_ok


def test_c06_note_printed_dft_normalization_fails_off_unit_disk():
    # documents why the outer-index DFT form is only held to gamma = 0 above
    one = CoefficientSeries.polynomial([1.0], gamma=0.25)
    assert majorant(BoundKind.dft(), one, 1 / 3).value > target_bound(BoundKind.dft(), 1 / 3)


def test_c07_sharpness(record):
    cases = [
        (BoundKind.cesaro(), 0.3),
        (BoundKind.bernardi(1.0), 0.3),
        (BoundKind.dft(Normalization.PER_OUTER), 0.0),
        (BoundKind.dft(Normalization.PER_INDEX), 0.3),
    ]
    all_ok = True
    for kind, g in cases:
        r = _radius(kind)
        above = max(sharpness_margin(kind, ExtremalParams(a, g), r + 0.01) for a in NEAR_ONE)
        below = max(sharpness_margin(kind, ExtremalParams(a, g), r - 0.01) for a in NEAR_ONE)
        ok = above > 1e-6 and below <= 1e-9
        all_ok &= ok
        record(f"7 sharpness [{kind.label}, gamma={g}]", ok, f"max margin above={above:.2e} below={below:.2e}")
    assert all_ok


def test_c08_closed_form_oracle(record):
    worst = 0.0
    for a in np.linspace(0.05, 0.95, 10):
        for rho in np.linspace(0.05, 0.95, 10):
            order = int(math.ceil(math.log(1e-17) / math.log(a * rho))) + 10
            series = cesaro_majorant(extremal_coeffs(ExtremalParams(a, 0.4), order), rho, 1e-12).value
            worst = max(worst, abs(series - extremal_cesaro_closed_form(a, rho)))
    ok = worst <= 1e-10
    record("8 closed-form Cesaro majorant vs series on 10x10 grid", ok, f"max diff={worst:.2e}")
    assert ok


def test_c09_residual_identities(record):
    a_vals = np.arange(1, 10) / 10
    g3 = max(abs(residual_g(GKind.G3, a, 1 / 3) - 2 * (1 - a) ** 2 / (a - 3)) for a in a_vals)
    ok_g3 = g3 <= 1e-12
    record("9a G3(a, 1/3) = 2(1-a)^2/(a-3) within 1e-12", ok_g3, f"max diff={g3:.2e}")
    decay_ok = True
    for kind, rho, beta in [(GKind.G1, 0.6, None), (GKind.G2, 0.6, 1.0), (GKind.G3, 1 / 3, None)]:
        ref = abs(residual_g(kind, 0.9, rho, beta)) / 0.01
        ratios = [abs(residual_g(kind, a, rho, beta)) / (1 - a) ** 2 for a in NEAR_ONE[1:]]
        ok = max(ratios) <= 2 * ref
        decay_ok &= ok
        record(f"9b {kind.value} quadratic decay at rho={rho:.4g}", ok,
               f"ratio(0.9)={ref:.4f} max ratio={max(ratios):.4f}")
    assert ok_g3 and decay_ok


def test_c10_figure_data(tmp_path, record):
    assert main(["figures", "--out", str(tmp_path)]) == 0
    fig3 = np.loadtxt(tmp_path / "fig3_cesaro_radius_equation.csv", delimiter=",", skiprows=1)
    interior = fig3[fig3[:, 0] > 0]
    changes = sign_changes(interior[:, 1])
    rho0 = root(ProblemTag.CESARO_TH1)
    ok3 = len(changes) == 1 and interior[changes[0], 0] < rho0 < interior[changes[0] + 1, 0]
    fig2 = np.loadtxt(tmp_path / "fig2_cesaro_curvature.csv", delimiter=",", skiprows=1)
    ok2 = bool(np.all(fig2[:, 1] <= 0))
    record("10a Fig.3 data changes sign once, around rho0", ok3, f"sign changes={len(changes)}")
    record("10b Fig.2 data <= 0 on [0,1)", ok2, f"max={fig2[:, 1].max():.2e}")
    assert ok3 and ok2

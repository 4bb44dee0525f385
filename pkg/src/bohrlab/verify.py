"""Property suite behind the ``verify`` command.

Each check returns its worst observed residual together with the threshold
it is held to, so reports show how much room is left, not just pass/fail.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable

import numpy as np

from .domain import CoefficientSeries, Normalization
from .extremal import NEAR_ONE, ExtremalParams, sharpness_margin
from .operators import BoundKind, Operator, majorant, target_bound
from .radius import ProblemTag, RadiusProblem, defining_residual, radius_for
from .report import Table
from .testfn import (
    blaschke_taylor,
    check_coefficient_lemma,
    compose_affine_pullback,
    random_blaschke,
)

LEMMA_GAMMAS = (0.0, 0.25, 0.5, 0.75)
ATTAINMENT_RHOS = (0.1, 0.3, 0.5, 0.9)
SLACK = 1e-9
ATTAIN_TOL = 1e-12
SHARP_MIN = 1e-6
SHARPNESS_GAMMA = 0.3
BERNARDI_BETAS = (0.5, 1.0, 2.0, 5.0)


@dataclass(frozen=True)
class CheckResult:
    name: str
    passed: bool
    worst: float
    threshold: float
    detail: str = ""


@dataclass
class VerifyReport:
    seed: int
    checks: list = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    def table(self) -> Table:
        rows = [[c.name, c.passed, c.worst, c.threshold, c.detail] for c in self.checks]
        doc = {
            "seed": self.seed,
            "passed": self.passed,
            "checks": [
                {"name": c.name, "passed": c.passed, "worst": c.worst,
                 "threshold": c.threshold, "detail": c.detail}
                for c in self.checks
            ],
        }
        return Table(["check", "passed", "worst", "threshold", "detail"], rows, doc)


def _unit_disk_series(seed: int, count: int, order: int = 200):
    rng = np.random.default_rng(seed)
    return [blaschke_taylor(random_blaschke(rng), order) for _ in range(count)]


def radius_of(kind: BoundKind) -> float:
    """Radius up to which ``kind``'s inequality holds on the shifted disk."""
    if kind.tag is Operator.CESARO:
        return radius_for(RadiusProblem(ProblemTag.CESARO_TH1)).root
    if kind.tag is Operator.BERNARDI:
        return radius_for(RadiusProblem(ProblemTag.BERNARDI_TH2, beta=kind.beta)).root
    if kind.tag is Operator.DFT:
        return radius_for(RadiusProblem(ProblemTag.DFT)).root
    return 1.0 / 3.0


def inequality_cases():
    """(kind, gammas) pairs for which the printed inequality is claimed.

    The DFT majorant with the outer-index normalization exceeds 1/(1-rho)
    already for the constant function once gamma > 0, so it is checked at
    gamma = 0 only; the index-normalized variant is checked at every gamma.
    """
    return [
        (BoundKind.cesaro(), LEMMA_GAMMAS),
        (BoundKind.bernardi(1.0), LEMMA_GAMMAS),
        (BoundKind.bernardi(2.0), LEMMA_GAMMAS),
        (BoundKind.dft(Normalization.PER_OUTER), (0.0,)),
        (BoundKind.dft(Normalization.PER_INDEX), LEMMA_GAMMAS),
    ]


def check_lemma2(seed: int, count: int = 1000) -> CheckResult:
    base = _unit_disk_series(seed, count)
    worst = max(
        check_coefficient_lemma(compose_affine_pullback(s, LEMMA_GAMMAS[i % 4])).max_violation
        for i, s in enumerate(base)
    )
    return CheckResult("lemma2-coefficients", worst <= SLACK, worst, SLACK,
                       f"{count} Blaschke pullbacks, gamma in {list(LEMMA_GAMMAS)}")


def check_lemma1(seed: int, count: int = 200) -> CheckResult:
    worst = -np.inf
    for s in _unit_disk_series(seed + 1, count):
        m = s.moduli
        worst = max(worst, float(np.max(m[1:] - (1.0 - m[0] ** 2))))
    return CheckResult("lemma1-at-origin", worst <= SLACK, worst, SLACK,
                       f"|a_n| <= 1-|a_0|^2 for {count} unit-disk series")


def check_boundary_modulus(seed: int, count: int = 200) -> CheckResult:
    z = 0.9 * np.exp(2j * np.pi * np.arange(64) / 64)
    worst = -np.inf
    for s in _unit_disk_series(seed + 2, count):
        vals = np.polynomial.polynomial.polyval(z, s.coeffs)
        worst = max(worst, float(np.max(np.abs(vals))) - 1.0)
    return CheckResult("truncation-modulus-0.9", worst <= SLACK, worst, SLACK,
                       "max |sum a_n z^n| - 1 on |z| = 0.9")


def check_attainment() -> CheckResult:
    one = CoefficientSeries.polynomial([1.0])
    kinds = [BoundKind.cesaro(), BoundKind.dft(), BoundKind.dft(Normalization.PER_INDEX)]
    kinds += [BoundKind.bernardi(b) for b in BERNARDI_BETAS]
    worst = 0.0
    for kind in kinds:
        for rho in ATTAINMENT_RHOS:
            gap = abs(majorant(kind, one, rho, 1e-14).value - target_bound(kind, rho))
            worst = max(worst, gap)
    return CheckResult("attainment-constant", worst <= ATTAIN_TOL, worst, ATTAIN_TOL,
                       f"f = 1 at rho in {list(ATTAINMENT_RHOS)}")


def check_main_inequalities(seed: int, count: int = 200, n_rho: int = 20) -> list[CheckResult]:
    base = _unit_disk_series(seed + 3, count)
    out = []
    for kind, gammas in inequality_cases():
        radius = radius_of(kind)
        rhos = np.linspace(0.0, radius, n_rho)
        worst = -np.inf
        for g in gammas:
            for s in base:
                pulled = compose_affine_pullback(s, g)
                for rho in rhos:
                    excess = majorant(kind, pulled, rho).value - target_bound(kind, rho)
                    worst = max(worst, excess)
        out.append(CheckResult(f"inequality-{kind.label}", worst <= SLACK, worst, SLACK,
                               f"{count} functions, gamma in {list(gammas)}, rho in [0, {radius:.6f}]"))
    return out


def sharpness_cases():
    return [
        (BoundKind.cesaro(), SHARPNESS_GAMMA),
        (BoundKind.bernardi(1.0), SHARPNESS_GAMMA),
        (BoundKind.dft(Normalization.PER_OUTER), 0.0),
        (BoundKind.dft(Normalization.PER_INDEX), SHARPNESS_GAMMA),
    ]


def check_sharpness() -> list[CheckResult]:
    out = []
    for kind, gamma in sharpness_cases():
        radius = radius_of(kind)
        below = max(sharpness_margin(kind, ExtremalParams(a, gamma), radius - 0.01) for a in NEAR_ONE)
        out.append(CheckResult(f"below-radius-{kind.label}", below <= SLACK, below, SLACK,
                               f"max margin at rho = radius - 0.01, gamma = {gamma}"))
        for step in (0.01, 0.05):
            above = max(sharpness_margin(kind, ExtremalParams(a, gamma), radius + step) for a in NEAR_ONE)
            out.append(CheckResult(f"above-radius+{step}-{kind.label}", above > SHARP_MIN, above,
                                   SHARP_MIN, f"max margin over a in {list(NEAR_ONE)}"))
    return out


def all_problems():
    probs = [RadiusProblem(ProblemTag.CESARO_TH1), RadiusProblem(ProblemTag.DFT)]
    probs += [RadiusProblem(ProblemTag.CESARO_OMEGA, gamma=g) for g in np.arange(10) / 10]
    probs += [RadiusProblem(ProblemTag.BERNARDI_TH2, beta=b) for b in BERNARDI_BETAS]
    probs += [RadiusProblem(ProblemTag.BERNARDI_THC, beta=b, m=m) for b in BERNARDI_BETAS for m in (0, 1, 3)]
    probs += [RadiusProblem(ProblemTag.BERNARDI_OMEGA, gamma=g, beta=b) for g in LEMMA_GAMMAS for b in BERNARDI_BETAS]
    return probs


def check_certificates() -> CheckResult:
    worst = 0.0
    ok = True
    for p in all_problems():
        cert = radius_for(p)
        lo, hi = cert.bracket
        ok &= hi - lo <= 1e-12 and abs(cert.residual_at_root) <= 1e-10
        ok &= defining_residual(p, lo) >= 0 >= defining_residual(p, hi)
        ok &= defining_residual(p, cert.root / 2) > 0 > defining_residual(p, (1 + cert.root) / 2)
        worst = max(worst, abs(cert.residual_at_root))
    return CheckResult("root-certificates", bool(ok), worst, 1e-10,
                       f"{len(all_problems())} problems: bracket width, residual, sign convention")


SUITE: dict[str, Callable] = {
    "lemma2": check_lemma2,
    "lemma1": check_lemma1,
    "boundary": check_boundary_modulus,
}


def run_suite(seed: int = 42) -> VerifyReport:
    report = VerifyReport(seed)
    for check in SUITE.values():
        report.checks.append(check(seed))
    report.checks.append(check_attainment())
    report.checks.extend(check_main_inequalities(seed))
    report.checks.extend(check_sharpness())
    report.checks.append(check_certificates())
    return report

"""Radius equations and a certified bisection solver.

Each radius is the unique zero in (0, 1) of a residual that is positive below
the radius and negative above it.  Roots come with a sign-change bracket.
"""
from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from typing import Callable, Optional

import numpy as np

from .domain import check_gamma
from .errors import BracketError, DomainError, NumericError

__all__ = [
    "ProblemTag",
    "RadiusProblem",
    "RootCertificate",
    "shifted_harmonic_sum",
    "defining_residual",
    "solve_bracketed_root",
    "radius_for",
    "BRACKET",
]

BRACKET = (1e-9, 1.0 - 1e-9)
ROOT_TOL = 1e-12
MAX_ITER = 200
SERIES_TOL = 1e-15
_DIRECT_LIMIT = 0.9
_TERM_BUDGET = 2_000_000


class ProblemTag(enum.Enum):
    CESARO_TH1 = "cesaro-th1"
    CESARO_OMEGA = "cesaro-omega"
    BERNARDI_TH2 = "bernardi-th2"
    BERNARDI_THC = "bernardi-thc"
    BERNARDI_OMEGA = "bernardi-omega"
    DFT = "dft"


@dataclass(frozen=True)
class RadiusProblem:
    tag: ProblemTag
    gamma: float = 0.0
    beta: Optional[float] = None
    m: int = 0

    def __post_init__(self):
        check_gamma(self.gamma)
        if self.m < 0 or int(self.m) != self.m:
            raise DomainError("m must be a nonnegative integer")
        if self.tag is ProblemTag.BERNARDI_THC:
            if self.beta is None or not self.beta > -self.m:
                raise DomainError(f"need beta > -m, got beta={self.beta!r}, m={self.m}")
            if self.m == 0 and not self.beta > 0:
                raise DomainError("m = 0 requires beta > 0")
        elif self.tag in (ProblemTag.BERNARDI_TH2, ProblemTag.BERNARDI_OMEGA):
            if self.beta is None or not self.beta > 0:
                raise DomainError(f"beta must be positive, got {self.beta!r}")

    @property
    def label(self) -> str:
        parts = [self.tag.value]
        if self.tag in (ProblemTag.CESARO_OMEGA, ProblemTag.BERNARDI_OMEGA):
            parts.append(f"gamma={self.gamma:g}")
        if self.beta is not None:
            parts.append(f"beta={self.beta:g}")
        if self.tag is ProblemTag.BERNARDI_THC:
            parts.append(f"m={self.m}")
        return " ".join(parts)


@dataclass(frozen=True)
class RootCertificate:
    root: float
    bracket: tuple[float, float]
    residual_at_root: float
    iterations: int


def shifted_harmonic_sum(x: float, b: float) -> tuple[float, float]:
    """sum_{n>=1} x^n / (n + b) for 0 <= x < 1, b > 0, with an error bound.

    Near x = 1 the sum is split as -log(1-x) - b * sum x^n/(n(n+b)); the
    second series has terms O(1/n^2) and stays summable up to the boundary.
    """
    if x == 0.0:
        return 0.0, 0.0
    if x <= _DIRECT_LIMIT:
        need = math.log(SERIES_TOL * (1.0 - x)) / math.log(x)
        N = max(1, int(math.ceil(need)))
        n = np.arange(1, N + 1, dtype=float)
        value = float(np.sum(x**n / (n + b)))
        return value, x ** (N + 1) / ((N + 1 + b) * (1.0 - x))
    need = math.log(SERIES_TOL * (1.0 - x)) / math.log(x)
    N = min(_TERM_BUDGET, max(1, int(math.ceil(need))))
    n = np.arange(1, N + 1, dtype=float)
    rest = float(np.sum(np.exp(n * math.log(x)) / (n * (n + b))))
    err = min(x ** (N + 1) / ((N + 1) * (N + 1 + b) * (1.0 - x)), 1.0 / N)
    return -math.log1p(-x) - b * rest, b * err


def defining_residual(problem: RadiusProblem, x: float) -> float:
    """Residual whose zero in (0, 1) is the radius; positive below the root.

    For Theorem C's equation the printed residual is divided by x^m, which
    keeps the zero set and avoids underflow for small x.
    """
    x = float(x)
    if not 0.0 < x < 1.0:
        raise DomainError(f"x must lie in (0, 1), got {x!r}")
    tag = problem.tag
    if tag is ProblemTag.CESARO_TH1:
        return -2.0 * x - 3.0 * (1.0 - x) * math.log1p(-x)
    if tag is ProblemTag.CESARO_OMEGA:
        return -(3.0 + problem.gamma) * (1.0 - x) * math.log1p(-x) - 2.0 * x
    if tag is ProblemTag.BERNARDI_TH2:
        s, _ = shifted_harmonic_sum(x, problem.beta)
        return 1.0 / problem.beta - 2.0 * s
    if tag is ProblemTag.BERNARDI_THC:
        b = problem.m + problem.beta
        s, _ = shifted_harmonic_sum(x, b)
        return 1.0 / b - 2.0 * s
    if tag is ProblemTag.BERNARDI_OMEGA:
        s, _ = shifted_harmonic_sum(x, problem.beta)
        return 1.0 / problem.beta - 2.0 / (1.0 + problem.gamma) * s
    return 1.0 - 3.0 * x


def _finite(value: float, where: float) -> float:
    if not math.isfinite(value):
        raise NumericError(f"residual is not finite at x={where!r}")
    return value


def solve_bracketed_root(
    residual: Callable[[float], float],
    lo: float,
    hi: float,
    tol: float = ROOT_TOL,
    max_iter: int = MAX_ITER,
) -> RootCertificate:
    """Bisection that keeps a sign change between the bracket ends."""
    if not lo < hi:
        raise BracketError(f"need lo < hi, got [{lo}, {hi}]")
    if not tol > 0:
        raise ValueError("tol must be positive")
    flo = _finite(residual(lo), lo)
    fhi = _finite(residual(hi), hi)
    if flo == 0.0:
        return RootCertificate(lo, (lo, lo), 0.0, 0)
    if fhi == 0.0:
        return RootCertificate(hi, (hi, hi), 0.0, 0)
    if (flo > 0) == (fhi > 0):
        raise BracketError(f"no sign change on [{lo}, {hi}]: f(lo)={flo:.3e}, f(hi)={fhi:.3e}")
    it = 0
    while hi - lo > tol:
        if it >= max_iter:
            raise NumericError(f"bisection did not reach width {tol} in {max_iter} steps")
        mid = 0.5 * (lo + hi)
        if not lo < mid < hi:
            break
        fm = _finite(residual(mid), mid)
        it += 1
        if fm == 0.0:
            return RootCertificate(mid, (mid, mid), 0.0, it)
        if (fm > 0) == (flo > 0):
            lo, flo = mid, fm
        else:
            hi, fhi = mid, fm
    root = 0.5 * (lo + hi)
    return RootCertificate(root, (lo, hi), _finite(residual(root), root), it)


def radius_for(problem: RadiusProblem) -> RootCertificate:
    if problem.tag is ProblemTag.DFT:
        third = 1.0 / 3.0
        bracket = (float(np.nextafter(third, 0.0)), float(np.nextafter(third, 1.0)))
        return RootCertificate(third, bracket, defining_residual(problem, third), 0)
    return solve_bracketed_root(lambda x: defining_residual(problem, x), *BRACKET)

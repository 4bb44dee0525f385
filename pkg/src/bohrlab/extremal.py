"""Extremal Mobius family and the sharpness margins built from it.

f(z) = psi(gamma + (1-gamma) z) with psi(w) = (a - w)/(1 - a w).  Expanded
about the centre of the shifted disk, f = A_0 - sum A_n (z + gamma/(1-gamma))^n
with A_0 = a and A_n = a^(n-1) (1 - a^2) (1 - gamma)^n.  As a -> 1 these
functions push each majorant past its bound for every rho above the radius.
"""
from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from typing import Optional, Sequence

import numpy as np

from .domain import CoefficientSeries, check_gamma
from .errors import DivergenceError, DomainError
from .operators import BoundKind, Operator, majorant, target_bound
from .radius import shifted_harmonic_sum

__all__ = [
    "ExtremalParams",
    "MarginTable",
    "GKind",
    "extremal_coeffs",
    "extremal_series",
    "extremal_cesaro_closed_form",
    "residual_g",
    "sharpness_margin",
    "sweep_margins",
    "NEAR_ONE",
]

NEAR_ONE = (0.9, 0.99, 0.999, 0.9999)
SHARPNESS_TOL = 1e-12
_MAX_ORDER = 20_000


@dataclass(frozen=True)
class ExtremalParams:
    a: float
    gamma: float = 0.0

    def __post_init__(self):
        if not 0.0 < self.a < 1.0:
            raise DomainError(f"a must lie in (0, 1), got {self.a!r}")
        check_gamma(self.gamma)


def extremal_coeffs(params: ExtremalParams, order: int) -> CoefficientSeries:
    """Signed coefficients [A_0, -A_1, -A_2, ...] through ``order``.

    Past ``order`` the normalized moduli are a^(n-1)(1-a^2) <= a^order (1-a^2),
    which is recorded as the tail cap.
    """
    if order < 0:
        raise ValueError("order must be nonnegative")
    a, c = params.a, 1.0 - params.gamma
    n = np.arange(1, order + 1)
    coeffs = np.empty(order + 1)
    coeffs[0] = a
    coeffs[1:] = -(a ** (n - 1)) * (1.0 - a * a) * c**n
    return CoefficientSeries(
        gamma=params.gamma, coeffs=coeffs, tail_cap=a**order * (1.0 - a * a), bounded=True
    )


def extremal_series(params: ExtremalParams, rho: float, tol: float = SHARPNESS_TOL) -> CoefficientSeries:
    """Extremal coefficients with enough terms for tail bounds below ``tol``."""
    if rho <= 0.0:
        return extremal_coeffs(params, 1)
    x = rho / (1.0 - params.gamma)
    worst = x if x < 1.0 else rho
    # every majorant tail is at most 2 * cap * rho^(N+1) / (1 - worst)^2
    need = math.log(tol * (1.0 - worst) ** 2 / 4.0) / math.log(params.a * rho)
    return extremal_coeffs(params, min(_MAX_ORDER, max(1, int(math.ceil(need)))))


def _log_ratio(t: float) -> float:
    """-log(1 - t)/t, equal to 1 at t = 0."""
    if t < 1e-4:
        return 1.0 + t / 2.0 + t * t / 3.0 + t**3 / 4.0
    return -math.log1p(-t) / t


def extremal_cesaro_closed_form(a: float, rho: float) -> float:
    """Cesaro majorant of the extremal family in closed form.

    -(1/rho) log(1-rho) - (2a/rho) log(1-rho) + ((1+a)/(a rho)) log(1 - a rho);
    independent of gamma.
    """
    if not 0.0 <= rho < 1.0:
        raise DivergenceError(f"rho must lie in [0, 1), got {rho!r}")
    if not 0.0 < a <= 1.0:
        raise DomainError(f"a must lie in (0, 1], got {a!r}")
    L = _log_ratio(rho)
    return (1.0 + 2.0 * a) * L - (1.0 + a) * _log_ratio(a * rho)


class GKind(enum.Enum):
    G1 = "G1"
    G2 = "G2"
    G3 = "G3"


def residual_g(kind: GKind, a: float, rho: float, beta: Optional[float] = None) -> float:
    """Second-order remainder left after the first-order sharpness term.

    Each vanishes like (1-a)^2 as a -> 1.  G2 needs ``beta``.
    """
    if not 0.0 < rho < 1.0:
        raise DomainError(f"rho must lie in (0, 1), got {rho!r}")
    if kind is GKind.G1:
        return (
            (3.0 - a) * _log_ratio(rho)
            - 2.0 * (1.0 - a) / (1.0 - rho)
            - (1.0 + a) * _log_ratio(a * rho)
        )
    if kind is GKind.G3:
        return 2.0 * a - (1.0 + a) * (1.0 - rho) / (1.0 - a * rho)
    if beta is None or not beta > 0:
        raise DomainError("G2 needs beta > 0")
    # coefficients (1-a)((1+a) a^(n-1) - 2) are bounded by 2 in modulus
    N = max(1, int(math.ceil(math.log(1e-16 * (1.0 - rho)) / math.log(rho))))
    n = np.arange(1, N + 1)
    coef = (1.0 - a) * ((1.0 + a) * a ** (n - 1) - 2.0)
    return float(np.sum(coef * rho**n / (n + beta)))


def upper_envelope(kind: BoundKind, a: float, rho: float) -> float:
    """a * (constant-term factor) + (1 - a^2) * (tail factor).

    This is the bound obtained by replacing every |a_n|, n >= 1, by the
    coefficient bound; the inequalities follow from its monotonicity in a.
    """
    if kind.tag is Operator.CESARO:
        head = _log_ratio(rho)
        tail = 1.0 / (1.0 - rho) - head
    elif kind.tag is Operator.BERNARDI:
        head = 1.0 / kind.beta
        tail = shifted_harmonic_sum(rho, kind.beta)[0]
    elif kind.tag is Operator.DFT:
        head = 1.0 / (1.0 - rho)
        tail = rho / (1.0 - rho) ** 2
    else:
        head = 1.0
        tail = rho / (1.0 - rho)
    return a * head + (1.0 - a * a) * tail


def cesaro_envelope_curvature(rho):
    """Second a-derivative of the Cesaro envelope: -2 (1/(1-rho) + log(1-rho)/rho)."""
    rho = np.atleast_1d(np.asarray(rho, dtype=float))
    out = np.empty_like(rho)
    for i, r in enumerate(rho):
        if r < 1e-3:
            # sum_{n>=1} n/(n+1) r^n
            out[i] = -2.0 * (r / 2.0 + 2.0 * r**2 / 3.0 + 3.0 * r**3 / 4.0 + 4.0 * r**4 / 5.0)
        else:
            out[i] = -2.0 * (1.0 / (1.0 - r) - _log_ratio(r))
    return out


def sharpness_margin(kind: BoundKind, params: ExtremalParams, rho: float, tol: float = SHARPNESS_TOL) -> float:
    """Extremal majorant minus the bound; positive means the bound fails."""
    series = extremal_series(params, rho, tol)
    return majorant(kind, series, rho, tol).value - target_bound(kind, rho)


@dataclass(frozen=True, eq=False)
class MarginTable:
    operator: BoundKind
    gamma: float
    a_grid: np.ndarray
    rho_grid: np.ndarray
    margins: np.ndarray

    def rows(self):
        """(a, rho, margin) triples in row-major order."""
        for i, a in enumerate(self.a_grid):
            for j, rho in enumerate(self.rho_grid):
                yield float(a), float(rho), float(self.margins[i, j])


def _check_grid(name: str, grid: Sequence[float]) -> np.ndarray:
    g = np.asarray(grid, dtype=float).ravel()
    if g.size == 0:
        raise DomainError(f"{name} grid is empty")
    if np.any(g <= 0.0) or np.any(g >= 1.0):
        raise DomainError(f"{name} grid must lie inside (0, 1)")
    if np.any(np.diff(g) <= 0.0):
        raise DomainError(f"{name} grid must be strictly increasing")
    return g


def sweep_margins(kind: BoundKind, gamma: float, a_grid, rho_grid) -> MarginTable:
    a_grid = _check_grid("a", a_grid)
    rho_grid = _check_grid("rho", rho_grid)
    margins = np.array(
        [[sharpness_margin(kind, ExtremalParams(a, gamma), rho) for rho in rho_grid] for a in a_grid]
    )
    return MarginTable(kind, check_gamma(gamma), a_grid, rho_grid, margins)

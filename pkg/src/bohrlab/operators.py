"""Majorant series of the Cesaro, Bernardi and DFT transforms.

All majorants are evaluated on the circle |gamma + (1-gamma) z| = rho.  Every
result carries a certified tail bound: the exact infinite sum lies in
[value, value + tail_bound].  Coefficients past the stored order are only
known through ``series.tail_cap`` (a bound on |a_n|/(1-gamma)^n), so the
unknown part of each tail is bounded using that cap.
"""
from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from typing import Optional

import numpy as np

from .domain import CoefficientSeries, Normalization
from .errors import DivergenceError, DomainError, TruncationError

__all__ = [
    "Operator",
    "BoundKind",
    "MajorantValue",
    "bohr_majorant",
    "cesaro_majorant",
    "bernardi_majorant",
    "dft_majorant",
    "majorant",
    "dft_coefficient_transform",
    "target_bound",
    "cesaro_bound",
]

DEFAULT_TOL = 1e-12


class Operator(enum.Enum):
    PLAIN = "plain"
    CESARO = "cesaro"
    BERNARDI = "bernardi"
    DFT = "dft"


@dataclass(frozen=True)
class BoundKind:
    """Which majorant to evaluate and which bound it is compared with."""

    tag: Operator
    beta: Optional[float] = None
    scheme: Normalization = Normalization.PER_OUTER

    def __post_init__(self):
        if self.tag is Operator.BERNARDI:
            if self.beta is None or not self.beta > 0:
                raise DomainError(f"Bernardi bound needs beta > 0, got {self.beta!r}")

    @classmethod
    def plain(cls):
        return cls(Operator.PLAIN)

    @classmethod
    def cesaro(cls):
        return cls(Operator.CESARO)

    @classmethod
    def bernardi(cls, beta: float):
        return cls(Operator.BERNARDI, beta=float(beta))

    @classmethod
    def dft(cls, scheme: Normalization = Normalization.PER_OUTER):
        return cls(Operator.DFT, scheme=scheme)

    @property
    def label(self) -> str:
        if self.tag is Operator.BERNARDI:
            return f"bernardi(beta={self.beta:g})"
        if self.tag is Operator.DFT and self.scheme is Normalization.PER_INDEX:
            return "dft(per-index)"
        return self.tag.value


@dataclass(frozen=True)
class MajorantValue:
    value: float
    truncation_order: int
    tail_bound: float


def _check_rho(rho: float) -> float:
    rho = float(rho)
    if not rho >= 0.0:
        raise DomainError(f"rho must be nonnegative, got {rho!r}")
    if rho >= 1.0:
        raise DivergenceError(f"majorant series diverge for rho >= 1 (rho={rho!r})")
    return rho


def _check_tol(tol: float):
    if not tol > 0:
        raise ValueError("tol must be positive")


def _finish(value, order, tail, tol) -> MajorantValue:
    if tail > tol:
        raise TruncationError(
            f"tail bound {tail:.3e} exceeds tol {tol:.3e}; supply more coefficients"
        )
    return MajorantValue(float(value), int(order), float(tail))


def _powers(rho: float, n: int) -> np.ndarray:
    return rho ** np.arange(n + 1, dtype=float)


def bohr_majorant(series: CoefficientSeries, rho: float, tol: float = DEFAULT_TOL) -> MajorantValue:
    """sum |a_n| (rho/(1-gamma))^n."""
    rho = _check_rho(rho)
    _check_tol(tol)
    N = series.order
    u = series.index_normalized()
    value = np.dot(u, _powers(rho, N))
    tail = series.tail_cap * rho ** (N + 1) / (1.0 - rho)
    return _finish(value, N, tail, tol)


def _outer_order(level: float, rho: float, start: int, budget: float) -> int:
    # smallest N >= start with level * rho^(N+1) / (1 - rho) <= budget
    if level == 0.0 or rho == 0.0:
        return start
    need = math.log(budget * (1.0 - rho) / level) / math.log(rho) - 1.0
    return max(start, int(math.ceil(need)))


def cesaro_majorant(series: CoefficientSeries, rho: float, tol: float = DEFAULT_TOL) -> MajorantValue:
    """sum_n rho^n/(n+1) sum_{k<=n} |a_k|/(1-gamma)^k."""
    rho = _check_rho(rho)
    _check_tol(tol)
    order = series.order
    prefix = np.cumsum(series.index_normalized())
    level = float(prefix[-1])
    N = _outer_order(level, rho, order, tol / 2)
    partial = np.empty(N + 1)
    partial[: order + 1] = prefix
    partial[order + 1 :] = level
    n = np.arange(N + 1)
    value = np.dot(partial, _powers(rho, N) / (n + 1))
    outer = level * rho ** (N + 1) / ((N + 2) * (1.0 - rho))
    unknown = series.tail_cap * rho ** (order + 1) / ((order + 2) * (1.0 - rho) ** 2)
    return _finish(value, N, outer + unknown, tol)


def bernardi_majorant(
    series: CoefficientSeries, beta: float, rho: float, tol: float = DEFAULT_TOL
) -> MajorantValue:
    """sum |a_n| rho^n / ((n+beta)(1-gamma)^n), beta > 0."""
    if not beta > 0:
        raise DomainError(f"beta must be positive, got {beta!r}")
    rho = _check_rho(rho)
    _check_tol(tol)
    N = series.order
    n = np.arange(N + 1)
    value = np.dot(series.index_normalized(), _powers(rho, N) / (n + beta))
    tail = series.tail_cap * rho ** (N + 1) / ((N + 1 + beta) * (1.0 - rho))
    return _finish(value, N, tail, tol)


def dft_majorant(
    series: CoefficientSeries,
    rho: float,
    tol: float = DEFAULT_TOL,
    scheme: Normalization = Normalization.PER_OUTER,
) -> MajorantValue:
    """Majorant of the prefix-DFT transform.

    PER_OUTER: sum_n (rho/(1-gamma))^n sum_{k<=n} |a_k|.
    PER_INDEX: sum_n rho^n sum_{k<=n} |a_k|/(1-gamma)^k.
    The constant continuation of the prefix sums past the stored order is a
    geometric series and is summed in closed form.
    """
    rho = _check_rho(rho)
    _check_tol(tol)
    N = series.order
    c = 1.0 - series.gamma
    if scheme is Normalization.PER_INDEX:
        x = rho
        prefix = np.cumsum(series.index_normalized())
    else:
        x = rho / c
        prefix = np.cumsum(series.moduli)
    level = float(prefix[-1])
    if x >= 1.0:
        if level == 0.0 and series.tail_cap == 0.0:
            return MajorantValue(0.0, N, 0.0)
        raise DivergenceError(f"rho/(1-gamma) = {x:.6g} >= 1: the majorant diverges")
    value = np.dot(prefix, _powers(x, N)) + level * x ** (N + 1) / (1.0 - x)
    # each unknown |a_k| is at most tail_cap (1-gamma)^k (index scheme: tail_cap)
    tail = series.tail_cap * rho ** (N + 1) / (1.0 - x) ** 2
    return _finish(value, N, tail, tol)


def majorant(kind: BoundKind, series: CoefficientSeries, rho: float, tol: float = DEFAULT_TOL) -> MajorantValue:
    """Dispatch to the majorant selected by ``kind``."""
    if kind.tag is Operator.CESARO:
        return cesaro_majorant(series, rho, tol)
    if kind.tag is Operator.BERNARDI:
        return bernardi_majorant(series, kind.beta, rho, tol)
    if kind.tag is Operator.DFT:
        return dft_majorant(series, rho, tol, scheme=kind.scheme)
    return bohr_majorant(series, rho, tol)


def dft_coefficient_transform(coeffs) -> np.ndarray:
    """b_n = sum_{k<=n} a_k exp(-2 pi i n k / (n+1))."""
    a = np.asarray(coeffs, dtype=complex).ravel()
    b = np.empty_like(a)
    for n in range(a.size):
        k = np.arange(n + 1)
        b[n] = np.dot(a[: n + 1], np.exp(-2j * np.pi * n * k / (n + 1)))
    return b


def cesaro_bound(rho):
    """(1/rho) log(1/(1-rho)), extended by continuity with value 1 at rho = 0."""
    rho = np.asarray(rho, dtype=float)
    safe = np.where(rho == 0.0, 0.5, rho)
    out = np.where(rho == 0.0, 1.0, -np.log1p(-safe) / safe)
    return out if out.ndim else float(out)


def target_bound(kind: BoundKind, rho: float) -> float:
    rho = _check_rho(rho)
    if kind.tag is Operator.CESARO:
        return cesaro_bound(rho)
    if kind.tag is Operator.BERNARDI:
        return 1.0 / kind.beta
    if kind.tag is Operator.DFT:
        return 1.0 / (1.0 - rho)
    return 1.0

"""Bounded test functions on shifted disks.

Finite Blaschke products are unimodular on the unit circle, so pulling them
back through w = gamma + (1-gamma) z gives functions bounded by 1 on the
shifted disk whose coefficients are known to any order.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, Sequence

import numpy as np

from .domain import CoefficientSeries, check_gamma, lemma2_bound
from .errors import DomainError

__all__ = [
    "BlaschkeSpec",
    "LemmaReport",
    "blaschke_taylor",
    "compose_affine_pullback",
    "check_coefficient_lemma",
    "random_blaschke",
    "bounded_test_series",
    "DEFAULT_ORDER",
]

ZERO_MARGIN = 1e-6
DEFAULT_ORDER = 200


@dataclass(frozen=True)
class BlaschkeSpec:
    """rotation * prod_k (w_k - z) / (1 - conj(w_k) z)."""

    zeros: tuple[complex, ...] = ()
    rotation: complex = 1.0

    def __post_init__(self):
        zeros = tuple(complex(w) for w in self.zeros)
        for w in zeros:
            if abs(w) >= 1.0 - ZERO_MARGIN:
                raise DomainError(f"Blaschke zero {w} too close to the unit circle")
        if abs(abs(self.rotation) - 1.0) > 1e-12:
            raise DomainError("rotation must be unimodular")
        object.__setattr__(self, "zeros", zeros)
        object.__setattr__(self, "rotation", complex(self.rotation))

    @property
    def degree(self) -> int:
        return len(self.zeros)

    def __call__(self, z):
        z = np.asarray(z, dtype=complex)
        out = np.full(z.shape, self.rotation, dtype=complex)
        for w in self.zeros:
            out *= (w - z) / (1.0 - np.conj(w) * z)
        return out


def blaschke_taylor(spec: BlaschkeSpec, order: int) -> CoefficientSeries:
    """Taylor coefficients about 0 through ``order``.

    Each factor is applied as a multiplication by (w - z) followed by a
    truncated convolution with the geometric series of 1/(1 - conj(w) z).
    """
    if order < 0:
        raise ValueError("order must be nonnegative")
    c = np.zeros(order + 1, dtype=complex)
    c[0] = spec.rotation
    for w in spec.zeros:
        shifted = np.zeros_like(c)
        shifted[1:] = c[:-1]
        c = w * c - shifted
        # 1/(1 - conj(w) z) = sum conj(w)^n z^n
        geometric = np.conj(w) ** np.arange(order + 1)
        c = np.convolve(c, geometric)[: order + 1]
    return CoefficientSeries.truncated(c, gamma=0.0)


def compose_affine_pullback(series: CoefficientSeries, gamma: float) -> CoefficientSeries:
    """Re-expand g(gamma + (1-gamma) z) about the centre of the shifted disk.

    Since gamma + (1-gamma) z = (1-gamma)(z + gamma/(1-gamma)), coefficient n
    simply picks up a factor (1-gamma)^n.
    """
    gamma = check_gamma(gamma)
    if series.gamma != 0.0:
        raise DomainError("pullback expects a unit-disk expansion (gamma = 0)")
    scale = (1.0 - gamma) ** np.arange(series.order + 1)
    return CoefficientSeries(
        gamma=gamma,
        coeffs=series.coeffs * scale,
        tail_cap=series.tail_cap,
        bounded=series.bounded,
    )


@dataclass(frozen=True)
class LemmaReport:
    max_violation: float
    worst_index: int


def check_coefficient_lemma(series: CoefficientSeries) -> LemmaReport:
    """Largest excess of |a_n| over (1-gamma)^n (1-|a_0|^2), 1 <= n <= order."""
    if series.order == 0:
        return LemmaReport(0.0, 0)
    mods = series.moduli
    a0 = min(float(mods[0]), 1.0)
    bounds = np.array([lemma2_bound(a0, series.gamma, n) for n in range(1, series.order + 1)])
    excess = mods[1:] - bounds
    k = int(np.argmax(excess))
    return LemmaReport(float(excess[k]), k + 1)


def random_blaschke(rng: np.random.Generator, max_degree: int = 6, zero_radius: float = 0.9) -> BlaschkeSpec:
    """Zeros uniform in the disk of radius ``zero_radius``, random rotation."""
    degree = int(rng.integers(1, max_degree + 1))
    r = zero_radius * np.sqrt(rng.random(degree))
    theta = 2 * np.pi * rng.random(degree)
    rotation = np.exp(2j * np.pi * rng.random())
    return BlaschkeSpec(zeros=tuple(r * np.exp(1j * theta)), rotation=rotation)


def bounded_test_series(
    seed: int,
    count: int,
    gammas: Sequence[float] = (0.0,),
    order: int = DEFAULT_ORDER,
) -> Iterator[CoefficientSeries]:
    """Yield ``count`` seeded Blaschke pullbacks, cycling through ``gammas``."""
    rng = np.random.default_rng(seed)
    for i in range(count):
        spec = random_blaschke(rng)
        yield compose_affine_pullback(blaschke_taylor(spec, order), gammas[i % len(gammas)])

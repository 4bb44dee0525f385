"""Shifted disks, the affine map onto the unit disk, and coefficient series.

The disk with parameter ``gamma`` in [0, 1) is centred at -gamma/(1-gamma)
with radius 1/(1-gamma).  It always contains the unit disk and touches it at
z = 1.  Functions on it are expanded in powers of (z + gamma/(1-gamma)).
"""
from __future__ import annotations

import enum
from dataclasses import dataclass, field

import numpy as np

from .errors import ContractError, DomainError

__all__ = [
    "ShiftedDisk",
    "CoefficientSeries",
    "Normalization",
    "make_shifted_disk",
    "map_to_unit_disk",
    "lemma2_bound",
    "normalized_modulus",
    "check_gamma",
]


def check_gamma(gamma: float) -> float:
    gamma = float(gamma)
    if not 0.0 <= gamma < 1.0:
        raise DomainError(f"gamma must lie in [0, 1), got {gamma!r}")
    return gamma


@dataclass(frozen=True)
class ShiftedDisk:
    gamma: float
    center: complex
    radius: float

    def contains(self, z: complex) -> bool:
        return abs(z - self.center) < self.radius


def make_shifted_disk(gamma: float) -> ShiftedDisk:
    """Return the disk |z + gamma/(1-gamma)| < 1/(1-gamma)."""
    gamma = check_gamma(gamma)
    scale = 1.0 - gamma
    return ShiftedDisk(gamma=gamma, center=complex(-gamma / scale, 0.0), radius=1.0 / scale)


def map_to_unit_disk(disk: ShiftedDisk, z: complex) -> complex:
    """Affine map w = gamma + (1 - gamma) z.

    It sends the centre of ``disk`` to 0 and fixes z = 1, so |w| < 1 exactly
    when z lies in the disk.
    """
    return complex(disk.gamma + (1.0 - disk.gamma) * z)


def lemma2_bound(a0_mod: float, gamma: float, n: int) -> float:
    """Upper bound (1-gamma)^n (1-|a_0|^2) on |a_n| for n >= 1.

    Holds for every function bounded by 1 on the shifted disk and expanded
    about its centre.
    """
    if n < 1:
        raise ContractError("the coefficient bound covers n >= 1 only")
    if not 0.0 <= a0_mod <= 1.0:
        raise DomainError(f"|a_0| must lie in [0, 1], got {a0_mod!r}")
    gamma = check_gamma(gamma)
    return (1.0 - gamma) ** n * (1.0 - a0_mod * a0_mod)


class Normalization(enum.Enum):
    """How coefficient moduli are rescaled inside a double sum.

    PER_INDEX divides |a_k| by (1-gamma)^k (Cesaro form).  PER_OUTER leaves
    |a_k| alone; the caller divides the whole inner sum at level n by
    (1-gamma)^n (DFT form as printed).
    """

    PER_INDEX = "per-index"
    PER_OUTER = "per-outer"


@dataclass(frozen=True, eq=False)
class CoefficientSeries:
    """Truncated expansion a_0..a_order about the centre of a shifted disk.

    ``tail_cap`` bounds the index-normalized moduli |a_n|/(1-gamma)^n of every
    coefficient beyond ``order``.  A value of 0 means the expansion is an exact
    polynomial.  For a function bounded by 1 the coefficient bound gives
    tail_cap = 1 - |a_0|^2.
    """

    gamma: float
    coeffs: np.ndarray
    tail_cap: float = 0.0
    bounded: bool = False
    order: int = field(init=False)

    def __post_init__(self):
        check_gamma(self.gamma)
        coeffs = np.array(self.coeffs, dtype=complex).ravel()
        if coeffs.size == 0:
            raise ContractError("a coefficient series needs at least a_0")
        if self.tail_cap < 0 or not np.isfinite(self.tail_cap):
            raise ContractError("tail_cap must be finite and nonnegative")
        coeffs.setflags(write=False)
        object.__setattr__(self, "coeffs", coeffs)
        object.__setattr__(self, "order", coeffs.size - 1)

    @classmethod
    def polynomial(cls, coeffs, gamma: float = 0.0) -> "CoefficientSeries":
        """Exact polynomial: every coefficient past the last one is zero."""
        return cls(gamma=gamma, coeffs=coeffs, tail_cap=0.0)

    @classmethod
    def truncated(cls, coeffs, gamma: float = 0.0) -> "CoefficientSeries":
        """Truncation of a function known to be bounded by 1 on the disk."""
        coeffs = np.asarray(coeffs, dtype=complex)
        a0 = min(abs(complex(coeffs.flat[0])), 1.0)
        return cls(gamma=gamma, coeffs=coeffs, tail_cap=1.0 - a0 * a0, bounded=True)

    @property
    def moduli(self) -> np.ndarray:
        return np.abs(self.coeffs)

    def index_normalized(self) -> np.ndarray:
        """|a_n| / (1-gamma)^n for every stored n."""
        n = np.arange(self.order + 1)
        return self.moduli / (1.0 - self.gamma) ** n

    def __repr__(self):
        return (
            f"CoefficientSeries(gamma={self.gamma}, order={self.order}, "
            f"tail_cap={self.tail_cap:.3g}, bounded={self.bounded})"
        )


def normalized_modulus(series: CoefficientSeries, n: int, scheme: Normalization) -> float:
    if not 0 <= n <= series.order:
        raise IndexError(f"coefficient index {n} outside 0..{series.order}")
    mod = abs(complex(series.coeffs[n]))
    if scheme is Normalization.PER_INDEX:
        return mod / (1.0 - series.gamma) ** n
    return mod

import cmath

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from bohrlab.domain import (
    CoefficientSeries,
    Normalization,
    lemma2_bound,
    make_shifted_disk,
    map_to_unit_disk,
    normalized_modulus,
)
from bohrlab.errors import ContractError, DomainError

gammas = st.floats(min_value=0.0, max_value=0.999, allow_nan=False)


@pytest.mark.parametrize(
    "gamma, center, radius", [(0.0, 0.0, 1.0), (0.5, -1.0, 2.0), (0.2, -0.25, 1.25)]
)
def test_make_shifted_disk(gamma, center, radius):
    disk = make_shifted_disk(gamma)
    assert disk.center == pytest.approx(center, abs=1e-15)
    assert disk.radius == pytest.approx(radius, rel=1e-15)


@pytest.mark.parametrize("gamma", [-0.1, 1.0, 1.5, float("nan")])
def test_make_shifted_disk_rejects(gamma):
    with pytest.raises(DomainError):
        make_shifted_disk(gamma)


@given(gammas)
def test_disk_touches_one(gamma):
    disk = make_shifted_disk(gamma)
    assert disk.center.real + disk.radius == pytest.approx(1.0, abs=1e-12)
    assert disk.radius >= 1.0


def test_map_examples():
    assert map_to_unit_disk(make_shifted_disk(0.0), 0.3 + 0.1j) == 0.3 + 0.1j
    d = make_shifted_disk(0.5)
    assert map_to_unit_disk(d, -1) == 0
    assert map_to_unit_disk(d, 1) == 1


@given(gammas, st.floats(0, 1.5), st.floats(0, 2 * np.pi))
def test_map_membership(gamma, r, theta):
    disk = make_shifted_disk(gamma)
    z = disk.center + r * disk.radius * cmath.exp(1j * theta)
    w = map_to_unit_disk(disk, z)
    assert abs(map_to_unit_disk(disk, disk.center)) < 1e-12
    assert map_to_unit_disk(disk, 1.0) == pytest.approx(1.0, abs=1e-15)
    if abs(r - 1.0) > 1e-9:
        assert (abs(w) < 1) == disk.contains(z)


def test_lemma2_bound_examples():
    assert lemma2_bound(1.0, 0.3, 5) == 0.0
    assert lemma2_bound(0.0, 0.0, 3) == 1.0
    assert lemma2_bound(0.5, 0.5, 2) == pytest.approx(0.1875, abs=1e-15)
    with pytest.raises(ContractError):
        lemma2_bound(0.5, 0.5, 0)


@given(st.floats(0, 1), st.floats(0.01, 0.99), st.integers(1, 50))
def test_lemma2_bound_monotone(a0, gamma, n):
    assert lemma2_bound(a0, gamma, n + 1) < lemma2_bound(a0, gamma, n) or a0 == 1.0
    assert lemma2_bound(min(1.0, a0 + 0.01), gamma, n) <= lemma2_bound(a0, gamma, n)


def test_normalized_modulus():
    s = CoefficientSeries.polynomial([0.5])
    assert normalized_modulus(s, 0, Normalization.PER_INDEX) == 0.5
    s = CoefficientSeries.polynomial([0.3, 0.0, 0.1], gamma=0.5)
    assert normalized_modulus(s, 2, Normalization.PER_INDEX) == pytest.approx(0.4)
    assert normalized_modulus(s, 2, Normalization.PER_OUTER) == pytest.approx(0.1)
    s0 = CoefficientSeries.polynomial([0.3, -0.2j, 0.1])
    for n in range(3):
        assert normalized_modulus(s0, n, Normalization.PER_INDEX) == normalized_modulus(
            s0, n, Normalization.PER_OUTER
        )
    with pytest.raises(IndexError):
        normalized_modulus(s0, 3, Normalization.PER_INDEX)


def test_series_is_immutable_and_sized():
    s = CoefficientSeries.truncated([0.6, 0.1, 0.2])
    assert s.order == 2 and len(s.coeffs) == 3
    assert s.tail_cap == pytest.approx(1 - 0.36)
    with pytest.raises(ValueError):
        s.coeffs[0] = 1

"""Constants, input containers, and the energy-dependent mass factor."""

import math

import numpy as np
import pytest

from spinbarrier import (
    CONSTANTS,
    HBAR_C,
    HBAR_C_SQ,
    KSQ_PER_EV,
    REST_ENERGY,
    TWO_REST,
    BarrierSpec,
    ElectronState,
    NonpositiveMassError,
    SpinChannel,
    SpinorBasis,
    WellSpec,
    relativistic_mass_energy,
)


def test_constant_values():
    assert REST_ENERGY == 510998.95
    assert HBAR_C == 1.973269804e-5
    assert TWO_REST == 2.0 * REST_ENERGY
    assert HBAR_C_SQ == HBAR_C * HBAR_C
    assert KSQ_PER_EV == TWO_REST / HBAR_C_SQ
    # sanity scale: ~2.6e15 cm^-2 per eV
    assert 2.6e15 < KSQ_PER_EV < 2.7e15


def test_constants_dataclass_frozen():
    assert CONSTANTS.rest_energy == REST_ENERGY
    assert CONSTANTS.hbar_c == HBAR_C
    with pytest.raises((AttributeError, TypeError)):
        CONSTANTS.rest_energy = 1.0


def test_mass_energy_reference_points():
    # at E = V the factor reduces to the bare rest energy
    assert relativistic_mass_energy(0.0, 0.0) == REST_ENERGY
    assert relativistic_mass_energy(1234.5, 1234.5) == REST_ENERGY
    # kinetic term enters with weight 1/2
    m = relativistic_mass_energy(TWO_REST, 0.0)
    assert m == pytest.approx(2.0 * REST_ENERGY, rel=1e-15)


def test_mass_energy_linear_in_kinetic_energy():
    rng = np.random.default_rng(20260815)
    for _ in range(50):
        e = rng.uniform(-5e5, 5e5)
        v = rng.uniform(-5e5, 5e5)
        if e - v <= -TWO_REST:
            continue
        expected = REST_ENERGY * (1.0 + (e - v) / TWO_REST)
        assert math.isclose(relativistic_mass_energy(e, v), expected, rel_tol=1e-14)


def test_mass_energy_rejects_nonpositive_mass():
    with pytest.raises(NonpositiveMassError):
        relativistic_mass_energy(0.0, TWO_REST)
    with pytest.raises(NonpositiveMassError):
        relativistic_mass_energy(100.0, TWO_REST + 200.0)
    # just above the boundary is fine
    assert relativistic_mass_energy(0.0, TWO_REST - 1.0) > 0.0


def test_electron_state_validation():
    s = ElectronState(energy=1e4, kx=1e9, spin_channel=SpinChannel.EFF_UP)
    assert s.energy == 1e4
    with pytest.raises(ValueError):
        ElectronState(energy=0.0, kx=1e9, spin_channel=SpinChannel.EFF_UP)
    with pytest.raises(ValueError):
        ElectronState(energy=-5.0, kx=0.0, spin_channel=SpinChannel.EFF_DOWN)


def test_barrier_spec_validation():
    b = BarrierSpec(vb=6e4, slope_width=1e-9)
    assert b.vb == 6e4
    assert BarrierSpec(vb=6e4).slope_width is None
    with pytest.raises(ValueError):
        BarrierSpec(vb=0.0)
    with pytest.raises(ValueError):
        BarrierSpec(vb=6e4, slope_width=-1e-9)


def test_well_spec_validation():
    w = WellSpec(width=1e-8, v_left=1e4, v_right=5e5)
    assert w.asymmetric
    assert not WellSpec(width=1e-8, v_left=1e4, v_right=1e4).asymmetric
    with pytest.raises(ValueError):
        WellSpec(width=0.0, v_left=1e4, v_right=1e4)
    with pytest.raises(ValueError):
        WellSpec(width=1e-8, v_left=-1.0, v_right=1e4)
    with pytest.raises(ValueError):
        WellSpec(width=1e-8, v_left=1e4, v_right=0.0)


def test_spinor_basis_normalization():
    SpinorBasis(a=1.0, b=0.0)
    SpinorBasis(a=1.0 / math.sqrt(2.0), b=1j / math.sqrt(2.0))
    with pytest.raises(ValueError):
        SpinorBasis(a=1.0, b=1.0)


def test_effective_states_orthonormal():
    basis = SpinorBasis(a=1.0, b=0.0)
    up, down = basis.effective_states()
    for vec in (up, down):
        assert abs(abs(vec[0]) ** 2 + abs(vec[1]) ** 2 - 1.0) < 1e-12
    overlap = np.conj(up[0]) * down[0] + np.conj(up[1]) * down[1]
    assert abs(overlap) < 1e-12

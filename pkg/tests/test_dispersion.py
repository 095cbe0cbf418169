"""Longitudinal wave vectors, branch classification, and reflection angles."""

import cmath
import math

import numpy as np
import pytest

from spinbarrier import (
    HBAR_C_SQ,
    KSQ_PER_EV,
    TWO_REST,
    Branch,
    EvanescentIncidentError,
    KleinRegimeError,
    NotPropagatingError,
    SoeContext,
    energy_from_k_rel,
    reflection_angles,
    wave_vectors_nonrel,
    wave_vectors_rel,
)


def test_soe_context_validation():
    assert SoeContext(delta=0.0).delta == 0.0
    assert SoeContext(delta=223.65).delta == 223.65
    with pytest.raises(ValueError):
        SoeContext(delta=-1.0)


def test_energy_from_k_reference():
    assert energy_from_k_rel(0.0, 0.0, 0.0) == 0.0
    # nonrelativistic limit: small k recovers hbar^2 k^2 / 2m
    e = energy_from_k_rel(1e6, 1e6, 0.0)
    assert e == pytest.approx(HBAR_C_SQ * 2e12 / TWO_REST, rel=1e-9)
    # shifted channel adds its offset to the kinetic part
    e_up = energy_from_k_rel(1e6, 1e6, 50.0)
    assert e_up == pytest.approx(e + 50.0, rel=1e-8)


def test_energy_wave_vector_round_trip():
    rng = np.random.default_rng(20260815)
    for _ in range(100):
        kx = rng.uniform(0.0, 2e10)
        kz = rng.uniform(1e6, 2e10)
        delta = rng.uniform(0.0, 500.0)
        e = energy_from_k_rel(kx, kz, delta)
        wv = wave_vectors_rel(e, delta, kx, vb=1.0)
        assert wv.kz.imag == 0.0
        assert math.isclose(wv.kz.real, kz, rel_tol=1e-9)


def test_wave_vector_values_at_normal_incidence():
    # kx = 0, delta = 0: kz^2 = E(E + 2 m c^2) / (hbar c)^2 in both channels
    e = 1e4
    wv = wave_vectors_rel(e, 0.0, 0.0, vb=6e4)
    expected = math.sqrt(e * (e + TWO_REST) / HBAR_C_SQ)
    assert wv.kz.real == pytest.approx(expected, rel=1e-14)
    assert wv.kz == wv.kz_prime
    assert wv.qz == wv.qz_prime


def test_branch_classification():
    # barrier above E: transmitted side evanescent, incident side propagating
    wv = wave_vectors_rel(1e4, 0.0, 1e9, vb=6e4)
    cls = wv.classification()
    assert cls["kz"] is Branch.PROPAGATING
    assert cls["kz_prime"] is Branch.PROPAGATING
    assert cls["qz"] is Branch.EVANESCENT
    assert cls["qz_prime"] is Branch.EVANESCENT
    assert wv.qz.real == 0.0 and wv.qz.imag > 0.0

    # barrier below E: everything propagates
    wv2 = wave_vectors_rel(1e4, 0.0, 1e9, vb=1e3)
    assert all(b is Branch.PROPAGATING for b in wv2.classification().values())


def test_split_channels_differ_with_delta():
    wv = wave_vectors_rel(2e4, 100.0, 1e9, vb=6e4)
    # flip channel gains the level shift, so it carries more kinetic energy
    assert wv.kz_prime.real > wv.kz.real
    assert abs(wv.qz_prime.imag) < abs(wv.qz.imag)


def test_incident_channel_must_propagate():
    # kx too large for the energy: no propagating incident wave
    with pytest.raises(EvanescentIncidentError):
        wave_vectors_rel(10.0, 0.0, 1e10, vb=100.0)
    with pytest.raises(EvanescentIncidentError):
        wave_vectors_nonrel(10.0, 0.0, 1e10, vb=100.0)
    # delta eats the whole energy in the shifted channel
    with pytest.raises(EvanescentIncidentError):
        wave_vectors_rel(10.0, 20.0, 0.0, vb=100.0)


def test_klein_regime_rejected():
    with pytest.raises(KleinRegimeError):
        wave_vectors_rel(1e4, 0.0, 0.0, vb=TWO_REST + 2e4)
    with pytest.raises(KleinRegimeError):
        wave_vectors_nonrel(1e4, 0.0, 0.0, vb=TWO_REST + 2e4)


def test_nonrel_matches_rel_at_low_energy():
    rng = np.random.default_rng(20260815)
    for _ in range(50):
        e = rng.uniform(0.5, 5.0)
        delta = rng.uniform(0.0, 0.01 * e)
        kx = rng.uniform(0.0, 0.6) * math.sqrt((e - delta) * KSQ_PER_EV)
        vb = rng.uniform(1.5, 2.5) * e
        r = wave_vectors_rel(e, delta, kx, vb)
        n = wave_vectors_nonrel(e, delta, kx, vb)
        for name in ("kz", "kz_prime", "qz", "qz_prime"):
            a, b = getattr(r, name), getattr(n, name)
            assert abs(a - b) / abs(a) < 1e-5


def test_nonrel_dispersion_value():
    e, kx = 5.0, 1e7
    wv = wave_vectors_nonrel(e, 0.0, kx, vb=10.0)
    assert wv.kz.real == pytest.approx(math.sqrt(e * KSQ_PER_EV - kx * kx), rel=1e-14)
    qz_expected = cmath.sqrt(complex((e - 10.0) * KSQ_PER_EV - kx * kx))
    assert wv.qz == pytest.approx(1j * abs(qz_expected), rel=1e-14)


def test_reflection_angles_basics():
    # equal transverse and longitudinal components: 45 degrees
    a, ap = reflection_angles(1e9, 1e9, 1e9)
    assert a == pytest.approx(45.0, rel=1e-14)
    assert ap == pytest.approx(45.0, rel=1e-14)
    # flip channel with smaller kz' reflects further from the normal
    a2, ap2 = reflection_angles(1e9, 1e9, 0.5e9)
    assert ap2 > a2
    a3, ap3 = reflection_angles(0.0, 1e9, 1e9)
    assert a3 == 0.0 and ap3 == 0.0


def test_reflection_angles_require_propagation():
    with pytest.raises(NotPropagatingError):
        reflection_angles(1e9, 1j * 1e9, 1e9)
    with pytest.raises(NotPropagatingError):
        reflection_angles(1e9, 1e9, 1j * 1e9)


def test_channel_splitting_identity_nonrel():
    # kz'^2 - kz^2 is exactly 2 delta (2m/hbar^2) in the parabolic model
    rng = np.random.default_rng(20260815)
    worst = 0.0
    for _ in range(200):
        e = float(rng.uniform(1.0, 1e4))
        delta = float(rng.uniform(0.0, min(200.0, 0.5 * e)))
        kx = float(rng.uniform(0.0, 0.95)) * math.sqrt((e - delta) * KSQ_PER_EV)
        wv = wave_vectors_nonrel(e, delta, kx, vb=4.0 * e)
        lhs = wv.kz_prime**2 - wv.kz**2
        rhs = 2.0 * delta * KSQ_PER_EV
        scale = max(abs(wv.kz**2), abs(wv.kz_prime**2), abs(rhs))
        worst = max(worst, abs(lhs - rhs) / scale)
    assert worst < 1e-12

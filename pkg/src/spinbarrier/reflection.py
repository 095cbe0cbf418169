"""Reflection and transmission amplitudes at a potential step.

The spin-orbit interaction on the step couples the two effective-spin
channels, so an incoming wave in one channel reflects and transmits into
both.  Matching the two-component wave and its mass-weighted derivative
at the step gives closed-form amplitudes; the flip amplitudes on the two
sides are equal, and the set for the opposite incident channel follows
from the conserving/flip symmetry of the coupling.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .core import TWO_REST, KleinRegimeError
from .dispersion import (
    Branch,
    WaveVectorSet,
    reflection_angles,
    wave_vectors_nonrel,
    wave_vectors_rel,
)

_TINY = 1e-300


@dataclass(frozen=True)
class MatchingParams:
    """Step-matching parameters.

    ``mass_ratio`` is the incident-side to barrier-side mass ratio that
    weights derivative continuity; ``spin_coupling`` (cm^-1) measures the
    channel mixing produced by the step.  Plain container: invariants are
    not enforced, so the unit-mass-ratio nonrelativistic variant remains
    constructible.
    """

    mass_ratio: float
    spin_coupling: float
    energy_scale_free: float     # E + 2 m0 c^2, eV
    energy_scale_barrier: float  # E - vb + 2 m0 c^2, eV


@dataclass(frozen=True)
class AmplitudeSet:
    """Complex amplitudes for both incident effective-spin channels.

    ``up_*`` fields describe an incident spin-up wave, ``down_*`` an
    incident spin-down wave; ``refl``/``trans`` with ``keep``/``flip``
    name the outgoing channel relative to the incident one.
    """

    up_refl_keep: complex
    up_refl_flip: complex
    up_trans_keep: complex
    up_trans_flip: complex
    down_refl_keep: complex
    down_refl_flip: complex
    down_trans_keep: complex
    down_trans_flip: complex


def matching_params_rel(energy: float, kx: float, vb: float) -> MatchingParams:
    """Relativistic matching parameters for a step of height vb."""
    scale_free = energy + TWO_REST
    scale_barrier = energy - vb + TWO_REST
    if scale_barrier <= 0.0:
        raise KleinRegimeError(
            f"vb = {vb:.6g} eV reaches the lower continuum at E = {energy:.6g} eV"
        )
    return MatchingParams(
        mass_ratio=scale_free / scale_barrier,
        spin_coupling=kx * vb / scale_barrier,
        energy_scale_free=scale_free,
        energy_scale_barrier=scale_barrier,
    )


def matching_params_nonrel(energy: float, kx: float, vb: float) -> MatchingParams:
    """Parabolic-band limit: unit mass ratio, coupling kx vb / (2 m0 c^2)."""
    return MatchingParams(
        mass_ratio=1.0,
        spin_coupling=kx * vb / TWO_REST,
        energy_scale_free=energy + TWO_REST,
        energy_scale_barrier=energy - vb + TWO_REST,
    )


def _amplitudes_from(wv: WaveVectorSet, params: MatchingParams) -> AmplitudeSet:
    m = params.mass_ratio
    s = params.spin_coupling
    kz, kzp = wv.kz, wv.kz_prime
    qz, qzp = wv.qz, wv.qz_prime

    den = (kz + m * qz) * (kzp + m * qzp) + s * s
    refl_keep = ((kz - m * qz) * (kzp + m * qzp) - s * s) / den
    refl_flip = -2.0 * s * kz / den
    trans_keep = 2.0 * kz * (kzp + m * qzp) / den
    trans_flip = refl_flip

    # Opposite incident channel: the coupling changes sign with the spin
    # projection, so the conserving amplitudes carry over and the flip
    # amplitudes change sign.
    return AmplitudeSet(
        up_refl_keep=refl_keep,
        up_refl_flip=refl_flip,
        up_trans_keep=trans_keep,
        up_trans_flip=trans_flip,
        down_refl_keep=refl_keep,
        down_refl_flip=-refl_flip,
        down_trans_keep=trans_keep,
        down_trans_flip=-trans_flip,
    )


def amplitudes_rel(energy: float, delta: float, kx: float, vb: float) -> AmplitudeSet:
    """Closed-form relativistic step amplitudes for both incident channels."""
    wv = wave_vectors_rel(energy, delta, kx, vb)
    return _amplitudes_from(wv, matching_params_rel(energy, kx, vb))


def amplitudes_nonrel(energy: float, delta: float, kx: float, vb: float) -> AmplitudeSet:
    """Parabolic-band step amplitudes; limit of the relativistic set for
    energies and potentials far below 2 m0 c^2."""
    wv = wave_vectors_nonrel(energy, delta, kx, vb)
    return _amplitudes_from(wv, matching_params_nonrel(energy, kx, vb))


def boundary_residuals(
    amps: AmplitudeSet, wv: WaveVectorSet, params: MatchingParams
) -> np.ndarray:
    """Relative residuals of the four step-matching conditions.

    Continuity of both components plus the two mass-weighted derivative
    conditions, each normalized by the largest participating term.  The
    closed forms satisfy all four to machine precision.
    """
    m = params.mass_ratio
    s = params.spin_coupling
    kz, kzp = wv.kz, wv.kz_prime
    qz, qzp = wv.qz, wv.qz_prime
    r = amps.up_refl_keep
    rp = amps.up_refl_flip
    t = amps.up_trans_keep
    tp = amps.up_trans_flip

    def rel(terms: list[complex]) -> float:
        scale = max(abs(v) for v in terms)
        return abs(sum(terms)) / max(scale, _TINY)

    return np.array(
        [
            rel([1.0, r, -t]),
            rel([rp, -tp]),
            rel([kz, -kz * r, -m * qz * t, s * rp]),
            rel([-kzp * rp, -m * qzp * tp, -s * (1.0 + r)]),
        ]
    )


def reconstruct_wavefunction(
    amps: AmplitudeSet,
    wv: WaveVectorSet,
    incident_up: bool,
    z: np.ndarray,
) -> np.ndarray:
    """Two-component piecewise wave on a z grid, unit incident amplitude.

    Returns an array of shape (2, len(z)); row 0 is the incident-side
    channel of the incoming wave, row 1 its flip partner.  The flipped
    wave propagates with the other channel's wave vectors on both sides.
    """
    z = np.asarray(z, dtype=float)
    out = np.zeros((2, z.size), dtype=complex)
    left = z < 0.0
    right = ~left
    if incident_up:
        k_in, k_fl = wv.kz, wv.kz_prime
        q_in, q_fl = wv.qz, wv.qz_prime
        r, rp = amps.up_refl_keep, amps.up_refl_flip
        t, tp = amps.up_trans_keep, amps.up_trans_flip
    else:
        k_in, k_fl = wv.kz_prime, wv.kz
        q_in, q_fl = wv.qz_prime, wv.qz
        r, rp = amps.down_refl_keep, amps.down_refl_flip
        t, tp = amps.down_trans_keep, amps.down_trans_flip
    zl = z[left]
    zr = z[right]
    out[0, left] = np.exp(1j * k_in * zl) + r * np.exp(-1j * k_in * zl)
    out[1, left] = rp * np.exp(-1j * k_fl * zl)
    out[0, right] = t * np.exp(1j * q_in * zr)
    out[1, right] = tp * np.exp(1j * q_fl * zr)
    return out


@dataclass(frozen=True)
class BeamReport:
    """Angles and flux split of a reflected/transmitted beam."""

    alpha: float                      # incidence angle, deg
    alpha_prime: float                # flipped-beam angle, deg
    refl_conserving_fraction: float
    refl_flip_fraction: float
    transmitted_fraction: float
    flux_imbalance: float


def beam_report(energy: float, delta: float, kx: float, vb: float) -> BeamReport:
    """Angles and flux fractions for an incident spin-up beam.

    Flux fractions are normalized to the incident longitudinal current.
    The flipped reflected beam carries weight Re(kz')/kz per unit
    amplitude squared; transmitted channels carry the barrier-side mass
    weight, so evanescent ones carry none.
    """
    wv = wave_vectors_rel(energy, delta, kx, vb)
    params = matching_params_rel(energy, kx, vb)
    amps = _amplitudes_from(wv, params)

    alpha, alpha_prime = reflection_angles(kx, wv.kz, wv.kz_prime)
    kz = wv.kz.real
    m = params.mass_ratio
    refl_keep = abs(amps.up_refl_keep) ** 2
    refl_flip = (wv.kz_prime.real / kz) * abs(amps.up_refl_flip) ** 2
    transmitted = (
        m * wv.qz.real * abs(amps.up_trans_keep) ** 2
        + m * wv.qz_prime.real * abs(amps.up_trans_flip) ** 2
    ) / kz
    imbalance = abs(refl_keep + refl_flip + transmitted - 1.0)
    return BeamReport(
        alpha=alpha,
        alpha_prime=alpha_prime,
        refl_conserving_fraction=refl_keep,
        refl_flip_fraction=refl_flip,
        transmitted_fraction=transmitted,
        flux_imbalance=imbalance,
    )


def fully_evanescent(wv: WaveVectorSet) -> bool:
    """True when both barrier-side channels decay."""
    cls = wv.classification()
    return cls["qz"] is Branch.EVANESCENT and cls["qz_prime"] is Branch.EVANESCENT


__all__ = [
    "AmplitudeSet",
    "BeamReport",
    "MatchingParams",
    "amplitudes_nonrel",
    "amplitudes_rel",
    "beam_report",
    "boundary_residuals",
    "fully_evanescent",
    "matching_params_nonrel",
    "matching_params_rel",
    "reconstruct_wavefunction",
]

"""Longitudinal wave vectors and the energy <-> wave-vector maps.

Both treatments used by the rest of the package live here: the full
relativistic dispersion with its energy-dependent mass, and the ordinary
parabolic (nonrelativistic) one used for limit checks.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum

from .core import (
    HBAR_C_SQ,
    KSQ_PER_EV,
    TWO_REST,
    EvanescentIncidentError,
    KleinRegimeError,
    NotPropagatingError,
)


class Branch(Enum):
    PROPAGATING = "propagating"
    EVANESCENT = "evanescent"


def complex_root(s_squared: float) -> complex:
    """Root of a squared wave vector on the physical branch.

    Non-negative input gives the real positive root (outgoing wave);
    negative input gives +i sqrt(-s) so that exp(i q z) decays for z > 0.
    """
    if s_squared >= 0.0:
        return complex(math.sqrt(s_squared), 0.0)
    return complex(0.0, math.sqrt(-s_squared))


def classify(value: complex) -> Branch:
    """Propagating if the root is real, evanescent if purely imaginary."""
    return Branch.PROPAGATING if value.imag == 0.0 else Branch.EVANESCENT


@dataclass(frozen=True)
class SoeContext:
    """Half-splitting spin-orbit energy shifting the two channels apart."""

    delta: float  # eV

    def __post_init__(self) -> None:
        if self.delta < 0.0:
            raise ValueError("delta must be non-negative")


@dataclass(frozen=True)
class WaveVectorSet:
    """The four z wave vectors of the step problem.

    ``kz``/``kz_prime`` belong to the incident-side channels lowered and
    raised by the spin-orbit energy; ``qz``/``qz_prime`` are their
    counterparts inside the barrier.  Each entry is either real positive
    (propagating) or purely imaginary with positive imaginary part
    (evanescent, decaying into z > 0).
    """

    kz: complex
    kz_prime: complex
    qz: complex
    qz_prime: complex

    def classification(self) -> dict[str, Branch]:
        return {
            "kz": classify(self.kz),
            "kz_prime": classify(self.kz_prime),
            "qz": classify(self.qz),
            "qz_prime": classify(self.qz_prime),
        }


def _squared_pair_rel(energy: float, delta: float, kx: float, v: float) -> tuple[float, float]:
    # (E -+ delta - V)(E - V + 2 m0 c^2) scaled to cm^-2; the second factor
    # carries the relativistic mass correction.
    heavy = energy - v + TWO_REST
    kx2_term = HBAR_C_SQ * kx * kx
    lower = ((energy - delta - v) * heavy - kx2_term) / HBAR_C_SQ
    upper = ((energy + delta - v) * heavy - kx2_term) / HBAR_C_SQ
    return lower, upper


def wave_vectors_rel(energy: float, delta: float, kx: float, vb: float) -> WaveVectorSet:
    """Relativistic z wave vectors outside and inside a barrier of height vb.

    Raises ``KleinRegimeError`` when the barrier reaches the lower
    continuum and ``EvanescentIncidentError`` when no propagating incident
    wave exists for these parameters.
    """
    if vb >= TWO_REST + energy:
        raise KleinRegimeError(
            f"vb = {vb:.6g} eV reaches the lower continuum at E = {energy:.6g} eV"
        )
    kz2, kz_prime2 = _squared_pair_rel(energy, delta, kx, 0.0)
    if kz2 < 0.0:
        raise EvanescentIncidentError(
            "incident channel is evanescent: (E - delta) too small for this kx"
        )
    qz2, qz_prime2 = _squared_pair_rel(energy, delta, kx, vb)
    return WaveVectorSet(
        kz=complex_root(kz2),
        kz_prime=complex_root(kz_prime2),
        qz=complex_root(qz2),
        qz_prime=complex_root(qz_prime2),
    )


def wave_vectors_nonrel(energy: float, delta: float, kx: float, vb: float) -> WaveVectorSet:
    """Parabolic-band z wave vectors, same branch and classification rules.

    The channel splitting obeys kz_prime^2 - kz^2 = 2 delta (2 m0 c^2) /
    (hbar c)^2 exactly, independent of energy and kx.
    """
    if vb >= TWO_REST + energy:
        raise KleinRegimeError(
            f"vb = {vb:.6g} eV reaches the lower continuum at E = {energy:.6g} eV"
        )
    kz2 = (energy - delta) * KSQ_PER_EV - kx * kx
    kz_prime2 = (energy + delta) * KSQ_PER_EV - kx * kx
    if kz2 < 0.0:
        raise EvanescentIncidentError(
            "incident channel is evanescent: (E - delta) too small for this kx"
        )
    qz2 = (energy - delta - vb) * KSQ_PER_EV - kx * kx
    qz_prime2 = (energy + delta - vb) * KSQ_PER_EV - kx * kx
    return WaveVectorSet(
        kz=complex_root(kz2),
        kz_prime=complex_root(kz_prime2),
        qz=complex_root(qz2),
        qz_prime=complex_root(qz_prime2),
    )


def energy_from_k_rel(kx: float, kz: float, delta: float) -> float:
    """Kinetic energy of the relativistic lower channel with given k.

    Unique positive root of (E - delta)(E + 2 m0 c^2) = (hbar c k)^2,
    written in a cancellation-free form.  Round-trips with
    ``wave_vectors_rel`` to better than 1e-12 relative.
    """
    h = HBAR_C_SQ * (kx * kx + kz * kz)
    s = TWO_REST + delta
    return delta + 2.0 * h / (math.sqrt(s * s + 4.0 * h) + s)


def reflection_angles(kx: float, kz: complex, kz_prime: complex) -> tuple[float, float]:
    """Incidence and spin-flip reflection angles in degrees.

    Both angles are measured from the z axis, arctan(kx / kz); the
    flipped beam leaves steeper (smaller angle) because its longitudinal
    wave vector is larger.  Raises ``NotPropagatingError`` unless both
    wave vectors are real and positive.
    """
    pair = []
    for value in (kz, kz_prime):
        v = complex(value)
        if v.imag != 0.0 or v.real <= 0.0:
            raise NotPropagatingError(
                f"wave vector {value} is not a real positive propagating root"
            )
        pair.append(v.real)
    alpha = math.degrees(math.atan2(kx, pair[0]))
    alpha_prime = math.degrees(math.atan2(kx, pair[1]))
    return alpha, alpha_prime

"""Spin-orbit energy of a graded potential step and the effective-spin basis.

A barrier climbing from 0 to vb over a slope of width a carries a uniform
electric field vb/a.  An electron crossing it with transverse momentum
hbar kx feels a momentum-dependent magnetic field in its rest frame; the
resulting energy shift is diagonal in the sigma_x eigenbasis, which is why
the scattering problem splits into two independent channels shifted by
+-delta.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .core import HBAR_C_SQ, REST_ENERGY


@dataclass(frozen=True)
class SlopedBarrier:
    """Barrier of height vb rising linearly over width a."""

    vb: float  # eV
    a: float   # cm

    def __post_init__(self) -> None:
        if not (self.vb > 0.0 and self.a > 0.0):
            raise ValueError("vb and a must be positive")

    @property
    def field_strength(self) -> float:
        """Potential gradient on the slope, eV/cm."""
        return self.vb / self.a


def barrier_soe(kx: float, vb: float, a: float) -> float:
    """Half-splitting delta (eV) for transverse wave vector kx on the slope.

    The gradient is treated as uniform over the slope; no reduction for
    partial overlap of the wave with the sloped region is applied.
    """
    return HBAR_C_SQ / (4.0 * REST_ENERGY * REST_ENERGY) * kx * (vb / a)


def effective_spin_states() -> tuple[tuple[float, float], tuple[float, float]]:
    """The two transverse-polarized combinations (1, 1)/sqrt(2), (1, -1)/sqrt(2)."""
    s = 1.0 / math.sqrt(2.0)
    return ((s, s), (s, -s))


def perturbed_energies(e0: float, delta: float) -> tuple[float, float]:
    """First-order split levels (e0 + delta, e0 - delta)."""
    return (e0 + delta, e0 - delta)

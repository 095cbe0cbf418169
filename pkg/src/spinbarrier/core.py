"""Physical constants, shared parameter types, and error classes.

Unit conventions used across the package: energies in eV, lengths in cm,
wave vectors in cm^-1.  Planck constant and the speed of light never appear
alone, only through the products ``hbar_c`` (eV cm) and ``rest_energy``
(eV).  Angles are degrees at the user-facing surface and radians internally.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum


@dataclass(frozen=True)
class PhysicalConstants:
    """Electron rest energy and hbar*c; fixed values, not configurable."""

    rest_energy: float = 510998.95    # m0 c^2, eV
    hbar_c: float = 1.973269804e-5    # eV cm


CONSTANTS = PhysicalConstants()

REST_ENERGY = CONSTANTS.rest_energy
HBAR_C = CONSTANTS.hbar_c
TWO_REST = 2.0 * REST_ENERGY
HBAR_C_SQ = HBAR_C * HBAR_C
# 2 m0 c^2 / (hbar c)^2 in cm^-2 eV^-1; converts an energy into a squared
# nonrelativistic wave vector.
KSQ_PER_EV = TWO_REST / HBAR_C_SQ


class SpinBarrierError(Exception):
    """Base class for domain errors raised by this package."""


class KleinRegimeError(SpinBarrierError):
    """Potential step so deep that the local mass changes sign."""


class EvanescentIncidentError(SpinBarrierError):
    """No propagating incident wave exists for the requested parameters."""


class NotPropagatingError(SpinBarrierError):
    """A real propagating wave vector was required but not available."""


class NonpositiveMassError(SpinBarrierError):
    """Kinetic-energy-dependent mass is zero or negative."""


class NoBoundStateError(SpinBarrierError):
    """The bound-state bracket scan found no eigenvalue in the well."""


class NoConvergenceError(SpinBarrierError):
    """Eigenvalue refinement did not converge within the iteration budget."""


class StiffFailureError(SpinBarrierError):
    """ODE step count too small to resolve the fastest oscillation."""


class SpinChannel(Enum):
    """Effective-spin channel labels for the two decoupled sub-problems."""

    EFF_UP = "eff_up"
    EFF_DOWN = "eff_down"


@dataclass(frozen=True)
class ElectronState:
    """Incoming electron: kinetic energy, transverse wave vector, channel.

    The transverse wave vector lies along x by coordinate choice; the y
    component is identically zero and is not stored.
    """

    energy: float               # eV, excludes rest energy
    kx: float                   # cm^-1
    spin_channel: SpinChannel = SpinChannel.EFF_UP

    def __post_init__(self) -> None:
        if not self.energy > 0.0:
            raise ValueError("energy must be positive for scattering states")


@dataclass(frozen=True)
class BarrierSpec:
    """Barrier height and, optionally, the width of its linear slope.

    ``slope_width`` absent means a vertical step.  The Klein guard
    vb < 2 m0 c^2 + E cannot be checked here (no energy at hand); every
    use site re-checks it.
    """

    vb: float                        # eV
    slope_width: float | None = None  # cm

    def __post_init__(self) -> None:
        if not self.vb > 0.0:
            raise ValueError("vb must be positive")
        if self.slope_width is not None and not self.slope_width > 0.0:
            raise ValueError("slope_width must be positive when present")


@dataclass(frozen=True)
class WellSpec:
    """Quantum well geometry: interior width and the two wall heights."""

    width: float     # cm
    v_left: float    # eV
    v_right: float   # eV

    def __post_init__(self) -> None:
        if not self.width > 0.0:
            raise ValueError("width must be positive")
        if not (self.v_left > 0.0 and self.v_right > 0.0):
            raise ValueError("wall heights must be positive")

    @property
    def asymmetric(self) -> bool:
        return self.v_left != self.v_right


@dataclass(frozen=True)
class SpinorBasis:
    """Mixing coefficients (a, b) of a normalized two-component state."""

    a: complex
    b: complex

    def __post_init__(self) -> None:
        norm = abs(self.a) ** 2 + abs(self.b) ** 2
        if abs(norm - 1.0) > 1e-12:
            raise ValueError("|a|^2 + |b|^2 must equal 1")

    def effective_states(self) -> tuple[tuple[complex, complex], tuple[complex, complex]]:
        """The combinations (state +- flipped state)/sqrt(2), always orthonormal."""
        s = 1.0 / math.sqrt(2.0)
        return (
            ((self.a + self.b) * s, (self.b + self.a) * s),
            ((self.a - self.b) * s, (self.b - self.a) * s),
        )


def relativistic_mass_energy(energy: float, potential: float) -> float:
    """Energy equivalent m(z) c^2 of the kinetic-energy-dependent mass.

    Linear in (energy - potential); equals the rest energy when they
    coincide.  Raises ``NonpositiveMassError`` once the local kinetic
    energy drops to -2 m0 c^2 or below, where the matching formalism
    breaks down.
    """
    shift = energy - potential
    if shift <= -TWO_REST:
        raise NonpositiveMassError(
            f"E - V = {shift:.6g} eV is at or below -2 m0 c^2"
        )
    return REST_ENERGY * (1.0 + shift / TWO_REST)

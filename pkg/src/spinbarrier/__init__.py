"""Spin-resolved reflection of relativistic electrons from potential steps
and the spin-orbit-split ground state of asymmetric quantum wells."""

from .core import (
    CONSTANTS,
    HBAR_C,
    HBAR_C_SQ,
    KSQ_PER_EV,
    REST_ENERGY,
    TWO_REST,
    BarrierSpec,
    ElectronState,
    EvanescentIncidentError,
    KleinRegimeError,
    NoBoundStateError,
    NoConvergenceError,
    NonpositiveMassError,
    NotPropagatingError,
    PhysicalConstants,
    SpinBarrierError,
    SpinChannel,
    SpinorBasis,
    StiffFailureError,
    WellSpec,
    relativistic_mass_energy,
)
from .dispersion import (
    Branch,
    SoeContext,
    WaveVectorSet,
    energy_from_k_rel,
    reflection_angles,
    wave_vectors_nonrel,
    wave_vectors_rel,
)
from .reflection import (
    AmplitudeSet,
    BeamReport,
    MatchingParams,
    amplitudes_nonrel,
    amplitudes_rel,
    beam_report,
    boundary_residuals,
    fully_evanescent,
    matching_params_nonrel,
    matching_params_rel,
    reconstruct_wavefunction,
)
from .soc import SlopedBarrier, barrier_soe, effective_spin_states, perturbed_energies
from .verify import (
    ConvergenceRow,
    OracleResult,
    integrate_coupled,
    slope_convergence_sweep,
    sweep_csv_lines,
)
from .well import (
    BoundStateResult,
    dump_wavefunction,
    soe_integral_form,
    solve_bound_state,
    well_soe,
)

__version__ = "0.1.0"

__all__ = [
    "AmplitudeSet",
    "BarrierSpec",
    "BeamReport",
    "BoundStateResult",
    "Branch",
    "CONSTANTS",
    "ConvergenceRow",
    "ElectronState",
    "EvanescentIncidentError",
    "HBAR_C",
    "HBAR_C_SQ",
    "KSQ_PER_EV",
    "KleinRegimeError",
    "MatchingParams",
    "NoBoundStateError",
    "NoConvergenceError",
    "NonpositiveMassError",
    "NotPropagatingError",
    "OracleResult",
    "PhysicalConstants",
    "REST_ENERGY",
    "SlopedBarrier",
    "SoeContext",
    "SpinBarrierError",
    "SpinChannel",
    "SpinorBasis",
    "StiffFailureError",
    "TWO_REST",
    "WaveVectorSet",
    "WellSpec",
    "amplitudes_nonrel",
    "amplitudes_rel",
    "barrier_soe",
    "beam_report",
    "boundary_residuals",
    "dump_wavefunction",
    "effective_spin_states",
    "energy_from_k_rel",
    "fully_evanescent",
    "integrate_coupled",
    "matching_params_nonrel",
    "matching_params_rel",
    "perturbed_energies",
    "reconstruct_wavefunction",
    "reflection_angles",
    "relativistic_mass_energy",
    "slope_convergence_sweep",
    "soe_integral_form",
    "solve_bound_state",
    "sweep_csv_lines",
    "wave_vectors_nonrel",
    "wave_vectors_rel",
    "well_soe",
]

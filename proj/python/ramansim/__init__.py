"""Raman coupled-model simulator.

An effective two-level atom exchanging photons between two quantized cavity
modes in the dispersive regime, with Stark shifts retained. Exposes the
closed-form observables (atomic inversion, atom-mode1 negativity, linear
entropy), the classical-drive limit, and a brute-force truncated-space
verification path.
"""

from ._core import (
    EvolutionCoeffs,
    FieldKind,
    ModelKind,
    ModelParams,
    ObservableKind,
    PhotonDistribution,
    PrepSpec,
    ReducedState,
    Scenario,
    TimeSeries,
    TruncationError,
    VerifyEntry,
    VerifyReport,
    atomic_inversion,
    coherent_dist,
    detect_revival_indices,
    detect_revivals,
    evolution_coeffs,
    fock_dist,
    linear_entropy,
    negativity,
    preset_names,
    preset_scenario,
    rabi_frequency,
    reduced_atom_mode1,
    run_scenario,
    semiclassical_inversion,
    semiclassical_negativity,
    semiclassical_period,
    thermal_dist,
    verify_scenario,
)

__all__ = [
    "EvolutionCoeffs",
    "FieldKind",
    "ModelKind",
    "ModelParams",
    "ObservableKind",
    "PhotonDistribution",
    "PrepSpec",
    "ReducedState",
    "Scenario",
    "TimeSeries",
    "TruncationError",
    "VerifyEntry",
    "VerifyReport",
    "atomic_inversion",
    "coherent_dist",
    "detect_revival_indices",
    "detect_revivals",
    "evolution_coeffs",
    "fock_dist",
    "linear_entropy",
    "negativity",
    "preset_names",
    "preset_scenario",
    "rabi_frequency",
    "reduced_atom_mode1",
    "run_scenario",
    "semiclassical_inversion",
    "semiclassical_negativity",
    "semiclassical_period",
    "thermal_dist",
    "verify_scenario",
]

__version__ = "0.1.0"

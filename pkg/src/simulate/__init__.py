from .initial import (
    INITIAL_CONDITIONS,
    InitialCondition,
    gaussian,
    initial_condition,
    noise,
    peak_position,
    soliton,
    soliton_profile,
)
from .solver import Diagnostics, SimStatus, SimulationResult, run
from .spectral import SimState, SpectralOperator, rk4_step, spectral_rhs, stable_dt, step_rk4, wavenumbers
from .writers import write_diagnostics_csv, write_frames_csv, write_summary_json

__all__ = [
    "INITIAL_CONDITIONS",
    "InitialCondition",
    "gaussian",
    "initial_condition",
    "noise",
    "peak_position",
    "soliton",
    "soliton_profile",
    "Diagnostics",
    "SimStatus",
    "SimulationResult",
    "run",
    "SimState",
    "SpectralOperator",
    "rk4_step",
    "spectral_rhs",
    "stable_dt",
    "step_rk4",
    "wavenumbers",
    "write_diagnostics_csv",
    "write_frames_csv",
    "write_summary_json",
]

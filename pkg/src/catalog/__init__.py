from .direct import (
    CoefficientSet,
    JacobiOdeParams,
    direct_coefficients,
    direct_f,
    direct_profile,
    direct_residual,
    direct_solution,
    direct_terms,
    frame_b,
    jacobi_ode_params,
)
from .fields import (
    ClosedFormField,
    CompactProfile,
    ConstantField,
    FunctionProfile,
    PerturbedField,
    PerturbedProfile,
    Profile,
    TravelingWave,
)
from .gg import (
    GGCoefficients,
    classify_branch,
    frame_branch,
    gg_closed_profile,
    gg_determine,
    gg_determined_solution,
    gg_expansion_profile,
    gg_G,
    gg_Gprime,
    gg_h,
    gg_parameters,
    gg_printed_profile,
    gg_solution,
    gg_trig_printed_profile,
)
from .named import NAMED_SOLUTIONS, NamedSolution, count_peaks, list_named, named_solution, profile_peaks
from .oracle import SolitonParams, sech2_soliton

__all__ = [
    "CoefficientSet",
    "JacobiOdeParams",
    "direct_coefficients",
    "direct_f",
    "direct_profile",
    "direct_residual",
    "direct_solution",
    "direct_terms",
    "frame_b",
    "jacobi_ode_params",
    "ClosedFormField",
    "CompactProfile",
    "ConstantField",
    "FunctionProfile",
    "PerturbedField",
    "PerturbedProfile",
    "Profile",
    "TravelingWave",
    "GGCoefficients",
    "classify_branch",
    "frame_branch",
    "gg_closed_profile",
    "gg_determine",
    "gg_determined_solution",
    "gg_expansion_profile",
    "gg_G",
    "gg_Gprime",
    "gg_h",
    "gg_parameters",
    "gg_printed_profile",
    "gg_solution",
    "gg_trig_printed_profile",
    "NAMED_SOLUTIONS",
    "NamedSolution",
    "count_peaks",
    "list_named",
    "named_solution",
    "profile_peaks",
    "SolitonParams",
    "sech2_soliton",
]

from .equation import (
    EquationVariant,
    NonlinearitySpec,
    PdeForm,
    PowerTerm,
    ReductionConvention,
    WaveFrame,
)
from .settings import Axis, Grid1D, GridSpec, SimConfig, TolerancePolicy
from .solution import (
    CoefficientTable,
    DirectAnsatz,
    EllipticParameter,
    FifthCoefficient,
    GGBranch,
    GGSolution,
    JacobiKind,
    branch_of,
)

__all__ = [
    "EquationVariant",
    "NonlinearitySpec",
    "PdeForm",
    "PowerTerm",
    "ReductionConvention",
    "WaveFrame",
    "Axis",
    "Grid1D",
    "GridSpec",
    "SimConfig",
    "TolerancePolicy",
    "CoefficientTable",
    "DirectAnsatz",
    "EllipticParameter",
    "FifthCoefficient",
    "GGBranch",
    "GGSolution",
    "JacobiKind",
    "branch_of",
]

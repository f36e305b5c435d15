from .claims import Attempt, Binding, Claim, ClaimResult, ClaimStatus, ClaimTruth, InvariantSurface
from .registry import ClaimRegistry, build_default_registry, perturbed_claim
from .report import CSV_COLUMNS, VerificationReport
from .runner import measure, relative_residual, run_claim, run_registry, tolerance_for

__all__ = [
    "Attempt",
    "Binding",
    "Claim",
    "ClaimResult",
    "ClaimStatus",
    "ClaimTruth",
    "InvariantSurface",
    "ClaimRegistry",
    "build_default_registry",
    "perturbed_claim",
    "CSV_COLUMNS",
    "VerificationReport",
    "measure",
    "relative_residual",
    "run_claim",
    "run_registry",
    "tolerance_for",
]

"""Claim and result types for residual verification."""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from enum import Enum
from typing import Optional, Union

from pydantic import BaseModel, ConfigDict

from ..catalog import ClosedFormField, Profile
from ..equations import ReducedOde
from ..models.equation import PdeForm, WaveFrame


class ClaimTruth(str, Enum):
    """Where the expected outcome of a claim comes from."""

    DERIVED = "derived"  # independently derived; must PASS
    CONTROL = "control"  # deliberately broken; must FAIL
    PAPER = "paper"  # transcribed formula; outcome is a finding


class ClaimStatus(str, Enum):
    PASS = "PASS"
    FAIL = "FAIL"
    DOMAIN_ERROR = "DOMAIN_ERROR"


class InvariantSurface(BaseModel):
    """lambda u_x + mu u_t = 0 in the frame of a traveling wave."""

    model_config = ConfigDict(frozen=True)

    frame: WaveFrame

    def label(self) -> str:
        return f"invariant surface (lambda={self.frame.lam:g}, mu={self.frame.mu:g})"


Binding = Union[PdeForm, ReducedOde, InvariantSurface]


@dataclass(frozen=True)
class Claim:
    """A closed-form subject bound to the equation it is claimed to solve.

    ``subject`` is a field u(x, t) for PDE and invariant-surface bindings and
    a profile h(z) for reduced-ODE bindings. ``alternates`` are
    ``(variant, binding)`` pairs tried in order when the primary binding
    does not pass.
    """

    id: str
    paper_ref: str
    description: str
    truth: ClaimTruth
    binding: Binding
    subject: Union[ClosedFormField, Profile]
    expected: Optional[ClaimStatus] = None
    tolerance: Optional[float] = None
    variant: Optional[str] = None
    alternates: tuple[tuple[str, Binding], ...] = ()
    z_range: Optional[tuple[float, float]] = None
    derivative: int = 0

    @property
    def on_z(self) -> bool:
        return isinstance(self.binding, ReducedOde)


@dataclass
class Attempt:
    """Outcome of one binding of a claim."""

    variant: Optional[str]
    status: ClaimStatus
    sup_residual: float = math.nan
    relative_residual: float = math.nan


@dataclass
class ClaimResult:
    """Residual measurement of one claim."""

    id: str
    paper_ref: str
    truth: ClaimTruth
    status: ClaimStatus
    equation: str = ""
    expected: Optional[ClaimStatus] = None
    sup_residual: float = math.nan
    l2_residual: float = math.nan
    relative_residual: float = math.nan
    tolerance: float = math.nan
    breakdown: dict[str, float] = field(default_factory=dict)
    variant: Optional[str] = None
    attempts: list[Attempt] = field(default_factory=list)
    points: int = 0
    dropped: int = 0
    message: str = ""

    @property
    def meets_expectation(self) -> bool:
        return self.expected is None or self.status == self.expected

    def to_dict(self) -> dict:
        return {
            "id": self.id,
            "paper_ref": self.paper_ref,
            "truth": self.truth.value,
            "equation": self.equation,
            "status": self.status.value,
            "expected": self.expected.value if self.expected else None,
            "sup_residual": _number(self.sup_residual),
            "l2_residual": _number(self.l2_residual),
            "relative_residual": _number(self.relative_residual),
            "tolerance": _number(self.tolerance),
            "breakdown": {key: _number(value) for key, value in self.breakdown.items()},
            "variant": self.variant,
            "attempts": [
                {
                    "variant": a.variant,
                    "status": a.status.value,
                    "sup_residual": _number(a.sup_residual),
                    "relative_residual": _number(a.relative_residual),
                }
                for a in self.attempts
            ],
            "points": self.points,
            "dropped": self.dropped,
            "message": self.message,
        }


def _number(value: float) -> Optional[float]:
    """JSON-safe float: non-finite values become null."""
    value = float(value)
    return value if math.isfinite(value) else None

"""Pydantic models for the closed-form solution families."""

from __future__ import annotations

from enum import Enum
from typing import Annotated

from pydantic import BaseModel, ConfigDict, Field, field_validator, model_validator

from .equation import WaveFrame

# Parameter of the integral 1 - m sin^2(theta); no other convention.
EllipticParameter = Annotated[float, Field(ge=0.0, le=1.0, description="Elliptic parameter m")]

# Relative size below which alpha^2 - 4 beta counts as zero.
DISCRIMINANT_TOL = 1e-12


class JacobiKind(str, Enum):
    SN = "sn"
    CN = "cn"
    DN = "dn"


class CoefficientTable(str, Enum):
    """Source of the F(h) coefficients for a direct ansatz."""

    PAPER = "paper"  # verbatim printed tables
    DERIVED = "derived"  # closed form from (r, p, q)


class FifthCoefficient(str, Enum):
    """Convention for the linear coefficient of f(h)."""

    PAPER = "paper"  # -mu^2 lam^2 c5 + mu^2 (lam^2 - mu^2)
    INVERTED = "inverted"  # -mu^2 lam^2 c5 + (lam^2 - mu^2) / mu^2


class GGBranch(str, Enum):
    HYPERBOLIC = "hyperbolic"
    TRIGONOMETRIC = "trigonometric"
    RATIONAL = "rational"


def branch_of(alpha_g: float, beta_g: float) -> GGBranch:
    """Branch of G'' + alpha G' + beta G = 0 from the sign of alpha^2 - 4 beta."""
    disc = alpha_g * alpha_g - 4.0 * beta_g
    scale = max(alpha_g * alpha_g, abs(4.0 * beta_g), 1.0)
    if abs(disc) <= DISCRIMINANT_TOL * scale:
        return GGBranch.RATIONAL
    return GGBranch.HYPERBOLIC if disc > 0 else GGBranch.TRIGONOMETRIC


class DirectAnsatz(BaseModel):
    """h = alpha * H(z | m) ** beta with H one of sn, cn, dn."""

    model_config = ConfigDict(frozen=True)

    kind: JacobiKind
    alpha: float = Field(description="Amplitude")
    beta: float = Field(description="Power applied to H")
    m: EllipticParameter

    @field_validator("alpha", "beta")
    @classmethod
    def _nonzero(cls, v: float) -> float:
        if v == 0.0:
            raise ValueError("alpha and beta must be non-zero")
        return v

    @property
    def exponents(self) -> tuple[float, float, float, float, float]:
        """Exponents paired with c1..c5 in F(h)."""
        b = self.beta
        return (1 + 4 / b, 1 + 2 / b, 1 - 4 / b, 1 - 2 / b, 1.0)


class GGSolution(BaseModel):
    """A G'/G-expansion solution: h = sum a_i (G'/G)^i with G'' + alpha G' + beta G = 0."""

    model_config = ConfigDict(frozen=True)

    a0: float
    a1: float
    a2: float
    a3: float
    a4: float
    alpha_g: float = Field(description="alpha of the linear ODE for G")
    beta_g: float = Field(description="beta of the linear ODE for G")
    B: float = Field(default=0.0, description="Second integration constant")
    c1: float = 1.0
    c2: float = 0.0
    frame: WaveFrame
    c: float = Field(description="Dispersion constant of the generalized form")
    branch: GGBranch

    @model_validator(mode="after")
    def _check(self) -> "GGSolution":
        if self.a4 == 0.0:
            raise ValueError("a4 must be non-zero")
        actual = branch_of(self.alpha_g, self.beta_g)
        if actual != self.branch:
            raise ValueError(f"alpha^2 - 4 beta selects the {actual.value} branch, not {self.branch.value}")
        return self

    @property
    def coefficients(self) -> tuple[float, float, float, float, float]:
        return (self.a0, self.a1, self.a2, self.a3, self.a4)

    @property
    def discriminant(self) -> float:
        return self.alpha_g * self.alpha_g - 4.0 * self.beta_g

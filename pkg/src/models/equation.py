"""Pydantic models describing the Boussinesq equation family.

These models form the contract between the catalog (which binds solutions
to equations) and the residual machinery (which differentiates them).
"""

from __future__ import annotations

from enum import Enum
from typing import Optional

from pydantic import BaseModel, ConfigDict, Field, field_validator, model_validator

from ..jets import functions as jf


class EquationVariant(str, Enum):
    ASSIGNED = "assigned"
    CLASSICAL = "classical"
    CORRECTED = "corrected"
    GENERALIZED = "generalized"


class ReductionConvention(str, Enum):
    """Sign of the h'' term in the reduced Assigned equation."""

    CONSISTENT = "consistent"  # -mu^4 h'', what the PDE integrates to
    PRINTED = "printed"  # +mu^4 h''


class PowerTerm(BaseModel):
    model_config = ConfigDict(frozen=True)

    coefficient: float
    exponent: float

    @field_validator("coefficient", "exponent")
    @classmethod
    def _finite(cls, v: float) -> float:
        if v != v or v in (float("inf"), float("-inf")):
            raise ValueError("power-law terms must be finite")
        return v


class NonlinearitySpec(BaseModel):
    """f(u) = sum of coefficient * u**exponent."""

    model_config = ConfigDict(frozen=True)

    terms: tuple[PowerTerm, ...] = Field(default=(), description="Power-law terms of f(u)")

    @classmethod
    def from_pairs(cls, pairs) -> "NonlinearitySpec":
        return cls(terms=tuple(PowerTerm(coefficient=c, exponent=p) for c, p in pairs))

    @classmethod
    def quadratic(cls) -> "NonlinearitySpec":
        return cls.from_pairs([(1.0, 2.0)])

    @property
    def is_polynomial(self) -> bool:
        return all(t.exponent >= 0 and float(t.exponent).is_integer() for t in self.terms)

    def __call__(self, u):
        total = 0.0
        for term in self.terms:
            if term.coefficient == 0.0:
                continue
            total = total + term.coefficient * jf.power(u, term.exponent)
        return total

    def describe(self, var: str = "u") -> str:
        parts = []
        for t in self.terms:
            if t.coefficient == 0.0:
                continue
            parts.append(f"{t.coefficient:+.6g}*{var}^{t.exponent:.6g}")
        return " ".join(parts) if parts else "0"


class WaveFrame(BaseModel):
    """Traveling-wave frame z = mu*x - lambda*t."""

    model_config = ConfigDict(frozen=True, populate_by_name=True)

    lam: float = Field(alias="lambda", description="Temporal wavenumber")
    mu: float = Field(description="Spatial wavenumber (non-zero)")

    @field_validator("mu")
    @classmethod
    def _mu_nonzero(cls, v: float) -> float:
        if v == 0.0:
            raise ValueError("mu must be non-zero")
        return v

    def z(self, x, t):
        return self.mu * x - self.lam * t


class PdeForm(BaseModel):
    """One member of the equation family.

    Assigned:    u_tt - u_xx - u_xxxx - 3(u^2)_xx = 0
    Classical:   u_tt - c u_xx - u_xxxx - (u^2)_xx = 0
    Corrected:   u_tt - u_xx - u_xxxx - (u^2)_xx = 0
    Generalized: u_tt - u_xxtt + u_xxxxtt + c u_xxxx - u_xx - (f(u))_xx = 0
    """

    model_config = ConfigDict(frozen=True)

    variant: EquationVariant
    c: Optional[float] = Field(default=None, description="Dispersion constant")
    f: Optional[NonlinearitySpec] = Field(default=None, description="Nonlinearity f(u)")

    @model_validator(mode="after")
    def _check_fields(self) -> "PdeForm":
        if self.variant in (EquationVariant.CLASSICAL, EquationVariant.GENERALIZED) and self.c is None:
            raise ValueError(f"{self.variant.value} form requires c")
        if self.variant == EquationVariant.GENERALIZED and self.f is None:
            raise ValueError("generalized form requires f")
        return self

    @classmethod
    def assigned(cls) -> "PdeForm":
        return cls(variant=EquationVariant.ASSIGNED)

    @classmethod
    def classical(cls, c: float) -> "PdeForm":
        return cls(variant=EquationVariant.CLASSICAL, c=c)

    @classmethod
    def corrected(cls) -> "PdeForm":
        return cls(variant=EquationVariant.CORRECTED)

    @classmethod
    def generalized(cls, c: float, f: NonlinearitySpec) -> "PdeForm":
        return cls(variant=EquationVariant.GENERALIZED, c=c, f=f)

    def label(self) -> str:
        if self.variant == EquationVariant.CLASSICAL:
            return f"classical(c={self.c:g})"
        if self.variant == EquationVariant.GENERALIZED:
            return f"generalized(c={self.c:g}, f={self.f.describe()})"
        return self.variant.value

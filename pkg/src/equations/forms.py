"""Traveling-wave reduction of the equation family.

Substituting u(x, t) = h(mu x - lambda t) and integrating twice in z gives

    Generalized: lam^2 mu^4 h'''' + mu^2 (mu^2 c - lam^2) h'' + (lam^2 - mu^2) h - mu^2 f(h) + A z + B
    Assigned:    (lam^2 - mu^2) h - mu^4 h'' - 3 mu^2 h^2 + A z + B

The Assigned line is what u_tt - u_xx - u_xxxx - 3(u^2)_xx integrates to;
``ReductionConvention.PRINTED`` flips the sign of the h'' term.
"""

from __future__ import annotations

from typing import Optional

from pydantic import BaseModel, ConfigDict, Field

from ..errors import LabError, UnsupportedReductionError
from ..models.equation import EquationVariant, PdeForm, ReductionConvention, WaveFrame

REDUCIBLE = (EquationVariant.ASSIGNED, EquationVariant.GENERALIZED)


class ReducedOde(BaseModel):
    """Twice-integrated traveling-wave ODE of a ``PdeForm``."""

    model_config = ConfigDict(frozen=True)

    form: PdeForm
    frame: WaveFrame
    A: float = Field(default=0.0, description="Coefficient of z")
    B: float = Field(default=0.0, description="Constant of integration")
    convention: ReductionConvention = ReductionConvention.CONSISTENT

    @property
    def b(self) -> Optional[float]:
        """h'' coefficient of the normalized generalized ODE, (mu^2 c - lam^2) / (mu^2 lam^2)."""
        if self.form.variant != EquationVariant.GENERALIZED:
            return None
        lam, mu = self.frame.lam, self.frame.mu
        if lam == 0.0:
            raise LabError("b is undefined for lambda = 0")
        return (mu * mu * self.form.c - lam * lam) / (mu * mu * lam * lam)

    @property
    def leading(self) -> float:
        """Coefficient of the highest derivative, used for normalization."""
        lam, mu = self.frame.lam, self.frame.mu
        if self.form.variant == EquationVariant.GENERALIZED:
            return lam * lam * mu ** 4
        return mu ** 4

    @property
    def order(self) -> int:
        return 4 if self.form.variant == EquationVariant.GENERALIZED else 2

    def label(self) -> str:
        suffix = "" if self.convention == ReductionConvention.CONSISTENT else ", printed"
        return (
            f"reduced {self.form.label()} (lambda={self.frame.lam:g}, mu={self.frame.mu:g}, "
            f"A={self.A:g}, B={self.B:.6g}{suffix})"
        )


def reduce(
    form: PdeForm,
    frame: WaveFrame,
    A: float = 0.0,
    B: float = 0.0,
    convention: ReductionConvention = ReductionConvention.CONSISTENT,
) -> ReducedOde:
    """Reduce ``form`` in ``frame``; only Assigned and Generalized reduce."""
    if form.variant not in REDUCIBLE:
        raise UnsupportedReductionError(f"no traveling-wave reduction for the {form.variant.value} form")
    return ReducedOde(form=form, frame=frame, A=A, B=B, convention=convention)

"""Grid, tolerance and simulator settings."""

from __future__ import annotations

from typing import Literal, Optional

import numpy as np
from pydantic import BaseModel, ConfigDict, Field, field_validator, model_validator


class Axis(BaseModel):
    """Evenly spaced closed interval [start, stop] with ``points`` samples."""

    model_config = ConfigDict(frozen=True)

    start: float
    stop: float
    points: int = Field(ge=2)

    @model_validator(mode="after")
    def _ordered(self) -> "Axis":
        if not self.stop > self.start:
            raise ValueError("axis stop must exceed start")
        return self

    def values(self) -> np.ndarray:
        return np.linspace(self.start, self.stop, self.points)

    def refined(self, factor: int = 2) -> "Axis":
        """Axis whose samples contain the current ones."""
        return Axis(start=self.start, stop=self.stop, points=factor * (self.points - 1) + 1)


class GridSpec(BaseModel):
    """Evaluation grids for PDE claims (x, t) and ODE claims (z)."""

    model_config = ConfigDict(frozen=True)

    name: str = "default"
    x: Axis = Field(default=Axis(start=-10.0, stop=10.0, points=41))
    t: Axis = Field(default=Axis(start=0.0, stop=5.0, points=41))
    z: Axis = Field(default=Axis(start=-10.0, stop=10.0, points=201))

    def mesh(self) -> tuple[np.ndarray, np.ndarray]:
        """Flattened (x, t) sample points, x varying fastest within each t."""
        X, T = np.meshgrid(self.x.values(), self.t.values(), indexing="xy")
        return X.ravel(), T.ravel()

    def refined(self, factor: int = 2) -> "GridSpec":
        return GridSpec(
            name=f"{self.name}-x{factor}",
            x=self.x.refined(factor),
            t=self.t.refined(factor),
            z=self.z.refined(factor),
        )


class TolerancePolicy(BaseModel):
    model_config = ConfigDict(frozen=True)

    derived: float = Field(default=1e-8, gt=0, description="Relative tolerance for derived truths")
    paper: float = Field(default=1e-6, gt=0, description="Relative tolerance for printed claims")
    domain_error_fraction: float = Field(
        default=0.01, ge=0, le=1, description="Largest share of grid points allowed to fail"
    )
    margin: float = Field(default=1e-3, gt=0, description="Relative margin from compacton support edges")
    singular_margin: float = Field(default=1e-2, gt=0, description="Distance kept from h = 0 for h^(-1/3)")


class Grid1D(BaseModel):
    """Periodic grid on [0, L) with N points."""

    model_config = ConfigDict(frozen=True)

    N: int = Field(ge=16, description="Point count, a power of two")
    L: float = Field(gt=0, description="Domain length")

    @field_validator("N")
    @classmethod
    def _power_of_two(cls, v: int) -> int:
        if v & (v - 1):
            raise ValueError("N must be a power of two")
        return v

    @property
    def dx(self) -> float:
        return self.L / self.N

    @property
    def nyquist(self) -> float:
        return np.pi * self.N / self.L

    def points(self) -> np.ndarray:
        return np.arange(self.N) * self.dx


class SimConfig(BaseModel):
    model_config = ConfigDict(frozen=True)

    dt: float = Field(gt=0, description="Time step")
    t_end: float = Field(gt=0, description="Final time")
    k_cut: Optional[float] = Field(default=None, gt=0, description="Spectral cutoff; None keeps every mode")
    dealias: bool = Field(default=True, description="2/3 rule on the quadratic term")
    fourth_order_sign: Literal[1, -1] = Field(default=1, description="+1 assigned, -1 well-posed")
    blowup_threshold: Optional[float] = Field(
        default=None, gt=0, description="Sup-norm limit; None means 1e3 x initial sup-norm"
    )
    output_stride: int = Field(default=1, ge=1, description="Steps between stored frames")
    nonlinear: bool = Field(default=True, description="Include the 3 (u^2)_xx term")
    workers: Optional[int] = Field(default=None, ge=1, description="scipy.fft worker threads")

    def cutoff(self, grid: Grid1D) -> float:
        """Effective cutoff; raises when it exceeds the grid's Nyquist wavenumber."""
        if self.k_cut is None:
            return grid.nyquist
        if self.k_cut > grid.nyquist * (1 + 1e-12):
            raise ValueError(f"k_cut={self.k_cut} exceeds pi*N/L={grid.nyquist}")
        return self.k_cut

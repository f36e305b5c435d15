"""Initial conditions for simulator runs."""

from __future__ import annotations

from typing import NamedTuple, Optional

import numpy as np

from ..catalog import named_solution
from ..errors import UnknownEntryError
from ..models.settings import Grid1D, SimConfig
from .spectral import SpectralOperator


class InitialCondition(NamedTuple):
    u0: np.ndarray
    ut0: np.ndarray
    speed: Optional[float] = None
    description: str = ""


def _periodic_offset(x: np.ndarray, center: float, L: float) -> np.ndarray:
    """x - center wrapped into [-L/2, L/2)."""
    return np.mod(x - center + 0.5 * L, L) - 0.5 * L


def soliton_profile(grid: Grid1D, k: float = 0.25, center: Optional[float] = None, t: float = 0.0) -> np.ndarray:
    """Derived assigned-equation soliton, translated to time ``t`` on the periodic grid."""
    sol = named_solution("assigned_soliton", k=k)
    speed = sol.frame.lam / sol.frame.mu
    center = 0.5 * grid.L if center is None else center
    xi = _periodic_offset(grid.points(), center + speed * t, grid.L)
    return sol.u.sample(xi, 0.0)


def soliton(grid: Grid1D, config: SimConfig, k: float = 0.25, center: Optional[float] = None) -> InitialCondition:
    """u0 = 2k^2 sech^2(k (x - x0)); ut0 = -v u0_x computed spectrally."""
    sol = named_solution("assigned_soliton", k=k)
    speed = sol.frame.lam / sol.frame.mu
    u0 = soliton_profile(grid, k, center)
    ut0 = -speed * SpectralOperator(grid, config).derivative(u0)
    return InitialCondition(u0, ut0, speed, f"assigned soliton k={k:g}")


def gaussian(grid: Grid1D, amplitude: float = 0.1, width: float = 1.0, center: Optional[float] = None) -> InitialCondition:
    """u0 = amplitude exp(-((x - x0) / width)^2), at rest."""
    center = 0.5 * grid.L if center is None else center
    xi = _periodic_offset(grid.points(), center, grid.L)
    u0 = amplitude * np.exp(-((xi / width) ** 2))
    return InitialCondition(u0, np.zeros_like(u0), None, f"gaussian a={amplitude:g} w={width:g}")


def noise(grid: Grid1D, amplitude: float = 1e-8, seed: int = 0) -> InitialCondition:
    """White noise of standard deviation ``amplitude``, at rest."""
    rng = np.random.default_rng(seed)
    u0 = amplitude * rng.standard_normal(grid.N)
    return InitialCondition(u0, np.zeros_like(u0), None, f"noise {amplitude:g} seed={seed}")


INITIAL_CONDITIONS = {
    "soliton": soliton,
    "gaussian": gaussian,
    "noise": noise,
}


def initial_condition(name: str, grid: Grid1D, config: SimConfig, **params) -> InitialCondition:
    """Build the initial condition ``name``; ``params`` go to its builder."""
    if name not in INITIAL_CONDITIONS:
        raise UnknownEntryError(f"unknown initial condition '{name}'; choose from {list(INITIAL_CONDITIONS)}")
    if name == "soliton":
        return soliton(grid, config, **params)
    return INITIAL_CONDITIONS[name](grid, **params)


def peak_position(u: np.ndarray, grid: Grid1D) -> float:
    """Location of the maximum, refined by a three-point parabola."""
    i = int(np.argmax(u))
    left, mid, right = u[i - 1], u[i], u[(i + 1) % grid.N]
    denom = left - 2.0 * mid + right
    shift = 0.0 if denom == 0.0 else 0.5 * (left - right) / denom
    return float(np.mod((i + shift) * grid.dx, grid.L))

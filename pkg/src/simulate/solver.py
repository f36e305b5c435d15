"""Time integration of the periodic Boussinesq problem."""

from __future__ import annotations

import logging
import math
import time
from dataclasses import dataclass, field
from enum import Enum
from typing import Callable, NamedTuple, Optional, Union

import numpy as np

from ..models.settings import Grid1D, SimConfig
from .spectral import SimState, SpectralOperator, rk4_step

logger = logging.getLogger(__name__)

BLOWUP_FACTOR = 1e3

InitialField = Union[np.ndarray, Callable[[np.ndarray], np.ndarray]]


class SimStatus(str, Enum):
    COMPLETED = "COMPLETED"
    BLOWUP = "BLOWUP"


class Diagnostics(NamedTuple):
    t: float
    mass: float
    sup_norm: float
    tail_energy: float


@dataclass
class SimulationResult:
    """Stored frames, per-frame diagnostics and the run outcome."""

    grid: Grid1D
    config: SimConfig
    status: SimStatus = SimStatus.COMPLETED
    x: np.ndarray = field(default_factory=lambda: np.zeros(0))
    times: list[float] = field(default_factory=list)
    frames: list[np.ndarray] = field(default_factory=list)
    diagnostics: list[Diagnostics] = field(default_factory=list)
    steps: int = 0
    blowup_threshold: float = math.inf
    warnings: list[str] = field(default_factory=list)
    timings: dict[str, float] = field(default_factory=dict)

    @property
    def final_t(self) -> float:
        return self.times[-1] if self.times else 0.0

    @property
    def final(self) -> np.ndarray:
        return self.frames[-1]

    def add_warning(self, warning: str) -> None:
        self.warnings.append(warning)

    def mass_series(self) -> np.ndarray:
        return np.array([d.mass for d in self.diagnostics])

    def to_summary(self) -> dict:
        """Run summary with the configuration echoed back."""
        return {
            "status": self.status.value,
            "final_t": self.final_t,
            "steps": self.steps,
            "frames": len(self.frames),
            "blowup_threshold": self.blowup_threshold if math.isfinite(self.blowup_threshold) else None,
            "config": self.config.model_dump(),
            "grid": self.grid.model_dump(),
            "workers": self.config.workers or 1,
            "warnings": list(self.warnings),
        }


def _sample(value: InitialField, x: np.ndarray) -> np.ndarray:
    values = value(x) if callable(value) else value
    values = np.broadcast_to(np.asarray(values, dtype=float), x.shape)
    if not np.all(np.isfinite(values)):
        raise ValueError("initial field has non-finite samples")
    return values


def _record(result: SimulationResult, op: SpectralOperator, state: SimState) -> np.ndarray:
    u = op.inverse(state.u_hat)
    sup = float(np.max(np.abs(u)))
    result.times.append(state.t)
    result.frames.append(u)
    result.diagnostics.append(Diagnostics(state.t, op.mass(state.u_hat), sup, op.tail_energy(state.u_hat)))
    return u


def run(u0: InitialField, ut0: InitialField, config: SimConfig, grid: Grid1D) -> SimulationResult:
    """Integrate from (u0, ut0) to ``config.t_end``.

    Args:
        u0: Initial u, as samples on ``grid.points()`` or a function of x.
        ut0: Initial u_t, same conventions.
        config: Step, cutoff, dealiasing, sign and output settings.
        grid: Periodic grid.

    Returns:
        SimulationResult; a run whose sup-norm passes the blow-up threshold
        (or turns non-finite) stops early with status BLOWUP.
    """
    start = time.time()
    op = SpectralOperator(grid, config)
    x = grid.points()
    state = SimState(op.filter(op.forward(_sample(u0, x))), op.filter(op.forward(_sample(ut0, x))), 0.0)

    result = SimulationResult(grid=grid, config=config, x=x)
    omega = op.max_frequency()
    if omega > 0.0 and config.dt > 0.5 / omega:
        message = f"dt={config.dt:g} exceeds the stability guideline 0.5/max|omega| = {0.5 / omega:.4g}"
        logger.warning(message)
        result.add_warning(message)

    u = _record(result, op, state)
    sup0 = float(np.max(np.abs(u)))
    if config.blowup_threshold is not None:
        result.blowup_threshold = config.blowup_threshold
    elif sup0 > 0.0:
        result.blowup_threshold = BLOWUP_FACTOR * sup0

    n_steps = max(1, math.ceil(config.t_end / config.dt - 1e-9))
    for step in range(1, n_steps + 1):
        dt = min(config.dt, config.t_end - state.t)
        state = rk4_step(state, op, dt)
        if step == n_steps:
            state.t = config.t_end
        result.steps = step

        u = op.inverse(state.u_hat)
        sup = float(np.max(np.abs(u)))
        if not math.isfinite(sup) or sup > result.blowup_threshold:
            result.status = SimStatus.BLOWUP
            _record(result, op, state)
            logger.info("blow-up at t=%.4g (sup=%.3g)", state.t, sup)
            break
        if step % config.output_stride == 0 or step == n_steps:
            _record(result, op, state)

    result.timings["run"] = round(time.time() - start, 3)
    return result

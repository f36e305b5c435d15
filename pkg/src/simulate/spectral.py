"""Fourier pseudospectral operators for u_tt = u_xx + s u_xxxx + 3 (u^2)_xx.

Fields are periodic on [0, L) and carried as real FFT coefficients
(``scipy.fft.rfft``), so conjugate symmetry holds by construction.
"""

from __future__ import annotations

import logging
import math
from dataclasses import dataclass
from typing import Optional

import numpy as np
from scipy import fft

from ..models.settings import Grid1D, SimConfig

logger = logging.getLogger(__name__)


@dataclass
class SimState:
    """Spectral coefficients of u and u_t at time t."""

    u_hat: np.ndarray
    v_hat: np.ndarray
    t: float = 0.0

    def copy(self) -> "SimState":
        return SimState(self.u_hat.copy(), self.v_hat.copy(), self.t)


def wavenumbers(grid: Grid1D) -> np.ndarray:
    """Non-negative wavenumbers 2 pi j / L of the real FFT bins."""
    return 2.0 * np.pi * fft.rfftfreq(grid.N, d=grid.dx)


class SpectralOperator:
    """Linear symbol, cutoff filter and dealiasing mask for one grid and config."""

    def __init__(self, grid: Grid1D, config: SimConfig):
        self.grid = grid
        self.config = config
        self.workers = config.workers
        self.k = wavenumbers(grid)
        self.k_cut = config.cutoff(grid)
        self.keep = self.k <= self.k_cut * (1.0 + 1e-12)
        j = np.arange(self.k.size)
        # 2/3 rule: |j| < N/3
        self.dealias_mask = j < grid.N / 3.0 if config.dealias else np.ones(self.k.size, dtype=bool)
        self.symbol = -self.k**2 + config.fourth_order_sign * self.k**4

    # --- Transforms ---

    def forward(self, u: np.ndarray) -> np.ndarray:
        return fft.rfft(np.asarray(u, dtype=float), workers=self.workers)

    def inverse(self, u_hat: np.ndarray) -> np.ndarray:
        return fft.irfft(u_hat, n=self.grid.N, workers=self.workers)

    def filter(self, u_hat: np.ndarray) -> np.ndarray:
        return np.where(self.keep, u_hat, 0.0)

    def derivative(self, u: np.ndarray, order: int = 1) -> np.ndarray:
        """Spectral x-derivative of a physical field."""
        return self.inverse((1j * self.k) ** order * self.forward(u))

    # --- Right-hand side ---

    def square_hat(self, u_hat: np.ndarray) -> np.ndarray:
        """Coefficients of u^2, formed in physical space under the dealias rule."""
        u = self.inverse(u_hat * self.dealias_mask)
        return self.forward(u * u) * self.dealias_mask

    def rhs(self, state: SimState) -> tuple[np.ndarray, np.ndarray]:
        dv = self.symbol * state.u_hat
        if self.config.nonlinear:
            dv = dv - 3.0 * self.k**2 * self.square_hat(state.u_hat)
        return self.filter(state.v_hat), self.filter(dv)

    # --- Diagnostics ---

    def max_frequency(self) -> float:
        """Largest |omega| over retained modes; growth rates count for unstable ones."""
        return float(np.max(np.sqrt(np.abs(self.symbol[self.keep]))))

    def tail_energy(self, u_hat: np.ndarray) -> float:
        """Integral of u^2 carried by modes with |k| > k_cut / 2."""
        weights = np.full(self.k.size, 2.0)
        weights[0] = 1.0
        if self.grid.N % 2 == 0:
            weights[-1] = 1.0
        tail = self.k > 0.5 * self.k_cut
        power = weights[tail] * np.abs(u_hat[tail]) ** 2
        return float(power.sum() * self.grid.L / self.grid.N**2)

    def mass(self, u_hat: np.ndarray) -> float:
        return float(u_hat[0].real * self.grid.L / self.grid.N)


def spectral_rhs(state: SimState, config: SimConfig, grid: Grid1D) -> tuple[np.ndarray, np.ndarray]:
    """(d u_hat/dt, d v_hat/dt) for ``state``."""
    return SpectralOperator(grid, config).rhs(state)


def rk4_step(state: SimState, op: SpectralOperator, dt: float) -> SimState:
    """One classical Runge-Kutta step of (u_hat, v_hat), filtered afterwards."""
    u, v = state.u_hat, state.v_hat

    def at(du, dv, h):
        return SimState(u + h * du, v + h * dv, state.t + h)

    k1u, k1v = op.rhs(state)
    k2u, k2v = op.rhs(at(k1u, k1v, 0.5 * dt))
    k3u, k3v = op.rhs(at(k2u, k2v, 0.5 * dt))
    k4u, k4v = op.rhs(at(k3u, k3v, dt))
    u_next = u + dt / 6.0 * (k1u + 2.0 * k2u + 2.0 * k3u + k4u)
    v_next = v + dt / 6.0 * (k1v + 2.0 * k2v + 2.0 * k3v + k4v)
    return SimState(op.filter(u_next), op.filter(v_next), state.t + dt)


def step_rk4(state: SimState, config: SimConfig, grid: Grid1D, dt: Optional[float] = None) -> SimState:
    """Advance ``state`` by ``dt`` (default ``config.dt``)."""
    return rk4_step(state, SpectralOperator(grid, config), config.dt if dt is None else dt)


def stable_dt(config: SimConfig, grid: Grid1D) -> float:
    """Largest step allowed by dt <= 0.5 / max |omega(k)| over retained modes."""
    omega = SpectralOperator(grid, config).max_frequency()
    return math.inf if omega == 0.0 else 0.5 / omega

"""Central finite-difference oracle for mixed partials.

Independent of the jet machinery; used to cross-check jet derivatives.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache
from typing import Callable, Optional

import numpy as np

Sampler = Callable[[np.ndarray, np.ndarray], np.ndarray]

# Default steps balance truncation against cancellation in double precision.
SMALL_ORDER_STEP = 1e-2
LARGE_ORDER_STEP = 5e-2
DEFAULT_ACCURACY = 4


@lru_cache(maxsize=64)
def central_weights(order: int, accuracy: int) -> tuple[np.ndarray, np.ndarray]:
    """Offsets and weights of the central stencil for d^order/dx^order.

    The stencil has ``2p + 1`` points with ``p = (order + 1) // 2 - 1 + accuracy // 2``
    and is exact on polynomials of degree ``<= order + accuracy - 1``.
    """
    half = (order + 1) // 2 - 1 + accuracy // 2
    offsets = np.arange(-half, half + 1, dtype=float)
    vander = np.vander(offsets, increasing=True).T
    rhs = np.zeros(len(offsets))
    rhs[order] = math.factorial(order)
    weights = np.linalg.solve(vander, rhs)
    offsets.setflags(write=False)
    weights.setflags(write=False)
    return offsets, weights


@dataclass(frozen=True)
class StencilSpec:
    """Central stencil description."""

    order: int
    step: float
    accuracy: int = DEFAULT_ACCURACY

    def __post_init__(self):
        if self.order < 0:
            raise ValueError("derivative order must be non-negative")
        if not self.step > 0:
            raise ValueError("stencil step must be positive")
        if self.accuracy not in (2, 4):
            raise ValueError("central stencil accuracy must be 2 or 4")

    @classmethod
    def default(cls, order: int) -> "StencilSpec":
        step = SMALL_ORDER_STEP if order <= 2 else LARGE_ORDER_STEP
        return cls(order=order, step=step)

    def with_order(self, order: int) -> "StencilSpec":
        return StencilSpec(order=order, step=self.step, accuracy=self.accuracy)

    def weights(self) -> tuple[np.ndarray, np.ndarray]:
        """Sample offsets (in steps) and weights already divided by step**order."""
        offsets, weights = central_weights(self.order, self.accuracy)
        return offsets * self.step, weights / self.step ** self.order


def fd_partial(
    field: Sampler,
    x0: float,
    t0: float,
    i: int,
    k: int,
    spec: Optional[StencilSpec] = None,
) -> float:
    """Approximate d^(i+k) field / dx^i dt^k at (x0, t0) by a tensor-product stencil.

    Args:
        field: Vectorized sampler ``(x, t) -> u``.
        x0, t0: Evaluation point.
        i, k: Derivative orders in x and t (``i + k <= 6``).
        spec: Step and accuracy shared by both axes; defaults by total order.

    Returns:
        The finite-difference estimate.
    """
    if i < 0 or k < 0 or i + k > 6:
        raise ValueError(f"unsupported derivative orders ({i}, {k})")
    spec = spec or StencilSpec.default(i + k)
    dx, wx = spec.with_order(i).weights()
    dt, wt = spec.with_order(k).weights()
    X, T = np.meshgrid(x0 + dx, t0 + dt, indexing="ij")
    samples = np.asarray(field(X, T), dtype=float)
    return float(wx @ samples @ wt)

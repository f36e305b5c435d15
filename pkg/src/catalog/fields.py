"""Closed-form profiles h(z) and fields u(x, t).

Profiles and fields are written against ``jets.functions`` so the same
object can be sampled on plain arrays or differentiated through jets.
"""

from __future__ import annotations

from abc import ABC, abstractmethod
from typing import Callable, Optional

import numpy as np

from ..jets import functions as jf
from ..models.equation import WaveFrame


class Profile(ABC):
    """A function of the traveling coordinate z."""

    @abstractmethod
    def __call__(self, z):
        ...

    def valid(self, z) -> np.ndarray:
        """Points of the evaluation domain (plain z only)."""
        return np.ones(np.shape(z), dtype=bool)


class FunctionProfile(Profile):
    def __init__(self, fn: Callable, domain: Optional[Callable] = None):
        self.fn = fn
        self.domain = domain

    def __call__(self, z):
        return self.fn(z)

    def valid(self, z) -> np.ndarray:
        if self.domain is None:
            return super().valid(z)
        return np.asarray(self.domain(np.asarray(z, dtype=float)), dtype=bool)


class CompactProfile(Profile):
    """``inner`` on |z - center| <= half_width, zero outside.

    Only the interior, kept ``margin * support width`` away from the edges,
    counts as the evaluation domain.
    """

    def __init__(self, inner: Callable, half_width: float, center: float = 0.0, margin: float = 1e-3):
        self.inner = inner
        self.half_width = half_width
        self.center = center
        self.margin = margin

    def __call__(self, z):
        inside = np.abs(np.asarray(jf.value_of(z)) - self.center) <= self.half_width
        return jf.where(inside, self.inner(z), 0.0)

    def valid(self, z) -> np.ndarray:
        keep = self.half_width - 2.0 * self.half_width * self.margin
        return np.abs(np.asarray(z, dtype=float) - self.center) < keep


class PerturbedProfile(Profile):
    """h(z) + eps * sin(z)."""

    def __init__(self, base: Profile, eps: float):
        self.base = base
        self.eps = eps

    def __call__(self, z):
        return self.base(z) + self.eps * jf.sin(z)

    def valid(self, z) -> np.ndarray:
        return self.base.valid(z)


class ClosedFormField(ABC):
    """A function u(x, t)."""

    @abstractmethod
    def __call__(self, x, t):
        ...

    def valid(self, x, t) -> np.ndarray:
        return np.ones(np.broadcast_shapes(np.shape(x), np.shape(t)), dtype=bool)

    def sample(self, x, t) -> np.ndarray:
        """Plain values broadcast over (x, t)."""
        x, t = np.broadcast_arrays(np.asarray(x, dtype=float), np.asarray(t, dtype=float))
        return np.broadcast_to(np.asarray(self(x, t), dtype=float), x.shape)


class TravelingWave(ClosedFormField):
    """u(x, t) = h(mu x - lambda t)."""

    def __init__(self, profile: Profile, frame: WaveFrame):
        self.profile = profile
        self.frame = frame

    def __call__(self, x, t):
        return self.profile(self.frame.z(x, t))

    def valid(self, x, t) -> np.ndarray:
        x, t = np.broadcast_arrays(np.asarray(x, dtype=float), np.asarray(t, dtype=float))
        return self.profile.valid(self.frame.z(x, t))


class PerturbedField(ClosedFormField):
    """u(x, t) + eps * sin(x)."""

    def __init__(self, base: ClosedFormField, eps: float):
        self.base = base
        self.eps = eps

    def __call__(self, x, t):
        return self.base(x, t) + self.eps * jf.sin(x)

    def valid(self, x, t) -> np.ndarray:
        return self.base.valid(x, t)


class ConstantField(ClosedFormField):
    def __init__(self, value: float):
        self.value = value

    def __call__(self, x, t):
        return x * 0.0 + t * 0.0 + self.value

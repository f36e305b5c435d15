"""Truncated bivariate Taylor jets in (x, t).

A ``Jet`` holds ``coeffs[i, k] = (d^i/dx^i d^k/dt^k f) / (i! k!)`` at an
expansion point. Trailing axes of ``coeffs`` are a batch: one jet
evaluation differentiates a whole grid of expansion points at once, and a
plain scalar jet is the zero-dimensional batch.

Orders are capped at ``MAX_NX`` / ``MAX_NT``; asking for more raises
``JetOrderError`` instead of truncating silently.
"""

from __future__ import annotations

import math
from typing import Callable, Union

import numpy as np

from ..errors import JetDomainError, JetOrderError
from . import series as S

MAX_NX = 6
MAX_NT = 2
DIVISION_FLOOR = 1e-300

Scalar = Union[float, int, np.ndarray]


def _check_orders(nx: int, nt: int) -> None:
    if not 0 <= nx <= MAX_NX or not 0 <= nt <= MAX_NT:
        raise JetOrderError(
            f"jet orders (NX={nx}, NT={nt}) outside supported range "
            f"0..{MAX_NX} x 0..{MAX_NT}"
        )


def _lift(coeffs: np.ndarray, batch_ndim: int) -> np.ndarray:
    """Insert batch axes right after the two order axes."""
    missing = batch_ndim - (coeffs.ndim - 2)
    if missing <= 0:
        return coeffs
    return coeffs.reshape(coeffs.shape[:2] + (1,) * missing + coeffs.shape[2:])


def _mul_tables(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    ndim = max(a.ndim, b.ndim) - 2
    a, b = _lift(a, ndim), _lift(b, ndim)
    nx, nt = a.shape[0] - 1, a.shape[1] - 1
    batch = np.broadcast_shapes(a.shape[2:], b.shape[2:])
    out = np.zeros(a.shape[:2] + batch)
    for i in range(nx + 1):
        for k in range(nt + 1):
            out[i:, k:] += a[i, k] * b[: nx + 1 - i, : nt + 1 - k]
    return out


def _domain_mask(bad: np.ndarray) -> np.ndarray | None:
    return bad if np.ndim(bad) else None


class Jet:
    """Truncated Taylor expansion of a function of (x, t)."""

    __slots__ = ("coeffs",)
    # defer ndarray <op> Jet to our reflected operators
    __array_ufunc__ = None

    def __init__(self, coeffs):
        coeffs = np.asarray(coeffs, dtype=float)
        if coeffs.ndim < 2:
            raise ValueError("jet coefficients need at least two axes (x-order, t-order)")
        _check_orders(coeffs.shape[0] - 1, coeffs.shape[1] - 1)
        self.coeffs = coeffs

    # ---- Construction ----

    @classmethod
    def constant(cls, value: Scalar, nx: int = MAX_NX, nt: int = MAX_NT) -> "Jet":
        value = np.asarray(value, dtype=float)
        _check_orders(nx, nt)
        coeffs = np.zeros((nx + 1, nt + 1) + value.shape)
        coeffs[0, 0] = value
        return cls(coeffs)

    def _like(self, value: Scalar) -> "Jet":
        return Jet.constant(value, self.nx, self.nt)

    # ---- Shape ----

    @property
    def nx(self) -> int:
        return self.coeffs.shape[0] - 1

    @property
    def nt(self) -> int:
        return self.coeffs.shape[1] - 1

    @property
    def batch_shape(self) -> tuple[int, ...]:
        return self.coeffs.shape[2:]

    @property
    def value(self) -> np.ndarray | float:
        v = self.coeffs[0, 0]
        return float(v) if v.ndim == 0 else v

    def partial(self, i: int, k: int = 0):
        """Return d^(i+k) f / dx^i dt^k at the expansion point."""
        if not 0 <= i <= self.nx or not 0 <= k <= self.nt:
            raise JetOrderError(
                f"partial ({i}, {k}) not carried by jet of orders ({self.nx}, {self.nt})"
            )
        v = self.coeffs[i, k] * (math.factorial(i) * math.factorial(k))
        return float(v) if np.ndim(v) == 0 else v

    def _other_table(self, other: "Jet") -> np.ndarray:
        if (other.nx, other.nt) != (self.nx, self.nt):
            raise JetOrderError(
                f"cannot combine jets of orders ({self.nx}, {self.nt}) and ({other.nx}, {other.nt})"
            )
        return other.coeffs

    # ---- Arithmetic ----

    def __add__(self, other) -> "Jet":
        if isinstance(other, Jet):
            b = self._other_table(other)
            ndim = max(self.coeffs.ndim, b.ndim) - 2
            return Jet(_lift(self.coeffs, ndim) + _lift(b, ndim))
        value = np.asarray(other, dtype=float)
        ndim = max(self.coeffs.ndim - 2, value.ndim)
        coeffs = _lift(self.coeffs, ndim)
        batch = np.broadcast_shapes(coeffs.shape[2:], value.shape)
        out = np.broadcast_to(coeffs, coeffs.shape[:2] + batch).copy()
        out[0, 0] += value
        return Jet(out)

    __radd__ = __add__

    def __neg__(self) -> "Jet":
        return Jet(-self.coeffs)

    def __pos__(self) -> "Jet":
        return self

    def __sub__(self, other) -> "Jet":
        return self + (-other)

    def __rsub__(self, other) -> "Jet":
        return (-self) + other

    def __mul__(self, other) -> "Jet":
        if isinstance(other, Jet):
            return Jet(_mul_tables(self.coeffs, self._other_table(other)))
        value = np.asarray(other, dtype=float)
        ndim = max(self.coeffs.ndim - 2, value.ndim)
        return Jet(_lift(self.coeffs, ndim) * value)

    __rmul__ = __mul__

    def __truediv__(self, other) -> "Jet":
        if isinstance(other, Jet):
            return self * other.reciprocal()
        return self * (1.0 / np.asarray(other, dtype=float))

    def __rtruediv__(self, other) -> "Jet":
        return self.reciprocal() * other

    def __pow__(self, p) -> "Jet":
        if isinstance(p, Jet):
            raise TypeError("jet exponents must be real numbers")
        p = float(p)
        if p.is_integer():
            n = int(p)
            if n < 0:
                return self.reciprocal() ** (-n)
            return self._integer_power(n)
        x0 = self.coeffs[0, 0]
        bad = ~(x0 > 0.0)
        if np.any(bad):
            raise JetDomainError(
                f"non-integer power {p} of a non-positive value", mask=_domain_mask(bad)
            )
        return self.compose(S.power_series(x0, p, self.nx + self.nt))

    def _integer_power(self, n: int) -> "Jet":
        result = self._like(np.ones(self.batch_shape))
        base = self
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        return result

    def reciprocal(self) -> "Jet":
        x0 = self.coeffs[0, 0]
        bad = ~(np.abs(x0) >= DIVISION_FLOOR)
        if np.any(bad):
            raise JetDomainError("division by a jet with vanishing value", mask=_domain_mask(bad))
        return self.compose(S.reciprocal_series(x0, self.nx + self.nt))

    # ---- Elementary functions ----

    def compose(self, coefficients: np.ndarray) -> "Jet":
        """Evaluate a univariate Taylor series about this jet's value.

        Args:
            coefficients: ``a[n] = g^(n)(value) / n!`` for n up to at least
                ``nx + nt``, batch on trailing axes.

        Returns:
            The jet of ``g(self)``.
        """
        coefficients = np.asarray(coefficients, dtype=float)
        degree = self.nx + self.nt
        if coefficients.shape[0] < degree + 1:
            raise JetOrderError(f"series of degree {coefficients.shape[0] - 1} < {degree}")
        delta = Jet(self.coeffs.copy())
        delta.coeffs[0, 0] = 0.0
        result = self._like(coefficients[degree])
        for n in range(degree - 1, -1, -1):
            result = result * delta + coefficients[n]
        return result

    def _apply(self, make: Callable[[np.ndarray, int], np.ndarray]) -> "Jet":
        return self.compose(make(self.coeffs[0, 0], self.nx + self.nt))

    def exp(self) -> "Jet":
        return self._apply(S.exp_series)

    def sin(self) -> "Jet":
        return self._apply(S.sin_series)

    def cos(self) -> "Jet":
        return self._apply(S.cos_series)

    def tan(self) -> "Jet":
        bad = ~(np.abs(np.cos(self.coeffs[0, 0])) >= DIVISION_FLOOR)
        if np.any(bad):
            raise JetDomainError("tan evaluated at a pole", mask=_domain_mask(bad))
        return self._apply(S.tan_series)

    def sinh(self) -> "Jet":
        return self._apply(S.sinh_series)

    def cosh(self) -> "Jet":
        return self._apply(S.cosh_series)

    def tanh(self) -> "Jet":
        return self._apply(S.tanh_series)

    def sech(self) -> "Jet":
        return self._apply(S.sech_series)

    def sqrt(self) -> "Jet":
        return self ** 0.5

    def __repr__(self) -> str:
        return f"Jet(nx={self.nx}, nt={self.nt}, batch={self.batch_shape}, value={self.value!r})"

    @staticmethod
    def where(mask, a: "Jet", b) -> "Jet":
        """Pointwise select between two jets over the batch."""
        b = b if isinstance(b, Jet) else a._like(np.zeros(a.batch_shape)) + b
        mask = np.asarray(mask, dtype=bool)
        ndim = max(a.coeffs.ndim - 2, b.coeffs.ndim - 2, mask.ndim)
        return Jet(np.where(mask, _lift(a.coeffs, ndim), _lift(b.coeffs, ndim)))


def jet_seed(x0: Scalar, t0: Scalar, nx: int = MAX_NX, nt: int = MAX_NT) -> tuple[Jet, Jet]:
    """Return the identity jets for x and t expanded at (x0, t0).

    ``x0`` and ``t0`` may be arrays; they are broadcast to a common batch.
    """
    _check_orders(nx, nt)
    x0, t0 = np.broadcast_arrays(np.asarray(x0, dtype=float), np.asarray(t0, dtype=float))
    x = Jet.constant(x0, nx, nt)
    t = Jet.constant(t0, nx, nt)
    if nx >= 1:
        x.coeffs[1, 0] = 1.0
    if nt >= 1:
        t.coeffs[0, 1] = 1.0
    return x, t


def extract_partial(j: Jet, i: int, k: int):
    """Return d^(i+k) f / dx^i dt^k, i.e. ``c[i][k] * i! * k!``."""
    return j.partial(i, k)

"""Univariate Taylor series of the jet primitives.

Each function returns the coefficients ``a[n] = f^(n)(x0) / n!`` for
``n = 0..order`` stacked on the leading axis, with ``x0`` broadcast on the
trailing axes. ``Jet.compose`` turns these into bivariate jets.
"""

from __future__ import annotations

import math

import numpy as np
from scipy.special import binom


def _stack(values: list[np.ndarray]) -> np.ndarray:
    return np.stack([np.asarray(v, dtype=float) for v in values])


def exp_series(x0, order: int) -> np.ndarray:
    x0 = np.asarray(x0, dtype=float)
    value = np.exp(x0)
    return _stack([value / math.factorial(n) for n in range(order + 1)])


def _cyclic(first: np.ndarray, second: np.ndarray, order: int) -> np.ndarray:
    # f, f', f'', f''' for sin/cos repeat with period four
    cycle = (first, second, -first, -second)
    return _stack([cycle[n % 4] / math.factorial(n) for n in range(order + 1)])


def sin_series(x0, order: int) -> np.ndarray:
    x0 = np.asarray(x0, dtype=float)
    return _cyclic(np.sin(x0), np.cos(x0), order)


def cos_series(x0, order: int) -> np.ndarray:
    x0 = np.asarray(x0, dtype=float)
    return _cyclic(np.cos(x0), -np.sin(x0), order)


def sinh_series(x0, order: int) -> np.ndarray:
    x0 = np.asarray(x0, dtype=float)
    even, odd = np.sinh(x0), np.cosh(x0)
    return _stack([(even if n % 2 == 0 else odd) / math.factorial(n) for n in range(order + 1)])


def cosh_series(x0, order: int) -> np.ndarray:
    x0 = np.asarray(x0, dtype=float)
    even, odd = np.cosh(x0), np.sinh(x0)
    return _stack([(even if n % 2 == 0 else odd) / math.factorial(n) for n in range(order + 1)])


def _riccati(y0: np.ndarray, order: int, sign: float) -> list[np.ndarray]:
    """Series of y' = 1 + sign * y**2 (tan for +1, tanh for -1)."""
    y = [y0]
    for n in range(order):
        conv = sum(y[j] * y[n - j] for j in range(n + 1))
        y.append(((1.0 if n == 0 else 0.0) + sign * conv) / (n + 1))
    return y


def tan_series(x0, order: int) -> np.ndarray:
    x0 = np.asarray(x0, dtype=float)
    return _stack(_riccati(np.tan(x0), order, 1.0))


def tanh_series(x0, order: int) -> np.ndarray:
    x0 = np.asarray(x0, dtype=float)
    return _stack(_riccati(np.tanh(x0), order, -1.0))


def _sech(x0: np.ndarray) -> np.ndarray:
    e = np.exp(-np.abs(x0))
    return 2.0 * e / (1.0 + e * e)


def sech_series(x0, order: int) -> np.ndarray:
    # sech' = -sech * tanh
    x0 = np.asarray(x0, dtype=float)
    tau = _riccati(np.tanh(x0), order, -1.0)
    s = [_sech(x0)]
    for n in range(order):
        s.append(-sum(s[j] * tau[n - j] for j in range(n + 1)) / (n + 1))
    return _stack(s)


def power_series(x0, p: float, order: int) -> np.ndarray:
    """Generalized binomial series of x**p about x0 (caller checks the domain)."""
    x0 = np.asarray(x0, dtype=float)
    with np.errstate(divide="ignore", invalid="ignore"):
        return _stack([binom(p, n) * np.power(x0, p - n) for n in range(order + 1)])


def reciprocal_series(x0, order: int) -> np.ndarray:
    x0 = np.asarray(x0, dtype=float)
    inv = 1.0 / x0
    return _stack([(-1.0) ** n * inv ** (n + 1) for n in range(order + 1)])

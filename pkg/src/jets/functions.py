"""Elementary functions that accept floats, numpy arrays or jets.

Closed-form fields are written once against these helpers and can then be
sampled on plain grids or differentiated exactly through jets.
"""

from __future__ import annotations

import numpy as np

from .jet import Jet


def _dispatch(name: str, numpy_fn):
    def fn(x):
        if isinstance(x, Jet):
            return getattr(x, name)()
        return numpy_fn(np.asarray(x, dtype=float))

    fn.__name__ = name
    return fn


def _sech(x: np.ndarray) -> np.ndarray:
    e = np.exp(-np.abs(x))
    return 2.0 * e / (1.0 + e * e)


sin = _dispatch("sin", np.sin)
cos = _dispatch("cos", np.cos)
tan = _dispatch("tan", np.tan)
sinh = _dispatch("sinh", np.sinh)
cosh = _dispatch("cosh", np.cosh)
tanh = _dispatch("tanh", np.tanh)
sech = _dispatch("sech", _sech)
exp = _dispatch("exp", np.exp)
sqrt = _dispatch("sqrt", np.sqrt)


def power(x, p: float):
    """x**p; on plain arrays non-integer powers of non-positive values give nan."""
    if isinstance(x, Jet):
        return x ** p
    x = np.asarray(x, dtype=float)
    if float(p).is_integer():
        return x ** int(p) if p >= 0 else np.divide(1.0, x ** int(-p))
    with np.errstate(invalid="ignore"):
        return np.where(x > 0, np.power(np.abs(x), p), np.nan)


def where(mask, a, b):
    """Pointwise select; works when either branch is a jet."""
    if isinstance(a, Jet):
        return Jet.where(mask, a, b)
    if isinstance(b, Jet):
        return Jet.where(~np.asarray(mask, dtype=bool), b, a)
    return np.where(mask, a, b)


def value_of(x):
    """Plain value of a jet, array or float."""
    return x.value if isinstance(x, Jet) else x

"""Symbolic coefficient matching for sech^2 solitary waves.

For u_tt - c u_xx - u_xxxx - gamma (u^2)_xx = 0 and u = h(x - v t), two
integrations with decaying data give (v^2 - c) h - h'' - gamma h^2 = 0.
Substituting h = a sech^2(k z) and matching the sech^2 and sech^4
coefficients fixes a and v^2. Derivatives are taken on polynomials in
S = sech(kz), T = tanh(kz) using S' = -k S T and T' = k (1 - T^2).
"""

from __future__ import annotations

import logging
from functools import lru_cache
from typing import NamedTuple

import sympy

from ..errors import LabError

logger = logging.getLogger(__name__)

_S, _T = sympy.symbols("S T")
_a, _v2, _k, _c, _gamma = sympy.symbols("a v2 k c gamma")


class SolitonParams(NamedTuple):
    amplitude: float
    speed_squared: float


def _dz(expr):
    expr = sympy.diff(expr, _S) * (-_k * _S * _T) + sympy.diff(expr, _T) * _k * (1 - _T**2)
    # T^2 = 1 - S^2
    return sympy.expand(sympy.rem(sympy.expand(expr), _T**2 - 1 + _S**2, _T))


@lru_cache(maxsize=1)
def _symbolic_solution() -> tuple[sympy.Expr, sympy.Expr]:
    h = _a * _S**2
    residual = sympy.expand((_v2 - _c) * h - _dz(_dz(h)) - _gamma * h**2)
    poly = sympy.Poly(residual, _S, _T)
    equations = [poly.coeff_monomial(_S**2), poly.coeff_monomial(_S**4)]
    leftover = residual - equations[0] * _S**2 - equations[1] * _S**4
    if sympy.simplify(leftover) != 0:
        raise LabError(f"sech^2 ansatz leaves unmatched terms: {leftover}")
    for solution in sympy.solve(equations, [_a, _v2], dict=True):
        if sympy.simplify(solution[_a]) != 0:
            logger.debug("sech^2 oracle: a = %s, v^2 = %s", solution[_a], solution[_v2])
            return solution[_a], solution[_v2]
    raise LabError("no non-trivial sech^2 solution")


def sech2_soliton(c: float, gamma: float, k: float) -> SolitonParams:
    """Amplitude a and squared speed v^2 of u = a sech^2(k (x - v t))."""
    if gamma == 0.0 or k == 0.0:
        raise LabError("sech^2 matching needs non-zero gamma and k")
    a_expr, v2_expr = _symbolic_solution()
    values = {_c: c, _gamma: gamma, _k: k}
    return SolitonParams(float(a_expr.subs(values)), float(v2_expr.subs(values)))

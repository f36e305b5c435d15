"""Direct-method families h = alpha * H(z | m) ** beta, H in {sn, cn, dn}.

H satisfies (H')^2 = r + p H^2 + q H^4, and substituting h into
h'''' + b h'' + F(h) = 0 leaves

    F(h) = c1 h^(1+4/beta) + c2 h^(1+2/beta) + c3 h^(1-4/beta) + c4 h^(1-2/beta) + c5 h.

Two coefficient tables are available: the printed ones, kept verbatim, and
one written directly in terms of (r, p, q).
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from typing import NamedTuple

import numpy as np

from ..elliptic import jacobi_eval, jacobi_jet
from ..errors import CoefficientDomainError
from ..jets import Jet, jet_seed
from ..jets import functions as jf
from ..models.equation import NonlinearitySpec, WaveFrame
from ..models.solution import CoefficientTable, DirectAnsatz, FifthCoefficient, JacobiKind
from .fields import FunctionProfile, Profile, TravelingWave

logger = logging.getLogger(__name__)

_INDEX = {JacobiKind.SN: 0, JacobiKind.CN: 1, JacobiKind.DN: 2}


class JacobiOdeParams(NamedTuple):
    r: float
    p: float
    q: float


def jacobi_ode_params(kind: JacobiKind, m: float) -> JacobiOdeParams:
    """(r, p, q) with (H')^2 = r + p H^2 + q H^4."""
    kind = JacobiKind(kind)
    if kind == JacobiKind.SN:
        return JacobiOdeParams(1.0, -(1.0 + m), m)
    if kind == JacobiKind.CN:
        return JacobiOdeParams(1.0 - m, 2.0 * m - 1.0, -m)
    return JacobiOdeParams(m - 1.0, 2.0 - m, -1.0)


@dataclass(frozen=True)
class CoefficientSet:
    """F(h) coefficients c1..c5 and the f(h) coefficients derived from them."""

    ansatz: DirectAnsatz
    table: CoefficientTable
    b: float
    unprimed: tuple[float, float, float, float, float]
    primed: dict[FifthCoefficient, tuple[float, float, float, float, float]] = field(default_factory=dict)

    def F(self) -> NonlinearitySpec:
        return NonlinearitySpec.from_pairs(zip(self.unprimed, self.ansatz.exponents))

    def f(self, variant: FifthCoefficient = FifthCoefficient.INVERTED) -> NonlinearitySpec:
        if variant not in self.primed:
            raise CoefficientDomainError("f(h) coefficients need a frame; use direct_f")
        return NonlinearitySpec.from_pairs(zip(self.primed[variant], self.ansatz.exponents))


def _alpha_power(alpha: float, exponent: float) -> float:
    if alpha > 0 or float(exponent).is_integer():
        return alpha ** exponent
    raise CoefficientDomainError(f"alpha={alpha} raised to non-integer power {exponent}")


# --- Printed tables ---


def _paper_sn(alpha, be, m, b):
    am4, am2 = _alpha_power(alpha, -4 / be), _alpha_power(alpha, -2 / be)
    ap4, ap2 = _alpha_power(alpha, 4 / be), _alpha_power(alpha, 2 / be)
    c1 = -am4 * (be**4 * m**4 + (6 * be**3 + 8 * be**2 + 4 * be) * m**3 + (3 * be**2 + 2 * be) * m**2)
    c2 = am2 * (
        (2 * be**4 - 6 * be**3 + 8 * be**2 - 4 * be) * m**4
        + (12 * be**3 - 6 * be**2 + 8 * be) * m**3
        + (2 * be**4 + (6 - b) * be**2) * m**2
        + (6 * be**3 + 8 * be**2 + (4 - b) * be) * m
    )
    c3 = -ap4 * be**4 + 6 * ap4 * be**3 - 11 * ap4 * be**2 + 6 * ap4 * be
    # the printed middle group opens a parenthesis it never closes; read as a bare sum
    c4 = (
        (2 * ap2 * be**4 - 12 * ap2 * be**3 + 22 * ap2 * be**2 - 12 * ap2 * be) * m**2
        + (ap2 * b - 4 * ap2 * be + 2 * ap2 * be**4 - 6 * ap2 * be**3 + (8 * ap2 - ap2 * b) * be**2)
        + (6 * ap2 * be**3 - 14 * ap2 * be**2 + 8 * ap2 * be) * m
    )
    c5 = (
        (-(be**4) + 6 * be**3 - 11 * be**2 + 6 * be) * m**4
        + (-6 * be**3 + 14 * be**2 - 8 * be) * m**3
        + (-4 * be**4 + 12 * be**3 + (b - 19) * be**2 + (10 - b) * be) * m**2
        + (-12 * be**3 + 6 * be**2 + (b - 8) * be) * m
        - be**4
        + b * be**2
    )
    return c1, c2, c3, c4, c5


def _paper_cn(alpha, be, m, b):
    am4, am2 = _alpha_power(alpha, -4 / be), _alpha_power(alpha, -2 / be)
    ap4, ap2 = _alpha_power(alpha, 4 / be), _alpha_power(alpha, 2 / be)
    c1 = am4 * be * m**2 * (be**3 * m**2 + 6 * be**2 * m + 8 * be * m + 4 * m + 3 * be + 2)
    c2 = -am2 * be * m * (
        4 * be**3 * m**3 - 6 * be**2 * m**3 + 8 * be * m**3 - 4 * m**3 + 18 * be**2 * m**2 + b
        + 2 * be * m**2 + 12 * m**2 - 2 * be**3 * m + b * be * m + 6 * be * m - 6 * be**2 - 8 * be - 4
    )
    c3 = ap4 * (be - 3) * (be - 2) * (be - 1) * be * (m - 1) ** 2 * (m + 1) ** 2
    c4 = -ap2 * (be - 1) * be * (m - 1) * (m + 1) * (
        4 * be**2 * m**2 - 14 * be * m**2 + 16 * m**2 + 6 * be * m - 8 * m - 2 * be**2 + 4 * be + b - 4
    )
    c5 = be * (
        6 * be**3 * m**4 - 18 * be**2 * m**4 + 27 * be * m**4 - 14 * m**4 + 18 * be**2 * m**3
        - 20 * be * m**3 + 16 * m**3 - 6 * be**3 * m**2 + 12 * be**2 * m**2 + 2 * b * be * m**2
        - 13 * be * m**2 - b * m**2 + 6 * m**2 - 12 * be**2 * m + 6 * be * m + b * m - 8 * m
        + be**3 - b * be
    )
    return c1, c2, c3, c4, c5


def _paper_dn(alpha, be, m, b):
    if m == 0.0:
        raise CoefficientDomainError("printed dn table carries m^-4 and is undefined at m = 0")
    am4, am2 = _alpha_power(alpha, -4 / be), _alpha_power(alpha, -2 / be)
    ap4, ap2 = _alpha_power(alpha, 4 / be), _alpha_power(alpha, 2 / be)
    mi = m**-4
    c1 = -am4 * mi * be * (
        8 * m**3 + 28 * be * m**2 - 12 * m**2 + 12 * be**2 * m - 28 * be * m
        + 16 * m + be**3 - 6 * be**2 + 11 * be - 6
    )
    c2 = -am2 * mi * be * (
        4 * m**5 + 28 * be * m**4 - 12 * m**4 + 18 * be**2 * m**3 - 42 * be * m**3
        - 2 * b * m**3 + 16 * m**3 + 2 * be**3 * m**2 - 12 * be**2 * m**2 - b * be * m**2 - 34 * be * m**2 + b * m**2
        + 12 * m**2 - 36 * be**2 * m + 84 * be * m - 48 * m - 4 * be**3 + 24 * be**2 - 44 * be + 24
    )
    c3 = -ap4 * mi * (be - 3) * (be - 2) * (be - 1) * be * (m - 1) ** 2 * (m + 1) ** 2
    c4 = ap2 * mi * (be - 1) * be * (m - 1) * (m + 1) * (
        6 * be * m**3 - 8 * m**3 + 2 * be**2 * m**2
        - 10 * be * m**2 - b * m**2 + 12 * m**2 - 12 * be * m + 16 * m - 4 * be**2 + 20 * be - 24
    )
    c5 = -be * (
        3 * be * m**6 - 2 * m**6 + 6 * be**2 * m**5 - 14 * be * m**5 - b * m**5 + 8 * m**5 + be**3 * m**4
        - 6 * be**2 * m**4 - b * be * m**4 - 17 * be * m**4 + b * m**4 + 6 * m**4 - 36 * be**2 * m**3 + 84 * be * m**3
        + 2 * b * m**3 - 48 * m**3 - 6 * be**3 * m**2 + 36 * be**2 * m**2 + 2 * b * be * m**2 - 38 * be * m**2
        - 2 * b * m**2 + 24 * m**2 + 36 * be**2 * m - 84 * be * m + 48 * m + 6 * be**3 - 36 * be**2
        + 66 * be - 36
    ) * mi
    return c1, c2, c3, c4, c5


_PAPER_TABLES = {
    JacobiKind.SN: _paper_sn,
    JacobiKind.CN: _paper_cn,
    JacobiKind.DN: _paper_dn,
}


def _derived(ansatz: DirectAnsatz, b: float):
    """Coefficients from D^2(H^s) = s(s-1) r H^(s-2) + s^2 p H^s + s(s+1) q H^(s+2)."""
    r, p, q = jacobi_ode_params(ansatz.kind, ansatz.m)
    alpha, be = ansatz.alpha, ansatz.beta
    c1 = -_alpha_power(alpha, -4 / be) * be * (be + 1) * (be + 2) * (be + 3) * q * q
    c2 = -_alpha_power(alpha, -2 / be) * (
        be * (be + 1) * p * q * (be**2 + (be + 2) ** 2) + b * be * (be + 1) * q
    )
    c3 = -_alpha_power(alpha, 4 / be) * be * (be - 1) * (be - 2) * (be - 3) * r * r
    c4 = -_alpha_power(alpha, 2 / be) * (
        be * (be - 1) * r * p * ((be - 2) ** 2 + be**2) + b * be * (be - 1) * r
    )
    c5 = -(
        be * (be - 1) ** 2 * (be - 2) * r * q
        + be**4 * p * p
        + be * (be + 1) ** 2 * (be + 2) * q * r
        + b * be**2 * p
    )
    return c1, c2, c3, c4, c5


def direct_coefficients(
    ansatz: DirectAnsatz,
    b: float,
    table: CoefficientTable = CoefficientTable.PAPER,
) -> CoefficientSet:
    """c1..c5 of F(h) for ``ansatz`` and the h'' coefficient ``b``."""
    table = CoefficientTable(table)
    if table == CoefficientTable.PAPER:
        values = _PAPER_TABLES[ansatz.kind](ansatz.alpha, ansatz.beta, ansatz.m, b)
    else:
        values = _derived(ansatz, b)
    return CoefficientSet(ansatz=ansatz, table=table, b=b, unprimed=tuple(float(v) for v in values))


def frame_b(frame: WaveFrame, c: float) -> float:
    """b = (mu^2 c - lam^2) / (mu^2 lam^2)."""
    lam, mu = frame.lam, frame.mu
    if lam == 0.0:
        raise CoefficientDomainError("b is undefined for lambda = 0")
    return (mu * mu * c - lam * lam) / (mu * mu * lam * lam)


def direct_f(
    ansatz: DirectAnsatz,
    frame: WaveFrame,
    c: float,
    table: CoefficientTable = CoefficientTable.PAPER,
) -> CoefficientSet:
    """f(h) coefficients under both conventions for the linear term."""
    base = direct_coefficients(ansatz, frame_b(frame, c), table)
    lam2, mu2 = frame.lam**2, frame.mu**2
    scale = -mu2 * lam2
    head = tuple(scale * v for v in base.unprimed[:4])
    c5 = scale * base.unprimed[4]
    primed = {
        FifthCoefficient.PAPER: head + (c5 + mu2 * (lam2 - mu2),),
        FifthCoefficient.INVERTED: head + (c5 + (lam2 - mu2) / mu2,),
    }
    return CoefficientSet(ansatz=ansatz, table=base.table, b=base.b, unprimed=base.unprimed, primed=primed)


# --- Solutions ---


def _jacobi(z, kind: JacobiKind, m: float):
    if isinstance(z, Jet):
        return jacobi_jet(z, m)[_INDEX[kind]]
    return jacobi_eval(z, m)[_INDEX[kind]]


def direct_profile(ansatz: DirectAnsatz) -> Profile:
    """h(z) = alpha * H(z | m) ** beta; non-integer beta restricts to H > 0."""

    def h(z):
        return ansatz.alpha * jf.power(_jacobi(z, ansatz.kind, ansatz.m), ansatz.beta)

    domain = None
    if not float(ansatz.beta).is_integer():
        domain = lambda z: np.asarray(jacobi_eval(z, ansatz.m)[_INDEX[ansatz.kind]]) > 0  # noqa: E731
    return FunctionProfile(h, domain)


def direct_solution(ansatz: DirectAnsatz, frame: WaveFrame) -> TravelingWave:
    """u(x, t) = alpha * H(mu x - lambda t | m) ** beta."""
    return TravelingWave(direct_profile(ansatz), frame)


def direct_terms(coefficients: CoefficientSet, z) -> dict[str, "np.ndarray | float"]:
    """Terms of h'''' + b h'' + F(h) along h = alpha H^beta."""
    Z, _ = jet_seed(z, 0.0, nx=4, nt=0)
    H = direct_profile(coefficients.ansatz)(Z)
    value = H.coeffs[0, 0]
    terms = {"h''''": H.partial(4, 0), "b*h''": coefficients.b * H.partial(2, 0)}
    for i, (coef, exponent) in enumerate(zip(coefficients.unprimed, coefficients.ansatz.exponents), start=1):
        if coef == 0.0:
            continue
        terms[f"c{i}*h^{exponent:.6g}"] = coef * jf.power(value, exponent)
    return terms


def direct_residual(coefficients: CoefficientSet, z):
    return sum(direct_terms(coefficients, z).values())

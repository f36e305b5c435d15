"""G'/G-expansion solutions of the quadratic generalized equation.

h = sum_{i<=4} a_i (G'/G)^i with G'' + alpha G' + beta G = 0. Writing
psi = G'/G + alpha/2 gives psi' = (alpha^2 - 4 beta)/4 - psi^2, so each
branch has a kernel psi(z):

    hyperbolic     psi = (s/2) (c2 ch + c1 sh)/(c1 ch + c2 sh)  at s z/2, s = sqrt(alpha^2 - 4 beta)
    trigonometric  psi = (w/2) (c1 cos - c2 sin)/(c2 cos + c1 sin)  at w z/2, w = sqrt(4 beta - alpha^2)
    rational       psi = c1 / (c1 z + c2)

Profiles are available three ways: the closed forms in the kernel, direct
summation of a_i (G'/G)^i from G and G', and the printed formulas (the
trigonometric closed form as printed, and the three final solutions).
"""

from __future__ import annotations

import logging
import math
from typing import NamedTuple

import numpy as np

from ..errors import BranchError, KernelPoleError, LabError
from ..jets import DIVISION_FLOOR, Jet
from ..jets import functions as jf
from ..models.equation import WaveFrame
from ..models.solution import GGBranch, GGSolution, branch_of
from .fields import FunctionProfile, Profile, TravelingWave

logger = logging.getLogger(__name__)

BRANCH_TOL = 1e-12


class GGCoefficients(NamedTuple):
    a0: float
    a1: float
    a2: float
    a3: float
    a4: float
    beta_g: float
    B: float


def gg_determine(alpha_g: float, frame: WaveFrame, c: float) -> GGCoefficients:
    """Expansion coefficients, beta and B that make h solve the reduced quadratic equation."""
    lam, mu = frame.lam, frame.mu
    if lam == 0.0:
        raise LabError("G'/G coefficients need lambda != 0")
    al = alpha_g
    l2, m2 = lam * lam, mu * mu
    X = l2 * m2
    a0 = (
        3 * (5915 * al**4 * l2**2 + 910 * c * al**2 * l2 + 23 * c**2) * m2**2
        - (169 + 6 * (455 * al**2 * l2 + 23 * c)) * m2 * l2
        + 238 * l2**2
    ) / (338 * X)
    a1 = 420 / 13 * al * ((13 * al**2 * l2 + c) * m2 - l2)
    a2 = 420 / 13 * ((39 * al**2 * l2 + c) * m2 - l2)
    a3 = 1680 * al * X
    a4 = 840 * X
    beta_g = (13 * al**2 * m2 * l2 - l2 + c * m2) / (52 * X)
    B = (
        (-133 * l2**2 - (72 * c - 169) * m2 * l2 + 36 * c**2 * m2**2)
        * (205 * l2**2 - (72 * c + 169) * m2 * l2 + 36 * c**2 * m2**2)
        / (114244 * l2**2 * m2)
    )
    return GGCoefficients(a0, a1, a2, a3, a4, beta_g, B)


def classify_branch(alpha_g: float, beta_g: float) -> GGBranch:
    return branch_of(alpha_g, beta_g)


def frame_branch(frame: WaveFrame, c: float) -> GGBranch:
    """Branch selected by the sign of 1/mu^2 - c/lam^2."""
    if frame.lam == 0.0:
        raise LabError("branch needs lambda != 0")
    inv_mu, c_lam = 1.0 / frame.mu**2, c / frame.lam**2
    value = inv_mu - c_lam
    if abs(value) <= BRANCH_TOL * max(inv_mu, abs(c_lam)):
        return GGBranch.RATIONAL
    return GGBranch.HYPERBOLIC if value > 0 else GGBranch.TRIGONOMETRIC


def gg_parameters(alpha_g: float, frame: WaveFrame, c: float, c1: float = 1.0, c2: float = 0.0) -> GGSolution:
    """Determined G'/G solution for the given alpha, frame and dispersion constant."""
    coeffs = gg_determine(alpha_g, frame, c)
    return GGSolution(
        a0=coeffs.a0,
        a1=coeffs.a1,
        a2=coeffs.a2,
        a3=coeffs.a3,
        a4=coeffs.a4,
        alpha_g=alpha_g,
        beta_g=coeffs.beta_g,
        B=coeffs.B,
        c1=c1,
        c2=c2,
        frame=frame,
        c=c,
        branch=classify_branch(alpha_g, coeffs.beta_g),
    )


# --- Kernels ---


def _divide(num, den):
    if isinstance(den, Jet):
        return num / den
    den = np.asarray(den, dtype=float)
    if np.any(np.abs(den) < DIVISION_FLOOR):
        raise KernelPoleError("kernel denominator vanishes")
    return num / den


def _rate(alpha_g: float, beta_g: float) -> float:
    return math.sqrt(abs(alpha_g * alpha_g - 4.0 * beta_g))


def gg_G(z, alpha_g: float, beta_g: float, c1: float, c2: float):
    """General solution of G'' + alpha G' + beta G = 0.

    The hyperbolic branch keeps the printed form
    C1 (ch v1 - sh v1) + C2 (ch v2 - sh v2), v = z (alpha -/+ s)/2, with
    C1 = (c1 + c2)/2 and C2 = (c1 - c2)/2; ch v - sh v is evaluated as exp(-v).
    """
    branch = classify_branch(alpha_g, beta_g)
    s = _rate(alpha_g, beta_g)
    if branch == GGBranch.HYPERBOLIC:
        C1, C2 = 0.5 * (c1 + c2), 0.5 * (c1 - c2)
        return C1 * jf.exp(-(alpha_g - s) * z * 0.5) + C2 * jf.exp(-(alpha_g + s) * z * 0.5)
    decay = jf.exp(-alpha_g * z * 0.5)
    if branch == GGBranch.TRIGONOMETRIC:
        y = s * z * 0.5
        return (c2 * jf.cos(y) + c1 * jf.sin(y)) * decay
    return (c1 * z + c2) * decay


def gg_Gprime(z, alpha_g: float, beta_g: float, c1: float, c2: float):
    branch = classify_branch(alpha_g, beta_g)
    s = _rate(alpha_g, beta_g)
    if branch == GGBranch.HYPERBOLIC:
        C1, C2 = 0.5 * (c1 + c2), 0.5 * (c1 - c2)
        return (
            -C1 * (alpha_g - s) * 0.5 * jf.exp(-(alpha_g - s) * z * 0.5)
            - C2 * (alpha_g + s) * 0.5 * jf.exp(-(alpha_g + s) * z * 0.5)
        )
    decay = jf.exp(-alpha_g * z * 0.5)
    if branch == GGBranch.TRIGONOMETRIC:
        y = s * z * 0.5
        return (
            s * 0.5 * (c1 * jf.cos(y) - c2 * jf.sin(y)) * decay
            - alpha_g * 0.5 * (c2 * jf.cos(y) + c1 * jf.sin(y)) * decay
        )
    return c1 * decay - alpha_g * 0.5 * (c1 * z + c2) * decay


def _horner(coefficients, x):
    result = coefficients[-1]
    for a in coefficients[-2::-1]:
        result = result * x + a
    return result


def _base_constant(a, al):
    a0, a1, a2, a3, a4 = a
    return a4 * al**4 / 16 - a3 * al**3 / 8 + a2 * al**2 / 4 - a1 * al / 2 + a0


def _odd1(a, al):
    a0, a1, a2, a3, a4 = a
    return -2 * a4 * al**3 + 3 * a3 * al**2 - 4 * a2 * al + 4 * a1


def _even2(a, al):
    a0, a1, a2, a3, a4 = a
    return 3 * a4 * al**2 - 3 * a3 * al + 2 * a2


# --- Profiles ---


def gg_closed_profile(a, alpha_g: float, beta_g: float, c1: float, c2: float) -> Profile:
    """Closed form of sum a_i (G'/G)^i as a quartic in the branch kernel."""
    a = tuple(a)
    al = alpha_g
    a4, a3 = a[4], a[3]
    k0, k1, k2, k3 = _base_constant(a, al), _odd1(a, al), _even2(a, al), a3 - 2 * a4 * al
    branch = classify_branch(alpha_g, beta_g)
    disc = al * al - 4.0 * beta_g
    s = _rate(alpha_g, beta_g)

    if branch == GGBranch.HYPERBOLIC:

        def h(z):
            y = s * z * 0.5
            H1 = _divide(c2 * jf.cosh(y) + c1 * jf.sinh(y), c1 * jf.cosh(y) + c2 * jf.sinh(y))
            return (
                k0
                + s / 8 * k1 * H1
                + disc / 8 * k2 * H1 * H1
                + disc**1.5 / 8 * k3 * H1**3
                + disc**2 / 16 * a4 * H1**4
            )

    elif branch == GGBranch.TRIGONOMETRIC:

        def h(z):
            y = s * z * 0.5
            K = _divide(c1 * jf.cos(y) - c2 * jf.sin(y), c2 * jf.cos(y) + c1 * jf.sin(y))
            return k0 + s / 8 * k1 * K + s**2 / 8 * k2 * K * K + s**3 / 8 * k3 * K**3 + s**4 / 16 * a4 * K**4

    else:

        def h(z):
            w = c1 * z + c2
            inv = _divide(1.0, w)
            return (
                k0
                + a4 * c1**4 * inv**4
                + k3 * c1**3 * inv**3
                + k2 * c1**2 / 2 * inv * inv
                + k1 * c1 / 4 * inv
            )

    return FunctionProfile(h)


def gg_expansion_profile(a, alpha_g: float, beta_g: float, c1: float, c2: float) -> Profile:
    """sum a_i (G'/G)^i with G and G' evaluated from the general solution."""
    a = tuple(a)

    def h(z):
        ratio = _divide(gg_Gprime(z, alpha_g, beta_g, c1, c2), gg_G(z, alpha_g, beta_g, c1, c2))
        return _horner(a, ratio)

    return FunctionProfile(h)


def gg_trig_printed_profile(a, alpha_g: float, beta_g: float, c1: float, c2: float) -> Profile:
    """Trigonometric branch exactly as printed, kernel (c2 cos + c1 sin)/(c1 cos - c2 sin)."""
    a = tuple(a)
    al = alpha_g
    if classify_branch(alpha_g, beta_g) != GGBranch.TRIGONOMETRIC:
        raise BranchError("printed trigonometric form needs alpha^2 < 4 beta", expected=classify_branch(alpha_g, beta_g))
    w = _rate(alpha_g, beta_g)
    a4, a3 = a[4], a[3]
    k0, k1, k2 = _base_constant(a, al), _odd1(a, al), _even2(a, al)

    def h(z):
        y = w * z * 0.5
        H2 = _divide(c2 * jf.cos(y) + c1 * jf.sin(y), c1 * jf.cos(y) - c2 * jf.sin(y))
        return (
            k0
            + a4 / 16 * w**4 * H2**4
            + (a3 + 2 * a4 * al) / 8 * w**3 * H2
            + k2 / 8 * w**2 * H2 * H2
            + k1 / 8 * w * H2**3
        )

    return FunctionProfile(h)


def gg_h(a, alpha_g: float, beta_g: float, c1: float, c2: float, path: str = "closed") -> Profile:
    """G'/G profile along ``path``: "closed", "expansion" or "printed" (trigonometric only)."""
    builders = {
        "closed": gg_closed_profile,
        "expansion": gg_expansion_profile,
        "printed": gg_trig_printed_profile,
    }
    if path not in builders:
        raise LabError(f"unknown G'/G evaluation path '{path}'")
    return builders[path](a, alpha_g, beta_g, c1, c2)


def gg_printed_profile(branch: GGBranch, frame: WaveFrame, c: float, c1: float, c2: float) -> Profile:
    """The three final solutions as printed, as functions of z = mu x - lambda t."""
    branch = GGBranch(branch)
    actual = frame_branch(frame, c)
    if actual != branch:
        raise BranchError(
            f"c={c:g}, lambda={frame.lam:g}, mu={frame.mu:g} select the {actual.value} branch",
            expected=actual,
        )
    lam, mu = frame.lam, frame.mu
    l2, m2 = lam * lam, mu * mu
    X = l2 * m2
    w2 = (c * m2 - l2) ** 2
    tail = 69 * c**2 * m2 / (338 * l2) - 69 * c / 169 + 119 * l2 / (169 * m2) - 0.5

    if branch == GGBranch.HYPERBOLIC:
        omega = 0.5 * math.sqrt((1 / 13) * (-c / l2 + 1 / m2))

        def h(z):
            y = omega * z
            F1 = _divide(c2 * jf.cosh(y) + c1 * jf.sinh(y), c1 * jf.cosh(y) + c2 * jf.sinh(y))
            return 215040 / (169 * X) * w2 * F1**4 - 6720 / (169 * X) * w2 * F1 * F1 + tail

    elif branch == GGBranch.TRIGONOMETRIC:
        omega = math.sqrt(c / l2 - 1 / m2) / (2 * math.sqrt(13))

        def h(z):
            y = omega * z
            F2 = -_divide(c2 * jf.cos(y) + c1 * jf.sin(y), c2 * jf.sin(y) - c1 * jf.cos(y))
            return 105 / (338 * X) * w2 * F2**4 + 105 / (169 * X) * w2 * F2 * F2 + tail

    else:

        def h(z):
            inv = _divide(1.0, c1 * z + c2)
            return 840 * X * c1**4 * inv**4 - 420 * (l2 - c * m2) * c1**2 / 13 * inv * inv + tail

    return FunctionProfile(h)


def gg_solution(params: GGSolution) -> TravelingWave:
    """Printed final solution for ``params.branch`` in the frame of ``params``."""
    profile = gg_printed_profile(params.branch, params.frame, params.c, params.c1, params.c2)
    return TravelingWave(profile, params.frame)


def gg_determined_solution(params: GGSolution, path: str = "closed") -> TravelingWave:
    """u(x, t) = h(mu x - lambda t) with h built from the expansion coefficients."""
    profile = gg_h(params.coefficients, params.alpha_g, params.beta_g, params.c1, params.c2, path=path)
    return TravelingWave(profile, params.frame)

"""Residual functionals evaluated by exact jet differentiation.

Every ``*_terms`` function returns an ordered mapping from a term label to
its value; the residual is the sum. Inputs may be scalars or arrays, in
which case one batched jet pass covers every point.
"""

from __future__ import annotations

from typing import Callable, Optional

import numpy as np

from ..errors import LabError
from ..jets import Jet, StencilSpec, fd_partial, jet_seed
from ..models.equation import EquationVariant, PdeForm, ReductionConvention, WaveFrame
from .forms import ReducedOde

Field = Callable  # (x, t) -> jet or array
Profile = Callable  # z -> jet or array

Terms = dict[str, "np.ndarray | float"]


def _as_jet(value, like: Jet) -> Jet:
    return value if isinstance(value, Jet) else like * 0.0 + value


def _total(terms: Terms):
    total = 0.0
    for value in terms.values():
        total = total + value
    return total


# --- PDE ---


def _wave_coefficients(form: PdeForm) -> tuple[float, float]:
    """(c, gamma) of u_tt - c u_xx - u_xxxx - gamma (u^2)_xx for the fourth-order forms."""
    if form.variant == EquationVariant.ASSIGNED:
        return 1.0, 3.0
    if form.variant == EquationVariant.CLASSICAL:
        return form.c, 1.0
    return 1.0, 1.0


def pde_terms(form: PdeForm, u: Field, x, t) -> Terms:
    """Term-by-term left-hand side of ``form`` for the field ``u`` at (x, t)."""
    nx = 6 if form.variant == EquationVariant.GENERALIZED else 4
    X, T = jet_seed(x, t, nx=nx, nt=2)
    U = _as_jet(u(X, T), X)

    if form.variant == EquationVariant.GENERALIZED:
        F = _as_jet(form.f(U), X)
        return {
            "u_tt": U.partial(0, 2),
            "-u_xxtt": -U.partial(2, 2),
            "u_xxxxtt": U.partial(4, 2),
            "c*u_xxxx": form.c * U.partial(4, 0),
            "-u_xx": -U.partial(2, 0),
            "-(f(u))_xx": -F.partial(2, 0),
        }

    c, gamma = _wave_coefficients(form)
    U2 = U * U
    return {
        "u_tt": U.partial(0, 2),
        "-c*u_xx": -c * U.partial(2, 0),
        "-u_xxxx": -U.partial(4, 0),
        f"-{gamma:g}*(u^2)_xx": -gamma * U2.partial(2, 0),
    }


def pde_residual(form: PdeForm, u: Field, x, t):
    """Left-hand side of ``form`` for ``u`` at (x, t)."""
    return _total(pde_terms(form, u, x, t))


def pde_residual_fd(
    form: PdeForm,
    u: Field,
    x0: float,
    t0: float,
    spec: Optional[StencilSpec] = None,
) -> float:
    """The same residual assembled from finite-difference partials.

    ``spec`` fixes the step for every partial; by default each partial
    uses the step suited to its total order.
    """

    def d(sampler, i, k):
        return fd_partial(sampler, x0, t0, i, k, spec)

    if form.variant == EquationVariant.GENERALIZED:
        f_of_u = lambda X, T: form.f(u(X, T))  # noqa: E731
        return (
            d(u, 0, 2) - d(u, 2, 2) + d(u, 4, 2) + form.c * d(u, 4, 0) - d(u, 2, 0) - d(f_of_u, 2, 0)
        )
    c, gamma = _wave_coefficients(form)
    u_squared = lambda X, T: u(X, T) ** 2  # noqa: E731
    return d(u, 0, 2) - c * d(u, 2, 0) - d(u, 4, 0) - gamma * d(u_squared, 2, 0)


# --- Reduced ODE ---


def ode_terms(ode: ReducedOde, h: Profile, z, derivative: int = 0, normalized: bool = False) -> Terms:
    """Terms of the reduced functional, or of its ``derivative``-th z-derivative.

    Args:
        ode: Reduced equation.
        h: Profile ``z -> h(z)`` written against ``jets.functions``.
        z: Evaluation point(s).
        derivative: 0, 1 or 2; 2 recovers the once-more differentiated form.
        normalized: Divide through by the coefficient of the highest derivative.
    """
    if derivative not in (0, 1, 2):
        raise LabError(f"derivative order must be 0, 1 or 2, got {derivative}")
    Z, _ = jet_seed(z, 0.0, nx=ode.order + derivative, nt=0)
    H = _as_jet(h(Z), Z)
    lam, mu = ode.frame.lam, ode.frame.mu

    def dz(j: Jet, n: int):
        return j.partial(n + derivative, 0)

    linear = Z * ode.A + ode.B
    if ode.form.variant == EquationVariant.GENERALIZED:
        F = _as_jet(ode.form.f(H), Z)
        terms = {
            "lam^2*mu^4*h''''": lam * lam * mu ** 4 * dz(H, 4),
            "mu^2*(mu^2*c-lam^2)*h''": mu * mu * (mu * mu * ode.form.c - lam * lam) * dz(H, 2),
            "(lam^2-mu^2)*h": (lam * lam - mu * mu) * dz(H, 0),
            "-mu^2*f(h)": -mu * mu * dz(F, 0),
            "A*z+B": dz(linear, 0),
        }
    else:
        sign = -1.0 if ode.convention == ReductionConvention.CONSISTENT else 1.0
        terms = {
            "(lam^2-mu^2)*h": (lam * lam - mu * mu) * dz(H, 0),
            f"{'-' if sign < 0 else '+'}mu^4*h''": sign * mu ** 4 * dz(H, 2),
            "-3*mu^2*h^2": -3.0 * mu * mu * dz(H * H, 0),
            "A*z+B": dz(linear, 0),
        }

    if normalized:
        lead = ode.leading
        if lead == 0.0:
            raise LabError("cannot normalize: leading coefficient vanishes")
        terms = {key: value / lead for key, value in terms.items()}
    return terms


def ode_residual(ode: ReducedOde, h: Profile, z, derivative: int = 0, normalized: bool = False):
    """Value of the reduced functional (or its z-derivative) along ``h``."""
    return _total(ode_terms(ode, h, z, derivative=derivative, normalized=normalized))


# --- Invariant surface ---


def invariant_surface_terms(u: Field, frame: WaveFrame, x, t) -> Terms:
    X, T = jet_seed(x, t, nx=1, nt=1)
    U = _as_jet(u(X, T), X)
    return {
        "lambda*u_x": frame.lam * U.partial(1, 0),
        "mu*u_t": frame.mu * U.partial(0, 1),
    }


def invariant_surface_check(u: Field, frame: WaveFrame, x, t):
    """lambda u_x + mu u_t; zero iff u is constant along mu x - lambda t."""
    return _total(invariant_surface_terms(u, frame, x, t))

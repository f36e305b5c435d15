"""Jacobi elliptic functions sn, cn, dn and the quarter period K.

Parameter convention: ``m`` is the parameter of the integral
``u = int_0^phi dtheta / sqrt(1 - m sin^2 theta)`` (often written k**2).
No other convention is accepted.

Evaluation uses the arithmetic-geometric mean with the descending Landen
recursion for the amplitude, after reducing z modulo 4K(m). Parameters
within ``ENDPOINT_TOL`` of 0 or 1 go to the trigonometric or hyperbolic
closed forms, where the AGM degenerates.
"""

from __future__ import annotations

import logging
from typing import NamedTuple

import numpy as np

from ..errors import EllipticDomainError
from ..jets import Jet

logger = logging.getLogger(__name__)

ENDPOINT_TOL = 1e-12
AGM_TOL = 1e-16
MAX_AGM_STEPS = 40


class JacobiTriple(NamedTuple):
    sn: np.ndarray | float
    cn: np.ndarray | float
    dn: np.ndarray | float


def check_parameter(m) -> np.ndarray:
    """Validate ``0 <= m <= 1`` and return m as a float array."""
    m = np.asarray(m, dtype=float)
    if np.any(~((m >= 0.0) & (m <= 1.0))):
        raise EllipticDomainError(f"elliptic parameter m must lie in [0, 1], got {m!r}")
    return m


def _agm(m: np.ndarray) -> tuple[list[np.ndarray], list[np.ndarray]]:
    """AGM sequences a_n and c_n starting from (1, sqrt(1 - m), sqrt(m))."""
    a = np.ones_like(m)
    b = np.sqrt(1.0 - m)
    a_seq, c_seq = [a], [np.sqrt(m)]
    for _ in range(MAX_AGM_STEPS):
        if np.all(np.abs(c_seq[-1]) <= AGM_TOL * a):
            break
        a, b, c = 0.5 * (a + b), np.sqrt(a * b), 0.5 * (a - b)
        a_seq.append(a)
        c_seq.append(c)
    else:
        logger.warning("AGM did not converge in %d steps", MAX_AGM_STEPS)
    return a_seq, c_seq


def _scalar_or_array(x: np.ndarray):
    return float(x) if x.ndim == 0 else x


def complete_K(m):
    """Complete elliptic integral of the first kind K(m) for 0 <= m < 1."""
    m = check_parameter(m)
    if np.any(m >= 1.0):
        raise EllipticDomainError("K(m) diverges at m = 1")
    a_seq, _ = _agm(m)
    return _scalar_or_array(np.pi / (2.0 * a_seq[-1]))


def _landen(z: np.ndarray, m: np.ndarray) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    a_seq, c_seq = _agm(m)
    steps = len(a_seq) - 1
    quarter = np.pi / (2.0 * a_seq[-1])
    period = 4.0 * quarter
    z = z - period * np.round(z / period)

    phi = (2.0 ** steps) * a_seq[-1] * z
    for n in range(steps, 0, -1):
        phi = 0.5 * (phi + np.arcsin(c_seq[n] / a_seq[n] * np.sin(phi)))
    sn, cn = np.sin(phi), np.cos(phi)
    # cn^2 + (1 - m) sn^2 has no cancellation, unlike 1 - m sn^2
    dn = np.sqrt(cn * cn + (1.0 - m) * sn * sn)
    return sn, cn, dn


def jacobi_eval(z, m) -> JacobiTriple:
    """Evaluate (sn, cn, dn)(z | m); z and m broadcast against each other."""
    m = check_parameter(m)
    z, m = np.broadcast_arrays(np.asarray(z, dtype=float), m)
    sn = np.empty(z.shape)
    cn = np.empty(z.shape)
    dn = np.empty(z.shape)

    trig = m <= ENDPOINT_TOL
    hyper = m >= 1.0 - ENDPOINT_TOL
    middle = ~(trig | hyper)

    if np.any(trig):
        zt, mt = z[trig], m[trig]
        s, c = np.sin(zt), np.cos(zt)
        sn[trig], cn[trig] = s, c
        dn[trig] = np.sqrt(c * c + (1.0 - mt) * s * s)
    if np.any(hyper):
        zh = z[hyper]
        e = np.exp(-np.abs(zh))
        sech = 2.0 * e / (1.0 + e * e)
        sn[hyper], cn[hyper], dn[hyper] = np.tanh(zh), sech, sech
    if np.any(middle):
        sn[middle], cn[middle], dn[middle] = _landen(z[middle], m[middle])

    return JacobiTriple(_scalar_or_array(sn), _scalar_or_array(cn), _scalar_or_array(dn))


def jacobi_series(z0, m, order: int) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    """Taylor coefficients of sn, cn, dn about z0 up to ``order``.

    Uses sn' = cn dn, cn' = -sn dn, dn' = -m sn cn, seeded by ``jacobi_eval``.
    """
    m = check_parameter(m)
    s0, c0, d0 = jacobi_eval(z0, m)
    s, c, d = [np.asarray(s0)], [np.asarray(c0)], [np.asarray(d0)]
    for n in range(order):
        cd = sum(c[j] * d[n - j] for j in range(n + 1))
        sd = sum(s[j] * d[n - j] for j in range(n + 1))
        sc = sum(s[j] * c[n - j] for j in range(n + 1))
        s.append(cd / (n + 1))
        c.append(-sd / (n + 1))
        d.append(-m * sc / (n + 1))
    return np.stack(s), np.stack(c), np.stack(d)


def jacobi_jet(z: Jet, m) -> tuple[Jet, Jet, Jet]:
    """Jets of sn, cn, dn evaluated at the jet z."""
    order = z.nx + z.nt
    s, c, d = jacobi_series(z.coeffs[0, 0], m, order)
    return z.compose(s), z.compose(c), z.compose(d)

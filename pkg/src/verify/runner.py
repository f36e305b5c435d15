"""Residual measurement of claims on evaluation grids."""

from __future__ import annotations

import logging
import time
from concurrent.futures import ThreadPoolExecutor
from typing import Iterable, Optional

import numpy as np

from ..equations import ReducedOde, invariant_surface_terms, ode_terms, pde_terms
from ..errors import JetDomainError, LabError
from ..models.settings import GridSpec, TolerancePolicy
from .claims import Attempt, Binding, Claim, ClaimResult, ClaimStatus, ClaimTruth, InvariantSurface
from .registry import ClaimRegistry, build_default_registry
from .report import VerificationReport

logger = logging.getLogger(__name__)

MAX_RETRIES = 4


class _Measurement:
    __slots__ = ("status", "sup", "l2", "relative", "breakdown", "points", "dropped", "message")

    def __init__(self, status, sup=np.nan, l2=np.nan, relative=np.nan, breakdown=None, points=0, dropped=0, message=""):
        self.status = status
        self.sup = sup
        self.l2 = l2
        self.relative = relative
        self.breakdown = breakdown or {}
        self.points = points
        self.dropped = dropped
        self.message = message


def tolerance_for(claim: Claim, policy: TolerancePolicy) -> float:
    if claim.tolerance is not None:
        return claim.tolerance
    return policy.paper if claim.truth == ClaimTruth.PAPER else policy.derived


def _sample_points(claim: Claim, grid: GridSpec) -> tuple[np.ndarray, ...]:
    if claim.on_z:
        if claim.z_range is None:
            z = grid.z.values()
        else:
            z = np.linspace(claim.z_range[0], claim.z_range[1], grid.z.points)
        return (z[claim.subject.valid(z)],)
    x, t = grid.mesh()
    keep = claim.subject.valid(x, t)
    return x[keep], t[keep]


def _terms(claim: Claim, binding: Binding, points: tuple[np.ndarray, ...]) -> dict:
    if isinstance(binding, ReducedOde):
        return ode_terms(binding, claim.subject, points[0], derivative=claim.derivative)
    if isinstance(binding, InvariantSurface):
        return invariant_surface_terms(claim.subject, binding.frame, *points)
    return pde_terms(binding, claim.subject, *points)


def relative_residual(sup: float, scale: float) -> float:
    """sup |R| over the largest single-term sup; a zero scale gives 0 or inf."""
    if scale > 0.0:
        return sup / scale
    return 0.0 if sup == 0.0 else np.inf


def measure(claim: Claim, binding: Binding, grid: GridSpec, policy: TolerancePolicy) -> _Measurement:
    """Residual of ``claim.subject`` against ``binding`` over the claim's domain.

    Points where a jet primitive leaves its real domain, or where a term is
    not finite, are dropped; dropping more than the policy allows gives
    DOMAIN_ERROR.
    """
    points = _sample_points(claim, grid)
    total = points[0].size
    if total == 0:
        return _Measurement(ClaimStatus.DOMAIN_ERROR, message="evaluation domain is empty")
    limit = policy.domain_error_fraction * total
    keep = np.ones(total, dtype=bool)

    terms = None
    for _ in range(MAX_RETRIES):
        try:
            with np.errstate(all="ignore"):
                terms = _terms(claim, binding, tuple(p[keep] for p in points))
            break
        except JetDomainError as exc:
            if exc.mask is None:
                return _Measurement(ClaimStatus.DOMAIN_ERROR, points=total, message=str(exc))
            index = np.flatnonzero(keep)
            keep[index[np.asarray(exc.mask, dtype=bool).reshape(-1)]] = False
            if (~keep).sum() > limit or not keep.any():
                return _Measurement(ClaimStatus.DOMAIN_ERROR, points=total, dropped=int((~keep).sum()), message=str(exc))
        except LabError as exc:
            return _Measurement(ClaimStatus.DOMAIN_ERROR, points=total, message=str(exc))
    if terms is None:
        return _Measurement(ClaimStatus.DOMAIN_ERROR, points=total, dropped=int((~keep).sum()), message="domain retries exhausted")

    n = int(keep.sum())
    stacked = np.vstack([np.broadcast_to(np.asarray(v, dtype=float), (n,)) for v in terms.values()])
    finite = np.all(np.isfinite(stacked), axis=0)
    dropped = total - n + int((~finite).sum())
    if dropped > limit or not finite.any():
        return _Measurement(ClaimStatus.DOMAIN_ERROR, points=total, dropped=dropped, message="non-finite terms")
    stacked = stacked[:, finite]

    residual = stacked.sum(axis=0)
    breakdown = {key: float(np.max(np.abs(row))) for key, row in zip(terms.keys(), stacked)}
    sup = float(np.max(np.abs(residual)))
    l2 = float(np.sqrt(np.mean(residual * residual)))
    relative = relative_residual(sup, max(breakdown.values()))
    return _Measurement(None, sup, l2, relative, breakdown, total, dropped)


def run_claim(claim: Claim, grid: Optional[GridSpec] = None, policy: Optional[TolerancePolicy] = None) -> ClaimResult:
    """Measure ``claim``; failures and domain problems come back as data.

    Args:
        claim: Claim to run.
        grid: Evaluation grids (defaults to ``GridSpec()``).
        policy: Tolerances and domain-error threshold.

    Returns:
        ClaimResult with residual norms, per-term breakdown and every attempt.
    """
    grid = grid or GridSpec()
    policy = policy or TolerancePolicy()
    tolerance = tolerance_for(claim, policy)

    result = None
    attempts = []
    for variant, binding in ((claim.variant, claim.binding), *claim.alternates):
        m = measure(claim, binding, grid, policy)
        if m.status is None:
            m.status = ClaimStatus.PASS if m.relative < tolerance else ClaimStatus.FAIL
        attempts.append(Attempt(variant, m.status, m.sup, m.relative))
        if result is None or m.status == ClaimStatus.PASS:
            result = ClaimResult(
                id=claim.id,
                paper_ref=claim.paper_ref,
                truth=claim.truth,
                status=m.status,
                equation=binding.label(),
                expected=claim.expected,
                sup_residual=m.sup,
                l2_residual=m.l2,
                relative_residual=m.relative,
                tolerance=tolerance,
                breakdown=m.breakdown,
                variant=variant,
                points=m.points,
                dropped=m.dropped,
                message=m.message,
            )
        if m.status == ClaimStatus.PASS:
            break

    result.attempts = attempts
    logger.debug("%s: %s (relative %.3g)", claim.id, result.status.value, result.relative_residual)
    return result


def run_registry(
    policy: Optional[TolerancePolicy] = None,
    grid: Optional[GridSpec] = None,
    registry: Optional[ClaimRegistry] = None,
    only: Optional[Iterable[str]] = None,
    max_workers: Optional[int] = None,
) -> VerificationReport:
    """Run every registered claim (or the ids in ``only``) and collect a report.

    Claims run on a thread pool; results are ordered by claim id.
    """
    policy = policy or TolerancePolicy()
    grid = grid or GridSpec()
    registry = registry or build_default_registry(policy)
    claims = [registry.get(i) for i in only] if only is not None else list(registry)

    start = time.time()
    with ThreadPoolExecutor(max_workers=max_workers) as pool:
        results = list(pool.map(lambda claim: run_claim(claim, grid, policy), claims))
    results.sort(key=lambda r: r.id)

    report = VerificationReport(results=results, grid=grid, policy=policy)
    report.record_timing("verify", time.time() - start)
    for r in results:
        if not r.meets_expectation:
            report.add_warning(f"{r.id}: expected {r.expected.value}, got {r.status.value}")
    return report

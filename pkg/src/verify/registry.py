"""Built-in claims.

Every catalog solution is bound to the equation it is stated to solve.
Derived claims carry independently derived solutions and must pass;
control claims carry deliberately perturbed ones and must fail. Printed
claims are measured as transcribed and their outcome is recorded.
"""

from __future__ import annotations

from typing import Iterator, Optional

from ..catalog import (
    ConstantField,
    PerturbedField,
    direct_f,
    direct_profile,
    gg_determined_solution,
    gg_h,
    gg_parameters,
    named_solution,
)
from ..elliptic import complete_K
from ..equations import reduce
from ..errors import LabError, UnknownEntryError
from ..models.equation import NonlinearitySpec, PdeForm, ReductionConvention, WaveFrame
from ..models.settings import TolerancePolicy
from ..models.solution import CoefficientTable, DirectAnsatz, FifthCoefficient, JacobiKind
from .claims import Claim, ClaimStatus, ClaimTruth, InvariantSurface

PASS, FAIL = ClaimStatus.PASS, ClaimStatus.FAIL

# General frame for the direct families: mu != 1 and lambda != mu, so both
# conventions for the linear coefficient of f(h) differ.
DIRECT_FRAME = WaveFrame(lam=0.8, mu=1.3)
DIRECT_C = 1.5
DIRECT_M = 0.5
PERTURBATIONS = (1e-3, 1e-4)

_DIRECT_REFS = {
    JacobiKind.SN: "Eqs (17)-(18), (24)",
    JacobiKind.CN: "Eqs (19)-(20), (32)",
    JacobiKind.DN: "Eqs (21)-(22), (36)",
}


class ClaimRegistry:
    """Claims keyed by id, iterated in id order."""

    def __init__(self):
        self._claims: dict[str, Claim] = {}

    def register(self, claim: Claim) -> Claim:
        if claim.id in self._claims:
            raise LabError(f"duplicate claim id '{claim.id}'")
        self._claims[claim.id] = claim
        return claim

    def get(self, claim_id: str) -> Claim:
        try:
            return self._claims[claim_id]
        except KeyError:
            raise UnknownEntryError(f"unknown claim '{claim_id}'; choose from {self.ids()}") from None

    def ids(self) -> list[str]:
        return sorted(self._claims)

    def __iter__(self) -> Iterator[Claim]:
        return iter(self._claims[i] for i in self.ids())

    def __len__(self) -> int:
        return len(self._claims)

    def __contains__(self, claim_id: str) -> bool:
        return claim_id in self._claims


# --- Builders ---


def _named_claim(registry, claim_id, solution_id, truth, expected, paper_ref=None, **params):
    sol = named_solution(solution_id, **params)
    subject = sol.profile if sol.ode is not None else sol.u
    return registry.register(
        Claim(
            id=claim_id,
            paper_ref=paper_ref or sol.paper_ref,
            description=sol.description,
            truth=truth,
            binding=sol.binding,
            subject=subject,
            expected=expected,
        )
    )


def _positive_range(kind: JacobiKind, m: float) -> Optional[tuple[float, float]]:
    """Interval inside one half-period where sn or cn stays positive."""
    if kind == JacobiKind.DN:
        return None
    K = float(complete_K(m))
    delta = 0.05 * K
    if kind == JacobiKind.SN:
        return (delta, 2 * K - delta)
    return (-K + delta, K - delta)


def _direct_ode(ansatz: DirectAnsatz, table: CoefficientTable, variant: FifthCoefficient):
    coefficients = direct_f(ansatz, DIRECT_FRAME, DIRECT_C, table)
    f = NonlinearitySpec.from_pairs(zip(coefficients.primed[variant], ansatz.exponents))
    return reduce(PdeForm.generalized(DIRECT_C, f), DIRECT_FRAME)


def _register_direct(registry: ClaimRegistry) -> None:
    for kind in JacobiKind:
        ansatz = DirectAnsatz(kind=kind, alpha=1.0, beta=2.0, m=DIRECT_M)
        profile = direct_profile(ansatz)
        z_range = _positive_range(kind, DIRECT_M)
        registry.register(
            Claim(
                id=f"direct_derived_{kind.value}",
                paper_ref="Eq (16), coefficients from (r, p, q)",
                description=f"{kind.value}^2 with derived F(h) and the inverted linear coefficient",
                truth=ClaimTruth.DERIVED,
                binding=_direct_ode(ansatz, CoefficientTable.DERIVED, FifthCoefficient.INVERTED),
                subject=profile,
                expected=PASS,
                variant=FifthCoefficient.INVERTED.value,
                z_range=z_range,
            )
        )
        registry.register(
            Claim(
                id=f"direct_{kind.value}",
                paper_ref=_DIRECT_REFS[kind],
                description=f"{kind.value}^2 with the printed coefficient table",
                truth=ClaimTruth.PAPER,
                binding=_direct_ode(ansatz, CoefficientTable.PAPER, FifthCoefficient.PAPER),
                subject=profile,
                variant=FifthCoefficient.PAPER.value,
                alternates=(
                    (
                        FifthCoefficient.INVERTED.value,
                        _direct_ode(ansatz, CoefficientTable.PAPER, FifthCoefficient.INVERTED),
                    ),
                ),
                z_range=z_range,
            )
        )

    ansatz = DirectAnsatz(kind=JacobiKind.SN, alpha=1.0, beta=2.0, m=DIRECT_M)
    registry.register(
        Claim(
            id="fifth_coefficient_paper_sn",
            paper_ref="Eq (23)",
            description="derived sn^2 table with the printed linear coefficient mu^2 (lam^2 - mu^2)",
            truth=ClaimTruth.PAPER,
            binding=_direct_ode(ansatz, CoefficientTable.DERIVED, FifthCoefficient.PAPER),
            subject=direct_profile(ansatz),
            expected=FAIL,
            variant=FifthCoefficient.PAPER.value,
            z_range=_positive_range(JacobiKind.SN, DIRECT_M),
        )
    )


def _register_gg(registry: ClaimRegistry) -> None:
    cases = {
        "hyperbolic": dict(alpha_g=0.3, frame=WaveFrame(lam=1.0, mu=1.0), c=0.5, c1=1.0, c2=0.5),
        "trigonometric": dict(alpha_g=0.0, frame=WaveFrame(lam=1.0, mu=1.0), c=2.0, c1=0.0, c2=1.0),
        "rational": dict(alpha_g=0.0, frame=WaveFrame(lam=1.0, mu=1.0), c=1.0, c1=1.0, c2=12.0),
    }
    quadratic = NonlinearitySpec.quadratic()
    for name, kwargs in cases.items():
        params = gg_parameters(**kwargs)
        ode = reduce(PdeForm.generalized(params.c, quadratic), params.frame, A=0.0, B=params.B)
        registry.register(
            Claim(
                id=f"gg_{name}_determined",
                paper_ref="Eqs (39), (47)-(50)",
                description=f"{name} G'/G profile built from the determined coefficients",
                truth=ClaimTruth.PAPER,
                binding=ode,
                subject=gg_determined_solution(params).profile,
                expected=PASS,
            )
        )

    params = gg_parameters(alpha_g=0.3, frame=WaveFrame(lam=1.0, mu=1.0), c=2.0, c1=1.0, c2=0.0)
    registry.register(
        Claim(
            id="gg_h2_printed",
            paper_ref="Eq (48)",
            description="trigonometric closed form as printed",
            truth=ClaimTruth.PAPER,
            binding=reduce(PdeForm.generalized(params.c, quadratic), params.frame, A=0.0, B=params.B),
            subject=gg_h(params.coefficients, params.alpha_g, params.beta_g, params.c1, params.c2, path="printed"),
            expected=FAIL,
        )
    )

    for entry, expected in (("gg_u1", FAIL), ("gg_u2", PASS), ("gg_u3", PASS)):
        _named_claim(registry, entry, entry, ClaimTruth.PAPER, expected)


def build_default_registry(policy: Optional[TolerancePolicy] = None) -> ClaimRegistry:
    """Every built-in claim, with support margins taken from ``policy``."""
    policy = policy or TolerancePolicy()
    registry = ClaimRegistry()
    assigned = PdeForm.assigned()

    # --- Derived truths ---
    registry.register(
        Claim(
            id="zero_solution",
            paper_ref="trivial solution of the assigned equation",
            description="u = 0",
            truth=ClaimTruth.DERIVED,
            binding=assigned,
            subject=ConstantField(0.0),
            expected=PASS,
        )
    )
    registry.register(
        Claim(
            id="constant_solution",
            paper_ref="trivial solution of the assigned equation",
            description="u = 0.7",
            truth=ClaimTruth.DERIVED,
            binding=assigned,
            subject=ConstantField(0.7),
            expected=PASS,
        )
    )

    soliton = named_solution("assigned_soliton")
    registry.register(
        Claim(
            id="assigned_soliton",
            paper_ref=soliton.paper_ref,
            description=soliton.description,
            truth=ClaimTruth.DERIVED,
            binding=assigned,
            subject=soliton.u,
            expected=PASS,
        )
    )
    registry.register(
        Claim(
            id="assigned_soliton_reduced",
            paper_ref="Eq (3a)",
            description="derived soliton against (lam^2 - mu^2) h - mu^4 h'' - 3 mu^2 h^2",
            truth=ClaimTruth.DERIVED,
            binding=soliton.ode,
            subject=soliton.profile,
            expected=PASS,
        )
    )
    registry.register(
        Claim(
            id="assigned_reduction_printed",
            paper_ref="Eq (3a)",
            description="derived soliton against the reduction with +mu^4 h'' as printed",
            truth=ClaimTruth.PAPER,
            binding=reduce(assigned, soliton.frame, convention=ReductionConvention.PRINTED),
            subject=soliton.profile,
            expected=FAIL,
        )
    )
    _named_claim(registry, "corrected_soliton", "corrected_soliton", ClaimTruth.DERIVED, PASS)
    _named_claim(registry, "classical_soliton", "classical_soliton", ClaimTruth.DERIVED, PASS)

    for solution_id, params in (
        ("assigned_soliton", {}),
        ("kink", {}),
        ("soliton_sech2", {}),
        ("compacton_sin2", {"margin": policy.margin}),
    ):
        sol = named_solution(solution_id, **params)
        registry.register(
            Claim(
                id=f"invariant_surface_{solution_id}",
                paper_ref="Eqs (7)-(9)",
                description=f"{solution_id} is constant along mu x - lambda t",
                truth=ClaimTruth.DERIVED,
                binding=InvariantSurface(frame=sol.frame),
                subject=sol.u,
                expected=PASS,
            )
        )

    # --- Controls ---
    for eps in PERTURBATIONS:
        registry.register(
            Claim(
                id=f"control_assigned_soliton_eps{eps:.0e}",
                paper_ref="perturbation control",
                description=f"derived soliton plus {eps:g} sin(x)",
                truth=ClaimTruth.CONTROL,
                binding=assigned,
                subject=PerturbedField(soliton.u, eps),
                expected=FAIL,
            )
        )

    # --- Printed claims ---
    _register_direct(registry)
    _named_claim(registry, "compacton_sin2", "compacton_sin2", ClaimTruth.PAPER, FAIL, c=2.0, margin=policy.margin)
    _named_claim(registry, "kink", "kink", ClaimTruth.PAPER, PASS, c=2.0)
    _named_claim(
        registry, "antikink", "antikink", ClaimTruth.PAPER, FAIL, c=2.0, margin=policy.singular_margin
    )
    _named_claim(registry, "compacton_cos2", "compacton_cos2", ClaimTruth.PAPER, FAIL, c=2.0, margin=policy.margin)
    for c, expected in ((0.0, PASS), (1.0, PASS), (2.0, FAIL)):
        _named_claim(registry, f"soliton_sech2_c{c:g}", "soliton_sech2", ClaimTruth.PAPER, expected, c=c)
    _register_gg(registry)
    return registry


def perturbed_claim(claim: Claim, eps: float) -> Claim:
    """Control copy of a field claim with ``eps * sin(x)`` added."""
    if claim.on_z:
        raise LabError("perturbation controls apply to field claims")
    return Claim(
        id=f"{claim.id}_eps{eps:.0e}",
        paper_ref="perturbation control",
        description=f"{claim.description} plus {eps:g} sin(x)",
        truth=ClaimTruth.CONTROL,
        binding=claim.binding,
        subject=PerturbedField(claim.subject, eps),
        expected=FAIL,
    )

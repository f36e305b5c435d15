import numpy as np
import pytest
from pydantic import ValidationError

from src.equations import (
    ReducedOde,
    invariant_surface_check,
    ode_residual,
    ode_terms,
    pde_residual,
    pde_residual_fd,
    pde_terms,
    reduce,
)
from src.errors import LabError, UnsupportedReductionError
from src.jets import functions as jf
from src.models import EquationVariant, NonlinearitySpec, PdeForm, ReductionConvention, WaveFrame


def gaussian(z):
    return jf.exp(-(z * z))


def traveling(frame, profile):
    return lambda x, t: profile(frame.z(x, t))


def test_only_assigned_and_generalized_reduce():
    frame = WaveFrame(lam=0.5, mu=1.0)
    with pytest.raises(UnsupportedReductionError):
        reduce(PdeForm.classical(1.0), frame)
    with pytest.raises(UnsupportedReductionError):
        reduce(PdeForm.corrected(), frame)
    assert reduce(PdeForm.assigned(), frame).order == 2
    assert reduce(PdeForm.generalized(1.0, NonlinearitySpec.quadratic()), frame).order == 4


def test_form_validation():
    with pytest.raises(ValidationError):
        PdeForm(variant=EquationVariant.CLASSICAL)
    with pytest.raises(ValidationError):
        PdeForm(variant=EquationVariant.GENERALIZED, c=1.0)
    with pytest.raises(ValidationError):
        WaveFrame(lam=1.0, mu=0.0)


def test_normalized_coefficient_b():
    form = PdeForm.generalized(2.0, NonlinearitySpec.quadratic())
    ode = reduce(form, WaveFrame(lam=0.8, mu=1.3))
    assert ode.b == pytest.approx((1.69 * 2.0 - 0.64) / (1.69 * 0.64))
    assert ode.leading == pytest.approx(0.64 * 1.3 ** 4)
    assert reduce(PdeForm.assigned(), WaveFrame(lam=0.8, mu=1.3)).b is None
    with pytest.raises(LabError):
        reduce(form, WaveFrame(lam=0.0, mu=1.0)).b


@pytest.mark.parametrize(
    "pairs",
    [
        [(1.0, 2.0)],
        [(1.0, 2.0), (0.5, 3.0)],
        [(-0.7, 1.0), (0.2, 4.0)],
    ],
)
def test_generalized_reduction_matches_pde(rng, pairs):
    """The PDE along u = h(mu x - lam t) is the second z-derivative of the reduced functional."""
    f = NonlinearitySpec.from_pairs(pairs)
    x = np.linspace(-2.0, 2.0, 9)
    t = np.linspace(0.0, 1.0, 9)
    for _ in range(50):
        lam, mu, c = rng.uniform(0.2, 1.5), rng.uniform(0.3, 1.5), rng.uniform(-2.0, 2.0)
        frame = WaveFrame(lam=lam, mu=mu)
        form = PdeForm.generalized(c, f)
        ode = reduce(form, frame, A=0.3, B=-1.2)
        lhs = pde_residual(form, traveling(frame, gaussian), x, t)
        rhs = ode_residual(ode, gaussian, frame.z(x, t), derivative=2)
        scale = max(np.max(np.abs(v)) for v in pde_terms(form, traveling(frame, gaussian), x, t).values())
        np.testing.assert_allclose(lhs, rhs, atol=1e-9 * scale)


def test_assigned_reduction_matches_pde(rng):
    form = PdeForm.assigned()
    x = np.linspace(-2.0, 2.0, 11)
    t = np.full_like(x, 0.4)
    for _ in range(20):
        frame = WaveFrame(lam=rng.uniform(0.2, 1.5), mu=rng.uniform(0.3, 1.5))
        ode = reduce(form, frame)
        lhs = pde_residual(form, traveling(frame, gaussian), x, t)
        rhs = ode_residual(ode, gaussian, frame.z(x, t), derivative=2)
        np.testing.assert_allclose(lhs, rhs, atol=1e-10 * max(1.0, np.max(np.abs(lhs))))


def test_printed_convention_flips_second_derivative_term():
    frame = WaveFrame(lam=1.0, mu=1.0)
    consistent = reduce(PdeForm.assigned(), frame)
    printed = reduce(PdeForm.assigned(), frame, convention=ReductionConvention.PRINTED)
    z = np.linspace(-1.0, 1.0, 5)
    a = ode_terms(consistent, gaussian, z)
    b = ode_terms(printed, gaussian, z)
    np.testing.assert_allclose(a["-mu^4*h''"], -b["+mu^4*h''"])
    np.testing.assert_allclose(a["-3*mu^2*h^2"], b["-3*mu^2*h^2"])


def test_normalized_residual_divides_by_leading():
    ode = reduce(PdeForm.generalized(1.0, NonlinearitySpec.quadratic()), WaveFrame(lam=0.7, mu=1.1))
    z = np.linspace(-3.0, 3.0, 7)
    raw = ode_residual(ode, gaussian, z)
    np.testing.assert_allclose(ode_residual(ode, gaussian, z, normalized=True), raw / ode.leading, rtol=1e-14)


def test_derivative_order_is_checked():
    ode = reduce(PdeForm.assigned(), WaveFrame(lam=1.0, mu=1.0))
    with pytest.raises(LabError):
        ode_terms(ode, gaussian, 0.0, derivative=3)


def test_linear_term_enters_the_functional():
    ode = reduce(PdeForm.assigned(), WaveFrame(lam=1.0, mu=1.0), A=2.0, B=0.5)
    zero = lambda z: 0.0 * z  # noqa: E731
    z = np.array([-1.0, 0.0, 3.0])
    np.testing.assert_allclose(ode_residual(ode, zero, z), 2.0 * z + 0.5)


def smooth_field(x, t):
    return 0.5 * jf.exp(-0.5 * (x - 0.3 * t) ** 2) + 0.2 * jf.sin(0.8 * x + 0.5 * t)


@pytest.mark.parametrize(
    "form",
    [
        PdeForm.classical(0.5),
        PdeForm.corrected(),
        PdeForm.assigned(),
        PdeForm.generalized(0.8, NonlinearitySpec.from_pairs([(1.0, 2.0), (0.5, 3.0)])),
    ],
    ids=["classical", "corrected", "assigned", "generalized"],
)
def test_jet_and_finite_difference_residuals_agree(rng, form):
    x = rng.uniform(-2.0, 2.0, 50)
    t = rng.uniform(0.0, 1.0, 50)
    exact = pde_residual(form, smooth_field, x, t)
    scale = max(np.max(np.abs(v)) for v in pde_terms(form, smooth_field, x, t).values())
    approx = np.array([pde_residual_fd(form, smooth_field, xi, ti) for xi, ti in zip(x, t)])
    np.testing.assert_allclose(approx, exact, rtol=0, atol=1e-3 * scale)


def test_residual_is_linear_for_affine_nonlinearity():
    form = PdeForm.generalized(0.7, NonlinearitySpec.from_pairs([(1.3, 1.0), (0.4, 0.0)]))

    def u1(x, t):
        return jf.sin(x) * jf.cos(2.0 * t) * jf.exp(-0.1 * (x * x))

    def u2(x, t):
        return jf.exp(-(x * x + 0.5 * t * t))

    def total(x, t):
        return u1(x, t) + u2(x, t)

    def zero(x, t):
        return 0.0 * x

    X, T = np.meshgrid(np.linspace(-2.0, 2.0, 9), np.linspace(0.0, 1.0, 5))
    x, t = X.ravel(), T.ravel()
    combination = (
        pde_residual(form, total, x, t)
        - pde_residual(form, u1, x, t)
        - pde_residual(form, u2, x, t)
        + pde_residual(form, zero, x, t)
    )
    scale = max(np.max(np.abs(v)) for v in pde_terms(form, total, x, t).values())
    np.testing.assert_allclose(combination, 0.0, atol=1e-12 * scale)

    quadratic = PdeForm.generalized(0.7, NonlinearitySpec.quadratic())
    cross = (
        pde_residual(quadratic, total, x, t)
        - pde_residual(quadratic, u1, x, t)
        - pde_residual(quadratic, u2, x, t)
    )
    assert np.max(np.abs(cross)) > 1e-3


def test_invariant_surface_of_traveling_wave_vanishes():
    frame = WaveFrame(lam=0.6, mu=1.4)
    x = np.linspace(-5.0, 5.0, 21)
    t = np.linspace(0.0, 2.0, 21)
    u = traveling(frame, lambda z: jf.sech(z) ** 2)
    np.testing.assert_allclose(invariant_surface_check(u, frame, x, t), 0.0, atol=1e-14)
    not_traveling = lambda x, t: jf.sin(x) * jf.cos(t)  # noqa: E731
    assert np.max(np.abs(invariant_surface_check(not_traveling, frame, x, t))) > 0.1


def test_reduced_ode_is_frozen():
    ode = reduce(PdeForm.assigned(), WaveFrame(lam=1.0, mu=1.0))
    assert isinstance(ode, ReducedOde)
    with pytest.raises(ValidationError):
        ode.A = 1.0

import json
import math

import numpy as np
import pytest
from pydantic import ValidationError
from scipy import fft

from src.errors import UnknownEntryError
from src.models import Grid1D, SimConfig
from src.simulate import (
    SimState,
    SimStatus,
    SpectralOperator,
    gaussian,
    initial_condition,
    noise,
    peak_position,
    run,
    soliton,
    soliton_profile,
    rk4_step,
    spectral_rhs,
    stable_dt,
    step_rk4,
    wavenumbers,
    write_diagnostics_csv,
    write_frames_csv,
    write_summary_json,
)


def _single_mode_run(A, steps_per_period, periods, stride=1):
    grid = Grid1D(N=16, L=4 * math.pi)
    omega = 0.5 * math.sqrt(0.75)
    period = 2 * math.pi / omega
    config = SimConfig(
        dt=period / steps_per_period,
        t_end=periods * period,
        k_cut=0.75,
        nonlinear=False,
        output_stride=stride,
    )
    result = run(lambda x: A * np.cos(0.5 * x), np.zeros(16), config, grid)
    return result, omega


# --- Operators ---


def test_wavenumbers():
    grid = Grid1D(N=16, L=2 * math.pi)
    np.testing.assert_allclose(wavenumbers(grid), np.arange(9), atol=1e-12)


def test_zero_state_has_zero_rhs():
    grid = Grid1D(N=32, L=20.0)
    state = SimState(np.zeros(17, dtype=complex), np.zeros(17, dtype=complex))
    du, dv = spectral_rhs(state, SimConfig(dt=0.01, t_end=1.0), grid)
    assert not np.any(du)
    assert not np.any(dv)


def test_constant_field_is_stationary():
    grid = Grid1D(N=32, L=20.0)
    op = SpectralOperator(grid, SimConfig(dt=0.01, t_end=1.0))
    state = SimState(op.forward(np.full(32, 0.3)), np.zeros(17, dtype=complex))
    _, dv = op.rhs(state)
    np.testing.assert_allclose(np.abs(dv), 0.0, atol=1e-12)


def test_linear_symbol_on_single_mode():
    grid = Grid1D(N=16, L=4 * math.pi)
    config = SimConfig(dt=0.01, t_end=1.0, nonlinear=False)
    op = SpectralOperator(grid, config)
    u_hat = op.forward(np.cos(0.5 * grid.points()))
    _, dv = op.rhs(SimState(u_hat, np.zeros_like(u_hat)))
    np.testing.assert_allclose(dv[1], (-0.25 + 0.0625) * u_hat[1], rtol=1e-12)
    well_posed = SpectralOperator(grid, config.model_copy(update={"fourth_order_sign": -1}))
    assert well_posed.symbol[1] == pytest.approx(-0.25 - 0.0625)


def test_cutoff_filter_and_validation():
    grid = Grid1D(N=32, L=2 * math.pi)
    op = SpectralOperator(grid, SimConfig(dt=0.01, t_end=1.0, k_cut=4.0))
    assert op.keep.sum() == 5
    filtered = op.filter(np.ones(17, dtype=complex))
    assert np.all(filtered[:5] == 1.0) and not np.any(filtered[5:])
    with pytest.raises(ValueError):
        SpectralOperator(grid, SimConfig(dt=0.01, t_end=1.0, k_cut=100.0))


def test_grid_validation():
    with pytest.raises(ValidationError):
        Grid1D(N=100, L=10.0)
    with pytest.raises(ValidationError):
        SimConfig(dt=0.0, t_end=1.0)


def test_stable_dt():
    grid = Grid1D(N=16, L=6 * math.pi)
    config = SimConfig(dt=0.01, t_end=1.0)
    k = 8.0 / 3.0
    assert stable_dt(config, grid) == pytest.approx(0.5 / math.sqrt(k ** 4 - k ** 2))
    flat = SimConfig(dt=0.01, t_end=1.0, k_cut=1e-3)
    assert stable_dt(flat, grid) == math.inf


def test_spectral_derivative():
    grid = Grid1D(N=64, L=2 * math.pi)
    op = SpectralOperator(grid, SimConfig(dt=0.01, t_end=1.0))
    x = grid.points()
    np.testing.assert_allclose(op.derivative(np.sin(3 * x)), 3 * np.cos(3 * x), atol=1e-12)
    np.testing.assert_allclose(op.derivative(np.sin(3 * x), order=2), -9 * np.sin(3 * x), atol=1e-11)


# --- Integration ---


def test_step_rk4_matches_operator_step():
    grid = Grid1D(N=32, L=20.0)
    config = SimConfig(dt=0.01, t_end=1.0)
    op = SpectralOperator(grid, config)
    state = SimState(op.forward(0.1 * np.exp(-((grid.points() - 10.0) ** 2))), np.zeros(17, dtype=complex))
    a = step_rk4(state, config, grid)
    b = rk4_step(state, op, config.dt)
    np.testing.assert_allclose(a.u_hat, b.u_hat)
    assert a.t == pytest.approx(0.01)
    assert step_rk4(state, config, grid, dt=0.02).t == pytest.approx(0.02)


def test_zero_initial_data_stays_zero():
    grid = Grid1D(N=32, L=20.0)
    config = SimConfig(dt=0.1, t_end=1.0)
    result = run(np.zeros(32), np.zeros(32), config, grid)
    assert result.status == SimStatus.COMPLETED
    assert result.final_t == 1.0
    assert result.steps == 10
    assert all(not np.any(frame) for frame in result.frames)
    assert math.isinf(result.blowup_threshold)


def test_single_mode_oscillates_at_dispersion_frequency():
    A = 1e-3
    result, omega = _single_mode_run(A, steps_per_period=100, periods=10)
    assert result.status == SimStatus.COMPLETED
    t = np.array(result.times)
    at_origin = np.array([frame[0] for frame in result.frames])
    assert np.max(np.abs(at_origin - A * np.cos(omega * t))) < 1e-4 * A
    # amplitude neither grows nor decays over the run
    assert abs(np.max(np.abs(at_origin[-100:])) - A) < 1e-5 * A


def test_time_integration_is_fourth_order():
    A = 1e-3
    errors = []
    for steps in (40, 80):
        # end on a zero crossing so the phase error shows at first order
        result, omega = _single_mode_run(A, steps_per_period=steps, periods=1.25)
        errors.append(abs(result.final[0] - A * math.cos(omega * result.final_t)))
    assert 12.0 < errors[0] / errors[1] < 20.0


def test_noise_grows_at_instability_rate_then_blows_up():
    grid = Grid1D(N=16, L=6 * math.pi)
    config = SimConfig(dt=0.01, t_end=10.0, blowup_threshold=1e2)
    ic = noise(grid, amplitude=1e-8, seed=0)
    result = run(ic.u0, ic.ut0, config, grid)
    assert result.status == SimStatus.BLOWUP
    assert result.final_t < 10.0

    t = np.array(result.times)
    window = (t >= 0.8) & (t <= 1.4)
    amplitude = np.array([abs(fft.rfft(frame)[6]) for frame in result.frames])
    rate = np.polyfit(t[window], np.log(amplitude[window]), 1)[0]
    assert rate == pytest.approx(math.sqrt(12.0), rel=0.05)


def test_soliton_is_transported():
    grid = Grid1D(N=1024, L=200.0)
    config = SimConfig(dt=0.05, t_end=20.0, k_cut=1.0, output_stride=20)
    ic = soliton(grid, config, k=0.25)
    result = run(ic.u0, ic.ut0, config, grid)
    assert result.status == SimStatus.COMPLETED
    assert not result.warnings

    exact = soliton_profile(grid, k=0.25, t=20.0)
    amplitude = 2 * 0.25 ** 2
    assert np.max(np.abs(result.final - exact)) < 0.05 * amplitude

    expected_peak = (0.5 * grid.L + ic.speed * 20.0) % grid.L
    assert abs(peak_position(result.final, grid) - expected_peak) < 0.5 * grid.dx

    mass = result.mass_series()
    assert np.max(np.abs(np.diff(mass, 2))) < 1e-8


def test_well_posed_runs_converge_under_refinement():
    finals = {}
    for N in (64, 128, 256):
        grid = Grid1D(N=N, L=40.0)
        config = SimConfig(dt=1e-3, t_end=0.5, fourth_order_sign=-1, output_stride=500)
        ic = gaussian(grid, amplitude=0.1, width=1.0)
        result = run(ic.u0, ic.ut0, config, grid)
        assert result.status == SimStatus.COMPLETED
        assert not result.warnings
        finals[N] = result.final
    coarse = np.max(np.abs(finals[64] - finals[256][::4]))
    medium = np.max(np.abs(finals[128] - finals[256][::2]))
    assert coarse > 100.0 * medium


def test_large_step_is_flagged():
    grid = Grid1D(N=256, L=40.0)
    config = SimConfig(dt=0.01, t_end=0.01, fourth_order_sign=-1)
    ic = gaussian(grid)
    result = run(ic.u0, ic.ut0, config, grid)
    assert result.warnings and "stability" in result.warnings[0]


def test_non_finite_initial_data_is_rejected():
    grid = Grid1D(N=16, L=10.0)
    u0 = np.zeros(16)
    u0[3] = np.nan
    with pytest.raises(ValueError):
        run(u0, np.zeros(16), SimConfig(dt=0.1, t_end=1.0), grid)


# --- Initial conditions ---


def test_soliton_initial_velocity_matches_translation():
    grid = Grid1D(N=512, L=200.0)
    config = SimConfig(dt=0.05, t_end=1.0)
    ic = soliton(grid, config, k=0.25)
    k, a = 0.25, 0.125
    xi = grid.points() - 100.0
    s = 1.0 / np.cosh(k * xi)
    u_x = -2.0 * a * k * s ** 2 * np.tanh(k * xi)
    assert ic.speed == pytest.approx(math.sqrt(1.25))
    np.testing.assert_allclose(ic.u0, a * s ** 2, atol=1e-15)
    np.testing.assert_allclose(ic.ut0, -ic.speed * u_x, atol=1e-10)


def test_initial_condition_lookup():
    grid = Grid1D(N=64, L=40.0)
    config = SimConfig(dt=0.01, t_end=1.0)
    ic = initial_condition("gaussian", grid, config, amplitude=0.2, width=2.0)
    assert np.max(ic.u0) == pytest.approx(0.2)
    assert not np.any(ic.ut0)
    with pytest.raises(UnknownEntryError):
        initial_condition("tsunami", grid, config)


def test_noise_is_seeded():
    grid = Grid1D(N=64, L=40.0)
    np.testing.assert_array_equal(noise(grid, seed=3).u0, noise(grid, seed=3).u0)
    assert np.std(noise(grid, amplitude=1e-8).u0) < 1e-7


def test_peak_position_refines_between_points():
    grid = Grid1D(N=256, L=40.0)
    ic = gaussian(grid, amplitude=1.0, width=1.0, center=13.3)
    assert peak_position(ic.u0, grid) == pytest.approx(13.3, abs=5e-3)


# --- Output ---


def test_writers(tmp_path):
    result, _ = _single_mode_run(1e-3, steps_per_period=20, periods=1, stride=10)
    frames = write_frames_csv(result, tmp_path / "frames.csv")
    diagnostics = write_diagnostics_csv(result, tmp_path / "diagnostics.csv")
    summary = write_summary_json(result, tmp_path / "summary.json")

    rows = frames.read_text().splitlines()
    assert rows[0] == "t,x,u"
    assert len(rows) == 1 + len(result.frames) * 16
    assert diagnostics.read_text().splitlines()[0] == "t,mass,sup_norm,tail_energy"
    payload = json.loads(summary.read_text())
    assert payload["status"] == "COMPLETED"
    assert payload["frames"] == len(result.frames)
    assert payload["config"]["k_cut"] == 0.75

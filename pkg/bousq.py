#!/usr/bin/env python3
"""CLI for the Boussinesq verification laboratory.

Usage:
    python bousq.py eval --solution kink --x -10:10:0.1 --t 0
    python bousq.py verify --grid default --out report.json
    python bousq.py simulate --ic soliton --N 1024 --L 200 --k-cut 1 --dt 0.05 --t-end 20
    python bousq.py elliptic --z -5:5:0.5 --m 0:1.01:0.25
    python bousq.py catalog
    python bousq.py --config run.json simulate
"""

import csv
import io
import json
import logging
import os
import sys
from pathlib import Path
from typing import Optional

import click
import numpy as np
from dotenv import load_dotenv
from pydantic import ValidationError
from rich.console import Console
from rich.logging import RichHandler
from rich.panel import Panel
from rich.table import Table

load_dotenv()

# Add project root to path
sys.path.insert(0, str(Path(__file__).parent))

from src.catalog import NAMED_SOLUTIONS, list_named, named_solution
from src.elliptic import jacobi_eval
from src.errors import LabError
from src.models.settings import Grid1D, SimConfig, TolerancePolicy
from src.presets import GRID_PRESETS, get_grid_preset, list_grid_presets
from src.simulate import SimStatus, initial_condition, run, write_diagnostics_csv, write_frames_csv, write_summary_json
from src.verify import ClaimStatus, build_default_registry, run_registry

GRID_GUARD = 1e-12

EXIT_USAGE = 1
EXIT_VERIFY_FAILED = 2
EXIT_BLOWUP = 3


def make_console() -> Console:
    """Console on stderr; any non-empty BOUSQ_NO_COLOR disables styling."""
    return Console(stderr=True, no_color=bool(os.getenv("BOUSQ_NO_COLOR")), highlight=False)


console = make_console()


def fmt(value: float) -> str:
    return f"{float(value):.17g}"


def parse_grid(spec: str) -> np.ndarray:
    """``start:stop:step`` (stop excluded) or a single number."""
    parts = spec.split(":")
    try:
        numbers = [float(p) for p in parts]
    except ValueError:
        raise click.BadParameter(f"'{spec}' is not a number or start:stop:step") from None
    if len(numbers) == 1:
        return np.array(numbers)
    if len(numbers) != 3:
        raise click.BadParameter(f"'{spec}' must look like start:stop:step")
    start, stop, step = numbers
    if step <= 0 or stop <= start:
        raise click.BadParameter(f"'{spec}' needs step > 0 and stop > start")
    count = int(np.ceil((stop - start) / step - GRID_GUARD))
    return start + step * np.arange(count)


def parse_params(pairs: tuple[str, ...]) -> dict[str, float]:
    params = {}
    for pair in pairs:
        key, sep, value = pair.partition("=")
        if not sep:
            raise click.BadParameter(f"'{pair}' must look like name=value", param_hint="--param")
        try:
            params[key.strip()] = float(value)
        except ValueError:
            raise click.BadParameter(f"'{value}' is not a number", param_hint="--param") from None
    return params


def load_config(ctx: click.Context, path: str) -> None:
    """Flat JSON object mirroring the subcommand's long flag names."""
    try:
        data = json.loads(Path(path).read_text())
    except (OSError, json.JSONDecodeError) as e:
        raise click.UsageError(f"cannot read config '{path}': {e}") from None
    if not isinstance(data, dict):
        raise click.UsageError("config file must hold a flat JSON object")
    name = ctx.invoked_subcommand
    command = cli.get_command(ctx, name) if name else None
    if command is None:
        return
    names = {}
    for param in command.params:
        names[param.name] = param.name
        for opt in getattr(param, "opts", ()):
            if opt.startswith("--"):
                names[opt[2:].replace("-", "_")] = param.name
    values, unknown = {}, []
    for key, value in data.items():
        key = str(key).replace("-", "_")
        if key in names:
            values[names[key]] = value
        else:
            unknown.append(key)
    if unknown:
        raise click.UsageError(f"unknown config keys for '{name}': {', '.join(sorted(unknown))}")
    ctx.default_map = {name: values}


@click.group(invoke_without_command=True)
@click.option("--config", "config_path", type=click.Path(exists=True, dir_okay=False), default=None,
              help="JSON file of flag values; explicit flags win.")
@click.option("--verbose", "-v", is_flag=True, help="Debug logging.")
@click.pass_context
def cli(ctx, config_path, verbose):
    """Boussinesq lab - evaluate, verify and simulate closed-form solutions."""
    global console
    console = make_console()
    logging.basicConfig(
        level=logging.DEBUG if verbose else logging.WARNING,
        format="%(message)s",
        handlers=[RichHandler(console=console, show_path=False)],
        force=True,
    )
    if config_path:
        load_config(ctx, config_path)
    if ctx.invoked_subcommand is None:
        click.echo(ctx.get_help())


def _open_out(out: Optional[str]):
    return open(out, "w", newline="") if out else io.StringIO()


def _emit(buffer, out: Optional[str]) -> None:
    if out:
        buffer.close()
        console.print(f"[green bold]Saved:[/green bold] {out}")
    else:
        click.echo(buffer.getvalue(), nl=False)


@cli.command("eval")
@click.option("--solution", "-s", type=click.Choice(list_named()), required=True, help="Named solution.")
@click.option("--param", "params", multiple=True, help="Override a parameter, e.g. c=2.")
@click.option("--x", "x_spec", default="-10:10:0.1", show_default=True, help="x grid start:stop:step.")
@click.option("--t", "t_spec", default="0", show_default=True, help="t grid start:stop:step or a value.")
@click.option("--out", "-o", type=click.Path(dir_okay=False), default=None, help="CSV path (stdout if omitted).")
def eval_cmd(solution, params, x_spec, t_spec, out):
    """Write x,t,u samples of a named solution."""
    sol = named_solution(solution, **parse_params(params))
    xs, ts = parse_grid(x_spec), parse_grid(t_spec)
    buffer = _open_out(out)
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(["x", "t", "u"])
    for t in ts:
        values = sol.u.sample(xs, t)
        writer.writerows([fmt(x), fmt(t), fmt(u)] for x, u in zip(xs, values))
    _emit(buffer, out)


@cli.command()
@click.option("--grid", "grid_name", type=click.Choice(list_grid_presets()), default="default", show_default=True)
@click.option("--out", "-o", type=click.Path(dir_okay=False), default="report.json", show_default=True)
@click.option("--csv", "csv_path", type=click.Path(dir_okay=False), default=None,
              help="CSV summary path (default: next to --out).")
@click.option("--meta", "meta_path", type=click.Path(dir_okay=False), default=None,
              help="Run metadata path (default: next to --out).")
@click.option("--claim", "claims", multiple=True, help="Run only these claim ids.")
@click.option("--tol-derived", type=float, default=None, help="Relative tolerance for derived claims.")
@click.option("--tol-paper", type=float, default=None, help="Relative tolerance for printed claims.")
@click.option("--workers", type=int, default=None, help="Claim worker threads.")
@click.pass_context
def verify(ctx, grid_name, out, csv_path, meta_path, claims, tol_derived, tol_paper, workers):
    """Measure every claim and write the report (exit 2 if a derived claim misbehaves)."""
    overrides = {k: v for k, v in (("derived", tol_derived), ("paper", tol_paper)) if v is not None}
    policy = TolerancePolicy(**overrides)
    grid = get_grid_preset(grid_name)
    out = Path(out)
    csv_path = Path(csv_path) if csv_path else out.with_suffix(".csv")
    meta_path = Path(meta_path) if meta_path else out.with_suffix(".meta.json")

    with console.status("[bold blue]Running claims..."):
        report = run_registry(policy, grid, only=list(claims) or None, max_workers=workers)

    out.write_text(report.to_json())
    csv_path.write_text(report.to_csv())
    meta_path.write_text(json.dumps(report.meta(), indent=2) + "\n")

    table = Table(title=f"Claims on grid '{grid.name}'")
    table.add_column("Claim", style="cyan")
    table.add_column("Truth")
    table.add_column("Status")
    table.add_column("Relative", justify="right")
    styles = {ClaimStatus.PASS: "green", ClaimStatus.FAIL: "red", ClaimStatus.DOMAIN_ERROR: "yellow"}
    for r in report.results:
        mark = "" if r.meets_expectation else " (!)"
        table.add_row(
            r.id,
            r.truth.value,
            f"[{styles[r.status]}]{r.status.value}[/]{mark}",
            f"{r.relative_residual:.2e}",
        )
    console.print(table)
    console.print(Panel(report.to_summary(), title="Verification", border_style="blue"))
    console.print(f"[green bold]Saved:[/green bold] {out}, {csv_path}, {meta_path}")
    if report.exit_code:
        ctx.exit(EXIT_VERIFY_FAILED)


@cli.command()
@click.option("--ic", type=click.Choice(["soliton", "gaussian", "noise"]), default="soliton", show_default=True)
@click.option("--N", "n_points", type=int, default=1024, show_default=True, help="Grid points (power of two).")
@click.option("--L", "length", type=float, default=200.0, show_default=True, help="Periodic domain length.")
@click.option("--dt", type=float, default=0.05, show_default=True)
@click.option("--t-end", type=float, default=20.0, show_default=True)
@click.option("--k-cut", type=float, default=1.0, show_default=True, help="Spectral cutoff; 0 keeps every mode.")
@click.option("--no-dealias", is_flag=True, help="Skip the 2/3 rule.")
@click.option("--sign", type=click.Choice(["1", "-1"]), default="1", show_default=True,
              help="Sign of u_xxxx after rearranging: 1 assigned, -1 well-posed.")
@click.option("--blowup-threshold", type=float, default=None, help="Sup-norm limit (default 1e3 x initial).")
@click.option("--stride", type=int, default=20, show_default=True, help="Steps between stored frames.")
@click.option("--linear", is_flag=True, help="Drop the quadratic term.")
@click.option("--workers", type=int, default=None, help="FFT worker threads.")
@click.option("--k", "k_soliton", type=float, default=0.25, show_default=True, help="Soliton wavenumber.")
@click.option("--amplitude", type=float, default=None, help="Gaussian or noise amplitude.")
@click.option("--width", type=float, default=1.0, show_default=True, help="Gaussian width.")
@click.option("--seed", type=int, default=0, show_default=True, help="Noise seed.")
@click.option("--out-dir", "-o", type=click.Path(file_okay=False), default="sim", show_default=True)
@click.option("--fail-on-blowup", is_flag=True, help="Exit 3 when the run blows up.")
@click.pass_context
def simulate(ctx, ic, n_points, length, dt, t_end, k_cut, no_dealias, sign, blowup_threshold, stride,
             linear, workers, k_soliton, amplitude, width, seed, out_dir, fail_on_blowup):
    """Pseudospectral run; writes frames.csv, diagnostics.csv and summary.json."""
    grid = Grid1D(N=n_points, L=length)
    config = SimConfig(
        dt=dt,
        t_end=t_end,
        k_cut=k_cut or None,
        dealias=not no_dealias,
        fourth_order_sign=int(sign),
        blowup_threshold=blowup_threshold,
        output_stride=stride,
        nonlinear=not linear,
        workers=workers,
    )
    if ic == "soliton":
        params = {"k": k_soliton}
    elif ic == "gaussian":
        params = {"width": width} | ({"amplitude": amplitude} if amplitude is not None else {})
    else:
        params = {"seed": seed} | ({"amplitude": amplitude} if amplitude is not None else {})
    start = initial_condition(ic, grid, config, **params)

    console.print(Panel(
        f"[bold]Initial:[/bold] {start.description}\n"
        f"[bold]Grid:[/bold] N={grid.N}  L={grid.L:g}  |  [bold]k_cut:[/bold] {config.cutoff(grid):.4g}\n"
        f"[bold]dt:[/bold] {config.dt:g}  |  [bold]t_end:[/bold] {config.t_end:g}  |  [bold]sign:[/bold] {sign}",
        title="Simulating",
        border_style="magenta",
    ))
    with console.status("[bold blue]Stepping..."):
        result = run(start.u0, start.ut0, config, grid)

    out = Path(out_dir)
    out.mkdir(parents=True, exist_ok=True)
    write_frames_csv(result, out / "frames.csv")
    write_diagnostics_csv(result, out / "diagnostics.csv")
    write_summary_json(result, out / "summary.json")

    colour = "green" if result.status == SimStatus.COMPLETED else "red"
    console.print(f"[{colour} bold]{result.status.value}[/] at t={result.final_t:.4g} after {result.steps} steps")
    for warning in result.warnings:
        console.print(f"[yellow]{warning}[/yellow]")
    console.print(f"[green bold]Saved:[/green bold] {out}/")
    if fail_on_blowup and result.status == SimStatus.BLOWUP:
        ctx.exit(EXIT_BLOWUP)


@cli.command()
@click.option("--z", "z_spec", default="-10:10:0.1", show_default=True, help="z grid start:stop:step.")
@click.option("--m", "m_spec", default="0.5", show_default=True, help="m value or start:stop:step in [0, 1].")
@click.option("--out", "-o", type=click.Path(dir_okay=False), default=None, help="CSV path (stdout if omitted).")
def elliptic(z_spec, m_spec, out):
    """Tabulate sn, cn, dn as z,m,sn,cn,dn."""
    zs, ms = parse_grid(z_spec), parse_grid(m_spec)
    buffer = _open_out(out)
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(["z", "m", "sn", "cn", "dn"])
    for m in ms:
        sn, cn, dn = (np.atleast_1d(v) for v in jacobi_eval(zs, m))
        writer.writerows([fmt(z), fmt(m), fmt(s), fmt(c), fmt(d)] for z, s, c, d in zip(zs, sn, cn, dn))
    _emit(buffer, out)


@cli.command()
@click.option("--format", "fmt_", type=click.Choice(["table", "csv"]), default="table", show_default=True)
def catalog(fmt_):
    """List registered claims, named solutions and grid presets."""
    registry = build_default_registry()
    if fmt_ == "csv":
        buffer = io.StringIO()
        writer = csv.writer(buffer, lineterminator="\n")
        writer.writerow(["kind", "id", "paper_ref", "truth", "description"])
        for claim in registry:
            writer.writerow(["claim", claim.id, claim.paper_ref, claim.truth.value, claim.description])
        for name, entry in NAMED_SOLUTIONS.items():
            writer.writerow(["solution", name, entry["paper_ref"], "", entry["description"]])
        click.echo(buffer.getvalue(), nl=False)
        return

    claims = Table(title=f"Registered claims ({len(registry)})")
    claims.add_column("Claim", style="cyan bold")
    claims.add_column("Reference", style="green")
    claims.add_column("Truth")
    claims.add_column("Description")
    for claim in registry:
        claims.add_row(claim.id, claim.paper_ref, claim.truth.value, claim.description)
    console.print(claims)

    solutions = Table(title="Named solutions")
    solutions.add_column("Name", style="cyan bold")
    solutions.add_column("Reference", style="green")
    solutions.add_column("Defaults")
    solutions.add_column("Description")
    for name, entry in NAMED_SOLUTIONS.items():
        defaults = ", ".join(f"{k}={v:g}" for k, v in entry["defaults"].items())
        solutions.add_row(name, entry["paper_ref"], defaults, entry["description"])
    console.print(solutions)

    grids = Table(title="Grid presets")
    grids.add_column("Name", style="cyan bold")
    grids.add_column("Description")
    for name, entry in GRID_PRESETS.items():
        grids.add_row(name, entry["description"])
    console.print(grids)


@cli.command()
@click.option("--host", default="127.0.0.1", help="Host to bind to.")
@click.option("--port", "-p", type=int, default=8000, help="Port number.")
@click.option("--reload", is_flag=True, default=False, help="Auto-reload on changes.")
def serve(host, port, reload):
    """Start the JSON API server."""
    import uvicorn

    console.print(Panel(
        f"[bold]Server:[/bold] http://{host}:{port}\n"
        f"[bold]Reload:[/bold] {reload}",
        title="Starting API Server",
        border_style="green",
    ))

    uvicorn.run(
        "src.api.app:app",
        host=host,
        port=port,
        reload=reload,
    )


def dispatch(argv: Optional[list[str]] = None) -> int:
    """Run the CLI and map outcomes to exit codes.

    0 success, 1 usage or input error, 2 derived-truth verification failure,
    3 blow-up under ``--fail-on-blowup``.
    """
    try:
        code = cli.main(args=argv, prog_name="bousq", standalone_mode=False)
    except click.exceptions.Exit as e:
        return e.exit_code
    except click.ClickException as e:
        e.show()
        return EXIT_USAGE
    except click.exceptions.Abort:
        return EXIT_USAGE
    except (LabError, ValidationError, ValueError) as e:
        console.print(f"[red bold]Error:[/red bold] {e}")
        return EXIT_USAGE
    return code if isinstance(code, int) else 0


if __name__ == "__main__":
    sys.exit(dispatch())

"""CSV and JSON outputs of a simulation run."""

from __future__ import annotations

import csv
import json
from pathlib import Path

from .solver import SimulationResult


def _fmt(value: float) -> str:
    return f"{float(value):.17g}"


def write_frames_csv(result: SimulationResult, path: Path) -> Path:
    """One ``t,x,u`` block per stored frame."""
    path = Path(path)
    with path.open("w", newline="") as fh:
        writer = csv.writer(fh, lineterminator="\n")
        writer.writerow(["t", "x", "u"])
        for t, frame in zip(result.times, result.frames):
            ts = _fmt(t)
            writer.writerows([ts, _fmt(x), _fmt(u)] for x, u in zip(result.x, frame))
    return path


def write_diagnostics_csv(result: SimulationResult, path: Path) -> Path:
    path = Path(path)
    with path.open("w", newline="") as fh:
        writer = csv.writer(fh, lineterminator="\n")
        writer.writerow(["t", "mass", "sup_norm", "tail_energy"])
        for d in result.diagnostics:
            writer.writerow([_fmt(d.t), _fmt(d.mass), _fmt(d.sup_norm), _fmt(d.tail_energy)])
    return path


def write_summary_json(result: SimulationResult, path: Path) -> Path:
    path = Path(path)
    path.write_text(json.dumps(result.to_summary(), indent=2) + "\n")
    return path

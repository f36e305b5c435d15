"""Verification report and its serializations.

The comparable payload (``to_dict``, ``to_json``, ``to_csv``) carries no
timestamps; run metadata is emitted separately by ``meta``.
"""

from __future__ import annotations

import csv
import io
import json
import platform
from dataclasses import dataclass, field
from datetime import datetime, timezone

import numpy as np
import scipy

from .. import __version__
from ..models.settings import GridSpec, TolerancePolicy
from .claims import ClaimResult, ClaimStatus, ClaimTruth

CSV_COLUMNS = ("id", "status", "sup_residual", "l2_residual", "relative_residual", "truth", "variant")


def _fmt(value: float) -> str:
    return f"{float(value):.17g}"


@dataclass
class VerificationReport:
    """Ordered claim results plus the grid and tolerances they were measured with."""

    results: list[ClaimResult] = field(default_factory=list)
    grid: GridSpec = field(default_factory=GridSpec)
    policy: TolerancePolicy = field(default_factory=TolerancePolicy)
    tool_version: str = __version__

    # --- Run metadata (not part of the comparable payload) ---
    warnings: list[str] = field(default_factory=list)
    timings: dict[str, float] = field(default_factory=dict)
    created_at: str = field(default_factory=lambda: datetime.now(timezone.utc).isoformat())

    def add_warning(self, warning: str) -> None:
        self.warnings.append(warning)

    def record_timing(self, stage: str, seconds: float) -> None:
        self.timings[stage] = round(seconds, 3)

    # --- Queries ---

    def by_id(self, claim_id: str) -> ClaimResult:
        for r in self.results:
            if r.id == claim_id:
                return r
        raise KeyError(claim_id)

    def counts(self) -> dict[str, int]:
        counts = {status.value: 0 for status in ClaimStatus}
        for r in self.results:
            counts[r.status.value] += 1
        return counts

    def derived_failures(self) -> list[ClaimResult]:
        """Derived-truth and control claims whose status differs from the expected one."""
        return [
            r
            for r in self.results
            if r.truth in (ClaimTruth.DERIVED, ClaimTruth.CONTROL) and not r.meets_expectation
        ]

    @property
    def exit_code(self) -> int:
        return 0 if not self.derived_failures() else 2

    # --- Serialization ---

    def to_dict(self) -> dict:
        return {
            "tool_version": self.tool_version,
            "grid": self.grid.model_dump(),
            "tolerance": self.policy.model_dump(),
            "claims": [r.to_dict() for r in self.results],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2, ensure_ascii=False) + "\n"

    def to_csv(self) -> str:
        buffer = io.StringIO()
        writer = csv.writer(buffer, lineterminator="\n")
        writer.writerow(CSV_COLUMNS)
        for r in self.results:
            writer.writerow(
                [
                    r.id,
                    r.status.value,
                    _fmt(r.sup_residual),
                    _fmt(r.l2_residual),
                    _fmt(r.relative_residual),
                    r.truth.value,
                    r.variant or "",
                ]
            )
        return buffer.getvalue()

    def meta(self) -> dict:
        return {
            "tool_version": self.tool_version,
            "created_at": self.created_at,
            "python": platform.python_version(),
            "numpy": np.__version__,
            "scipy": scipy.__version__,
            "timings": self.timings,
            "warnings": self.warnings,
            "counts": self.counts(),
            "exit_code": self.exit_code,
        }

    def to_summary(self) -> str:
        counts = self.counts()
        lines = [
            f"Claims: {len(self.results)} on grid '{self.grid.name}'",
            "Status: " + ", ".join(f"{k}={v}" for k, v in counts.items()),
        ]
        failures = self.derived_failures()
        if failures:
            lines.append("Unexpected: " + ", ".join(r.id for r in failures))
        if self.timings:
            lines.append("Timings: " + ", ".join(f"{k}={v:.2f}s" for k, v in self.timings.items()))
        return "\n".join(lines)

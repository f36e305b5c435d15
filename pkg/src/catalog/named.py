"""Registry of named particular solutions.

Each entry binds a solution to the equation it is claimed to solve, with
the parameters it was published with. Parameters listed under
``defaults`` may be overridden by keyword.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Optional, Union

import numpy as np
from scipy.signal import find_peaks

from ..equations import ReducedOde, reduce
from ..errors import LabError, UnknownEntryError
from ..jets import functions as jf
from ..models.equation import NonlinearitySpec, PdeForm, WaveFrame
from ..models.solution import GGBranch
from .fields import ClosedFormField, CompactProfile, FunctionProfile, Profile, TravelingWave
from .gg import gg_determine, gg_printed_profile
from .oracle import sech2_soliton

COMPACTON_SPEED = math.sqrt(5 / 48)
COMPACTON_K = math.sqrt(5 / 12)
ANTIKINK_MARGIN = 1e-2


@dataclass(frozen=True)
class NamedSolution:
    id: str
    paper_ref: str
    description: str
    profile: Profile
    frame: WaveFrame
    form: PdeForm
    params: dict = field(default_factory=dict)
    ode: Optional[ReducedOde] = None

    @property
    def u(self) -> ClosedFormField:
        return TravelingWave(self.profile, self.frame)

    @property
    def binding(self) -> Union[PdeForm, ReducedOde]:
        """The ODE for entries stated as reduced solutions, otherwise the PDE."""
        return self.ode if self.ode is not None else self.form


# --- Builders ---


def _compacton_f(c: float, sign: float) -> NonlinearitySpec:
    # sign * 5/288 (12 c^2 - 17)(2h - 1)
    k = sign * 5 / 288 * (12 * c * c - 17)
    return NonlinearitySpec.from_pairs([(2 * k, 1.0), (-k, 0.0)])


def _compacton_sin2(c: float, margin: float):
    frame = WaveFrame(lam=COMPACTON_SPEED, mu=COMPACTON_SPEED)
    half_width = COMPACTON_SPEED * 2 * math.pi / COMPACTON_K
    profile = CompactProfile(lambda z: jf.sin(z) ** 2, half_width=half_width, margin=margin)
    return profile, frame, PdeForm.generalized(c, _compacton_f(c, -1.0)), None


def _compacton_cos2(c: float, margin: float):
    frame = WaveFrame(lam=COMPACTON_SPEED, mu=COMPACTON_SPEED)
    half_width = COMPACTON_SPEED * math.pi / COMPACTON_K
    profile = CompactProfile(lambda z: jf.cos(z) ** 2, half_width=half_width, margin=margin)
    return profile, frame, PdeForm.generalized(c, _compacton_f(c, 1.0)), None


def _kink(c: float):
    frame = WaveFrame(lam=0.5, mu=1.0)
    f = NonlinearitySpec.from_pairs([(1536.0, 5.0), (32 * c - 168, 3.0), (15 / 4 - 2 * c, 1.0)])
    return FunctionProfile(lambda z: 0.25 * jf.tanh(z)), frame, PdeForm.generalized(c, f), None


def _antikink(c: float, margin: float):
    frame = WaveFrame(lam=0.5, mu=1.0)
    f = NonlinearitySpec.from_pairs(
        [
            (90.0, 7 / 3),
            (3 * (4 * c * c - 69), 5 / 3),
            (1.5 * (4 * c * c - 21), 1 / 3),
            (-0.75 * (24 * c * c - 197), -1 / 3),
        ]
    )
    profile = FunctionProfile(lambda z: jf.tanh(z) ** 3, domain=lambda z: z >= margin)
    return profile, frame, PdeForm.generalized(c, f), None


def _soliton_sech2(c: float):
    frame = WaveFrame(lam=1.0, mu=1.0)
    f = NonlinearitySpec.from_pairs([(120.0, 3.0), (-6 * (c * c + 19), 2.0), (4 * (c * c + 3), 1.0)])
    return FunctionProfile(lambda z: jf.sech(z) ** 2), frame, PdeForm.generalized(c, f), None


def _sech2_wave(c: float, gamma: float, k: float):
    params = sech2_soliton(c, gamma, k)
    if params.speed_squared <= 0:
        raise LabError(f"no real speed: v^2 = {params.speed_squared:g}")
    v = math.sqrt(params.speed_squared)
    amplitude = params.amplitude
    # z = k (x - v t)
    frame = WaveFrame(lam=k * v, mu=k)
    return FunctionProfile(lambda z: amplitude * jf.sech(z) ** 2), frame


def _assigned_soliton(k: float):
    profile, frame = _sech2_wave(1.0, 3.0, k)
    form = PdeForm.assigned()
    return profile, frame, form, reduce(form, frame)


def _corrected_soliton(k: float):
    profile, frame = _sech2_wave(1.0, 1.0, k)
    return profile, frame, PdeForm.corrected(), None


def _classical_soliton(c: float, k: float):
    profile, frame = _sech2_wave(c, 1.0, k)
    return profile, frame, PdeForm.classical(c), None


def _gg_printed(branch: GGBranch):
    def build(c: float, lam: float, mu: float, c1: float, c2: float):
        frame = WaveFrame(lam=lam, mu=mu)
        profile = gg_printed_profile(branch, frame, c, c1, c2)
        form = PdeForm.generalized(c, NonlinearitySpec.quadratic())
        B = gg_determine(0.0, frame, c).B
        return profile, frame, form, reduce(form, frame, A=0.0, B=B)

    return build


NAMED_SOLUTIONS: dict[str, dict] = {
    "compacton_sin2": {
        "paper_ref": "Eqs (25)-(26)",
        "description": "sin^2 compacton with two peaks, |x - t| <= 2 pi / k, k = sqrt(5/12)",
        "build": _compacton_sin2,
        "defaults": {"c": 1.0, "margin": 1e-3},
    },
    "kink": {
        "paper_ref": "Eqs (27)-(28)",
        "description": "kink u = tanh(x - t/2) / 4",
        "build": _kink,
        "defaults": {"c": 1.0},
    },
    "antikink": {
        "paper_ref": "Eqs (29)-(30)",
        "description": "antikink u = tanh^3(x - t/2), evaluated where z >= margin",
        "build": _antikink,
        "defaults": {"c": 1.0, "margin": ANTIKINK_MARGIN},
    },
    "compacton_cos2": {
        "paper_ref": "Eqs (33)-(34)",
        "description": "cos^2 compacton with one peak, |x - t| <= pi / k",
        "build": _compacton_cos2,
        "defaults": {"c": 1.0, "margin": 1e-3},
    },
    "soliton_sech2": {
        "paper_ref": "Eqs (37)-(38)",
        "description": "soliton u = sech^2(x - t)",
        "build": _soliton_sech2,
        "defaults": {"c": 1.0},
    },
    "assigned_soliton": {
        "paper_ref": "assigned equation, sech^2 coefficient matching",
        "description": "u = 2k^2 sech^2(k(x - v t)), v^2 = 1 + 4k^2",
        "build": _assigned_soliton,
        "defaults": {"k": 0.25},
    },
    "corrected_soliton": {
        "paper_ref": "Eq (2), sech^2 coefficient matching",
        "description": "u = 6k^2 sech^2(k(x - v t)), v^2 = 1 + 4k^2",
        "build": _corrected_soliton,
        "defaults": {"k": 0.5},
    },
    "classical_soliton": {
        "paper_ref": "Eq (1), sech^2 coefficient matching",
        "description": "u = 6k^2 sech^2(k(x - v t)), v^2 = c + 4k^2",
        "build": _classical_soliton,
        "defaults": {"c": -1.0, "k": 0.75},
    },
    "gg_u1": {
        "paper_ref": "Eq (51)",
        "description": "hyperbolic G'/G solution as printed (needs c/lambda^2 < 1/mu^2)",
        "build": _gg_printed(GGBranch.HYPERBOLIC),
        "defaults": {"c": 0.5, "lam": 1.0, "mu": 1.0, "c1": 1.0, "c2": 0.5},
    },
    "gg_u2": {
        "paper_ref": "Eq (52)",
        "description": "trigonometric G'/G solution as printed (needs c/lambda^2 > 1/mu^2)",
        "build": _gg_printed(GGBranch.TRIGONOMETRIC),
        "defaults": {"c": 2.0, "lam": 1.0, "mu": 1.0, "c1": 1.0, "c2": 0.0},
    },
    "gg_u3": {
        "paper_ref": "Eq (53)",
        "description": "rational G'/G solution as printed (c/lambda^2 = 1/mu^2)",
        "build": _gg_printed(GGBranch.RATIONAL),
        "defaults": {"c": 1.0, "lam": 1.0, "mu": 1.0, "c1": 1.0, "c2": 12.0},
    },
}


def list_named() -> list[str]:
    return list(NAMED_SOLUTIONS.keys())


def named_solution(id: str, **params) -> NamedSolution:
    """Build the named solution ``id`` with its published parameters, optionally overridden."""
    try:
        entry = NAMED_SOLUTIONS[id]
    except KeyError:
        raise UnknownEntryError(f"unknown solution '{id}'; choose from {list_named()}") from None
    unknown = set(params) - set(entry["defaults"])
    if unknown:
        raise LabError(f"'{id}' takes parameters {sorted(entry['defaults'])}, got {sorted(unknown)}")
    merged = {**entry["defaults"], **{k: float(v) for k, v in params.items()}}
    profile, frame, form, ode = entry["build"](**merged)
    return NamedSolution(
        id=id,
        paper_ref=entry["paper_ref"],
        description=entry["description"],
        profile=profile,
        frame=frame,
        form=form,
        params=merged,
        ode=ode,
    )


def count_peaks(values: np.ndarray, rel_height: float = 1e-6) -> int:
    """Number of strict local maxima rising above ``rel_height`` times the largest value."""
    values = np.asarray(values, dtype=float)
    top = np.nanmax(np.abs(values)) if values.size else 0.0
    if top == 0.0:
        return 0
    peaks, _ = find_peaks(values, height=rel_height * top)
    return int(len(peaks))


def profile_peaks(solution: NamedSolution, x: np.ndarray, t: float = 0.0) -> int:
    """Peaks of the emitted profile u(x, t) along x (diagnostic only)."""
    return count_peaks(solution.u.sample(x, t))

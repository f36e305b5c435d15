"""FastAPI JSON service over the lab's operations."""

import time
from typing import Optional

import numpy as np
from fastapi import FastAPI, HTTPException
from pydantic import BaseModel, Field

from .. import __version__
from ..catalog import NAMED_SOLUTIONS, named_solution
from ..elliptic import jacobi_eval
from ..errors import LabError, UnknownEntryError
from ..models.settings import Grid1D, SimConfig
from ..models.solution import EllipticParameter
from ..presets import get_grid_preset
from ..simulate import initial_condition, run
from ..verify import build_default_registry, run_registry

app = FastAPI(title="Boussinesq Lab", version=__version__)


def _http_error(e: Exception) -> HTTPException:
    if isinstance(e, UnknownEntryError):
        return HTTPException(status_code=404, detail=str(e))
    return HTTPException(status_code=422, detail=str(e))


# --- Request/Response models ---

class EvalRequest(BaseModel):
    solution: str
    params: dict[str, float] = Field(default_factory=dict)
    x: list[float] = Field(min_length=1)
    t: float = 0.0


class EvalResponse(BaseModel):
    solution: str
    paper_ref: str
    params: dict[str, float]
    t: float
    x: list[float]
    u: list[float]


class EllipticRequest(BaseModel):
    z: list[float] = Field(min_length=1)
    m: EllipticParameter = 0.5


class EllipticResponse(BaseModel):
    m: float
    z: list[float]
    sn: list[float]
    cn: list[float]
    dn: list[float]


class VerifyRequest(BaseModel):
    grid: str = "coarse"
    claims: Optional[list[str]] = None


class VerifyResponse(BaseModel):
    report: dict
    exit_code: int
    verification_time: float


class SimulateRequest(BaseModel):
    """Simulator run; ``ic_params`` go to the initial-condition builder."""
    ic: str = "soliton"
    ic_params: dict[str, float] = Field(default_factory=dict)
    N: int = 256
    L: float = 200.0
    dt: float = 0.05
    t_end: float = 5.0
    k_cut: Optional[float] = 1.0
    dealias: bool = True
    sign: int = 1
    nonlinear: bool = True
    stride: int = 10


class SimulateResponse(BaseModel):
    summary: dict
    diagnostics: list[dict]
    simulation_time: float


# --- Routes ---

@app.get("/api/solutions")
async def list_solutions():
    """Named solutions with their references and default parameters."""
    return {
        name: {"paper_ref": e["paper_ref"], "description": e["description"], "defaults": e["defaults"]}
        for name, e in NAMED_SOLUTIONS.items()
    }


@app.get("/api/claims")
async def list_claims():
    return [
        {"id": c.id, "paper_ref": c.paper_ref, "truth": c.truth.value, "description": c.description}
        for c in build_default_registry()
    ]


@app.post("/api/eval", response_model=EvalResponse)
async def evaluate(request: EvalRequest):
    """Sample a named solution along x at one time."""
    try:
        sol = named_solution(request.solution, **request.params)
        x = np.asarray(request.x, dtype=float)
        u = sol.u.sample(x, request.t)
    except LabError as e:
        raise _http_error(e)
    return EvalResponse(
        solution=sol.id,
        paper_ref=sol.paper_ref,
        params=sol.params,
        t=request.t,
        x=x.tolist(),
        u=[float(v) for v in u],
    )


@app.post("/api/elliptic", response_model=EllipticResponse)
async def elliptic(request: EllipticRequest):
    sn, cn, dn = (np.atleast_1d(v) for v in jacobi_eval(request.z, request.m))
    return EllipticResponse(m=request.m, z=request.z, sn=sn.tolist(), cn=cn.tolist(), dn=dn.tolist())


@app.post("/api/verify", response_model=VerifyResponse)
def verify(request: VerifyRequest):
    """Run the claim registry (or a subset) on a grid preset."""
    start = time.time()
    try:
        grid = get_grid_preset(request.grid)
        report = run_registry(grid=grid, only=request.claims)
    except LabError as e:
        raise _http_error(e)
    return VerifyResponse(
        report=report.to_dict(),
        exit_code=report.exit_code,
        verification_time=round(time.time() - start, 2),
    )


@app.post("/api/simulate", response_model=SimulateResponse)
def simulate(request: SimulateRequest):
    start = time.time()
    try:
        grid = Grid1D(N=request.N, L=request.L)
        config = SimConfig(
            dt=request.dt,
            t_end=request.t_end,
            k_cut=request.k_cut,
            dealias=request.dealias,
            fourth_order_sign=request.sign,
            nonlinear=request.nonlinear,
            output_stride=request.stride,
        )
        params = dict(request.ic_params)
        if "seed" in params:
            params["seed"] = int(params["seed"])
        ic = initial_condition(request.ic, grid, config, **params)
        result = run(ic.u0, ic.ut0, config, grid)
    except (LabError, ValueError, TypeError) as e:
        raise _http_error(e)
    return SimulateResponse(
        summary=result.to_summary(),
        diagnostics=[d._asdict() for d in result.diagnostics],
        simulation_time=round(time.time() - start, 2),
    )

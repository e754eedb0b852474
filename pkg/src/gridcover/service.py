"""HTTP service exposing the experiment campaigns.

Request/response bodies are pydantic models; the CLI is a thin client of
these endpoints (in-process by default).  All endpoints are pure functions
of their request body, so the service is safe to run multi-worker.
"""

from __future__ import annotations

from typing import List, Literal, Optional, Union

from fastapi import FastAPI, HTTPException
from pydantic import BaseModel, Field

from .objective import BudgetExceededError
from .scenarios import (
    ConfigError,
    ScenarioConfig,
    rows_to_dicts,
    run_compare,
    run_sweep,
    run_trials,
    run_verify,
    summarize,
)

app = FastAPI(title="gridcover", version="0.1.0")


class ScenarioRequest(BaseModel):
    grid_w: int = Field(50, ge=1)
    grid_h: int = Field(50, ge=1)
    n_agents: int = Field(10, ge=1)
    sense_radius: float = Field(10.0, gt=0)
    comm_range: Union[float, List[float]] = 15.0
    seed: int = 0
    trials: int = Field(1, ge=1)
    algorithm: Literal["rag", "sequential", "isolated"] = "rag"

    def to_config(self) -> ScenarioConfig:
        comm = self.comm_range
        if isinstance(comm, list):
            comm = tuple(comm)
        try:
            return ScenarioConfig(
                grid_w=self.grid_w, grid_h=self.grid_h, n_agents=self.n_agents,
                sense_radius=self.sense_radius, comm_range=comm,
                seed=self.seed, trials=self.trials, algorithm=self.algorithm)
        except ConfigError as exc:
            raise HTTPException(status_code=422, detail=str(exc)) from exc


class TrialRowModel(BaseModel):
    trial: int
    algorithm: str
    objective: int
    comm_rounds: int
    iterations: int
    total_evals: int
    gain_msgs: int
    action_msgs: int
    payload_bytes: int


class RunResponse(BaseModel):
    rows: List[TrialRowModel]
    summary: dict


class SweepRequest(BaseModel):
    scenario: ScenarioRequest = ScenarioRequest()
    ranges: List[float] = Field(min_length=1)


class SweepRow(BaseModel):
    comm_range: float
    objective: float
    comm_rounds: float
    iterations: float
    total_evals: float
    gain_msgs: float
    action_msgs: float
    payload_bytes: float


class SweepResponse(BaseModel):
    rows: List[SweepRow]


class VerifyResponse(BaseModel):
    ok: bool
    trials: List[dict]
    violations: List[dict]


class CompareResponse(BaseModel):
    rows: List[TrialRowModel]
    summaries: dict


@app.get("/healthz")
def healthz() -> dict:
    return {"status": "ok"}


@app.post("/run", response_model=RunResponse)
def run(req: ScenarioRequest) -> RunResponse:
    rows = run_trials(req.to_config())
    return RunResponse(rows=rows_to_dicts(rows), summary=summarize(rows))


@app.post("/sweep", response_model=SweepResponse)
def sweep(req: SweepRequest) -> SweepResponse:
    try:
        rows = run_sweep(req.scenario.to_config(), req.ranges)
    except ConfigError as exc:
        raise HTTPException(status_code=422, detail=str(exc)) from exc
    return SweepResponse(rows=rows)


@app.post("/verify", response_model=VerifyResponse)
def verify(req: ScenarioRequest, axiom_trials: Optional[int] = None) -> VerifyResponse:
    try:
        report = run_verify(req.to_config(), axiom_trials=axiom_trials or 50)
    except (ConfigError, BudgetExceededError) as exc:
        raise HTTPException(status_code=422, detail=str(exc)) from exc
    return VerifyResponse(**report.to_dict())


@app.post("/compare", response_model=CompareResponse)
def compare(req: ScenarioRequest) -> CompareResponse:
    result = run_compare(req.to_config())
    return CompareResponse(rows=rows_to_dicts(result["rows"]), summaries=result["summaries"])

"""FastAPI service wrapping the simulator.

Endpoints:
  GET  /scenarios  - list scenario ids
  POST /runs       - run a scenario from a resolved config, returns CSV + manifest
  POST /validate   - run the invariant suite
"""

from __future__ import annotations

import time

from fastapi import FastAPI, HTTPException
from pydantic import BaseModel

from . import __version__
from .config import ConfigError, ScenarioConfig
from .experiments import SCENARIOS, run_scenario
from .validation import run_validation


class RunRequest(BaseModel):
    config: ScenarioConfig


class RunResponse(BaseModel):
    scenario: str
    csv: str
    manifest: dict


class ScenarioList(BaseModel):
    scenarios: list[str]


class CheckResult(BaseModel):
    name: str
    passed: bool
    detail: str = ""


class ValidateResponse(BaseModel):
    ok: bool
    checks: list[CheckResult]


def create_app() -> FastAPI:
    app = FastAPI(title="decosim", version=__version__)

    @app.get("/scenarios", response_model=ScenarioList)
    def list_scenarios() -> ScenarioList:
        return ScenarioList(scenarios=list(SCENARIOS))

    @app.post("/runs", response_model=RunResponse)
    def run(req: RunRequest) -> RunResponse:
        start = time.monotonic()
        try:
            table, extras = run_scenario(req.config)
        except (ConfigError, ValueError) as exc:
            raise HTTPException(status_code=422, detail=str(exc))
        except RuntimeError as exc:
            raise HTTPException(status_code=500, detail=f"invariant violation: {exc}")
        manifest = {
            "config": req.config.model_dump(),
            "version": __version__,
            "seed": getattr(req.config, "seed", None),
            "duration_s": time.monotonic() - start,
            **extras,
        }
        return RunResponse(scenario=req.config.scenario, csv=table.to_csv(), manifest=manifest)

    @app.post("/validate", response_model=ValidateResponse)
    def validate() -> ValidateResponse:
        checks = run_validation()
        return ValidateResponse(
            ok=all(c.passed for c in checks),
            checks=[CheckResult(name=c.name, passed=c.passed, detail=c.detail) for c in checks],
        )

    return app


app = create_app()

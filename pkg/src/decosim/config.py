"""Scenario configuration: JSON config files validated by pydantic models.

Defaults follow the figure setups: tau = 0.1, k = 1, omega = 1/2 (m = 4),
omega_s = 1, g1 = g2 = 1, lambda in {0, 1} per variant, T = 300, and
x0 = 1/3 (single oscillator) or 0.5 (composite systems).
"""

from __future__ import annotations

import json
import math
from pathlib import Path
from typing import Annotated, Literal, Union

from pydantic import BaseModel, ConfigDict, Field, ValidationError, model_validator

from .evolution import TimeGrid
from .model import OscillatorParams


class ConfigError(ValueError):
    pass


class StrictModel(BaseModel):
    model_config = ConfigDict(extra="forbid")


class OscillatorConfig(StrictModel):
    mass: float = 4.0
    k: float | None = 1.0
    omega: float | None = None
    hbar: float = 1.0
    fock_dim: int = 16

    @model_validator(mode="after")
    def _consistent(self):
        if self.k is None and self.omega is None:
            raise ValueError("oscillator needs at least one of 'k', 'omega'")
        if self.k is not None and self.omega is not None:
            if abs(self.omega - math.sqrt(self.k / self.mass)) > 1e-12 * max(1.0, self.omega):
                raise ValueError(
                    f"'omega'={self.omega} inconsistent with sqrt(k/m)="
                    f"{math.sqrt(self.k / self.mass)}"
                )
        return self

    def to_params(self) -> OscillatorParams:
        return OscillatorParams.create(
            mass=self.mass, k=self.k, omega=self.omega, hbar=self.hbar, fock_dim=self.fock_dim
        )


class GridConfig(StrictModel):
    t_max: float = 300.0
    steps: int = 3000

    def to_grid(self) -> TimeGrid:
        return TimeGrid(t_max=self.t_max, steps=self.steps)


class MultiPhysicsConfig(StrictModel):
    """Shared parameters of the composite-system variants."""

    m1: float = 4.0
    m2: float = 1.0
    k: float = 1.0
    omega_s: float = 1.0
    g1: float = 1.0
    g2: float = 1.0
    lam: float = 1.0
    hbar: float = 1.0
    fock_dim: int = 8


_MULTI = ["osc_spin", "osc_two_spins_decoupled", "osc_two_spins_coupled", "coupled_oscillators"]
_ALL = ["single"] + _MULTI

Variant = Literal[
    "single", "osc_spin", "osc_two_spins_decoupled", "osc_two_spins_coupled",
    "coupled_oscillators",
]


class Fig1Config(StrictModel):
    scenario: Literal["fig1"]
    dim: int = Field(default=2, ge=2)
    n_samples: int = Field(default=100_000, ge=1)
    seed: int = 0
    tau: float = Field(default=0.1, ge=0)
    omega: float = Field(default=0.5, gt=0)


class PhaseSingleConfig(StrictModel):
    scenario: Literal["phase_single"]
    taus: list[float] = [0.0, 0.1]
    x0: float = 1 / 3
    p0: float = 0.0
    seed: int = 0
    oscillator: OscillatorConfig = OscillatorConfig()
    grid: GridConfig = GridConfig()


class EntropyVsX0Config(StrictModel):
    scenario: Literal["entropy_vs_x0"]
    tau: float = Field(default=0.1, ge=0)
    x0_list: list[float] = [0.0, 0.1, 0.2, 0.3, 0.4, 0.5]
    seed: int = 0
    oscillator: OscillatorConfig = OscillatorConfig()
    grid: GridConfig = GridConfig()


class PhaseMultiConfig(StrictModel):
    scenario: Literal["phase_multi"]
    taus: list[float] = [0.0, 0.1]
    variants: list[Variant] = list(_MULTI)
    x0: float = 0.5
    p0: float = 0.0
    seed: int = 0
    physics: MultiPhysicsConfig = MultiPhysicsConfig()
    grid: GridConfig = GridConfig()


class EnergyEntropySweepConfig(StrictModel):
    scenario: Literal["energy_entropy_sweep"]
    tau: float = Field(default=0.1, ge=0)
    variants: list[Variant] = list(_ALL)
    x0_min: float = -0.5
    x0_max: float = 0.5
    x0_count: int = Field(default=11, ge=2)
    seed: int = 0
    physics: MultiPhysicsConfig = MultiPhysicsConfig()
    grid: GridConfig = GridConfig()


class EntanglementSuiteConfig(StrictModel):
    scenario: Literal["entanglement_suite"]
    taus: list[float] = [0.0, 0.1]
    variants: list[Variant] = list(_ALL)
    x0: float = 0.5
    seed: int = 0
    physics: MultiPhysicsConfig = MultiPhysicsConfig()
    grid: GridConfig = GridConfig()


ScenarioConfig = Annotated[
    Union[
        Fig1Config,
        PhaseSingleConfig,
        EntropyVsX0Config,
        PhaseMultiConfig,
        EnergyEntropySweepConfig,
        EntanglementSuiteConfig,
    ],
    Field(discriminator="scenario"),
]


class _ConfigHolder(BaseModel):
    conf: ScenarioConfig


def validate_config(data: dict) -> "ScenarioConfig":
    try:
        return _ConfigHolder(conf=data).conf
    except ValidationError as exc:
        details = "; ".join(
            f"{'.'.join(str(p) for p in err['loc'][1:]) or 'scenario'}: {err['msg']}"
            for err in exc.errors()
        )
        raise ConfigError(f"invalid scenario config: {details}") from exc


def parse_config(path: str | Path) -> "ScenarioConfig":
    path = Path(path)
    if not path.exists():
        raise ConfigError(f"config file not found: {path}")
    try:
        data = json.loads(path.read_text())
    except json.JSONDecodeError as exc:
        raise ConfigError(f"config file {path} is not valid JSON: {exc}") from exc
    if not isinstance(data, dict):
        raise ConfigError("config root must be a JSON object")
    return validate_config(data)


def apply_overrides(conf: "ScenarioConfig", **overrides) -> "ScenarioConfig":
    """Command-line overrides: seed, tau, t_max, steps, dim (flags > file)."""
    data = conf.model_dump()
    for key, value in overrides.items():
        if value is None:
            continue
        if key == "tau":
            if "taus" in data:
                data["taus"] = [value]
            elif "tau" in data:
                data["tau"] = value
        elif key in ("t_max", "steps"):
            if "grid" not in data:
                raise ConfigError(f"scenario {data['scenario']!r} has no time grid")
            data["grid"][key] = value
        elif key == "dim":
            if "dim" in data:
                data["dim"] = value
            else:
                raise ConfigError(f"scenario {data['scenario']!r} has no 'dim'")
        elif key in data:
            data[key] = value
        else:
            raise ConfigError(f"scenario {data['scenario']!r} has no field {key!r}")
    return validate_config(data)

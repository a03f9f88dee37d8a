"""Fast invariant suite behind the `validate` subcommand and endpoint."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .evolution import (
    TimeGrid,
    analytic_x,
    evolve_rk4,
    evolve_series,
    propagate_exact,
)
from .experiments import MULTI_VARIANTS, VARIANT_SINGLE, initial_state, variant_spec
from .linalg import eig_hermitian, frobenius_distance, is_hermitian
from .model import build_hamiltonian, total_excitation_op
from .states import coherent_two_level, phase_point, pure_density


@dataclass
class Check:
    name: str
    passed: bool
    detail: str


def _spec_h(variant):
    spec = variant_spec(variant)
    return spec, build_hamiltonian(spec)


def run_validation() -> list[Check]:
    checks: list[Check] = []

    def record(name: str, passed: bool, detail: str = ""):
        checks.append(Check(name=name, passed=bool(passed), detail=detail))

    for variant in (VARIANT_SINGLE,) + MULTI_VARIANTS:
        spec, h = _spec_h(variant)
        record(f"hermitian_h[{variant}]", is_hermitian(h, 1e-12))

    spec, h = _spec_h("osc_two_spins_coupled")
    n_tot = total_excitation_op(spec)
    comm = np.linalg.norm(h @ n_tot - n_tot @ h)
    record("excitation_commutator", comm < 1e-10, f"|[H,N]|_F = {comm:.2e}")

    # trace/purity preservation and oracle agreement on a small system
    spec, h = _spec_h(VARIANT_SINGLE)
    rho0 = pure_density(initial_state(spec, 1 / 3, 0.0))
    spectrum = eig_hermitian(h)
    for tau in (0.0, 0.1):
        grid = TimeGrid(t_max=5.0, steps=5000)
        exact = propagate_exact(rho0, spectrum, tau, grid.t_max)
        rk4 = evolve_rk4(rho0, h, tau, grid)
        dist = frobenius_distance(exact, rk4)
        record(f"oracle_agreement[tau={tau}]", dist < 1e-6, f"frobenius = {dist:.2e}")
        record(
            f"trace_preserved[tau={tau}]",
            abs(np.trace(exact).real - 1.0) < 1e-12,
        )

    # energy conservation on the coupled tripartite system
    spec, h = _spec_h("osc_two_spins_coupled")
    rho0 = pure_density(initial_state(spec, 0.5, 0.0))
    traj = evolve_series(rho0, h, 0.1, TimeGrid(30.0, 300), [("energy", h)])
    drift = float(np.max(np.abs(traj["energy"] - traj["energy"][0])))
    record("energy_conserved[tripartite]", drift < 1e-9, f"max drift = {drift:.2e}")

    # analytic vs matrix-path <x> on the single oscillator
    spec, h = _spec_h(VARIANT_SINGLE)
    osc = spec.oscillators[0]
    amps = coherent_two_level(1 / 3, 0.0, osc)
    spectrum = eig_hermitian(h)
    from .model import position_op

    x_op = position_op(osc)
    worst = 0.0
    for t in np.linspace(0.0, 40.0, 9):
        rho_t = propagate_exact(pure_density(amps), spectrum, 0.1, t)
        worst = max(worst, abs(np.trace(x_op @ rho_t).real - analytic_x(t, amps, osc, 0.1)))
    record("analytic_x_matches_matrix", worst < 1e-9, f"max |diff| = {worst:.2e}")

    x0, p0 = phase_point(amps, osc)
    record(
        "coherent_round_trip",
        abs(x0 - 1 / 3) < 1e-10 and abs(p0) < 1e-10,
        f"x0 = {x0}, p0 = {p0}",
    )
    return checks

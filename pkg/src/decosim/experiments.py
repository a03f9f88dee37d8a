"""Named, reproducible scenarios that regenerate each figure's dataset.

Each runner returns a CsvTable; ``run_scenario`` dispatches on a parsed
ScenarioConfig and also reports saturation bookkeeping for the manifest.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from . import config as cfg
from .evolution import (
    TimeGrid,
    Trajectory,
    evolve_series,
    propagate_exact,
)
from .linalg import eig_hermitian, tensor_many, tensor_product
from .model import (
    COUPLED_OSC,
    SINGLE,
    TRIPARTITE,
    Couplings,
    OscillatorParams,
    SpinParams,
    SystemSpec,
    build_hamiltonian,
    momentum_op,
    position_op,
    tripartite_terms,
)
from .states import (
    basis_state,
    coherent_two_level,
    decohered_purity,
    distance_to_uniform,
    linear_entropy,
    pure_density,
    random_pure_state,
    with_spins_up,
)

VARIANT_SINGLE = "single"
VARIANT_OSC_SPIN = "osc_spin"
VARIANT_DECOUPLED = "osc_two_spins_decoupled"
VARIANT_COUPLED = "osc_two_spins_coupled"
VARIANT_COUPLED_OSC = "coupled_oscillators"

MULTI_VARIANTS = (VARIANT_OSC_SPIN, VARIANT_DECOUPLED, VARIANT_COUPLED, VARIANT_COUPLED_OSC)
ALL_VARIANTS = (VARIANT_SINGLE,) + MULTI_VARIANTS

SCENARIOS = (
    "fig1",
    "phase_single",
    "entropy_vs_x0",
    "phase_multi",
    "energy_entropy_sweep",
    "entanglement_suite",
)


@dataclass
class CsvTable:
    header: list[str]
    rows: list[tuple] = field(default_factory=list)

    def add(self, *row):
        if len(row) != len(self.header):
            raise ValueError(f"row width {len(row)} != header width {len(self.header)}")
        self.rows.append(row)

    def to_csv(self) -> str:
        def fmt(v):
            if isinstance(v, str):
                return v
            if isinstance(v, (int, np.integer)):
                return str(int(v))
            return f"{float(v):.17g}"

        lines = [",".join(self.header)]
        lines.extend(",".join(fmt(v) for v in row) for row in self.rows)
        return "\n".join(lines) + "\n"


# ---------------------------------------------------------------------------
# system variants

def variant_spec(
    variant: str,
    physics: "cfg.MultiPhysicsConfig | None" = None,
    single_osc: OscillatorParams | None = None,
) -> SystemSpec:
    """SystemSpec for one of the named figure variants."""
    ph = physics or cfg.MultiPhysicsConfig()
    if variant == VARIANT_SINGLE:
        osc = single_osc or OscillatorParams.create(
            mass=ph.m1, k=ph.k, hbar=ph.hbar, fock_dim=16
        )
        return SystemSpec(kind=SINGLE, oscillators=(osc,))
    osc1 = OscillatorParams.create(mass=ph.m1, k=ph.k, hbar=ph.hbar, fock_dim=ph.fock_dim)
    if variant == VARIANT_COUPLED_OSC:
        osc2 = OscillatorParams.create(mass=ph.m2, k=ph.k, hbar=ph.hbar, fock_dim=ph.fock_dim)
        return SystemSpec(
            kind=COUPLED_OSC,
            oscillators=(osc1, osc2),
            couplings=Couplings(lam=ph.lam),
        )
    spins = (SpinParams(ph.omega_s), SpinParams(ph.omega_s))
    if variant == VARIANT_OSC_SPIN:
        couplings = Couplings(g1=ph.g1, g2=0.0, lam=0.0)
    elif variant == VARIANT_DECOUPLED:
        couplings = Couplings(g1=ph.g1, g2=ph.g2, lam=0.0)
    elif variant == VARIANT_COUPLED:
        couplings = Couplings(g1=ph.g1, g2=ph.g2, lam=ph.lam)
    else:
        raise ValueError(f"unknown variant {variant!r}")
    return SystemSpec(kind=TRIPARTITE, oscillators=(osc1,), spins=spins, couplings=couplings)


def initial_state(spec: SystemSpec, x0: float, p0: float) -> np.ndarray:
    """Oscillator coherent two-level state; spins up / second oscillator in |0>."""
    osc_state = coherent_two_level(x0, p0, spec.oscillators[0])
    if spec.kind == SINGLE:
        return osc_state
    if spec.kind == TRIPARTITE:
        return with_spins_up(osc_state)
    return np.kron(osc_state, basis_state(spec.oscillators[1].fock_dim, 0))


def oscillator_observables(spec: SystemSpec) -> dict[str, np.ndarray]:
    """Full-space x and p of the first oscillator (identity on the rest)."""
    x = position_op(spec.oscillators[0])
    p = momentum_op(spec.oscillators[0])
    if spec.kind == SINGLE:
        return {"x": x, "p": p}
    rest = [np.eye(d, dtype=complex) for d in spec.factor_shape[1:]]
    return {
        "x": tensor_many([x] + rest),
        "p": tensor_many([p] + rest),
    }


def smallest_nonzero_gap(energies: np.ndarray, tol: float = 1e-9) -> float:
    gaps = np.abs(energies[:, None] - energies[None, :]).ravel()
    gaps = gaps[gaps > tol]
    return float(gaps.min()) if gaps.size else 0.0


def saturation_factor(energies: np.ndarray, tau: float, t: float) -> float:
    """Largest surviving off-diagonal decay factor exp(-tau dE^2 t)."""
    gap = smallest_nonzero_gap(energies)
    if tau == 0.0 or gap == 0.0:
        return 1.0
    return float(math.exp(-tau * gap**2 * t))


def checked_evolve(
    rho0: np.ndarray,
    h: np.ndarray,
    tau: float,
    grid: TimeGrid,
    observables,
    dims=None,
) -> Trajectory:
    """evolve_series plus the runtime invariant checks every scenario applies."""
    obs = list(observables) + [("energy", h)]
    traj = evolve_series(rho0, h, tau, grid, obs, dims=dims)
    e = traj["energy"]
    if np.max(np.abs(e - e[0])) > 1e-9:
        raise RuntimeError(
            f"energy conservation violated: max drift {np.max(np.abs(e - e[0])):.3e}"
        )
    pur = traj["purity"]
    if pur.max() > 1 + 1e-10 or pur.min() <= 0:
        raise RuntimeError(f"purity left (0, 1]: range [{pur.min()}, {pur.max()}]")
    if tau == 0.0 and np.max(np.abs(pur - pur[0])) > 1e-10:
        raise RuntimeError("purity drifted under unitary evolution")
    return traj


# ---------------------------------------------------------------------------
# scenario runners

def run_fig1(
    dim: int,
    n_samples: int,
    seed: int,
    tau: float,
    omega: float = 0.5,
    cross_check: int = 100,
) -> CsvTable:
    """Mixing distance vs saturated entropy for random pure states.

    The final entropy uses the exact decohered limit 1 - sum |c_i|^4; a
    subset of samples is cross-checked against time stepping to saturation.
    """
    if dim < 2:
        raise ValueError("dim must be at least 2")
    rng = np.random.default_rng(seed)
    z = rng.standard_normal((n_samples, dim)) + 1j * rng.standard_normal((n_samples, dim))
    states = z / np.linalg.norm(z, axis=1, keepdims=True)
    probs = states.real**2 + states.imag**2
    d = np.sqrt(np.sum((np.sqrt(probs) - 1.0 / math.sqrt(dim)) ** 2, axis=1))
    s_final = 1.0 - np.sum(probs**2, axis=1)

    energies = (np.arange(dim) + 0.5) * omega
    spectrum = eig_hermitian(np.diag(energies))
    if tau > 0 and cross_check > 0:
        gap = smallest_nonzero_gap(energies)
        t_sat = 9 * math.log(10) / (tau * gap**2)
        for i in range(min(cross_check, n_samples)):
            rho_t = propagate_exact(pure_density(states[i]), spectrum, tau, t_sat)
            if abs(linear_entropy(rho_t) - s_final[i]) > 1e-6:
                raise RuntimeError(f"fig1 cross-check failed for sample {i}")

    table = CsvTable(["D", "S_final"])
    for di, si in zip(d, s_final):
        table.add(di, si)
    return table


def run_phase_single(
    tau: float, spec: SystemSpec, x0: float, p0: float, grid: TimeGrid
) -> CsvTable:
    """Full single-oscillator trajectory: phase variables, spreads, entropy."""
    if spec.kind != SINGLE:
        raise ValueError("phase_single needs a single_oscillator spec")
    osc = spec.oscillators[0]
    x = position_op(osc)
    p = momentum_op(osc)
    rho0 = pure_density(initial_state(spec, x0, p0))
    h = build_hamiltonian(spec)
    traj = checked_evolve(
        rho0, h, tau, grid,
        [("x", x), ("p", p), ("x2", x @ x), ("p2", p @ p)],
    )
    from .evolution import uncertainty_product

    sig = uncertainty_product(traj["x"], traj["x2"], traj["p"], traj["p2"], osc.hbar)
    table = CsvTable(["tau", "t", "x", "p", "x2", "p2", "sigma_product", "S"])
    for k, t in enumerate(traj.times):
        table.add(tau, t, traj["x"][k], traj["p"][k], traj["x2"][k], traj["p2"][k],
                  sig[k], traj["S_total"][k])
    return table


def run_entropy_vs_x0(
    tau: float, spec: SystemSpec, x0_list, grid: TimeGrid
) -> CsvTable:
    if spec.kind != SINGLE:
        raise ValueError("entropy_vs_x0 needs a single_oscillator spec")
    h = build_hamiltonian(spec)
    table = CsvTable(["x0", "t", "S"])
    for x0 in x0_list:
        rho0 = pure_density(initial_state(spec, x0, 0.0))
        traj = checked_evolve(rho0, h, tau, grid, [])
        for k, t in enumerate(traj.times):
            table.add(x0, t, traj["S_total"][k])
    return table


def run_phase_multi(
    variant: str,
    tau: float,
    grid: TimeGrid,
    x0: float = 0.5,
    p0: float = 0.0,
    physics: "cfg.MultiPhysicsConfig | None" = None,
) -> CsvTable:
    """Traced-out oscillator phase variables for one composite variant."""
    if variant not in MULTI_VARIANTS:
        raise ValueError(f"variant must be one of {MULTI_VARIANTS}, got {variant!r}")
    spec = variant_spec(variant, physics)
    h = build_hamiltonian(spec)
    obs = oscillator_observables(spec)
    rho0 = pure_density(initial_state(spec, x0, p0))
    traj = checked_evolve(
        rho0, h, tau, grid, [("x", obs["x"]), ("p", obs["p"])], dims=spec.factor_shape
    )
    table = CsvTable(["t", "x_osc", "p_osc"])
    for k, t in enumerate(traj.times):
        table.add(t, traj["x"][k], traj["p"][k])
    return table


def _oscillator_energy_ops(spec: SystemSpec, h: np.ndarray) -> np.ndarray:
    """The non-oscillator part of H, for <h_o> = <H> - <rest>."""
    if spec.kind == SINGLE:
        return np.zeros_like(h)
    if spec.kind == TRIPARTITE:
        terms = tripartite_terms(spec)
        return terms["h_s"] + terms["h_g1"] + terms["h_g2"] + terms["h_lam"]
    # coupled oscillators: everything except oscillator 1's own Hamiltonian
    o1 = spec.oscillators[0]
    from .model import build_single_oscillator_h

    i2 = np.eye(spec.oscillators[1].fock_dim, dtype=complex)
    h1 = tensor_product(build_single_oscillator_h(o1), i2)
    return h - h1


def run_energy_entropy_sweep(
    variants,
    tau: float,
    x0_values,
    grid: TimeGrid,
    physics: "cfg.MultiPhysicsConfig | None" = None,
) -> CsvTable:
    """Final oscillator energy (subtraction formula) and entropy per x0."""
    table = CsvTable(["variant", "x0", "E_osc_final", "S_final", "status"])
    for variant in variants:
        spec = variant_spec(variant, physics)
        h = build_hamiltonian(spec)
        rest = _oscillator_energy_ops(spec, h)
        energies = eig_hermitian(h).energies
        status = "saturated" if saturation_factor(energies, tau, grid.t_max) < 1e-3 else "unsaturated"
        for x0 in x0_values:
            rho0 = pure_density(initial_state(spec, x0, 0.0))
            dims = spec.factor_shape if len(spec.factor_shape) > 1 else None
            traj = checked_evolve(rho0, h, tau, grid, [("rest", rest)], dims=dims)
            e_osc = traj["energy"][-1] - traj["rest"][-1]
            s_final = traj["S_factor0"][-1] if dims else traj["S_total"][-1]
            table.add(variant, x0, e_osc, s_final, status)
    return table


def run_entanglement_suite(
    variants,
    taus,
    grid: TimeGrid,
    x0: float = 0.5,
    physics: "cfg.MultiPhysicsConfig | None" = None,
) -> CsvTable:
    """Oscillator and total-system linear entropy over time, per variant and tau."""
    table = CsvTable(["variant", "tau", "t", "S_osc", "S_total"])
    for variant in variants:
        spec = variant_spec(variant, physics)
        h = build_hamiltonian(spec)
        rho0 = pure_density(initial_state(spec, x0, 0.0))
        dims = spec.factor_shape if len(spec.factor_shape) > 1 else None
        for tau in taus:
            traj = checked_evolve(rho0, h, tau, grid, [], dims=dims)
            s_osc = traj["S_factor0"] if dims else traj["S_total"]
            for k, t in enumerate(traj.times):
                table.add(variant, tau, t, s_osc[k], traj["S_total"][k])
    return table


# ---------------------------------------------------------------------------
# dispatch

def run_scenario(conf: "cfg.ScenarioConfig") -> tuple[CsvTable, dict]:
    """Run a parsed scenario config; returns the table and manifest extras."""
    saturation: dict[str, str] = {}

    if conf.scenario == "fig1":
        table = run_fig1(conf.dim, conf.n_samples, conf.seed, conf.tau, conf.omega)
    elif conf.scenario == "phase_single":
        spec = SystemSpec(kind=SINGLE, oscillators=(conf.oscillator.to_params(),))
        grid = conf.grid.to_grid()
        parts = [run_phase_single(tau, spec, conf.x0, conf.p0, grid) for tau in conf.taus]
        table = CsvTable(parts[0].header)
        for part in parts:
            table.rows.extend(part.rows)
        energies = eig_hermitian(build_hamiltonian(spec)).energies
        for tau in conf.taus:
            sat = saturation_factor(energies, tau, grid.t_max)
            saturation[f"tau={tau}"] = "saturated" if sat < 1e-3 else "unsaturated"
    elif conf.scenario == "entropy_vs_x0":
        spec = SystemSpec(kind=SINGLE, oscillators=(conf.oscillator.to_params(),))
        table = run_entropy_vs_x0(conf.tau, spec, conf.x0_list, conf.grid.to_grid())
    elif conf.scenario == "phase_multi":
        grid = conf.grid.to_grid()
        table = CsvTable(["variant", "tau", "t", "x_osc", "p_osc"])
        for variant in conf.variants:
            for tau in conf.taus:
                part = run_phase_multi(variant, tau, grid, conf.x0, conf.p0, conf.physics)
                for row in part.rows:
                    table.add(variant, tau, *row)
    elif conf.scenario == "energy_entropy_sweep":
        x0_values = np.linspace(conf.x0_min, conf.x0_max, conf.x0_count)
        table = run_energy_entropy_sweep(
            conf.variants, conf.tau, x0_values, conf.grid.to_grid(), conf.physics
        )
        for row in table.rows:
            saturation[row[0]] = row[4]
    elif conf.scenario == "entanglement_suite":
        table = run_entanglement_suite(
            conf.variants, conf.taus, conf.grid.to_grid(), conf.x0, conf.physics
        )
    else:  # pragma: no cover - config layer rejects unknown scenarios
        raise ValueError(f"unknown scenario {conf.scenario!r}")

    return table, {"saturation": saturation}

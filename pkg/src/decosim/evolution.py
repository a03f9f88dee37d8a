"""Time evolution under the decoherence-modified von Neumann equation.

    drho/dt = -i [H, rho] - (tau/2) [H, [H, rho]]

The exact path diagonalizes H once and applies per-entry phase and decay
factors in the eigenbasis:

    rho~_mn(t) = rho~_mn(0) * exp(-i (E_m - E_n) t) * exp(-tau (E_m - E_n)^2 t / 2)

A fixed-step RK4 integrator of the right-hand side serves as the
independent oracle.  Closed-form single-oscillator observables are also
provided for cross-checking the matrix path.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Sequence

import numpy as np

from .linalg import Spectrum, eig_hermitian, is_hermitian
from .model import OscillatorParams
from .states import check_state, linear_entropy, purity, subsystem_linear_entropy


@dataclass(frozen=True)
class TimeGrid:
    t_max: float
    steps: int

    def __post_init__(self):
        if self.t_max <= 0 or self.steps < 1:
            raise ValueError("need t_max > 0 and steps >= 1")

    @property
    def times(self) -> np.ndarray:
        return np.linspace(0.0, self.t_max, self.steps + 1)


@dataclass
class Trajectory:
    times: np.ndarray
    series: dict[str, np.ndarray] = field(default_factory=dict)

    def __getitem__(self, label: str) -> np.ndarray:
        return self.series[label]


def _check_dims(rho0: np.ndarray, dim: int):
    if rho0.shape != (dim, dim):
        raise ValueError(f"state dim {rho0.shape} does not match operator dim {dim}")


def decay_phase_factors(energies: np.ndarray, tau: float, t: float) -> np.ndarray:
    gaps = energies[:, None] - energies[None, :]
    return np.exp((-1j * t) * gaps - (tau * t / 2) * gaps**2)


def propagate_exact(rho0: np.ndarray, spectrum: Spectrum, tau: float, t: float) -> np.ndarray:
    """Exact solution at time t, conjugated back out of the eigenbasis."""
    rho0 = np.asarray(rho0, dtype=complex)
    _check_dims(rho0, spectrum.dim)
    if t < 0:
        raise ValueError("t must be nonnegative")
    if tau < 0:
        raise ValueError("tau must be nonnegative")
    v = spectrum.vectors
    rho_e = v.conj().T @ rho0 @ v
    rho_e *= decay_phase_factors(spectrum.energies, tau, t)
    return v @ rho_e @ v.conj().T


def evolve_series(
    rho0: np.ndarray,
    h: np.ndarray,
    tau: float,
    grid: TimeGrid,
    observables: Sequence[tuple[str, np.ndarray]] = (),
    dims: Sequence[int] | None = None,
) -> Trajectory:
    """Propagate across the grid, recording Re Tr(O rho) per observable.

    Always records purity and total linear entropy; with a multi-factor
    ``dims`` also the linear entropy of each factor's reduced state
    (labels ``S_factor{i}``).
    """
    rho0 = np.asarray(rho0, dtype=complex)
    if not is_hermitian(h):
        raise ValueError("Hamiltonian is not Hermitian")
    spectrum = eig_hermitian(h)
    _check_dims(rho0, spectrum.dim)
    times = grid.times
    labels = [label for label, _ in observables]
    ops = [np.asarray(op, dtype=complex) for _, op in observables]
    for label, op in zip(labels, ops):
        _check_dims(op, spectrum.dim)

    n_factors = len(dims) if dims is not None else 1
    out = {label: np.empty(times.size) for label in labels}
    out["purity"] = np.empty(times.size)
    out["S_total"] = np.empty(times.size)
    for i in range(n_factors if n_factors > 1 else 0):
        out[f"S_factor{i}"] = np.empty(times.size)

    v = spectrum.vectors
    rho_e0 = v.conj().T @ rho0 @ v
    for k, t in enumerate(times):
        rho_e = rho_e0 * decay_phase_factors(spectrum.energies, tau, t)
        rho = v @ rho_e @ v.conj().T
        for label, op in zip(labels, ops):
            val = np.trace(op @ rho)
            if abs(val.imag) > 1e-9 * max(1.0, abs(val)):
                raise ArithmeticError(
                    f"observable {label!r} has imaginary residue {val.imag} at t={t}"
                )
            out[label][k] = val.real
        out["purity"][k] = purity(rho)
        out["S_total"][k] = 1.0 - out["purity"][k]
        if n_factors > 1:
            for i in range(n_factors):
                out[f"S_factor{i}"][k] = subsystem_linear_entropy(rho, dims, i)
    return Trajectory(times=times, series=out)


def _rhs(h: np.ndarray, rho: np.ndarray, tau: float) -> np.ndarray:
    # For Hermitian rho: [H, rho] = A - A^dag with A = H rho, and
    # [H, [H, rho]] = B + B^dag with B = H (A - A^dag).
    a = h @ rho
    c1 = a - a.conj().T
    b = h @ c1
    c2 = b + b.conj().T
    return -1j * c1 - (tau / 2) * c2


def evolve_rk4(rho0: np.ndarray, h: np.ndarray, tau: float, grid: TimeGrid) -> np.ndarray:
    """Classical fixed-step RK4 integration; the oracle for propagate_exact."""
    rho = np.asarray(rho0, dtype=complex).copy()
    h = np.asarray(h, dtype=complex)
    _check_dims(rho, h.shape[0])
    dt = grid.t_max / grid.steps
    for _ in range(grid.steps):
        k1 = _rhs(h, rho, tau)
        k2 = _rhs(h, rho + 0.5 * dt * k1, tau)
        k3 = _rhs(h, rho + 0.5 * dt * k2, tau)
        k4 = _rhs(h, rho + dt * k3, tau)
        rho += (dt / 6) * (k1 + 2 * k2 + 2 * k3 + k4)
    drift = abs(np.trace(rho).real - 1.0)
    if drift > 1e-6:
        raise ArithmeticError(
            f"RK4 trace drift {drift:.3e} at t={grid.t_max} (dt={dt}); reduce the step"
        )
    return rho


# ---------------------------------------------------------------------------
# closed-form single-oscillator observables

def _single_gap_sum(amps: np.ndarray) -> complex:
    # sum_l c_l^* c_{l+1} sqrt(l+1): the <a> matrix element sum
    ls = np.arange(amps.size - 1)
    return complex(np.sum(np.conj(amps[:-1]) * amps[1:] * np.sqrt(ls + 1)))


def _double_gap_sum(amps: np.ndarray) -> complex:
    # sum_n c_{n+2} c_n^* sqrt((n+1)(n+2)): the <a^2> matrix element sum
    ns = np.arange(amps.size - 2)
    return complex(np.sum(amps[2:] * np.conj(amps[:-2]) * np.sqrt((ns + 1) * (ns + 2))))


def analytic_x(t: float, amps: np.ndarray, p: OscillatorParams, tau: float) -> float:
    """<x>(t) = sqrt(hbar/2mw) * e^{-tau (hbar w)^2 t / 2} * 2 Re(e^{-i hbar w t} S1)."""
    amps = check_state(amps)
    hw = p.hbar * p.omega
    env = np.exp(-tau * hw**2 * t / 2)
    s1 = _single_gap_sum(amps)
    return float(np.sqrt(p.hbar / (2 * p.mass * p.omega)) * env * 2 * (np.exp(-1j * hw * t) * s1).real)


def analytic_p(t: float, amps: np.ndarray, p: OscillatorParams, tau: float) -> float:
    amps = check_state(amps)
    hw = p.hbar * p.omega
    env = np.exp(-tau * hw**2 * t / 2)
    s1 = _single_gap_sum(amps)
    return float(np.sqrt(p.hbar * p.mass * p.omega / 2) * env * 2 * (np.exp(-1j * hw * t) * s1).imag)


def _x2_cross(t: float, amps: np.ndarray, p: OscillatorParams, tau: float) -> float:
    hw = p.hbar * p.omega
    env = np.exp(-2 * tau * hw**2 * t)
    return float(env * 2 * (np.exp(-2j * hw * t) * _double_gap_sum(amps)).real)


def _diag_sum(amps: np.ndarray) -> float:
    ns = np.arange(amps.size)
    return float(np.sum((2 * ns + 1) * np.abs(amps) ** 2))


def analytic_x2(t: float, amps: np.ndarray, p: OscillatorParams, tau: float) -> float:
    amps = check_state(amps)
    if np.max(np.abs(amps[-2:])) > 0:
        raise ValueError("state support too close to the truncation boundary")
    return p.hbar / (2 * p.mass * p.omega) * (_diag_sum(amps) + _x2_cross(t, amps, p, tau))


def analytic_p2(t: float, amps: np.ndarray, p: OscillatorParams, tau: float) -> float:
    amps = check_state(amps)
    if np.max(np.abs(amps[-2:])) > 0:
        raise ValueError("state support too close to the truncation boundary")
    return p.hbar * p.mass * p.omega / 2 * (_diag_sum(amps) - _x2_cross(t, amps, p, tau))


def limit_x2(amps: np.ndarray, p: OscillatorParams) -> float:
    """t -> infinity limit (hbar/2mw) sum_n (2n+1)|c_n|^2."""
    return p.hbar / (2 * p.mass * p.omega) * _diag_sum(check_state(amps))


def limit_p2(amps: np.ndarray, p: OscillatorParams) -> float:
    return p.hbar * p.mass * p.omega / 2 * _diag_sum(check_state(amps))


def analytic_entropy_single(t: float, amps: np.ndarray, p: OscillatorParams, tau: float) -> float:
    """S(t) = 1 - sum_{m,n} |c_m|^2 |c_n|^2 exp(-tau (E_n - E_m)^2 t)."""
    amps = check_state(amps)
    probs = np.abs(amps) ** 2
    energies = (np.arange(amps.size) + 0.5) * p.hbar * p.omega
    gaps = energies[:, None] - energies[None, :]
    return float(1.0 - np.sum(np.outer(probs, probs) * np.exp(-tau * gaps**2 * t)))


def uncertainty_product(
    x: np.ndarray, x2: np.ndarray, p: np.ndarray, p2: np.ndarray, hbar: float = 1.0
) -> np.ndarray:
    """sigma_x * sigma_p series; raises on variances below -1e-10."""
    var_x = np.asarray(x2) - np.asarray(x) ** 2
    var_p = np.asarray(p2) - np.asarray(p) ** 2
    if var_x.min() < -1e-10 or var_p.min() < -1e-10:
        raise ArithmeticError("negative variance beyond tolerance")
    return np.sqrt(np.clip(var_x, 0, None) * np.clip(var_p, 0, None))

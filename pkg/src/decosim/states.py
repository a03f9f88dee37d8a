"""State construction and scalar state measures."""

from __future__ import annotations

import math

import numpy as np

from .linalg import as_square, partial_trace
from .model import SPIN_UP, OscillatorParams, momentum_op, position_op

NORM_ATOL = 1e-12


def check_state(v: np.ndarray) -> np.ndarray:
    v = np.asarray(v, dtype=complex).reshape(-1)
    if abs(np.linalg.norm(v) - 1.0) > NORM_ATOL:
        raise ValueError(f"state is not normalized: |v| = {np.linalg.norm(v)}")
    return v


def check_density(rho: np.ndarray, herm_atol=1e-10, trace_atol=1e-10, eig_floor=-1e-8) -> np.ndarray:
    """Validate Hermiticity, unit trace and (approximate) positivity."""
    rho = as_square(rho)
    if np.linalg.norm(rho - rho.conj().T) > herm_atol * max(1.0, np.linalg.norm(rho)):
        raise ValueError("density matrix is not Hermitian")
    tr = np.trace(rho)
    if abs(tr - 1.0) > trace_atol:
        raise ValueError(f"density matrix trace is {tr}, expected 1")
    w = np.linalg.eigvalsh((rho + rho.conj().T) / 2)
    if w.min() < eig_floor:
        raise ValueError(f"density matrix has eigenvalue {w.min()} below floor")
    return rho


def basis_state(dim: int, n: int) -> np.ndarray:
    v = np.zeros(dim, dtype=complex)
    v[n] = 1.0
    return v


def pure_density(v: np.ndarray) -> np.ndarray:
    """rho = |v><v| for a normalized state vector."""
    v = check_state(v)
    return np.outer(v, v.conj())


def coherent_two_level(x0: float, p0: float, p: OscillatorParams) -> np.ndarray:
    """Two-level surrogate coherent state cos(t/2)|0> + sin(t/2) e^{i phi}|1>.

    (theta, phi) are chosen so that the constructed state has <x>(0) = x0
    and <p>(0) = p0 exactly.
    """
    a = x0 * math.sqrt(2 * p.mass * p.omega / p.hbar)
    b = p0 * math.sqrt(2 / (p.hbar * p.mass * p.omega))
    r = math.hypot(a, b)
    if r > 1 + 1e-12:
        raise ValueError(f"(x0, p0) = ({x0}, {p0}) is outside the two-level Bloch sphere")
    theta = math.asin(min(r, 1.0))
    phi = math.atan2(b, a) if r > 0 else 0.0
    v = np.zeros(p.fock_dim, dtype=complex)
    v[0] = math.cos(theta / 2)
    v[1] = math.sin(theta / 2) * np.exp(1j * phi)
    return v


def expectation(op: np.ndarray, rho: np.ndarray) -> float:
    val = np.trace(op @ rho)
    if abs(val.imag) > 1e-9 * max(1.0, abs(val)):
        raise ArithmeticError(f"expectation has imaginary residue {val.imag}")
    return float(val.real)


def phase_point(v: np.ndarray, p: OscillatorParams) -> tuple[float, float]:
    rho = pure_density(v)
    return expectation(position_op(p), rho), expectation(momentum_op(p), rho)


def random_pure_state(dim: int, rng: np.random.Generator | int) -> np.ndarray:
    """Haar-uniform pure state: normalized complex standard normals."""
    if not isinstance(rng, np.random.Generator):
        rng = np.random.default_rng(rng)
    z = rng.standard_normal(dim) + 1j * rng.standard_normal(dim)
    return z / np.linalg.norm(z)


def with_spins_up(osc: np.ndarray) -> np.ndarray:
    """osc (x) |up> (x) |up> in the [N, 2, 2] factor order."""
    return np.kron(np.kron(np.asarray(osc, dtype=complex), SPIN_UP), SPIN_UP)


def purity(rho: np.ndarray) -> float:
    rho = as_square(rho)
    return float(np.trace(rho @ rho).real)


def linear_entropy(rho: np.ndarray) -> float:
    return 1.0 - purity(rho)


def von_neumann_entropy(rho: np.ndarray, floor: float = 1e-14) -> float:
    """-Tr(rho log rho); supplementary observable, not used in acceptance."""
    w = np.linalg.eigvalsh(as_square(rho))
    w = w[w > floor]
    return float(-np.sum(w * np.log(w)))


def subsystem_linear_entropy(rho: np.ndarray, dims, factor: int) -> float:
    return linear_entropy(partial_trace(rho, dims, [factor]))


def distance_to_uniform(v: np.ndarray) -> float:
    """D = sqrt(sum_i (|c_i| - 1/sqrt(N))^2); zero iff all magnitudes equal."""
    v = check_state(v)
    target = 1.0 / math.sqrt(v.size)
    return float(np.sqrt(np.sum((np.abs(v) - target) ** 2)))


def decohered_purity(v: np.ndarray) -> float:
    """Late-time purity when all energy coherences have decayed: sum |c_n|^4."""
    v = check_state(v)
    # (re^2 + im^2)^2 avoids the abs() square root and its round-off
    return float(np.sum((v.real**2 + v.imag**2) ** 2))

"""Physical operators and Hamiltonians.

Truncated Fock-space ladder/position/momentum operators, spin-1/2
operators, and the three system Hamiltonians (single oscillator,
oscillator + two spins, two coupled oscillators).  Factor order for
composite systems is oscillator first, then the spins (or the second
oscillator), with the left factor as the slow Kronecker index.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from .linalg import adjoint, tensor_many, tensor_product

SINGLE = "single_oscillator"
TRIPARTITE = "tripartite"
COUPLED_OSC = "coupled_oscillators"


@dataclass(frozen=True)
class OscillatorParams:
    mass: float
    omega: float
    k: float
    hbar: float = 1.0
    fock_dim: int = 16

    def __post_init__(self):
        if self.mass <= 0 or self.omega <= 0:
            raise ValueError("mass and omega must be positive")
        if self.fock_dim < 2:
            raise ValueError("fock_dim must be at least 2")
        if abs(self.omega - math.sqrt(self.k / self.mass)) > 1e-12 * max(1.0, self.omega):
            raise ValueError(
                f"inconsistent parameters: omega={self.omega} but sqrt(k/m)="
                f"{math.sqrt(self.k / self.mass)}"
            )

    @classmethod
    def create(
        cls,
        mass: float,
        k: float | None = None,
        omega: float | None = None,
        hbar: float = 1.0,
        fock_dim: int = 16,
    ) -> "OscillatorParams":
        """Build params deriving whichever of k/omega is missing."""
        if omega is None and k is None:
            raise ValueError("need at least one of k, omega")
        if omega is None:
            omega = math.sqrt(k / mass)
        if k is None:
            k = mass * omega**2
        return cls(mass=mass, omega=omega, k=k, hbar=hbar, fock_dim=fock_dim)


@dataclass(frozen=True)
class SpinParams:
    splitting: float  # level splitting omega_s, hbar = 1

    def __post_init__(self):
        if not math.isfinite(self.splitting):
            raise ValueError("spin splitting must be finite")


@dataclass(frozen=True)
class Couplings:
    g1: float = 0.0
    g2: float = 0.0
    lam: float = 0.0

    def __post_init__(self):
        for name in ("g1", "g2", "lam"):
            if not math.isfinite(getattr(self, name)):
                raise ValueError(f"coupling {name} must be finite")


@dataclass(frozen=True)
class SystemSpec:
    kind: str
    oscillators: tuple[OscillatorParams, ...]
    spins: tuple[SpinParams, ...] = ()
    couplings: Couplings = field(default_factory=Couplings)

    def __post_init__(self):
        if self.kind == SINGLE:
            if len(self.oscillators) != 1 or self.spins:
                raise ValueError("single_oscillator needs exactly one oscillator, no spins")
        elif self.kind == TRIPARTITE:
            if len(self.oscillators) != 1 or len(self.spins) != 2:
                raise ValueError("tripartite needs one oscillator and two spins")
            if self.spins[0].splitting != self.spins[1].splitting:
                raise ValueError("the two spin splittings must be equal")
        elif self.kind == COUPLED_OSC:
            if len(self.oscillators) != 2 or self.spins:
                raise ValueError("coupled_oscillators needs exactly two oscillators, no spins")
        else:
            raise ValueError(f"unknown system kind {self.kind!r}")

    @property
    def factor_shape(self) -> tuple[int, ...]:
        if self.kind == SINGLE:
            return (self.oscillators[0].fock_dim,)
        if self.kind == TRIPARTITE:
            return (self.oscillators[0].fock_dim, 2, 2)
        return (self.oscillators[0].fock_dim, self.oscillators[1].fock_dim)

    @property
    def dim(self) -> int:
        return int(np.prod(self.factor_shape))


# ---------------------------------------------------------------------------
# oscillator operators

def lowering_op(fock_dim: int) -> np.ndarray:
    """a|n> = sqrt(n)|n-1> on the truncated Fock space."""
    if fock_dim < 2:
        raise ValueError("fock_dim must be at least 2")
    a = np.zeros((fock_dim, fock_dim), dtype=complex)
    ns = np.arange(1, fock_dim)
    a[ns - 1, ns] = np.sqrt(ns)
    return a


def raising_op(fock_dim: int) -> np.ndarray:
    return adjoint(lowering_op(fock_dim))


def number_op(fock_dim: int) -> np.ndarray:
    return np.diag(np.arange(fock_dim).astype(complex))


def position_op(p: OscillatorParams) -> np.ndarray:
    a = lowering_op(p.fock_dim)
    return math.sqrt(p.hbar / (2 * p.mass * p.omega)) * (a + adjoint(a))


def momentum_op(p: OscillatorParams) -> np.ndarray:
    a = lowering_op(p.fock_dim)
    return 1j * math.sqrt(p.hbar * p.mass * p.omega / 2) * (adjoint(a) - a)


def build_single_oscillator_h(p: OscillatorParams) -> np.ndarray:
    """H = hbar*omega*(a^dag a + I/2); diagonal with E_n = (n + 1/2) hbar omega."""
    n = number_op(p.fock_dim)
    return p.hbar * p.omega * (n + 0.5 * np.eye(p.fock_dim))


# ---------------------------------------------------------------------------
# spin operators; up = index 0, so sigma_z |up> = +|up>

def pauli(axis: str) -> np.ndarray:
    if axis == "x":
        return np.array([[0, 1], [1, 0]], dtype=complex)
    if axis == "y":
        return np.array([[0, -1j], [1j, 0]], dtype=complex)
    if axis == "z":
        return np.array([[1, 0], [0, -1]], dtype=complex)
    raise ValueError(f"unknown Pauli axis {axis!r}")


def sigma_plus() -> np.ndarray:
    return 0.5 * (pauli("x") + 1j * pauli("y"))


def sigma_minus() -> np.ndarray:
    return 0.5 * (pauli("x") - 1j * pauli("y"))


SPIN_UP = np.array([1.0, 0.0], dtype=complex)
SPIN_DOWN = np.array([0.0, 1.0], dtype=complex)


# ---------------------------------------------------------------------------
# composite Hamiltonians

def tripartite_terms(spec: SystemSpec) -> dict[str, np.ndarray]:
    """The five Hamiltonian terms of the oscillator + two-spins system."""
    if spec.kind != TRIPARTITE:
        raise ValueError(f"expected a tripartite spec, got {spec.kind!r}")
    osc = spec.oscillators[0]
    n = osc.fock_dim
    ws = spec.spins[0].splitting
    c = spec.couplings
    i_o = np.eye(n, dtype=complex)
    i_s = np.eye(2, dtype=complex)
    a = lowering_op(n)
    ad = adjoint(a)
    sz = pauli("z")
    sp = sigma_plus()
    sm = sigma_minus()

    h_o = tensor_many([build_single_oscillator_h(osc), i_s, i_s])
    h_s = tensor_product(i_o, (ws / 2) * (tensor_product(sz, i_s) + tensor_product(i_s, sz)))
    h_g1 = (c.g1 / 2) * tensor_product(
        tensor_product(a, sp) + tensor_product(ad, sm), i_s
    )
    h_g2 = (c.g2 / 2) * (
        tensor_many([a, i_s, sp]) + tensor_many([ad, i_s, sm])
    )
    h_lam = (c.lam / 2) * tensor_product(
        i_o, tensor_product(sp, sm) + tensor_product(sm, sp)
    )
    return {"h_o": h_o, "h_s": h_s, "h_g1": h_g1, "h_g2": h_g2, "h_lam": h_lam}


def build_tripartite_h(spec: SystemSpec) -> np.ndarray:
    return sum(tripartite_terms(spec).values())


def build_coupled_oscillators_h(spec: SystemSpec) -> np.ndarray:
    """Two oscillators with a (lam/2)*(x1 (x) I - I (x) x2)^2 coupling."""
    if spec.kind != COUPLED_OSC:
        raise ValueError(f"expected a coupled_oscillators spec, got {spec.kind!r}")
    o1, o2 = spec.oscillators
    i1 = np.eye(o1.fock_dim, dtype=complex)
    i2 = np.eye(o2.fock_dim, dtype=complex)
    h1 = tensor_product(build_single_oscillator_h(o1), i2)
    h2 = tensor_product(i1, build_single_oscillator_h(o2))
    dx = tensor_product(position_op(o1), i2) - tensor_product(i1, position_op(o2))
    return h1 + h2 + (spec.couplings.lam / 2) * (dx @ dx)


def build_hamiltonian(spec: SystemSpec) -> np.ndarray:
    if spec.kind == SINGLE:
        return build_single_oscillator_h(spec.oscillators[0])
    if spec.kind == TRIPARTITE:
        return build_tripartite_h(spec)
    return build_coupled_oscillators_h(spec)


def total_excitation_op(spec: SystemSpec) -> np.ndarray:
    """Oscillator quanta plus spin excitations; commutes with the tripartite H."""
    if spec.kind != TRIPARTITE:
        raise ValueError(f"expected a tripartite spec, got {spec.kind!r}")
    n = spec.oscillators[0].fock_dim
    i_o = np.eye(n, dtype=complex)
    i_s = np.eye(2, dtype=complex)
    n_spin = (pauli("z") + i_s) / 2
    return (
        tensor_many([number_op(n), i_s, i_s])
        + tensor_many([i_o, n_spin, i_s])
        + tensor_many([i_o, i_s, n_spin])
    )

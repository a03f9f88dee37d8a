import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from decosim.linalg import (
    adjoint,
    eig_hermitian,
    frobenius_distance,
    partial_trace,
    tensor_product,
    trace,
)
from decosim.model import build_single_oscillator_h, OscillatorParams, pauli


def random_complex(rng, n):
    return rng.standard_normal((n, n)) + 1j * rng.standard_normal((n, n))


def test_tensor_identity():
    assert np.array_equal(tensor_product(np.eye(2), np.eye(2)), np.eye(4))


def test_tensor_sigma_z_pair():
    # hand-expanded 4x4 Kronecker product
    expected = np.diag([1.0, -1.0, -1.0, 1.0])
    assert np.array_equal(tensor_product(pauli("z"), pauli("z")), expected)


@given(st.integers(0, 2**32 - 1))
@settings(max_examples=20, deadline=None)
def test_tensor_mixed_product(seed):
    rng = np.random.default_rng(seed)
    a, b, c, d = (random_complex(rng, 2) for _ in range(4))
    lhs = tensor_product(a, b) @ tensor_product(c, d)
    rhs = tensor_product(a @ c, b @ d)
    assert np.allclose(lhs, rhs, atol=1e-12)


def test_tensor_associative():
    rng = np.random.default_rng(7)
    a, b, c = random_complex(rng, 2), random_complex(rng, 3), random_complex(rng, 2)
    left = tensor_product(tensor_product(a, b), c)
    right = tensor_product(a, tensor_product(b, c))
    # the two groupings multiply scalars in different orders; equal to the ulp
    assert np.allclose(left, right, rtol=1e-15, atol=0)


def test_adjoint():
    rng = np.random.default_rng(1)
    a = random_complex(rng, 4)
    assert np.array_equal(adjoint(np.eye(3)), np.eye(3))
    assert np.array_equal(adjoint(pauli("y")), pauli("y"))
    assert np.array_equal(adjoint(adjoint(a)), a)


def test_trace():
    assert trace(np.eye(4)) == 4
    rng = np.random.default_rng(2)
    v = rng.standard_normal(5) + 1j * rng.standard_normal(5)
    v /= np.linalg.norm(v)
    assert trace(np.outer(v, v.conj())) == pytest.approx(1.0)
    a, b = random_complex(rng, 3), random_complex(rng, 3)
    assert trace(a @ b) == pytest.approx(trace(b @ a))


def test_partial_trace_product_state():
    rng = np.random.default_rng(3)
    va = rng.standard_normal(3) + 1j * rng.standard_normal(3)
    va /= np.linalg.norm(va)
    vb = rng.standard_normal(2) + 1j * rng.standard_normal(2)
    vb /= np.linalg.norm(vb)
    rho_a = np.outer(va, va.conj())
    rho_b = np.outer(vb, vb.conj())
    out = partial_trace(tensor_product(rho_a, rho_b), [3, 2], keep=[0])
    assert np.allclose(out, rho_a, atol=1e-14)
    out_b = partial_trace(tensor_product(rho_a, rho_b), [3, 2], keep=[1])
    assert np.allclose(out_b, rho_b, atol=1e-14)


def test_partial_trace_bell_state():
    # (|00> + |11>)/sqrt(2): both reduced states are I/2, by direct basis sum
    bell = np.zeros(4, dtype=complex)
    bell[0] = bell[3] = 1 / np.sqrt(2)
    rho = np.outer(bell, bell.conj())
    for keep in ([0], [1]):
        assert np.allclose(partial_trace(rho, [2, 2], keep), np.eye(2) / 2, atol=1e-14)


def test_partial_trace_noop_and_trace_preserved():
    rng = np.random.default_rng(4)
    a = random_complex(rng, 12)
    assert np.array_equal(partial_trace(a, [12], keep=[0]), a)
    for keep in ([0], [1], [2], [0, 2], [0, 1, 2]):
        reduced = partial_trace(a, [3, 2, 2], keep)
        assert trace(reduced) == pytest.approx(trace(a), abs=1e-12)


def test_partial_trace_errors():
    a = np.eye(6, dtype=complex)
    with pytest.raises(ValueError):
        partial_trace(a, [2, 2], keep=[0])
    with pytest.raises(IndexError):
        partial_trace(a, [3, 2], keep=[2])
    with pytest.raises(IndexError):
        partial_trace(a, [3, 2], keep=[])


def test_eig_sigma_z():
    spec = eig_hermitian(pauli("z"))
    assert np.allclose(spec.energies, [-1.0, 1.0])


def test_eig_oscillator_levels():
    p = OscillatorParams.create(mass=4.0, k=1.0, fock_dim=8)
    spec = eig_hermitian(build_single_oscillator_h(p))
    assert np.allclose(spec.energies, (np.arange(8) + 0.5) * 0.5, atol=1e-14)


@given(st.integers(0, 2**32 - 1))
@settings(max_examples=15, deadline=None)
def test_eig_reconstruction(seed):
    rng = np.random.default_rng(seed)
    a = random_complex(rng, 6)
    a = a + a.conj().T
    spec = eig_hermitian(a)
    v = spec.vectors
    assert np.linalg.norm(v.conj().T @ v - np.eye(6)) < 1e-10
    rebuilt = v @ np.diag(spec.energies) @ v.conj().T
    assert np.linalg.norm(rebuilt - a) < 1e-9


def test_eig_rejects_non_hermitian():
    with pytest.raises(ValueError):
        eig_hermitian(np.array([[0, 1], [0, 0]], dtype=complex))


def test_frobenius_distance():
    rng = np.random.default_rng(5)
    a = random_complex(rng, 4)
    assert frobenius_distance(a, a) == 0.0
    assert frobenius_distance(np.eye(2), np.zeros((2, 2))) == pytest.approx(np.sqrt(2))
    b, c = random_complex(rng, 4), random_complex(rng, 4)
    assert frobenius_distance(a, c) <= frobenius_distance(a, b) + frobenius_distance(b, c) + 1e-12
    with pytest.raises(ValueError):
        frobenius_distance(np.eye(2), np.eye(3))

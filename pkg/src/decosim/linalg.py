"""Dense complex linear algebra kernel.

Everything here operates on plain square complex ndarrays.  Composite
Hilbert spaces are described by a tuple of factor dimensions whose product
equals the matrix dimension; the leftmost factor is the slow (outer)
Kronecker index.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

import numpy as np

HERMITICITY_RTOL = 1e-9


@dataclass(frozen=True)
class Spectrum:
    """Eigendecomposition of a Hermitian operator.

    ``energies`` are sorted ascending; column ``k`` of ``vectors`` is the
    eigenvector belonging to ``energies[k]``.
    """

    energies: np.ndarray
    vectors: np.ndarray

    @property
    def dim(self) -> int:
        return self.energies.shape[0]


def as_square(a: np.ndarray) -> np.ndarray:
    a = np.asarray(a, dtype=complex)
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        raise ValueError(f"expected a square matrix, got shape {a.shape}")
    if not (np.all(np.isfinite(a.real)) and np.all(np.isfinite(a.imag))):
        raise ValueError("matrix contains non-finite entries")
    return a


def tensor_product(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    """Kronecker product with ``a`` as the slow (outer) index."""
    return np.kron(as_square(a), as_square(b))


def tensor_many(factors: Iterable[np.ndarray]) -> np.ndarray:
    out = None
    for f in factors:
        out = f if out is None else np.kron(out, f)
    if out is None:
        raise ValueError("tensor_many needs at least one factor")
    return np.asarray(out, dtype=complex)


def adjoint(a: np.ndarray) -> np.ndarray:
    return np.conj(np.asarray(a)).T


def trace(a: np.ndarray) -> complex:
    return complex(np.trace(as_square(a)))


def frobenius_distance(a: np.ndarray, b: np.ndarray) -> float:
    a = np.asarray(a)
    b = np.asarray(b)
    if a.shape != b.shape:
        raise ValueError(f"shape mismatch: {a.shape} vs {b.shape}")
    return float(np.linalg.norm(a - b))


def is_hermitian(a: np.ndarray, rtol: float = HERMITICITY_RTOL) -> bool:
    a = as_square(a)
    scale = max(np.linalg.norm(a), 1e-300)
    return bool(np.linalg.norm(a - adjoint(a)) <= rtol * scale)


def check_factor_shape(dims: Sequence[int], total_dim: int) -> tuple[int, ...]:
    dims = tuple(int(d) for d in dims)
    if not dims or any(d < 1 for d in dims):
        raise ValueError(f"factor dims must be positive, got {dims}")
    if int(np.prod(dims)) != total_dim:
        raise ValueError(f"factor dims {dims} do not multiply to matrix dim {total_dim}")
    return dims


def partial_trace(a: np.ndarray, dims: Sequence[int], keep: Iterable[int]) -> np.ndarray:
    """Trace out all factors not listed in ``keep``.

    Kept factors retain their relative order.  The total trace is preserved.
    """
    a = as_square(a)
    dims = check_factor_shape(dims, a.shape[0])
    n = len(dims)
    keep_set = sorted(set(int(k) for k in keep))
    if not keep_set:
        raise IndexError("keep must name at least one factor")
    if keep_set[0] < 0 or keep_set[-1] >= n:
        raise IndexError(f"keep indices {keep_set} out of range for {n} factors")

    # einsum: row/col index per factor; traced factors share one letter.
    letters = "abcdefghijklmnopqrstuvwxyz"
    if 2 * n > len(letters):
        raise ValueError("too many tensor factors")
    row = list(letters[:n])
    col = list(letters[n : 2 * n])
    for i in range(n):
        if i not in keep_set:
            col[i] = row[i]
    out = "".join(row[i] for i in keep_set) + "".join(letters[n + i] for i in keep_set)
    sub = "".join(row) + "".join(col) + "->" + out
    t = a.reshape(dims + dims)
    kept_dim = int(np.prod([dims[i] for i in keep_set]))
    return np.einsum(sub, t).reshape(kept_dim, kept_dim)


def eig_hermitian(a: np.ndarray, rtol: float = HERMITICITY_RTOL) -> Spectrum:
    """Eigendecomposition of a Hermitian matrix, energies ascending."""
    a = as_square(a)
    if not is_hermitian(a, rtol):
        raise ValueError("matrix is not Hermitian within tolerance")
    try:
        energies, vectors = np.linalg.eigh(a)
    except np.linalg.LinAlgError as exc:  # pragma: no cover - LAPACK failure
        raise ArithmeticError(f"eigensolver failed to converge: {exc}") from exc
    return Spectrum(energies=energies, vectors=vectors.astype(complex))

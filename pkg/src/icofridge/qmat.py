"""Dense complex linear algebra for small multipartite systems.

Everything here operates on plain numpy arrays in row-major order. Matrices
stay dense; the largest objects in this package are a few thousand on a side,
so there is no point in sparse formats. Subsystem structure is carried
explicitly as a tuple of dimensions (e.g. ``(N, 2)`` for control x target)
and validated where it matters.
"""

from __future__ import annotations

from typing import Iterable, Sequence

import numpy as np

# Tolerance for algebraic identities (completeness sums, trace preservation,
# Hermiticity ...). Individual checks may override.
ALGEBRA_TOL = 1e-10


def dagger(m: np.ndarray) -> np.ndarray:
    """Conjugate transpose."""
    return m.conj().T


def kron(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    """Kronecker product of two matrices."""
    return np.kron(np.asarray(a), np.asarray(b))


def kron_all(mats: Iterable[np.ndarray]) -> np.ndarray:
    """Kronecker product of a sequence of matrices, left to right."""
    out = None
    for m in mats:
        out = np.asarray(m) if out is None else np.kron(out, m)
    if out is None:
        raise ValueError("empty Kronecker product")
    return out


def identity(d: int) -> np.ndarray:
    return np.eye(d, dtype=complex)


def check_shape(m: np.ndarray, dims: Sequence[int]) -> None:
    """Validate that ``dims`` is a subsystem factorization of ``m``.

    Raises ValueError on non-square input, non-positive dimensions, or a
    product mismatch.
    """
    m = np.asarray(m)
    if m.ndim != 2 or m.shape[0] != m.shape[1]:
        raise ValueError(f"expected a square matrix, got shape {m.shape}")
    dims = tuple(int(d) for d in dims)
    if any(d <= 0 for d in dims):
        raise ValueError(f"subsystem dimensions must be positive, got {dims}")
    if int(np.prod(dims)) != m.shape[0]:
        raise ValueError(
            f"subsystem dims {dims} do not factor matrix dimension {m.shape[0]}"
        )


def partial_trace(m: np.ndarray, dims: Sequence[int], keep: Iterable[int]) -> np.ndarray:
    """Trace out all subsystems not listed in ``keep``.

    ``dims`` gives the tensor factorization of ``m``; ``keep`` is a set of
    subsystem indices to retain (order of the kept factors is preserved).
    The trace of the result equals the trace of the input.
    """
    m = np.asarray(m)
    check_shape(m, dims)
    dims = tuple(int(d) for d in dims)
    n = len(dims)
    keep = sorted(set(int(k) for k in keep))
    if not keep:
        raise ValueError("keep must name at least one subsystem")
    if keep[0] < 0 or keep[-1] >= n:
        raise ValueError(f"keep indices {keep} out of range for {n} subsystems")

    tensor = m.reshape(dims + dims)
    # Trace out the complement, highest index first so positions stay valid.
    for idx in sorted(set(range(n)) - set(keep), reverse=True):
        tensor = np.trace(tensor, axis1=idx, axis2=idx + tensor.ndim // 2)
    d_keep = int(np.prod([dims[k] for k in keep]))
    return tensor.reshape(d_keep, d_keep)


def permute_subsystems(m: np.ndarray, dims: Sequence[int], perm: Sequence[int]) -> np.ndarray:
    """Reorder tensor factors: new position i holds old subsystem ``perm[i]``."""
    m = np.asarray(m)
    check_shape(m, dims)
    dims = tuple(int(d) for d in dims)
    n = len(dims)
    perm = [int(p) for p in perm]
    if sorted(perm) != list(range(n)):
        raise ValueError(f"{perm} is not a permutation of 0..{n - 1}")
    tensor = m.reshape(dims + dims)
    tensor = tensor.transpose(perm + [p + n for p in perm])
    return tensor.reshape(m.shape)


def replace_subsystem(
    m: np.ndarray, dims: Sequence[int], index: int, fresh: np.ndarray
) -> np.ndarray:
    """Discard subsystem ``index`` and put the state ``fresh`` in its place.

    This is the action of a channel that traces out one factor and reprepares
    it; marginals of all other subsystems are untouched.
    """
    dims = tuple(int(d) for d in dims)
    n = len(dims)
    if not 0 <= index < n:
        raise ValueError(f"subsystem index {index} out of range")
    fresh = np.asarray(fresh, dtype=complex)
    if fresh.shape != (dims[index], dims[index]):
        raise ValueError("replacement state dimension mismatch")
    if n == 1:
        return fresh * np.trace(np.asarray(m)).real
    keep = [k for k in range(n) if k != index]
    rest = partial_trace(m, dims, keep)
    combined = np.kron(fresh, rest)
    # combined factor order is [index] + keep; undo it
    order = [index] + keep
    perm = [order.index(k) for k in range(n)]
    return permute_subsystems(combined, [dims[index]] + [dims[k] for k in keep], perm)


def is_hermitian(m: np.ndarray, tol: float = ALGEBRA_TOL) -> bool:
    m = np.asarray(m)
    return bool(np.max(np.abs(m - dagger(m))) <= tol)


def assert_density_matrix(rho: np.ndarray, tol: float = ALGEBRA_TOL) -> None:
    """Raise ValueError unless ``rho`` is Hermitian with unit trace."""
    rho = np.asarray(rho)
    if rho.ndim != 2 or rho.shape[0] != rho.shape[1]:
        raise ValueError(f"expected a square matrix, got shape {rho.shape}")
    if abs(np.trace(rho) - 1.0) > tol:
        raise ValueError(f"trace {np.trace(rho)} is not 1 within {tol}")
    if not is_hermitian(rho, tol):
        raise ValueError("matrix is not Hermitian")


def sqrt_diagonal(m: np.ndarray) -> np.ndarray:
    """Square root of a nonnegative diagonal matrix.

    Only diagonal matrices appear under square roots in this package, so no
    general matrix square root is provided.
    """
    m = np.asarray(m)
    off = m - np.diag(np.diag(m))
    if np.max(np.abs(off)) > ALGEBRA_TOL:
        raise ValueError("matrix square root only supported for diagonal matrices")
    d = np.diag(m)
    if np.min(d.real) < -ALGEBRA_TOL or np.max(np.abs(d.imag)) > ALGEBRA_TOL:
        raise ValueError("diagonal must be real and nonnegative")
    return np.diag(np.sqrt(np.clip(d.real, 0.0, None))).astype(complex)


def pauli_basis(d: int) -> list[np.ndarray]:
    """Orthogonal unitary basis of the d x d matrices.

    Returns d**2 unitaries U_i with tr(U_i^dag U_j) = d * delta_ij and the
    completeness relation sum_i U_i M U_i^dag = d * tr(M) * I for every M.
    For d = 2 these are the Pauli matrices {I, X, Y, Z}; for d > 2 the
    clock-and-shift (generalized Pauli) construction is used.
    """
    if d < 2:
        raise ValueError("dimension must be at least 2")
    if d == 2:
        return [
            np.eye(2, dtype=complex),
            np.array([[0, 1], [1, 0]], dtype=complex),
            np.array([[0, -1j], [1j, 0]], dtype=complex),
            np.array([[1, 0], [0, -1]], dtype=complex),
        ]
    omega = np.exp(2j * np.pi / d)
    shift = np.zeros((d, d), dtype=complex)
    for j in range(d):
        shift[(j + 1) % d, j] = 1.0
    clock = np.diag(omega ** np.arange(d))
    basis = []
    xa = np.eye(d, dtype=complex)
    for _ in range(d):
        zb = np.eye(d, dtype=complex)
        for _ in range(d):
            basis.append(xa @ zb)
            zb = zb @ clock
        xa = xa @ shift
    return basis

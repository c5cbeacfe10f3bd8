"""Core operator constructions on C^d.

Generalized Pauli (Weyl-Heisenberg) operators, the finite Fourier transform,
the Schwinger unitary operator basis, tensor-product plumbing, deterministic
eigendecompositions and seeded random states/effects.

Conventions
-----------
* ``omega = exp(2j*pi/d)`` and the clock operator is ``Z = diag(omega**k)``.
* The shift operator acts as ``X |k> = |k+1 mod d>``.
* ``Y`` is defined through the commutator ``[X, Z] = 2i Y``; for d = 2 this
  gives ``[[0, i], [-i, 0]]``, the negative of the common sigma_y convention.
* The parity operator acts as ``P |k> = |-k mod d>``.
* Half-integer powers ``omega**(m/2)`` mean ``omega**(m * inv2)`` with
  ``inv2 = (d+1)//2`` when d is odd, and ``tau**m`` with the primitive 2d-th
  root ``tau = exp(1j*pi/d)`` when d is even.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import DimensionMismatchError, UnsupportedDimensionError

__all__ = [
    "EQ_TOL",
    "tol_for",
    "omega",
    "tau",
    "half_exponent_phase",
    "shift_matrix",
    "clock_matrix",
    "parity_matrix",
    "PauliFamily",
    "make_pauli_family",
    "weyl_operator",
    "schwinger_basis",
    "finite_fourier",
    "tensor",
    "partial_trace",
    "partial_transpose",
    "trace_inner",
    "dagger",
    "frobenius",
    "mat_close",
    "eigh_fixed",
    "is_hermitian",
    "is_density",
    "is_effect",
    "is_povm",
    "basis_state",
    "maximally_mixed",
    "bloch_state",
    "qubit_stabilizer_states",
    "random_unitary",
    "random_pure_state",
    "random_state",
    "random_effect",
]

# Base tolerance for operator equality checks; scaled by Frobenius norm.
EQ_TOL = 1e-9


def tol_for(*mats: np.ndarray) -> float:
    """Equality tolerance scaled by the largest Frobenius norm involved."""
    scale = max([1.0] + [float(np.linalg.norm(m)) for m in mats])
    return EQ_TOL * scale


def omega(d: int) -> complex:
    """Primitive d-th root of unity."""
    return np.exp(2j * np.pi / d)


def tau(d: int) -> complex:
    """Primitive 2d-th root of unity, used for half-integer phases at even d."""
    return np.exp(1j * np.pi / d)


def half_exponent_phase(d: int, m: int) -> complex:
    """The phase ``omega**(m/2)``.

    For odd d the exponent ``m/2`` is resolved with the multiplicative
    inverse of 2 mod d, so the result is still a d-th root of unity.  For
    even d no inverse exists and the phase is taken in the doubled group as
    ``tau**m``.
    """
    if d < 1:
        raise UnsupportedDimensionError(f"dimension must be positive, got {d}")
    if d % 2 == 1:
        inv2 = (d + 1) // 2
        return omega(d) ** ((m * inv2) % d)
    return tau(d) ** (m % (2 * d))


def shift_matrix(d: int) -> np.ndarray:
    """Cyclic shift X with ``X |k> = |k+1 mod d>``."""
    return np.roll(np.eye(d, dtype=complex), 1, axis=0)


def clock_matrix(d: int) -> np.ndarray:
    """Clock operator Z with spectrum ``{omega**k}``."""
    return np.diag(omega(d) ** np.arange(d))


def parity_matrix(d: int) -> np.ndarray:
    """Parity operator with ``P |k> = |-k mod d>``."""
    P = np.zeros((d, d), dtype=complex)
    for k in range(d):
        P[(-k) % d, k] = 1.0
    return P


@dataclass(frozen=True)
class PauliFamily:
    """The generalized Pauli operators on C^d."""

    dim: int
    X: np.ndarray
    Z: np.ndarray
    Y: np.ndarray
    parity: np.ndarray

    @property
    def omega(self) -> complex:
        return omega(self.dim)


def make_pauli_family(d: int) -> PauliFamily:
    """Build X, Z, the commutator-defined Y and the parity operator."""
    if d < 2:
        raise UnsupportedDimensionError(f"need dimension >= 2, got {d}")
    X = shift_matrix(d)
    Z = clock_matrix(d)
    Y = (X @ Z - Z @ X) / 2j
    return PauliFamily(dim=d, X=X, Z=Z, Y=Y, parity=parity_matrix(d))


def weyl_operator(p: int, q: int, d: int) -> np.ndarray:
    """Weyl displacement ``U_(p,q) = omega**(pq/2) X^p Z^q``."""
    X = shift_matrix(d)
    Z = clock_matrix(d)
    U = np.linalg.matrix_power(X, p % d) @ np.linalg.matrix_power(Z, q % d)
    return half_exponent_phase(d, p * q) * U


def schwinger_basis(d: int) -> dict[tuple[int, int], np.ndarray]:
    """Unitary operator basis ``S(eta, xi) = X^eta Z^xi omega**(eta xi/2)/sqrt(d)``.

    Defined for odd d with symmetric index range ``eta, xi in [-l, l]``,
    ``l = (d-1)/2``.  The d^2 elements are orthonormal in the trace inner
    product.
    """
    if d % 2 == 0:
        raise UnsupportedDimensionError("the symmetric operator basis needs odd d")
    l = (d - 1) // 2
    X = shift_matrix(d)
    Z = clock_matrix(d)
    out: dict[tuple[int, int], np.ndarray] = {}
    for eta in range(-l, l + 1):
        Xp = np.linalg.matrix_power(X, eta % d)
        for xi in range(-l, l + 1):
            Zp = np.linalg.matrix_power(Z, xi % d)
            out[(eta, xi)] = half_exponent_phase(d, eta * xi) * (Xp @ Zp) / np.sqrt(d)
    return out


def finite_fourier(d: int) -> np.ndarray:
    """Finite Fourier transform ``F_{k'k} = omega**(k k')/sqrt(d)``.

    Conjugates the shift into the clock, ``F X F^dag = Z``, and squares to
    the parity operator.
    """
    k = np.arange(d)
    return omega(d) ** np.outer(k, k) / np.sqrt(d)


def tensor(*ops: np.ndarray) -> np.ndarray:
    """Kronecker product of one or more matrices, in the given order."""
    if not ops:
        raise ValueError("need at least one operator")
    out = np.asarray(ops[0], dtype=complex)
    for op in ops[1:]:
        out = np.kron(out, np.asarray(op, dtype=complex))
    return out


def _check_dims(M: np.ndarray, dims: tuple[int, ...]) -> None:
    total = int(np.prod(dims))
    if M.shape != (total, total):
        raise DimensionMismatchError(
            f"matrix of shape {M.shape} does not match subsystem dims {dims}"
        )


def partial_trace(M: np.ndarray, dims: tuple[int, ...], keep: tuple[int, ...]) -> np.ndarray:
    """Trace out all subsystems not listed in ``keep`` (indices into dims)."""
    M = np.asarray(M, dtype=complex)
    dims = tuple(int(x) for x in dims)
    _check_dims(M, dims)
    n = len(dims)
    keep = tuple(sorted(keep))
    T = M.reshape(dims + dims)
    # Trace pairs (axis i, axis n+i) for every discarded subsystem, highest first
    # so earlier axis numbers stay valid.
    for i in sorted(set(range(n)) - set(keep), reverse=True):
        T = np.trace(T, axis1=i, axis2=T.ndim // 2 + i)
    dkeep = int(np.prod([dims[i] for i in keep])) if keep else 1
    return T.reshape(dkeep, dkeep)


def partial_transpose(M: np.ndarray, dims: tuple[int, ...], subsystem: int) -> np.ndarray:
    """Transpose one tensor factor of a bipartite-or-more operator."""
    M = np.asarray(M, dtype=complex)
    dims = tuple(int(x) for x in dims)
    _check_dims(M, dims)
    n = len(dims)
    if not 0 <= subsystem < n:
        raise DimensionMismatchError(f"subsystem {subsystem} out of range for {n} factors")
    T = M.reshape(dims + dims)
    T = np.swapaxes(T, subsystem, n + subsystem)
    total = int(np.prod(dims))
    return T.reshape(total, total)


def trace_inner(A: np.ndarray, B: np.ndarray) -> float:
    """Trace inner product ``Tr(A B)`` of two Hermitian operators, as a real."""
    val = np.trace(np.asarray(A) @ np.asarray(B))
    return float(np.real(val))


def dagger(A: np.ndarray) -> np.ndarray:
    return np.asarray(A).conj().T


def frobenius(A: np.ndarray) -> float:
    return float(np.linalg.norm(A))


def mat_close(A: np.ndarray, B: np.ndarray, tol: float | None = None) -> bool:
    """Frobenius-norm equality at the scaled default tolerance."""
    A = np.asarray(A)
    B = np.asarray(B)
    if tol is None:
        tol = tol_for(A)
    return float(np.linalg.norm(A - B)) <= tol


def eigh_fixed(A: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    """Hermitian eigendecomposition with a deterministic gauge.

    Eigenvalues ascend; each eigenvector is rephased so its first component
    of magnitude above 1e-12 is real and positive.
    """
    vals, vecs = np.linalg.eigh(np.asarray(A, dtype=complex))
    vecs = vecs.copy()
    for i in range(vecs.shape[1]):
        col = vecs[:, i]
        nz = np.flatnonzero(np.abs(col) > 1e-12)
        if nz.size:
            phase = col[nz[0]] / abs(col[nz[0]])
            vecs[:, i] = col / phase
    return vals, vecs


def is_hermitian(A: np.ndarray, tol: float | None = None) -> bool:
    A = np.asarray(A)
    if tol is None:
        tol = tol_for(A)
    return bool(np.linalg.norm(A - A.conj().T) <= tol)


def is_density(rho: np.ndarray, tol: float | None = None) -> bool:
    """Hermitian, unit trace, positive semidefinite (within tolerance)."""
    rho = np.asarray(rho)
    if tol is None:
        tol = tol_for(rho)
    if not is_hermitian(rho, tol):
        return False
    if abs(np.trace(rho).real - 1.0) > tol:
        return False
    vals = np.linalg.eigvalsh(rho)
    return bool(vals[0] >= -tol)


def is_effect(E: np.ndarray, tol: float | None = None) -> bool:
    """Hermitian with spectrum inside [0, 1] (within tolerance)."""
    E = np.asarray(E)
    if tol is None:
        tol = tol_for(E)
    if not is_hermitian(E, tol):
        return False
    vals = np.linalg.eigvalsh(E)
    return bool(vals[0] >= -tol and vals[-1] <= 1.0 + tol)


def is_povm(effects: list[np.ndarray] | tuple[np.ndarray, ...], tol: float | None = None) -> bool:
    """All elements are effects and they resolve the identity."""
    if not len(effects):
        return False
    d = np.asarray(effects[0]).shape[0]
    total = np.zeros((d, d), dtype=complex)
    for E in effects:
        if not is_effect(E, tol):
            return False
        total = total + np.asarray(E)
    if tol is None:
        tol = tol_for(total)
    return bool(np.linalg.norm(total - np.eye(d)) <= tol)


def basis_state(d: int, k: int) -> np.ndarray:
    """Projector onto the computational basis vector |k>."""
    v = np.zeros(d, dtype=complex)
    v[k % d] = 1.0
    return np.outer(v, v.conj())


def maximally_mixed(d: int) -> np.ndarray:
    return np.eye(d, dtype=complex) / d


def bloch_state(x: float, y: float, z: float) -> np.ndarray:
    """Qubit state with the given Bloch vector.

    Uses the common sigma conventions (sigma_y = [[0,-i],[i,0]]), not the
    commutator-defined Y of this module, so published Bloch coordinates can
    be pasted in directly.
    """
    sx = np.array([[0, 1], [1, 0]], dtype=complex)
    sy = np.array([[0, -1j], [1j, 0]], dtype=complex)
    sz = np.array([[1, 0], [0, -1]], dtype=complex)
    return 0.5 * (np.eye(2, dtype=complex) + x * sx + y * sy + z * sz)


def qubit_stabilizer_states() -> list[np.ndarray]:
    """The six single-qubit stabilizer states (eigenstates of X, Y, Z)."""
    out = []
    for v in [(0, 0, 1), (0, 0, -1), (1, 0, 0), (-1, 0, 0), (0, 1, 0), (0, -1, 0)]:
        out.append(bloch_state(*v))
    return out


def random_unitary(d: int, rng: np.random.Generator) -> np.ndarray:
    """Haar-distributed unitary via QR with the standard phase fix."""
    A = rng.standard_normal((d, d)) + 1j * rng.standard_normal((d, d))
    Q, R = np.linalg.qr(A)
    diag = np.diagonal(R)
    return Q * (diag / np.abs(diag)).conj()


def random_pure_state(d: int, seed: int | np.random.Generator) -> np.ndarray:
    """Normalized complex-Gaussian state vector."""
    rng = seed if isinstance(seed, np.random.Generator) else np.random.default_rng(seed)
    v = rng.standard_normal(d) + 1j * rng.standard_normal(d)
    return v / np.linalg.norm(v)


def random_state(d: int, rank: int | None = None, seed: int | np.random.Generator = 0) -> np.ndarray:
    """Random density operator of the given rank.

    A pure state on C^d tensor C^rank is drawn from normalized complex
    Gaussians and the ancilla is traced out; rank defaults to d.
    """
    rng = seed if isinstance(seed, np.random.Generator) else np.random.default_rng(seed)
    r = d if rank is None else int(rank)
    if not 1 <= r:
        raise ValueError(f"rank must be >= 1, got {r}")
    G = rng.standard_normal((d, r)) + 1j * rng.standard_normal((d, r))
    rho = G @ G.conj().T
    return rho / np.trace(rho).real


def random_effect(d: int, seed: int | np.random.Generator = 0) -> np.ndarray:
    """Random effect: Haar-rotated diagonal with entries uniform in [0, 1]."""
    rng = seed if isinstance(seed, np.random.Generator) else np.random.default_rng(seed)
    U = random_unitary(d, rng)
    vals = rng.uniform(0.0, 1.0, size=d)
    return (U * vals) @ U.conj().T

"""Operator frames on finite-dimensional Hilbert spaces.

A frame here is a finite family ``{F(lam)}`` of Hermitian operators on C^d,
indexed by phase-space labels, whose trace pairings ``Tr[F(lam) A]`` bound
``||A||^2`` above and below.  A dual family ``{D(lam)}`` recovers operators
through ``A = sum_lam Tr[F(lam) A] D(lam)``.  States map to real
quasi-probability values ``mu(lam) = Tr[rho F(lam)]`` and effects to
``xi(lam) = Tr[E D(lam)]``, so that ``Tr(rho E) = sum mu xi``.

Superoperators act on the real d^2-dimensional space of Hermitian matrices,
expanded in a fixed generalized Gell-Mann basis.
"""

from __future__ import annotations

from dataclasses import dataclass, field, replace
from functools import lru_cache

import numpy as np

from .errors import DimensionMismatchError, NotAFrameError, SingularBasisError
from .operators import EQ_TOL, tol_for

__all__ = [
    "Frame",
    "DualFrame",
    "QuasiDistribution",
    "EffectFunction",
    "NegativityReport",
    "hermitian_basis",
    "frame_operator_matrix",
    "frame_bounds",
    "canonical_dual",
    "gram_dual",
    "is_dual_pair",
    "represent_state",
    "represent_effect",
    "reconstruct_state",
    "reconstruct_effect",
    "born_pair",
    "deformed_born",
    "transform_matrix",
    "apply_transform",
    "negativity",
]

PINV_RCOND = 1e-10


def _as_stack(operators) -> np.ndarray:
    ops = np.asarray(operators, dtype=complex)
    if ops.ndim != 3 or ops.shape[1] != ops.shape[2]:
        raise DimensionMismatchError(f"expected a stack of square matrices, got shape {ops.shape}")
    return ops


@dataclass(frozen=True, eq=False)
class _OperatorFamily:
    """Labeled family of Hermitian operators on C^d."""

    dim: int
    labels: tuple
    operators: np.ndarray
    name: str = ""

    def __post_init__(self):
        ops = _as_stack(self.operators)
        object.__setattr__(self, "operators", ops)
        object.__setattr__(self, "labels", tuple(self.labels))
        if ops.shape[1] != self.dim:
            raise DimensionMismatchError(f"operators are {ops.shape[1]}x{ops.shape[1]}, dim says {self.dim}")
        if len(self.labels) != ops.shape[0]:
            raise DimensionMismatchError(f"{len(self.labels)} labels for {ops.shape[0]} operators")
        herm = np.linalg.norm(ops - np.conj(np.swapaxes(ops, 1, 2)), axis=(1, 2))
        if np.any(herm > tol_for(ops)):
            raise DimensionMismatchError("family contains a non-Hermitian operator")

    def __len__(self) -> int:
        return len(self.labels)

    def index(self, label) -> int:
        return self.labels.index(label)

    def operator(self, label) -> np.ndarray:
        return self.operators[self.index(label)]

    def sum(self) -> np.ndarray:
        return self.operators.sum(axis=0)

    def traces(self) -> np.ndarray:
        return np.real(np.trace(self.operators, axis1=1, axis2=2))

    @property
    def minimal(self) -> bool:
        return len(self) == self.dim**2


class Frame(_OperatorFamily):
    """Analysis family: states are represented by ``Tr[rho F(lam)]``."""


class DualFrame(_OperatorFamily):
    """Synthesis family: operators are rebuilt as ``sum Tr[F A] D``."""


@dataclass(frozen=True)
class QuasiDistribution:
    """Real-valued phase-space function representing a state."""

    representation: str
    dim: int
    labels: tuple
    values: np.ndarray
    warnings: tuple = field(default_factory=tuple)

    def __post_init__(self):
        object.__setattr__(self, "labels", tuple(self.labels))
        vals = np.asarray(self.values, dtype=float)
        if vals.shape != (len(self.labels),):
            raise DimensionMismatchError(f"{len(self.labels)} labels for {vals.shape} values")
        object.__setattr__(self, "values", vals)

    def total(self) -> float:
        return float(self.values.sum())

    def min(self) -> float:
        return float(self.values.min())


@dataclass(frozen=True)
class EffectFunction:
    """Real-valued phase-space function representing an effect."""

    representation: str
    dim: int
    labels: tuple
    values: np.ndarray
    warnings: tuple = field(default_factory=tuple)

    def __post_init__(self):
        object.__setattr__(self, "labels", tuple(self.labels))
        vals = np.asarray(self.values, dtype=float)
        if vals.shape != (len(self.labels),):
            raise DimensionMismatchError(f"{len(self.labels)} labels for {vals.shape} values")
        object.__setattr__(self, "values", vals)


@dataclass(frozen=True)
class NegativityReport:
    min_value: float
    abs_sum: float
    negativity: float


@lru_cache(maxsize=32)
def hermitian_basis(d: int) -> np.ndarray:
    """Orthonormal Hermitian basis of the d x d matrices.

    Ordering: identity/sqrt(d); symmetric pair elements (j<k, row-major);
    antisymmetric pair elements (same order); then the d-1 diagonal
    (generalized Gell-Mann) elements.
    """
    mats = [np.eye(d, dtype=complex) / np.sqrt(d)]
    for j in range(d):
        for k in range(j + 1, d):
            M = np.zeros((d, d), dtype=complex)
            M[j, k] = M[k, j] = 1 / np.sqrt(2)
            mats.append(M)
    for j in range(d):
        for k in range(j + 1, d):
            M = np.zeros((d, d), dtype=complex)
            M[j, k] = -1j / np.sqrt(2)
            M[k, j] = 1j / np.sqrt(2)
            mats.append(M)
    for l in range(1, d):
        M = np.zeros((d, d), dtype=complex)
        for m in range(l):
            M[m, m] = 1.0
        M[l, l] = -float(l)
        mats.append(M / np.sqrt(l * (l + 1)))
    out = np.array(mats)
    out.setflags(write=False)
    return out


def _coefficients(family: _OperatorFamily) -> np.ndarray:
    """Real expansion coefficients ``Tr[F(lam) B_a]`` of a Hermitian family."""
    B = hermitian_basis(family.dim)
    coeff = np.einsum("nij,aji->na", family.operators, B)
    return np.real(coeff)


def frame_operator_matrix(frame: Frame) -> np.ndarray:
    """Matrix of ``S(A) = sum Tr[F A] F`` in the fixed Hermitian basis."""
    V = _coefficients(frame)
    return V.T @ V


def frame_bounds(frame: Frame) -> tuple[float, float]:
    """Tightest frame constants (a, b); raises when the family does not span."""
    S = frame_operator_matrix(frame)
    vals = np.linalg.eigvalsh(S)
    a, b = float(vals[0]), float(vals[-1])
    if a <= EQ_TOL * max(1.0, b):
        raise NotAFrameError(f"lower frame bound {a:.3e} vanishes; family does not span")
    return a, b


def canonical_dual(frame: Frame) -> DualFrame:
    """Dual family ``S^(-1) F(lam)`` via the inverse frame superoperator."""
    frame_bounds(frame)
    B = hermitian_basis(frame.dim)
    V = _coefficients(frame)
    S = V.T @ V
    Sinv = np.linalg.pinv(S, rcond=PINV_RCOND, hermitian=True)
    dual_coeff = V @ Sinv
    ops = np.einsum("na,aij->nij", dual_coeff, B)
    return DualFrame(dim=frame.dim, labels=frame.labels, operators=ops, name=frame.name)


def gram_dual(frame: Frame) -> DualFrame:
    """Dual of a minimal frame through the inverse Gram matrix."""
    if not frame.minimal:
        raise DimensionMismatchError(
            f"Gram dual needs exactly d^2 = {frame.dim**2} operators, got {len(frame)}"
        )
    ops = frame.operators
    G = np.real(np.einsum("nij,mji->nm", ops, ops))
    cond = np.linalg.cond(G)
    if not np.isfinite(cond) or cond > 1 / PINV_RCOND:
        raise SingularBasisError(f"Gram matrix condition number {cond:.3e} is too large")
    Ginv = np.linalg.inv(G)
    dual_ops = np.einsum("nm,nij->mij", Ginv, ops)
    return DualFrame(dim=frame.dim, labels=frame.labels, operators=dual_ops, name=frame.name)


def is_dual_pair(frame: Frame, dual: DualFrame, tol: float | None = None) -> tuple[bool, float]:
    """Check ``A = sum Tr[F A] D`` on the whole operator space.

    Returns the verdict and the worst entry-wise residual of the
    reconstruction superoperator against the identity.
    """
    if frame.dim != dual.dim or frame.labels != dual.labels:
        raise DimensionMismatchError("frame and dual must share dimension and labels")
    R = _coefficients(dual).T @ _coefficients(frame)
    residual = float(np.max(np.abs(R - np.eye(frame.dim**2))))
    if tol is None:
        tol = EQ_TOL
    return residual <= tol, residual


def represent_state(rho: np.ndarray, frame: Frame, name: str | None = None) -> QuasiDistribution:
    """Quasi-probability values ``Tr[rho F(lam)]`` of a density operator."""
    rho = np.asarray(rho, dtype=complex)
    if rho.shape != (frame.dim, frame.dim):
        raise DimensionMismatchError(f"state shape {rho.shape} does not match dim {frame.dim}")
    raw = np.einsum("nij,ji->n", frame.operators, rho)
    if np.max(np.abs(raw.imag)) > tol_for(rho):
        raise DimensionMismatchError("representation values are not real; check hermiticity")
    warnings = []
    resolution = frame.sum()
    if np.linalg.norm(resolution - np.eye(frame.dim)) > tol_for(resolution):
        warnings.append("frame-sum-not-identity")
    return QuasiDistribution(
        representation=name if name is not None else frame.name,
        dim=frame.dim,
        labels=frame.labels,
        values=raw.real,
        warnings=tuple(warnings),
    )


def represent_effect(E: np.ndarray, dual: DualFrame, name: str | None = None) -> EffectFunction:
    """Effect values ``Tr[E D(lam)]`` against the dual family."""
    E = np.asarray(E, dtype=complex)
    if E.shape != (dual.dim, dual.dim):
        raise DimensionMismatchError(f"effect shape {E.shape} does not match dim {dual.dim}")
    raw = np.einsum("nij,ji->n", dual.operators, E)
    if np.max(np.abs(raw.imag)) > tol_for(E):
        raise DimensionMismatchError("effect values are not real; check hermiticity")
    warnings = []
    if np.max(np.abs(dual.traces() - 1.0)) > EQ_TOL:
        warnings.append("dual-traces-not-one")
    return EffectFunction(
        representation=name if name is not None else dual.name,
        dim=dual.dim,
        labels=dual.labels,
        values=raw.real,
        warnings=tuple(warnings),
    )


def reconstruct_state(dist: QuasiDistribution, dual: DualFrame) -> np.ndarray:
    """Rebuild the operator ``sum mu(lam) D(lam)``."""
    if dist.labels != dual.labels:
        raise DimensionMismatchError("distribution labels do not match the dual family")
    return np.einsum("n,nij->ij", dist.values, dual.operators)


def reconstruct_effect(fn: EffectFunction, frame: Frame) -> np.ndarray:
    """Rebuild the effect ``sum xi(lam) F(lam)``."""
    if fn.labels != frame.labels:
        raise DimensionMismatchError("effect labels do not match the frame")
    return np.einsum("n,nij->ij", fn.values, frame.operators)


def born_pair(mu: QuasiDistribution, xi: EffectFunction) -> float:
    """Outcome probability ``sum_lam mu(lam) xi(lam)``."""
    if mu.labels != xi.labels or mu.dim != xi.dim:
        raise DimensionMismatchError("state and effect functions live on different outcome sets")
    return float(mu.values @ xi.values)


def deformed_born(mu: QuasiDistribution, xi: EffectFunction, dual: DualFrame) -> float:
    """Probability when both state and effect use the frame side.

    With ``mu = Tr[rho F]`` and ``xi = Tr[E F]`` the pairing needs the dual
    Gram kernel: ``sum mu(lam) xi(lam') Tr[D(lam) D(lam')]``.
    """
    if mu.labels != dual.labels or xi.labels != dual.labels:
        raise DimensionMismatchError("distributions do not match the dual family")
    K = np.real(np.einsum("nij,mji->nm", dual.operators, dual.operators))
    return float(mu.values @ K @ xi.values)


def transform_matrix(source_dual: DualFrame, target_frame: Frame) -> np.ndarray:
    """Matrix ``T[lam', lam] = Tr[D'(lam') F(lam)]`` mapping representations.

    Applied as ``mu_target(lam) = sum_lam' T[lam', lam] mu_source(lam')``.
    """
    if source_dual.dim != target_frame.dim:
        raise DimensionMismatchError("representations live in different dimensions")
    return np.real(np.einsum("nij,mji->nm", source_dual.operators, target_frame.operators))


def apply_transform(dist: QuasiDistribution, T: np.ndarray, target_frame: Frame) -> QuasiDistribution:
    if T.shape != (len(dist.labels), len(target_frame.labels)):
        raise DimensionMismatchError(f"transform shape {T.shape} does not fit the outcome sets")
    vals = dist.values @ T
    return QuasiDistribution(
        representation=target_frame.name,
        dim=target_frame.dim,
        labels=target_frame.labels,
        values=vals,
        warnings=dist.warnings,
    )


def negativity(dist: QuasiDistribution | EffectFunction) -> NegativityReport:
    """Minimum value, absolute sum and total negative weight."""
    vals = np.asarray(dist.values, dtype=float)
    return NegativityReport(
        min_value=float(vals.min()),
        abs_sum=float(np.abs(vals).sum()),
        negativity=float(np.clip(-vals, 0, None).sum()),
    )


def rename(dist: QuasiDistribution, name: str) -> QuasiDistribution:
    return replace(dist, representation=name)

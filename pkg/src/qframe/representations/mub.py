"""Complete sets of pairwise unbiased bases and their probability tables."""

from __future__ import annotations

import numpy as np

from ..errors import DimensionMismatchError, UnsupportedDimensionError
from ..frames import DualFrame, Frame, QuasiDistribution
from ..geometry import _is_prime
from ..operators import finite_fourier, omega
from .base import Representation

# order-three rotation that cycles the Z, X and Y eigenbases of a qubit
_QUBIT_V = 0.5 * np.array([[1 - 1j, -(1 + 1j)], [1 - 1j, 1 + 1j]])


def mub_unitary(d: int) -> np.ndarray:
    """Basis-advancing unitary; quadratic Fourier phases for odd primes."""
    if d == 2:
        return _QUBIT_V.copy()
    if not _is_prime(d):
        raise UnsupportedDimensionError("d must be prime")
    F = finite_fourier(d)
    inv2 = (d + 1) // 2
    D = np.diag(omega(d) ** ((inv2 * np.arange(d) ** 2) % d))
    return F @ D @ F.conj().T


def mub_bases(d: int) -> np.ndarray:
    """Stack of d+1 pairwise unbiased bases, index (n, column k).

    Basis 0 is computational.  For d = 2 the advancing rotation has order
    three, so its powers already close the family.  For odd primes the
    advancing unitary fixes the Fourier basis, which therefore joins as the
    final member; the powers V^n supply the rest.
    """
    if not _is_prime(d):
        raise UnsupportedDimensionError("d must be prime")
    V = mub_unitary(d)
    out = [np.eye(d, dtype=complex)]
    if d == 2:
        out.append(V)
        out.append(V @ V)
    else:
        M = np.eye(d, dtype=complex)
        for _ in range(1, d):
            M = V @ M
            out.append(M.copy())
        out.append(finite_fourier(d))
    return np.array(out)


class MubFamily:
    """The d+1 unbiased bases with their rank-one projectors."""

    def __init__(self, d: int):
        self.d = d
        self.bases = mub_bases(d)
        labels = []
        projectors = []
        for n, B in enumerate(self.bases):
            for k in range(d):
                labels.append((n, k))
                projectors.append(np.outer(B[:, k], B[:, k].conj()))
        self.labels = tuple(labels)
        self.projectors = np.array(projectors)

    def projector(self, n: int, k: int) -> np.ndarray:
        return self.projectors[n * self.d + k]

    def representation(self) -> Representation:
        """Normalized frame P/(d+1) with the exact dual (d+1)P - I."""
        d = self.d
        eye = np.eye(d)
        frame = Frame(
            dim=d, labels=self.labels, operators=self.projectors / (d + 1), name="mub"
        )
        dual = DualFrame(
            dim=d,
            labels=self.labels,
            operators=np.array([(d + 1) * P - eye for P in self.projectors]),
            name="mub",
        )
        return Representation(
            name="mub", dim=d, frame=frame, dual=dual, geometry=None, meta={"family": self}
        )


def mub_family(d: int) -> MubFamily:
    return MubFamily(d)


def mub_table(rho: np.ndarray, family: MubFamily) -> QuasiDistribution:
    """Raw outcome probabilities mu(n, k) = Tr(rho P(n,k)); each basis sums to one."""
    rho = np.asarray(rho, dtype=complex)
    if rho.shape != (family.d, family.d):
        raise DimensionMismatchError("state does not match the family dimension")
    values = np.einsum("aij,ji->a", family.projectors, rho)
    if np.max(np.abs(values.imag)) > 1e-9:
        raise ValueError("input must be Hermitian")
    return QuasiDistribution(
        representation="mub-table",
        dim=family.d,
        labels=family.labels,
        values=values.real,
        warnings=(),
    )


def mub_reconstruct(table: QuasiDistribution, family: MubFamily) -> np.ndarray:
    """Invert a probability table: rho = sum mu(n,k) P(n,k) - I."""
    if tuple(table.labels) != family.labels:
        raise DimensionMismatchError("table labels do not match the family")
    acc = np.einsum("a,aij->ij", table.values, family.projectors)
    return acc - np.eye(family.d)


def mub_transition(t1: QuasiDistribution, t2: QuasiDistribution) -> float:
    """Overlap rule between two tables: sum mu mu' - 1 = Tr(rho rho')."""
    if tuple(t1.labels) != tuple(t2.labels):
        raise DimensionMismatchError("tables come from different families")
    return float(t1.values @ t2.values - 1.0)

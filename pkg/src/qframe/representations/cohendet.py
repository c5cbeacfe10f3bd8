"""Fano-operator representation on the odd lattice and its doubled extension."""

from __future__ import annotations

import numpy as np

from ..errors import UnsupportedDimensionError
from ..frames import DualFrame, Frame, QuasiDistribution
from ..geometry import extended_lattice, plain_lattice, prime_lattice, _is_prime
from ..operators import omega, parity_matrix
from .base import Representation


def cohendet_displacement(d: int, m: int, n: int) -> np.ndarray:
    """The displacement W_mn acting as phi_k -> w^{2n(k-m)} phi_{k-2m}."""
    if d % 2 == 0:
        raise UnsupportedDimensionError("displacements need odd d")
    W = np.zeros((d, d), dtype=complex)
    w = omega(d)
    for k in range(d):
        W[(k - 2 * m) % d, k] = w ** ((2 * n * (k - m)) % d)
    return W


def fano_operator(d: int, q: int, p: int) -> np.ndarray:
    """Hermitian point operator W_qp P."""
    return cohendet_displacement(d, q, p) @ parity_matrix(d)


def cohendet(d: int) -> Representation:
    """Parity-displaced representation for odd d; frame W_qp P / d."""
    if d % 2 == 0:
        raise UnsupportedDimensionError("parity displacement splits only odd d")
    if d < 3:
        raise UnsupportedDimensionError("need d >= 3")
    geom = prime_lattice(d) if _is_prime(d) else plain_lattice(d)
    ops = np.array([fano_operator(d, q, p) for q, p in geom.points])
    frame = Frame(dim=d, labels=geom.points, operators=ops / d, name="cohendet")
    dual = DualFrame(dim=d, labels=geom.points, operators=ops, name="cohendet")
    return Representation(
        name="cohendet", dim=d, frame=frame, dual=dual, geometry=geom, meta={"d": d}
    )


def extended_distribution(mu: QuasiDistribution) -> QuasiDistribution:
    """Lift the odd-lattice values to the nonnegative doubled-lattice form.

    Each point (q, p) splits into (q, p, +1) and (q, p, -1) carrying
    (1/4d)(2/d + sigma * mu(q, p)).
    """
    if mu.representation != "cohendet":
        raise ValueError("expected values from the odd-lattice representation")
    d = mu.dim
    geom = extended_lattice(d)
    plus = (2.0 / d + mu.values) / (4.0 * d)
    minus = (2.0 / d - mu.values) / (4.0 * d)
    values = np.concatenate([plus, minus])
    warnings = tuple(mu.warnings)
    if values.min() < -1e-12:
        warnings = warnings + ("extended-negative",)
    return QuasiDistribution(
        representation="cohendet-extended",
        dim=d,
        labels=geom.points,
        values=values,
        warnings=warnings,
    )


def from_extended(ext: QuasiDistribution) -> QuasiDistribution:
    """Undo the doubling: mu(q, p) = 2d (mu(q,p,+1) - mu(q,p,-1))."""
    if ext.representation != "cohendet-extended":
        raise ValueError("expected values on the doubled lattice")
    d = ext.dim
    half = d * d
    values = 2.0 * d * (ext.values[:half] - ext.values[half:])
    geom = prime_lattice(d) if _is_prime(d) else plain_lattice(d)
    return QuasiDistribution(
        representation="cohendet",
        dim=d,
        labels=geom.points,
        values=values,
        warnings=(),
    )

"""Discrete Wigner representation over a Galois field GF(p^n).

Phase space is the lattice GF(p^n) x GF(p^n).  Position coordinates expand
in the polynomial basis, momentum coordinates in its trace-dual basis, and
the point (q, p) carries the translation unitary

    T(q,p) = X^{q_0} Z^{p_0} (x) ... (x) X^{q_{n-1}} Z^{p_{n-1}}.

The translations along a ray (a line through the origin) commute, so each
striation has a joint eigenbasis.  A quantum net assigns one eigenvector to
the ray and propagates it to the parallel lines by translation covariance,

    Q(tau_alpha lam) = T_alpha Q(lam) T_alpha^dag.

Phase-point operators are A(alpha) = sum over the d+1 lines through alpha of
Q(line), minus the identity; the frame is {A/d} with dual {A}.  The net
freedom (one choice of eigenvector per striation) is exposed as a tuple of
shifts; the default picks the first eigenvector in a deterministic
eigenvalue-phase ordering.
"""

from __future__ import annotations

import numpy as np

from ..errors import UnsupportedDimensionError
from ..finitefield import FiniteField
from ..frames import DualFrame, Frame
from ..geometry import field_lattice
from ..operators import clock_matrix, eigh_fixed, shift_matrix, tensor
from .base import Representation, striation_pvms
from .wootters import wootters

__all__ = [
    "translation_operator",
    "ghw",
    "wootters_aligned_net",
    "match_phase_points",
]


def translation_operator(field: FiniteField, q, p) -> np.ndarray:
    """Tensor-product shift/clock word for the phase-space point (q, p)."""
    F = field
    qe, pe = F.element(q), F.element(p)
    basis = F.polynomial_basis()
    dual = F.dual_basis(basis)
    qc = F.expand(qe, basis)
    pc = F.expand(pe, dual)
    X, Z = shift_matrix(F.p), clock_matrix(F.p)
    factors = [
        np.linalg.matrix_power(X, qi) @ np.linalg.matrix_power(Z, pi)
        for qi, pi in zip(qc, pc)
    ]
    return tensor(*factors)


def _phase_key(angle: float, p: int) -> int:
    """Quantize an eigenvalue phase to the admissible root-of-unity grid."""
    quantum = 2 * np.pi / (4 * p * p)
    k = int(round(angle / quantum)) % (4 * p * p)
    if abs(angle - round(angle / quantum) * quantum) > 1e-6:
        raise RuntimeError(f"eigenvalue phase {angle} off the root-of-unity grid")
    return k


def _joint_eigenbasis(ops: list[np.ndarray], p: int) -> np.ndarray:
    """Common eigenvectors of commuting unitaries, deterministically ordered.

    Columns are sorted by the tuple of eigenvalue phases against the given
    operator list and gauge-fixed (first sizable component real positive).
    """
    d = ops[0].shape[0]
    for attempt in range(4):
        H = np.zeros((d, d), dtype=complex)
        for k, U in enumerate(ops):
            a = (1.0 + 0.37 * k) * np.exp(1j * (0.618034 * (k + 1) + 0.311 * attempt))
            H += a * U + np.conj(a) * U.conj().T
        _, vecs = eigh_fixed(H)
        keys = []
        good = True
        for i in range(d):
            v = vecs[:, i]
            key = []
            for U in ops:
                lam = np.vdot(v, U @ v)
                if np.linalg.norm(U @ v - lam * v) > 1e-8:
                    good = False
                    break
                ang = float(np.angle(lam)) % (2 * np.pi)
                key.append(_phase_key(ang, p))
            if not good:
                break
            keys.append(tuple(key))
        if good:
            order = sorted(range(d), key=lambda i: keys[i])
            out = vecs[:, order]
            for i in range(d):
                col = out[:, i]
                nz = np.flatnonzero(np.abs(col) > 1e-12)
                out[:, i] = col / (col[nz[0]] / abs(col[nz[0]]))
            return out
    raise RuntimeError("failed to split a degenerate commuting family")


def _build_structure(field: FiniteField):
    """Geometry, striation eigenbases and line translations for a field."""
    F = field
    geom = field_lattice(F)
    elems = F.elements()
    nonzero = elems[1:]
    directions = geom.meta["directions"]
    striations = []
    for s, (dq, dp) in enumerate(directions):
        dqe, dpe = F.element(dq), F.element(dp)
        ray_ops = [translation_operator(F, (t * dqe).to_int(), (t * dpe).to_int()) for t in nonzero]
        basis = _joint_eigenbasis(ray_ops, F.p)
        # Transversal translations reaching each line, in intercept order.
        if s == 0:
            trans = [translation_operator(F, c.to_int(), 0) for c in elems]
        else:
            trans = [translation_operator(F, 0, c.to_int()) for c in elems]
        striations.append({"basis": basis, "translations": trans})
    return geom, striations


def _net_projectors(striations, net: tuple[int, ...]) -> list[list[np.ndarray]]:
    out = []
    for s, data in enumerate(striations):
        v = data["basis"][:, net[s]]
        Q0 = np.outer(v, v.conj())
        out.append([T @ Q0 @ T.conj().T for T in data["translations"]])
    return out


def ghw(p: int, n: int = 1, net: tuple[int, ...] | None = None,
        field: FiniteField | None = None) -> Representation:
    """Finite-field Wigner representation in dimension d = p^n."""
    F = field if field is not None else FiniteField(p, n)
    if (F.p, F.n) != (p, n):
        raise UnsupportedDimensionError("field does not match the requested (p, n)")
    d = F.order
    geom, striations = _build_structure(F)
    if net is None:
        net = (0,) * (d + 1)
    net = tuple(int(t) % d for t in net)
    if len(net) != d + 1:
        raise UnsupportedDimensionError(f"a net needs {d + 1} shifts, got {len(net)}")
    line_proj = _net_projectors(striations, net)

    # Map each point to its containing line within every striation.
    line_of = {pt: {} for pt in geom.points}
    for s, lines in enumerate(geom.striations):
        for c, li in enumerate(lines):
            for pt in geom.lines[li]:
                line_of[pt][s] = c

    eye = np.eye(d, dtype=complex)
    ops = []
    for pt in geom.points:
        A = -eye.copy()
        for s in range(d + 1):
            A += line_proj[s][line_of[pt][s]]
        ops.append(A)
    ops = np.array(ops)

    flat_proj = [None] * len(geom.lines)
    for s, lines in enumerate(geom.striations):
        for c, li in enumerate(lines):
            flat_proj[li] = line_proj[s][c]

    frame = Frame(dim=d, labels=geom.points, operators=ops / d, name="ghw")
    dual = DualFrame(dim=d, labels=geom.points, operators=ops, name="ghw")
    return Representation(
        name="ghw",
        dim=d,
        frame=frame,
        dual=dual,
        geometry=geom,
        meta={
            "field": F,
            "net": net,
            "line_projectors": flat_proj,
            "striation_bases": [s["basis"] for s in striations],
        },
    )


def wootters_aligned_net(p: int) -> tuple[int, ...]:
    """Net shifts making the GF(p) construction coincide with the prime-lattice one.

    For each striation the eigenvector matching the prime-lattice projector
    of the line through the origin is selected.
    """
    woo = wootters(p)
    pvms = striation_pvms(woo)
    F = FiniteField(p, 1)
    _, striations = _build_structure(F)
    net = []
    for s, data in enumerate(striations):
        target = pvms[s][0]
        basis = data["basis"]
        overlaps = [np.real(np.vdot(basis[:, t], target @ basis[:, t])) for t in range(p)]
        best = int(np.argmax(overlaps))
        if overlaps[best] < 1 - 1e-8:
            raise RuntimeError(f"no eigenvector matches the striation-{s} ray projector")
        net.append(best)
    return tuple(net)


def match_phase_points(rep_a: Representation, rep_b: Representation,
                       tol: float = 1e-10) -> dict | None:
    """Point bijection with equal dual operators, or None if there is none.

    Matches each phase-point operator of ``rep_a`` to the unique operator of
    ``rep_b`` at maximal trace overlap and verifies exact equality.
    """
    if rep_a.dim != rep_b.dim:
        return None
    d = rep_a.dim
    A, B = rep_a.dual.operators, rep_b.dual.operators
    overlap = np.real(np.einsum("nij,mji->nm", A, B)) / d
    mapping = {}
    used = set()
    for i, la in enumerate(rep_a.labels):
        j = int(np.argmax(overlap[i]))
        if j in used or np.max(np.abs(A[i] - B[j])) > tol:
            return None
        used.add(j)
        mapping[la] = rep_b.labels[j]
    return mapping

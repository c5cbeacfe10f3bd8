"""Diagnostics built on the representations.

Negativity-based entanglement tests for two qubits, classicality of noisy
NMR-style states, stabilizer positivity, phase-space teleportation, and a
CHSH-type inequality evaluated on the singlet.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .errors import DimensionMismatchError, UnsupportedDimensionError
from .finitefield import _is_prime
from .frames import QuasiDistribution
from .operators import (
    bloch_state,
    eigh_fixed,
    is_density,
    partial_trace,
    partial_transpose,
    qubit_stabilizer_states,
    tensor,
    weyl_operator,
)
from .representations import (
    Representation,
    nmr_sample_directions,
    qubit_kernel_upper,
    wootters,
    wootters_composite,
)

FRANCO_PENNA_THRESHOLD = (1.0 - np.sqrt(3.0)) / 8.0
EQ_GUARD = 1e-12


@dataclass(frozen=True)
class EntanglementVerdict:
    """Outcome of an entanglement test with its decision threshold."""

    min_value: float
    threshold: float
    verdict: str
    method: str
    diagnostics: dict = field(default_factory=dict)


@dataclass(frozen=True)
class NmrReport:
    """Sampled positivity of a depolarized register state."""

    n_qubits: int
    epsilon: float
    epsilon_bound: float
    sampled_min: float
    classical: bool
    analytic_min: float
    bound_respected: bool
    tuple_count: int


@dataclass(frozen=True)
class TeleportOutcome:
    """Conditioned output of one Bell-measurement branch."""

    outcome: tuple
    probability: float
    mu_out: QuasiDistribution
    displacement_residual: float
    state_out: np.ndarray


def _check_two_qubit_lattice(mu: QuasiDistribution) -> None:
    ok = (
        mu.representation == "wootters"
        and mu.dim == 4
        and len(mu.labels) == 16
        and all(
            isinstance(lab, tuple)
            and len(lab) == 2
            and all(
                isinstance(f, tuple) and len(f) == 2 and set(f) <= {0, 1}
                for f in lab
            )
            for lab in mu.labels
        )
    )
    if not ok:
        raise DimensionMismatchError(
            "expected a distribution from the two-qubit product lattice"
        )


def franco_penna(mu: QuasiDistribution) -> EntanglementVerdict:
    """Entanglement witness from two-qubit lattice negativity.

    Separable states never dip below (1 - sqrt 3)/8, so a strictly smaller
    minimum certifies entanglement; anything else is inconclusive.
    """
    _check_two_qubit_lattice(mu)
    mn = float(mu.values.min())
    verdict = "entangled" if mn < FRANCO_PENNA_THRESHOLD - EQ_GUARD else "inconclusive"
    return EntanglementVerdict(
        min_value=mn,
        threshold=FRANCO_PENNA_THRESHOLD,
        verdict=verdict,
        method="lattice-negativity",
    )


def ppt_separability_two_qubit(rho: np.ndarray) -> EntanglementVerdict:
    """Two-qubit separability from the partial-transpose spectrum.

    The verdict comes from the sign of the smallest eigenvalue of rho^(T2),
    which is decisive at this dimension.  The minima of the lattice
    distributions of rho and rho^(T2) ride along as diagnostics.
    """
    rho = np.asarray(rho, dtype=complex)
    if rho.shape != (4, 4):
        raise DimensionMismatchError("state must be 4 x 4")
    rho_pt = partial_transpose(rho, (2, 2), 1)
    eig_min = float(np.linalg.eigvalsh(rho_pt).min())
    rep = wootters_composite([2, 2])
    dwf_min = float(rep.represent(rho).values.min())
    dwf_min_pt = float(rep.represent(rho_pt).values.min())
    verdict = "separable" if eig_min >= -1e-10 else "entangled"
    return EntanglementVerdict(
        min_value=eig_min,
        threshold=0.0,
        verdict=verdict,
        method="ppt",
        diagnostics={
            "dwf_min": dwf_min,
            "dwf_min_partial_transpose": dwf_min_pt,
            "dwf_criterion_separable": bool(
                dwf_min >= -1e-10 and dwf_min_pt >= -1e-10
            ),
        },
    )


def negativity_witness(rep: Representation, tol: float = 1e-6) -> dict:
    """Exhibit nonclassicality of a frame/dual pair.

    Searches for a pure state with a quasi-probability below -tol; failing
    that (positive frames), for a rank-1 projector whose effect function
    leaves [0, 1].  Extremal eigenvectors of the frame and dual operators
    realize both bounds, so the scan is exhaustive.
    """
    best_val = 0.0
    best_vec = None
    for F in rep.frame.operators:
        vals, vecs = eigh_fixed(F)
        if vals[0] < best_val:
            best_val = vals[0]
            best_vec = vecs[:, 0]
    if best_val < -tol and best_vec is not None:
        state = np.outer(best_vec, best_vec.conj())
        mu = rep.represent(state)
        idx = int(np.argmin(mu.values))
        return {
            "found": True,
            "kind": "state",
            "representation": rep.name,
            "value": float(mu.values[idx]),
            "label": rep.labels[idx],
            "witness": state,
        }
    for i, D in enumerate(rep.dual.operators):
        vals, vecs = eigh_fixed(D)
        for j in (0, len(vals) - 1):
            lam = float(vals[j])
            if lam < -tol or lam > 1.0 + tol:
                vec = vecs[:, j]
                effect = np.outer(vec, vec.conj())
                xi = rep.effect(effect)
                return {
                    "found": True,
                    "kind": "effect",
                    "representation": rep.name,
                    "value": float(xi.values[i]),
                    "label": rep.labels[i],
                    "witness": effect,
                }
    return {"found": False, "representation": rep.name}


def stabilizer_positivity_check(seed: int = 0, mixtures: int = 100) -> dict:
    """Single-qubit lattice positivity over the stabilizer octahedron.

    The six stabilizer states and their random convex mixtures stay
    nonnegative; the Bloch-(1,1,1)/sqrt(3) state does not.
    """
    rep = wootters(2)
    stab = qubit_stabilizer_states()
    stab_min = min(float(rep.represent(s).values.min()) for s in stab)
    c = 1.0 / np.sqrt(3.0)
    magic_min = float(rep.represent(bloch_state(c, c, c)).values.min())
    rng = np.random.default_rng(seed)
    mix_min = np.inf
    for _ in range(mixtures):
        w = rng.dirichlet(np.ones(len(stab)))
        rho = sum(wi * si for wi, si in zip(w, stab))
        mix_min = min(mix_min, float(rep.represent(rho).values.min()))
    return {
        "stabilizer_min": stab_min,
        "magic_state_min": magic_min,
        "mixture_min": float(mix_min),
        "stabilizers_nonnegative": stab_min >= -1e-10,
        "mixtures_nonnegative": float(mix_min) >= -1e-10,
        "mixtures": mixtures,
        "seed": seed,
    }


_NMR_DEFAULT_GRID = {1: 10014, 2: 114, 3: 26}


def _nmr_distribution(rho: np.ndarray, n_qubits: int, grid: np.ndarray) -> np.ndarray:
    uppers = np.array([qubit_kernel_upper(n) for n in grid])
    shape = (2,) * (2 * n_qubits)
    R = rho.reshape(shape)
    if n_qubits == 1:
        out = np.einsum("ab,kba->k", rho, uppers)
    elif n_qubits == 2:
        out = np.einsum("abcd,ica,jdb->ij", R, uppers, uppers)
    else:
        out = np.einsum("abcdef,ida,jeb,kfc->ijk", R, uppers, uppers, uppers)
    return np.real(out).reshape(-1)


def nmr_classicality(
    n_qubits: int,
    epsilon: float,
    rho1: np.ndarray | None = None,
    samples: int | None = None,
) -> NmrReport:
    """Positivity of mu for rho = (1-eps) I/2^n + eps rho1 on sampled tuples.

    The distribution is evaluated against tensor products of the spin-1/2
    dual kernels over a direction grid that includes the axes and diagonals
    where the extrema sit.  Default rho1 is the tensor power of the
    Bloch-(1,1,1)/sqrt(3) pure state, which saturates the analytic bound.
    """
    if not 1 <= n_qubits <= 3:
        raise UnsupportedDimensionError("register capped at 3 qubits")
    if not 0.0 <= epsilon <= 1.0:
        raise ValueError(f"epsilon must lie in [0, 1], got {epsilon}")
    dim = 2**n_qubits
    if rho1 is None:
        c = 1.0 / np.sqrt(3.0)
        rho1 = tensor(*[bloch_state(c, c, c)] * n_qubits)
    else:
        rho1 = np.asarray(rho1, dtype=complex)
        if rho1.shape != (dim, dim):
            raise DimensionMismatchError(f"rho1 must be {dim} x {dim}")
        if not is_density(rho1, tol=1e-8):
            raise ValueError("rho1 must be a density operator")
    count = samples if samples is not None else _NMR_DEFAULT_GRID[n_qubits]
    grid = nmr_sample_directions(count)
    rho = (1.0 - epsilon) * np.eye(dim) / dim + epsilon * rho1
    values = _nmr_distribution(rho, n_qubits, grid)
    sampled_min = float(values.min())
    scale = (4.0 * np.pi) ** n_qubits
    analytic_min = ((1.0 - epsilon) - epsilon * 2 ** (2 * n_qubits - 1)) / scale
    bound = 1.0 / (1.0 + 2 ** (2 * n_qubits - 1))
    return NmrReport(
        n_qubits=n_qubits,
        epsilon=epsilon,
        epsilon_bound=bound,
        sampled_min=sampled_min,
        classical=epsilon <= bound + EQ_GUARD,
        analytic_min=analytic_min,
        bound_respected=sampled_min >= analytic_min - 1e-10,
        tuple_count=len(grid) ** n_qubits,
    )


def _bell_pair(d: int) -> np.ndarray:
    v = np.zeros(d * d, dtype=complex)
    for k in range(d):
        v[k * d + k] = 1.0
    return v / np.sqrt(d)


def teleport_phase_space(
    d: int, rho_in: np.ndarray, outcome: tuple[int, int]
) -> TeleportOutcome:
    """One branch of qudit teleportation, viewed on the lattice.

    Systems 2,3 share the maximally entangled pair; the Bell measurement on
    1,2 projects onto (I x U_(a,b))|pair>.  Conditioned on outcome (a,b) the
    output distribution is the input one displaced by (q,p) -> (q-a, p+b);
    the residual reports the worst deviation from that identity.
    """
    if not _is_prime(d) or d % 2 == 0:
        raise UnsupportedDimensionError(f"need an odd prime dimension, got {d}")
    rho_in = np.asarray(rho_in, dtype=complex)
    if rho_in.shape != (d, d):
        raise DimensionMismatchError(f"state must be {d} x {d}")
    alpha, beta = (int(outcome[0]) % d, int(outcome[1]) % d)
    pair = _bell_pair(d)
    bell = np.kron(np.eye(d), weyl_operator(alpha, beta, d)) @ pair
    total = tensor(rho_in, np.outer(pair, pair.conj()))
    proj = tensor(np.outer(bell, bell.conj()), np.eye(d))
    post = proj @ total @ proj
    prob = float(np.trace(post).real)
    rho_out = partial_trace(post, (d, d, d), keep=(2,)) / prob
    rep = wootters(d)
    mu_in = rep.represent(rho_in)
    mu_out = rep.represent(rho_out)
    index = {lab: i for i, lab in enumerate(rep.labels)}
    displaced = np.array(
        [mu_in.values[index[((q - alpha) % d, (p + beta) % d)]] for q, p in rep.labels]
    )
    residual = float(np.max(np.abs(mu_out.values - displaced)))
    return TeleportOutcome(
        outcome=(alpha, beta),
        probability=prob,
        mu_out=mu_out,
        displacement_residual=residual,
        state_out=rho_out,
    )


def bell_chsh_demo(a: float, b: float, c: float) -> dict:
    """Singlet correlations for three coplanar spin axes and the CHSH bound.

    Correlation C(s, t) is computed by the Born rule from the +-1 outcome
    probabilities; the inequality compares |C(a,b) - C(a,c)| to 1 + C(b,c).
    """
    sx = np.array([[0.0, 1.0], [1.0, 0.0]], dtype=complex)
    sz = np.diag([1.0, -1.0]).astype(complex)
    v = np.zeros(4, dtype=complex)
    v[1] = 1.0 / np.sqrt(2.0)
    v[2] = -1.0 / np.sqrt(2.0)
    singlet = np.outer(v, v.conj())

    def projectors(theta):
        op = np.cos(theta) * sz + np.sin(theta) * sx
        eye = np.eye(2)
        return {+1: (eye + op) / 2, -1: (eye - op) / 2}

    def correlation(t1, t2):
        p1 = projectors(t1)
        p2 = projectors(t2)
        out = 0.0
        for s, Ps in p1.items():
            for t, Pt in p2.items():
                out += s * t * float(np.trace(singlet @ tensor(Ps, Pt)).real)
        return out

    c_ab = correlation(a, b)
    c_ac = correlation(a, c)
    c_bc = correlation(b, c)
    lhs = abs(c_ab - c_ac)
    rhs = 1.0 + c_bc
    return {
        "C_ab": c_ab,
        "C_ac": c_ac,
        "C_bc": c_bc,
        "lhs": lhs,
        "rhs": rhs,
        "violated": bool(lhs > rhs + 1e-10),
    }

"""Spin kernels on the sphere and their discrete constellation versions."""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from ..errors import SingularBasisError, UnsupportedDimensionError
from ..frames import DualFrame, Frame, gram_dual
from .base import Representation

GRAM_CONDITION_LIMIT = 1e8
MAX_SPIN = 4.0

# standard Pauli matrices; sigma_y differs in sign from the shift/clock Y
SIGMA = (
    np.array([[0.0, 1.0], [1.0, 0.0]], dtype=complex),
    np.array([[0.0, -1.0j], [1.0j, 0.0]], dtype=complex),
    np.array([[1.0, 0.0], [0.0, -1.0]], dtype=complex),
)


def _two(x: float, name: str) -> int:
    t = round(2 * x)
    if abs(2 * x - t) > 1e-9:
        raise ValueError(f"{name} must be integer or half-integer, got {x}")
    return int(t)


def _lf(n: int) -> float:
    """log(n!) for integer n >= 0."""
    return math.lgamma(n + 1)


def clebsch_gordan(j1: float, m1: float, j2: float, m2: float, J: float, M: float) -> float:
    """Vector-coupling coefficient <j1 m1; j2 m2 | J M> in the Condon-Shortley phase."""
    tj1, tm1 = _two(j1, "j1"), _two(m1, "m1")
    tj2, tm2 = _two(j2, "j2"), _two(m2, "m2")
    tJ, tM = _two(J, "J"), _two(M, "M")
    if (tj1 + tm1) % 2 or (tj2 + tm2) % 2 or (tJ + tM) % 2:
        raise ValueError("m must differ from j by an integer")
    if abs(tm1) > tj1 or abs(tm2) > tj2 or abs(tM) > tJ:
        return 0.0
    if tm1 + tm2 != tM:
        return 0.0
    if tJ < abs(tj1 - tj2) or tJ > tj1 + tj2 or (tj1 + tj2 + tJ) % 2:
        return 0.0

    log_pref = 0.5 * (
        math.log(tJ + 1.0)
        + _lf((tj1 + tj2 - tJ) // 2)
        + _lf((tj1 - tj2 + tJ) // 2)
        + _lf((-tj1 + tj2 + tJ) // 2)
        - _lf((tj1 + tj2 + tJ) // 2 + 1)
        + _lf((tJ + tM) // 2)
        + _lf((tJ - tM) // 2)
        + _lf((tj1 - tm1) // 2)
        + _lf((tj1 + tm1) // 2)
        + _lf((tj2 - tm2) // 2)
        + _lf((tj2 + tm2) // 2)
    )
    kmin = max(0, (tj2 - tJ - tm1) // 2, (tj1 + tm2 - tJ) // 2)
    kmax = min((tj1 + tj2 - tJ) // 2, (tj1 - tm1) // 2, (tj2 + tm2) // 2)
    total = 0.0
    for k in range(kmin, kmax + 1):
        log_den = (
            _lf(k)
            + _lf((tj1 + tj2 - tJ) // 2 - k)
            + _lf((tj1 - tm1) // 2 - k)
            + _lf((tj2 + tm2) // 2 - k)
            + _lf((tJ - tj2 + tm1) // 2 + k)
            + _lf((tJ - tj1 - tm2) // 2 + k)
        )
        total += (-1.0) ** k * math.exp(log_pref - log_den)
    return total


def spin_operators(s: float) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    """Angular momentum matrices (Jx, Jy, Jz) on the basis m = s, s-1, ..., -s."""
    ts = _two(s, "s")
    d = ts + 1
    ms = s - np.arange(d)
    Jz = np.diag(ms).astype(complex)
    Jp = np.zeros((d, d), dtype=complex)
    for j in range(1, d):
        m = ms[j]
        Jp[j - 1, j] = math.sqrt(s * (s + 1) - m * (m + 1))
    Jm = Jp.conj().T
    Jx = (Jp + Jm) / 2
    Jy = (Jp - Jm) / 2j
    return Jx, Jy, Jz


def direction_basis(s: float, n) -> np.ndarray:
    """Eigenvectors of n . J, column j holding the eigenvalue (j - s) vector."""
    n = np.asarray(n, dtype=float)
    Jx, Jy, Jz = spin_operators(s)
    H = n[0] * Jx + n[1] * Jy + n[2] * Jz
    vals, vecs = np.linalg.eigh(H)
    d = vecs.shape[0]
    expect = np.arange(d) - s
    if np.max(np.abs(vals - expect)) > 1e-8:
        raise ValueError("direction must be a unit vector")
    for j in range(d):
        col = vecs[:, j]
        nz = np.flatnonzero(np.abs(col) > 1e-12)
        vecs[:, j] = col / (col[nz[0]] / abs(col[nz[0]]))
    return vecs


def kernel_weights(s: float, gammas) -> np.ndarray:
    """Spectrum of the kernel on the m-ladder: w_m = sum_l g_l (2l+1)/(2s+1) C^{s l s}_{m 0 m}."""
    ts = _two(s, "s")
    d = ts + 1
    gammas = np.asarray(gammas, dtype=float)
    if gammas.shape != (d,):
        raise ValueError(f"need {d} weights for spin {s}")
    if abs(gammas[0] - 1.0) > 1e-12:
        raise ValueError("the l=0 weight must equal 1")
    if np.any(np.abs(gammas) < 1e-12):
        raise ValueError("weights must be finite and non-zero")
    ms = np.arange(d) - s
    w = np.zeros(d)
    for j, m in enumerate(ms):
        acc = 0.0
        for l in range(d):
            acc += gammas[l] * (2 * l + 1) / d * clebsch_gordan(s, m, l, 0, s, m)
        w[j] = acc
    return w


@dataclass(frozen=True)
class SphericalKernel:
    """Family Delta(n) = sum_m w_m |n, m><n, m| defined by spin and l-weights."""

    s: float
    gammas: tuple[float, ...]
    weights: np.ndarray = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        if self.s <= 0 or _two(self.s, "s") < 1:
            raise UnsupportedDimensionError("spin must be positive")
        if self.s > MAX_SPIN:
            raise UnsupportedDimensionError(f"spin capped at {MAX_SPIN}")
        object.__setattr__(self, "gammas", tuple(float(g) for g in self.gammas))
        object.__setattr__(self, "weights", kernel_weights(self.s, self.gammas))

    @property
    def dim(self) -> int:
        return _two(self.s, "s") + 1

    def point(self, n) -> np.ndarray:
        V = direction_basis(self.s, n)
        return (V * self.weights) @ V.conj().T

    def dual(self) -> "SphericalKernel":
        return SphericalKernel(self.s, tuple(1.0 / g for g in self.gammas))


def stratonovich_kernel(s: float, gammas, point) -> np.ndarray:
    """Kernel matrix at one sphere point for the given l-weights (signs give the self-dual case)."""
    return SphericalKernel(s, tuple(gammas)).point(point)


def sphere_quadrature(s: float) -> tuple[np.ndarray, np.ndarray]:
    """Product quadrature on the sphere, exact for the degree reached by kernel pair products.

    Gauss-Legendre in cos(theta) times a uniform phi grid; weights sum to 4 pi.
    """
    ts = _two(s, "s")
    n_theta = ts + 2
    n_phi = 2 * ts + 3
    x, wx = np.polynomial.legendre.leggauss(n_theta)
    phis = 2 * np.pi * np.arange(n_phi) / n_phi
    pts = []
    wts = []
    for ct, w in zip(x, wx):
        st = math.sqrt(max(0.0, 1 - ct * ct))
        for ph in phis:
            pts.append((st * math.cos(ph), st * math.sin(ph), ct))
            wts.append(w * 2 * np.pi / n_phi)
    return np.array(pts), np.array(wts)


def tetrahedral_constellation() -> np.ndarray:
    r3 = math.sqrt(3.0)
    return np.array(
        [[1, 1, 1], [1, -1, -1], [-1, 1, -1], [-1, -1, 1]], dtype=float
    ) / r3


def _check_unit_rows(points: np.ndarray):
    norms = np.linalg.norm(points, axis=-1)
    if np.max(np.abs(norms - 1.0)) > 1e-9:
        raise ValueError("invalid point: directions must be unit vectors")


def stratonovich_discrete(s: float, constellation, gammas=None) -> Representation:
    """Point kernels on a d^2-point constellation with the Gram-inverse dual family."""
    kernel = SphericalKernel(s, tuple(gammas) if gammas is not None else (1.0,) * (_two(s, "s") + 1))
    d = kernel.dim
    points = np.asarray(constellation, dtype=float)
    if points.shape != (d * d, 3):
        raise ValueError(f"need {d * d} sphere points, got shape {points.shape}")
    _check_unit_rows(points)
    ops = np.array([kernel.point(n) for n in points])
    labels = tuple(range(d * d))
    frame = Frame(dim=d, labels=labels, operators=ops, name="stratonovich")
    gram = np.einsum("aij,bji->ab", ops, ops).real
    if np.linalg.cond(gram) > GRAM_CONDITION_LIMIT:
        raise SingularBasisError(
            "constellation kernel Gram matrix is ill conditioned; redraw the points"
        )
    dual = gram_dual(frame)
    return Representation(
        name="stratonovich",
        dim=d,
        frame=frame,
        dual=dual,
        geometry=None,
        meta={"s": s, "constellation": points, "gammas": kernel.gammas},
    )


def random_constellation(s: float, seed=None, gammas=None, max_draws: int = 50):
    """Uniform sphere points for a spin-s constellation; redraws on bad conditioning.

    Returns (points, draws) where draws counts the attempts consumed.
    """
    rng = np.random.default_rng(seed)
    ts = _two(s, "s")
    d = ts + 1
    kernel = SphericalKernel(s, tuple(gammas) if gammas is not None else (1.0,) * d)
    for draw in range(1, max_draws + 1):
        raw = rng.normal(size=(d * d, 3))
        pts = raw / np.linalg.norm(raw, axis=1, keepdims=True)
        ops = np.array([kernel.point(n) for n in pts])
        gram = np.einsum("aij,bji->ab", ops, ops).real
        if np.linalg.cond(gram) <= GRAM_CONDITION_LIMIT:
            return pts, draw
    raise SingularBasisError(f"no well conditioned constellation in {max_draws} draws")


def qubit_kernel_lower(n) -> np.ndarray:
    """(1/2)(I + n . sigma)."""
    n = np.asarray(n, dtype=float)
    _check_unit_rows(n)
    return 0.5 * (np.eye(2) + n[0] * SIGMA[0] + n[1] * SIGMA[1] + n[2] * SIGMA[2])


def qubit_kernel_upper(n) -> np.ndarray:
    """(1/4pi)(I + 3 n . sigma)."""
    n = np.asarray(n, dtype=float)
    _check_unit_rows(n)
    core = np.eye(2) + 3 * (n[0] * SIGMA[0] + n[1] * SIGMA[1] + n[2] * SIGMA[2])
    return core / (4 * np.pi)


@dataclass(frozen=True)
class NmrKernels:
    """Tensor products of the qubit kernel pair over a register of qubits."""

    n_qubits: int

    def __post_init__(self):
        if not 1 <= self.n_qubits <= 3:
            raise UnsupportedDimensionError("register capped at 3 qubits")

    def _tensor(self, directions, factor) -> np.ndarray:
        dirs = np.asarray(directions, dtype=float).reshape(self.n_qubits, 3)
        out = np.array([[1.0 + 0j]])
        for n in dirs:
            out = np.kron(out, factor(n))
        return out

    def lower(self, directions) -> np.ndarray:
        return self._tensor(directions, qubit_kernel_lower)

    def upper(self, directions) -> np.ndarray:
        return self._tensor(directions, qubit_kernel_upper)


def nmr_kernels(n_qubits: int, sample_points=None):
    """Kernel pair evaluator; with sample points, the list of (lower, upper) matrices."""
    kit = NmrKernels(n_qubits)
    if sample_points is None:
        return kit
    return [(kit.lower(tup), kit.upper(tup)) for tup in sample_points]


def fibonacci_sphere(count: int) -> np.ndarray:
    """Deterministic, nearly uniform sphere covering."""
    if count < 1:
        raise ValueError("need at least one point")
    i = np.arange(count)
    z = 1.0 - (2.0 * i + 1.0) / count
    theta = np.pi * (3.0 - math.sqrt(5.0)) * i
    r = np.sqrt(np.maximum(0.0, 1.0 - z * z))
    pts = np.stack([r * np.cos(theta), r * np.sin(theta), z], axis=1)
    return pts / np.linalg.norm(pts, axis=1, keepdims=True)


def nmr_sample_directions(count: int) -> np.ndarray:
    """Sphere grid for worst-case scans: Fibonacci points plus axes and cube diagonals."""
    axes = np.array(
        [[1, 0, 0], [-1, 0, 0], [0, 1, 0], [0, -1, 0], [0, 0, 1], [0, 0, -1]],
        dtype=float,
    )
    diag = np.array(
        [[sx, sy, sz] for sx in (1, -1) for sy in (1, -1) for sz in (1, -1)],
        dtype=float,
    ) / math.sqrt(3.0)
    fixed = np.vstack([axes, diag])
    if count <= len(fixed):
        return fixed[:count]
    return np.vstack([fixed, fibonacci_sphere(count - len(fixed))])

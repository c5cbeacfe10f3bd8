"""Discrete phase-space geometries: point lattices, lines and striations.

A striation is a maximal family of parallel lines partitioning the lattice.
For a lattice over Z_d (d prime) or GF(p^n) there are d+1 striations: the
vertical one and one per slope.  Composite lattices take Cartesian products
of component lines and extended lattices adjoin a sign bit to each point.

Point labels are plain tuples of integers so they serialize directly; field
elements are encoded by their canonical integer code.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field

from .errors import UnsupportedDimensionError
from .finitefield import FiniteField

__all__ = [
    "PhaseSpaceGeometry",
    "prime_lattice",
    "field_lattice",
    "composite_lattice",
    "extended_lattice",
    "lines_through",
    "check_geometry_axioms",
]


@dataclass(frozen=True)
class PhaseSpaceGeometry:
    kind: str
    points: tuple
    lines: tuple
    striations: tuple
    meta: dict = field(default_factory=dict, compare=False)

    def line_points(self, index: int) -> tuple:
        return self.lines[index]

    def striation_lines(self, index: int) -> list[tuple]:
        return [self.lines[i] for i in self.striations[index]]


def _is_prime(d: int) -> bool:
    if d < 2:
        return False
    k = 2
    while k * k <= d:
        if d % k == 0:
            return False
        k += 1
    return True


def prime_lattice(d: int) -> PhaseSpaceGeometry:
    """The (q, p) lattice over Z_d with its d+1 striations.

    Striation 0 collects the vertical lines q = c; striation 1 + m the lines
    p = m q + c.  Lines are ordered by intercept c, points row-major.
    """
    if not _is_prime(d):
        raise UnsupportedDimensionError(f"lattice striations need prime d, got {d}")
    points = tuple((q, p) for q in range(d) for p in range(d))
    lines: list[tuple] = []
    striations: list[tuple[int, ...]] = []
    vertical = []
    for c in range(d):
        lines.append(tuple((c, p) for p in range(d)))
        vertical.append(len(lines) - 1)
    striations.append(tuple(vertical))
    for m in range(d):
        idxs = []
        for c in range(d):
            lines.append(tuple((q, (m * q + c) % d) for q in range(d)))
            idxs.append(len(lines) - 1)
        striations.append(tuple(idxs))
    directions = [(0, 1)] + [(1, m) for m in range(d)]
    return PhaseSpaceGeometry(
        kind="prime-lattice",
        points=points,
        lines=tuple(lines),
        striations=tuple(striations),
        meta={"d": d, "directions": directions},
    )


def field_lattice(fieldobj: FiniteField) -> PhaseSpaceGeometry:
    """The (x, y) lattice over GF(p^n), labels by canonical integer code."""
    F = fieldobj
    elems = F.elements()
    points = tuple((a.to_int(), b.to_int()) for a in elems for b in elems)
    lines: list[tuple] = []
    striations: list[tuple[int, ...]] = []
    vertical = []
    for c in elems:
        lines.append(tuple((c.to_int(), b.to_int()) for b in elems))
        vertical.append(len(lines) - 1)
    striations.append(tuple(vertical))
    for m in elems:
        idxs = []
        for c in elems:
            lines.append(tuple((a.to_int(), (m * a + c).to_int()) for a in elems))
            idxs.append(len(lines) - 1)
        striations.append(tuple(idxs))
    directions = [(F.zero.to_int(), F.one.to_int())] + [(F.one.to_int(), m.to_int()) for m in elems]
    return PhaseSpaceGeometry(
        kind="field-lattice",
        points=points,
        lines=tuple(lines),
        striations=tuple(striations),
        meta={"field": F, "d": F.order, "directions": directions},
    )


def composite_lattice(parts: list[PhaseSpaceGeometry]) -> PhaseSpaceGeometry:
    """Cartesian product of component lattices.

    Points are tuples of component points; each product of component lines is
    a line, each product of component striations a striation.
    """
    if not parts:
        raise ValueError("need at least one component geometry")
    points = tuple(itertools.product(*[g.points for g in parts]))
    lines: list[tuple] = []
    striations: list[tuple[int, ...]] = []
    for combo in itertools.product(*[range(len(g.striations)) for g in parts]):
        idxs = []
        for line_ids in itertools.product(*[g.striations[s] for g, s in zip(parts, combo)]):
            pts = tuple(itertools.product(*[g.lines[i] for g, i in zip(parts, line_ids)]))
            lines.append(pts)
            idxs.append(len(lines) - 1)
        striations.append(tuple(idxs))
    return PhaseSpaceGeometry(
        kind="composite-lattice",
        points=points,
        lines=tuple(lines),
        striations=tuple(striations),
        meta={"dims": [len(g.points) for g in parts]},
    )


def plain_lattice(side_q: int, side_p: int | None = None, kind: str = "lattice") -> PhaseSpaceGeometry:
    """A bare (q, p) grid with no line structure, serialized row-major."""
    if side_p is None:
        side_p = side_q
    points = tuple((q, p) for q in range(side_q) for p in range(side_p))
    return PhaseSpaceGeometry(
        kind=kind,
        points=points,
        lines=(),
        striations=(),
        meta={"shape": [side_q, side_p]},
    )


def extended_lattice(d: int) -> PhaseSpaceGeometry:
    """The doubled lattice Z_d x Z_d x {+1, -1}; the +1 block comes first."""
    points = tuple((q, p, s) for s in (1, -1) for q in range(d) for p in range(d))
    return PhaseSpaceGeometry(
        kind="extended-lattice",
        points=points,
        lines=(),
        striations=(),
        meta={"d": d},
    )


def lines_through(geom: PhaseSpaceGeometry, point) -> list[int]:
    """Indices of all lines containing the given point."""
    return [i for i, line in enumerate(geom.lines) if point in line]


def check_geometry_axioms(geom: PhaseSpaceGeometry) -> dict[str, bool]:
    """Affine-plane axioms for lattice geometries with lines.

    Checks that two distinct points share exactly one line, that striations
    partition the points, and that non-parallel lines meet in exactly one
    point.
    """
    membership: dict = {pt: set() for pt in geom.points}
    for i, line in enumerate(geom.lines):
        for pt in line:
            membership[pt].add(i)

    unique_join = True
    for a, b in itertools.combinations(geom.points, 2):
        if len(membership[a] & membership[b]) != 1:
            unique_join = False
            break

    partition = True
    for lines in geom.striations:
        seen: list = []
        for i in lines:
            seen.extend(geom.lines[i])
        if sorted(seen) != sorted(geom.points):
            partition = False
            break

    single_meet = True
    line_striation = {}
    for s, lines in enumerate(geom.striations):
        for i in lines:
            line_striation[i] = s
    for i, j in itertools.combinations(range(len(geom.lines)), 2):
        if line_striation.get(i) == line_striation.get(j):
            continue
        common = set(geom.lines[i]) & set(geom.lines[j])
        if len(common) != 1:
            single_meet = False
            break

    return {
        "two-points-one-line": unique_join,
        "striations-partition": partition,
        "nonparallel-lines-meet-once": single_meet,
    }

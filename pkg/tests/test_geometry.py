"""Lattice geometries: counting, ordering and affine axioms."""

import pytest

from qframe.errors import UnsupportedDimensionError
from qframe.finitefield import FiniteField
from qframe.geometry import (
    check_geometry_axioms,
    composite_lattice,
    extended_lattice,
    field_lattice,
    lines_through,
    prime_lattice,
)


@pytest.mark.parametrize("d", [2, 3, 5])
def test_prime_lattice_counts(d):
    g = prime_lattice(d)
    assert len(g.points) == d * d
    assert len(g.lines) == d * (d + 1)
    assert len(g.striations) == d + 1
    assert all(len(g.lines[i]) == d for i in range(len(g.lines)))


def test_prime_lattice_conventions():
    g = prime_lattice(3)
    assert g.points[:4] == ((0, 0), (0, 1), (0, 2), (1, 0))  # row-major
    # striation 0 vertical: first line is q = 0
    assert g.lines[g.striations[0][0]] == ((0, 0), (0, 1), (0, 2))
    # striation 1 has slope 0: horizontal lines
    assert g.lines[g.striations[1][0]] == ((0, 0), (1, 0), (2, 0))


@pytest.mark.parametrize("d", [2, 3, 5])
def test_prime_lattice_axioms(d):
    assert all(check_geometry_axioms(prime_lattice(d)).values())


def test_field_lattice_gf4():
    g = field_lattice(FiniteField(2, 2))
    assert len(g.points) == 16
    assert len(g.striations) == 5
    assert all(len(s) == 4 for s in g.striations)
    assert all(check_geometry_axioms(g).values())


def test_field_lattice_matches_prime_lattice_for_n1():
    gf = field_lattice(FiniteField(3, 1))
    gp = prime_lattice(3)
    assert gf.points == gp.points
    assert gf.lines == gp.lines
    assert gf.striations == gp.striations


def test_lines_through_point():
    g = prime_lattice(3)
    idx = lines_through(g, (1, 2))
    assert len(idx) == 4  # one line per striation
    strata = [next(s for s, lines in enumerate(g.striations) if i in lines) for i in idx]
    assert sorted(strata) == [0, 1, 2, 3]


def test_composite_lattice_two_qubits():
    g = composite_lattice([prime_lattice(2), prime_lattice(2)])
    assert len(g.points) == 16
    assert len(g.striations) == 9
    assert all(len(s) == 4 for s in g.striations)
    assert all(len(g.lines[i]) == 4 for s in g.striations for i in s)
    # composite points pair the component points
    assert g.points[0] == ((0, 0), (0, 0))


def test_extended_lattice_ordering():
    g = extended_lattice(3)
    assert len(g.points) == 18
    assert g.points[0] == (0, 0, 1)
    assert g.points[9] == (0, 0, -1)
    plus = [pt for pt in g.points if pt[2] == 1]
    assert plus == list(g.points[:9])


def test_nonprime_lattice_rejected():
    with pytest.raises(UnsupportedDimensionError):
        prime_lattice(4)

"""Multivariate polynomials, exact linear algebra and bracket tables."""

from fractions import Fraction as F

import pytest

from prymlab.symbolic import (BracketTable, MultiPoly, matrix_rank, rref,
                              solve_affine)


def test_multipoly_arithmetic():
    x, y, z = MultiPoly.variables(3)
    assert ((x + y) * (x - y) - x * x + y * y).is_zero()
    f = x * x * y + 3
    assert f.diff(0) == 2 * x * y
    assert f.diff(2).is_zero()
    assert f.eval([F(2), F(3), F(7)]) == 15
    assert f.subs([y, x, z]) == y * y * x + 3
    assert (2 * x - x - x).is_zero()
    assert f.total_degree() == 3


def test_multipoly_str():
    x, y = MultiPoly.variables(2)
    assert (x * x - y + 1).to_str(["u", "v"]) == "u^2 - v + 1"
    assert MultiPoly(2).to_str(["u", "v"]) == "0"


def test_multipoly_foreign_types_defer():
    x, _ = MultiPoly.variables(2)
    with pytest.raises(TypeError):
        x + "nope"


def test_rref_and_rank():
    A = [[F(1), F(2), F(3)], [F(2), F(4), F(6)], [F(0), F(1), F(1)]]
    _, pivots = rref(A)
    assert pivots == [0, 1]
    assert matrix_rank(A) == 2


def test_solve_affine():
    A = [[F(1), F(2), F(3)], [F(2), F(4), F(6)], [F(0), F(1), F(1)]]
    sol = solve_affine(A, [F(6), F(12), F(2)])
    assert sol.consistent and len(sol.kernel_basis) == 1
    x = sol.particular
    assert [sum(row[j] * x[j] for j in range(3)) for row in A] == [6, 12, 2]
    bad = solve_affine(A, [F(6), F(11), F(2)])
    assert not bad.consistent


def test_bracket_table_canonical_pair():
    # {q, p} = 1: Jacobi holds; hamiltonian field of p^2/2 is (p, 0)
    one = MultiPoly.const(2, 1)
    zero = MultiPoly(2)
    table = BracketTable(["q", "p"], [[zero, one], [-one, zero]])
    assert not table.antisymmetry_defects()
    assert table.jacobi_holds()
    p = MultiPoly.var(2, 1)
    field = table.hamiltonian_field(p * p * F(1, 2), [F(3), F(5)])
    assert field == [F(5), F(0)]


def test_bracket_table_detects_broken_jacobi():
    # {x,y} = z, {y,z} = x, {z,x} = x: jacobiator equals z, not zero
    x, y, z = MultiPoly.variables(3)
    zero = MultiPoly(3)
    bad = BracketTable(["x", "y", "z"],
                       [[zero, z, -x], [-z, zero, x], [x, -x, zero]])
    assert not bad.jacobi_holds()
    assert bad.jacobiator(0, 1, 2) == z
    # the so(3) structure constants do satisfy Jacobi
    good = BracketTable(["x", "y", "z"],
                        [[zero, z, -y], [-z, zero, x], [y, -x, zero]])
    assert good.jacobi_holds()

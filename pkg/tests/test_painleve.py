"""Balance combinatorics, Kowalevski spectra and the Laurent solver."""

from fractions import Fraction as F

import numpy as np
import pytest

from prymlab.errors import InvariantError, ResonanceError
from prymlab.painleve import (Balance, c_block, c_block_triangularization,
                              cyclic_runs, free_slots, in_sigma,
                              indicial_solutions, km_residual, kowalevski,
                              kowalevski_matrix, laurent_balance, make_balance,
                              sigma_enum, sigma_enum_brute, slot_name)

PRINCIPAL_PARAMS = {"a2.1": F(1), "a4.1": F(1, 6), "a3.2": F(3), "a5.2": F(2)}


# ---------------------------------------------------------------------------
# Sigma_n
# ---------------------------------------------------------------------------

def test_sigma_small_counts():
    assert len(sigma_enum(5)) == 11
    s4 = sigma_enum(4)
    assert len(s4) == 6 and (1, 2, 3, 4) in s4
    for n in range(3, 10):
        assert (1, 2) in sigma_enum(n)


@pytest.mark.parametrize("n", list(range(2, 17)))
def test_sigma_matches_brute_force(n):
    assert sigma_enum(n) == sigma_enum_brute(n)


def test_cyclic_runs():
    assert cyclic_runs((5, 1, 2), 5) == [[5, 1, 2]]
    assert cyclic_runs((1, 2, 4, 5), 6) == [[1, 2], [4, 5]]
    assert cyclic_runs(range(1, 5), 4) == [[1, 2, 3, 4]]
    assert in_sigma((1, 2), 5) and not in_sigma((1, 2, 3), 5)


# ---------------------------------------------------------------------------
# indicial solutions
# ---------------------------------------------------------------------------

def test_indicial_patterns():
    balances = {b.A: b for b in indicial_solutions(5)}
    assert len(balances) == 11
    assert balances[(1, 2)].alpha == (-1, 1, 0, 0, 0)
    assert balances[(1, 2)].r == (1, 1, -1, 0, -1)
    assert balances[(1, 2, 3, 4)].alpha == (-2, 1, -1, 2, 0)
    assert balances[()].alpha == (0,) * 5


def test_indicial_equation_holds_exactly():
    for balance in indicial_solutions(6):
        n = balance.n
        for i in range(n):
            a = balance.alpha
            assert -a[i] * 1 == a[i] * (a[(i - 1) % n] - a[(i + 1) % n]) or a[i] == 0
            assert balance.r[i] == a[(i + 1) % n] - a[(i - 1) % n]


def test_full_circle_excluded_only_from_indicial():
    assert tuple(range(1, 7)) in sigma_enum(6)
    assert all(len(b.A) < 6 for b in indicial_solutions(6))
    with pytest.raises(InvariantError):
        make_balance(6, range(1, 7))


def test_odd_runs_rejected():
    with pytest.raises(InvariantError):
        make_balance(5, (1, 2, 3))


# ---------------------------------------------------------------------------
# Kowalevski spectra
# ---------------------------------------------------------------------------

def test_kowalevski_principal_n5():
    report = kowalevski(5, (1, 2))
    assert report.spectrum == (-1, 1, 1, 2, 2)
    assert report.nonneg_count == 4
    payload = report.to_json()
    assert payload["nonneg_count"] == 4 and payload["A"] == [1, 2]


def test_c_block_spectra():
    for l in (1, 2, 3):
        eig = sorted(np.linalg.eigvals(
            np.array([[float(x) for x in row] for row in c_block(l)])).real)
        expected = sorted(list(range(-l, 0)) + list(range(1, l + 1)))
        assert max(abs(a - b) for a, b in zip(eig, expected)) < 1e-8


@pytest.mark.parametrize("l", [1, 2, 3, 4, 5])
def test_c_block_triangularization_basis(l):
    tri = c_block_triangularization(l)
    for i in range(l):
        for j in range(i):
            assert tri[i][j] == 0
    assert [tri[i][i] for i in range(l)] == [F((-1) ** i * (i + 1)) for i in range(l)]


def test_kowalevski_counts_sweep():
    for n in (3, 6, 9):
        for A in sigma_enum(n):
            if len(A) == n:
                continue
            report = kowalevski(n, A)
            assert report.nonneg_count == n - len(A) // 2
            matrix = np.array([[float(x) for x in row] for row in report.matrix])
            eig = np.sort_complex(np.linalg.eigvals(matrix))
            expected = np.sort_complex(np.array([complex(e) for e in report.spectrum]))
            assert np.max(np.abs(eig - expected)) < 1e-8


def test_kowalevski_rejects_bad_sets():
    with pytest.raises(InvariantError):
        kowalevski(5, (1, 2, 3))
    with pytest.raises(InvariantError):
        kowalevski(4, (1, 2, 3, 4))


# ---------------------------------------------------------------------------
# Laurent solutions
# ---------------------------------------------------------------------------

def test_principal_balance_closed_forms():
    balance = make_balance(5, (1, 2))
    al, de, ga, be = (PRINCIPAL_PARAMS["a2.1"], PRINCIPAL_PARAMS["a4.1"],
                      PRINCIPAL_PARAMS["a3.2"], PRINCIPAL_PARAMS["a5.2"])
    series = laurent_balance(5, balance, PRINCIPAL_PARAMS, 4)
    a1, a2, a3, a4, a5 = series
    assert a1.coefficient(-1) == -1 and a2.coefficient(-1) == 1
    assert a1.coefficient(0) == al and a2.coefficient(0) == al
    assert a1.coefficient(1) == -(al * al + 2 * be + ga) / 3
    assert a2.coefficient(1) == (al * al - be - 2 * ga) / 3
    assert a3.coefficient(1) == ga and a4.coefficient(0) == de
    assert a5.coefficient(1) == be


def test_residual_vanishes_through_window():
    balance = make_balance(5, (1, 2))
    series = laurent_balance(5, balance, PRINCIPAL_PARAMS, 12)
    for r in km_residual(series):
        assert r.known_through() >= 10
        assert r.is_zero_through(10)


def test_taylor_balance_is_initial_value_data():
    balance = make_balance(4, ())
    params = {slot_name(i, 1): F(i) for i in range(1, 5)}
    series = laurent_balance(4, balance, params, 6)
    for i, s in enumerate(series, start=1):
        assert s.coefficient(0) == i and s.pole_order() == 0
    for r in km_residual(series):
        assert r.is_zero_through(r.known_through())


def test_free_slot_count_equals_nonneg_eigenvalues():
    for n in (5, 6):
        for balance in indicial_solutions(n):
            assert len(free_slots(n, balance, 12)) \
                == kowalevski(n, balance.A).nonneg_count


def test_general_n_first_consistency_ties_alphas():
    balance = make_balance(7, (1, 2))
    params = {name: F(1) for name in free_slots(7, balance, 4)}
    series = laurent_balance(7, balance, params, 4)
    assert series[0].coefficient(0) == series[1].coefficient(0)


def test_parameter_errors():
    balance = make_balance(5, (1, 2))
    with pytest.raises(InvariantError, match="free slot"):
        laurent_balance(5, balance, {}, 3)
    bad = dict(PRINCIPAL_PARAMS)
    bad["a1.7"] = F(1)
    with pytest.raises(InvariantError, match="unused"):
        laurent_balance(5, balance, bad, 3)


def test_resonance_failure_detected():
    # a leading configuration violating the indicial equation hits an
    # unsolvable resonance in the coefficient recursion
    bogus = Balance(3, (1, 3), (F(-2), F(0), F(2)), (1, 0, 1))
    params = {name: F(1) for name in free_slots(3, bogus, 5)}
    with pytest.raises(ResonanceError):
        laurent_balance(3, bogus, params, 5)


def test_spectrum_conserved_along_series():
    # K(x) coefficients are t-independent when the series is substituted
    from prymlab.algebra import Poly, TridiagSpec, tridiag_minor_det
    balance = make_balance(5, (1, 2))
    series = laurent_balance(5, balance, PRINCIPAL_PARAMS, 10)
    x = Poly([F(0), F(1)])
    spec = TridiagSpec.build([x] * 5, [-s for s in series[:4]],
                             [F(-1)] * 4)
    half_k = tridiag_minor_det(spec) - series[4] * tridiag_minor_det(spec, [1, 5])
    for coeff in half_k.coeffs:
        if isinstance(coeff, (int, F)) or coeff.known_zero():
            continue
        for e in range(coeff.leading_exponent(), coeff.known_through() + 1):
            if e != 0:
                assert coeff.coefficient(e) == 0


def test_kowalevski_matrix_entries():
    balance = make_balance(5, (1, 2))
    M = kowalevski_matrix(balance)
    assert M[0][1] == 1 and M[0][4] == -1  # alpha_1 = -1 row
    assert M[2][2] == 2 and M[3][3] == 1 and M[4][4] == 2

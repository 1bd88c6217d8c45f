"""Float integration lane: field agreement with the exact route,
conservation drift, convergence order, blow-up handling."""

from fractions import Fraction as F

import pytest

from prymlab.errors import InvariantError
from prymlab.mumford import (EVEN_MUMFORD, ODD_PRYM, flow_values, mumford_flow,
                             point_values, triple_from_values)
from prymlab.numerics import (Trajectory, _mumford_rhs, _prym_rhs, _toda_rhs,
                              integrate, km_rhs)
from prymlab.prym import prym_flow
from prymlab.sampling import km_point, mumford_triple, toda_point
from prymlab.toda import KMPoint, TodaPoint, km_field, toda_flow

REFERENCE = KMPoint((F(2), F(1, 2), F(1), F(1), F(1)))


def test_fixed_point_trajectory():
    traj = integrate("km", KMPoint((1, 1, 1, 1, 1)), None, 1.0, 0.01)
    assert all(abs(x - 1.0) < 1e-13 for x in traj.endpoint())
    assert not traj.truncated


def test_km_field_matches_exact(rng):
    point = km_point(rng, 6)
    exact = [float(x) for x in km_field(point.a)]
    numeric = km_rhs([float(x) for x in point.a])
    assert max(abs(a - b) for a, b in zip(exact, numeric)) < 1e-13


def test_toda_field_matches_exact(rng):
    point = toda_point(rng, 4)
    state = [float(x) for x in point.a] + [float(x) for x in point.b]
    for index in (1, 2, 3):
        da, db = toda_flow(point, index)
        exact = [float(x) for x in list(da) + list(db)]
        numeric = _toda_rhs(state, 4, index)
        assert max(abs(a - b) for a, b in zip(exact, numeric)) < 1e-9


def test_mumford_field_matches_exact(rng):
    point = mumford_triple(rng, EVEN_MUMFORD, 2)
    y = F(7, 10)
    du, dv, dw = mumford_flow(point, y)
    exact = [float(x) for x in flow_values(EVEN_MUMFORD, 2, du, dv, dw)]
    numeric = _mumford_rhs([float(x) for x in point_values(point)],
                           EVEN_MUMFORD, 2, float(y))
    assert max(abs(a - b) for a, b in zip(exact, numeric)) < 1e-8


def test_prym_field_matches_exact(rng):
    point = mumford_triple(rng, ODD_PRYM, 2)
    y = F(7, 10)
    du, dv, dw = prym_flow(point, y)
    exact = [float(x) for x in flow_values(ODD_PRYM, 2, du, dv, dw)]
    numeric = _prym_rhs([float(x) for x in point_values(point)],
                        ODD_PRYM, 2, float(y))
    assert max(abs(a - b) for a, b in zip(exact, numeric)) < 1e-8


def test_reference_run_drift():
    traj = integrate("km", REFERENCE, None, 10.0, 1e-3)
    assert not traj.truncated
    assert traj.drift["K"] <= 1e-8
    assert traj.drift["L"] <= 1e-8
    assert traj.drift["prod_a"] <= 1e-8


def test_even_n_products_drift():
    point = KMPoint((F(2), F(1, 2), F(3), F(1, 3)))
    traj = integrate("km", point, None, 5.0, 1e-3)
    assert traj.drift["P_odd"] <= 1e-8
    assert traj.drift["P_even"] <= 1e-8


def test_step_halving_is_fourth_order():
    ends = [integrate("km", REFERENCE, None, 10.0, h).endpoint()
            for h in (2e-2, 1e-2, 5e-3)]
    err1 = max(abs(a - b) for a, b in zip(ends[0], ends[1]))
    err2 = max(abs(a - b) for a, b in zip(ends[1], ends[2]))
    assert 12 <= err1 / err2 <= 20


def test_mumford_momentum_drift():
    point = __tame_mumford()
    traj = integrate("mumford", point, 0.3, 1.0, 1e-3)
    assert not traj.truncated
    assert max(traj.drift.values()) <= 1e-8


def __tame_mumford():
    from prymlab.mumford import triple_from_values
    values = [F(1, 3), F(-1, 4), F(1, 5), F(1, 6), F(-1, 3), F(1, 4),
              F(1, 8), F(-1, 5)]
    return triple_from_values(EVEN_MUMFORD, 2, values)


def test_flow_commutativity():
    point = __tame_mumford()
    y1, y2 = 0.5, -0.3

    def run(first, second):
        traj = integrate("mumford", point, first, 0.1, 1e-3)
        mid = triple_from_values(EVEN_MUMFORD, 2,
                                 [F(x).limit_denominator(10 ** 12)
                                  for x in traj.endpoint()])
        return integrate("mumford", mid, second, 0.1, 1e-3).endpoint()

    forward = run(y1, y2)
    backward = run(y2, y1)
    assert max(abs(a - b) for a, b in zip(forward, backward)) <= 1e-6


def test_blow_up_truncates():
    point = KMPoint((F(-2), F(-1, 2), F(1), F(1), F(1)))
    traj = integrate("km", point, None, 8.0, 1e-2)
    assert traj.truncated
    assert "overflow guard" in traj.note
    assert len(traj.times) < 801


def test_toda_drift_and_csv(rng, tmp_path):
    point = TodaPoint((F(2), F(1, 2), F(1), F(1)),
                      (F(1, 3), F(-1, 4), F(0), F(1, 5)))
    traj = integrate("toda", point, 1, 2.0, 1e-3)
    assert max(traj.drift.values()) <= 1e-8
    text = traj.csv()
    header = text.splitlines()[0].split(",")
    assert header[0] == "t" and "K0" in header and "prod_a" in header
    assert len(text.splitlines()) == len(traj.times) + 1
    summary = traj.drift_summary()
    assert summary["system"] == "toda" and not summary["truncated"]


def test_integrate_guards():
    with pytest.raises(InvariantError):
        integrate("km", REFERENCE, None, -1.0, 0.1)
    with pytest.raises(InvariantError):
        integrate("nonsense", REFERENCE, None, 1.0, 0.1)
    with pytest.raises(InvariantError):
        integrate("mumford", __prym_point(), 0.5, 1.0, 0.1)


def __prym_point():
    from prymlab.mumford import triple_from_values, _coord_layout
    u_s, v_s, w_s = _coord_layout(ODD_PRYM, 1)
    return triple_from_values(ODD_PRYM, 1,
                              [F(1, 2)] * (len(u_s) + len(v_s) + len(w_s)))

import math

import pytest

import aoi_sched as aoi


def test_constant_schedule():
    sol = aoi.solve_constant(10, 3, 1.0)
    assert sol.schedule.y == pytest.approx([2.25, 2.25, 2.25, 3.25], abs=1e-12)
    assert sol.schedule.c == pytest.approx([1.0, 1.0, 1.0])
    assert sol.branch == aoi.Branch.CONSTANT_SPREAD
    assert sol.regime["mode"] == "constant"


def test_constant_infeasible_raises():
    with pytest.raises(aoi.Infeasible):
        aoi.solve_constant(10, 3, 4.0)


def test_inverse_and_proportional():
    inv = aoi.solve(10, 3, "inverse", alpha=1.5)
    assert inv.schedule.y == pytest.approx([0.8511, 1.2766, 1.9149, 5.9574], abs=1e-4)
    prop = aoi.solve_proportional_age(6, 3, 1.0, 0.4)
    assert prop.schedule.y == pytest.approx([1.5625, 1.5625, 1.5625, 1.3125], abs=1e-12)
    b1, b2, b3 = aoi.proportional_bounds(3, 1.0, 0.4)
    assert b1 < b2 < b3


def test_bad_input_is_value_error():
    with pytest.raises(ValueError):
        aoi.solve(10, 3, "bogus")
    with pytest.raises(ValueError):
        aoi.solve_inverse_age(10, 0, 0.5)


def test_feasibility_and_total_age():
    s = aoi.Schedule([2.0, 2.0, 2.0, 4.0], [1.0, 1.0, 1.0])
    assert aoi.total_age(s) == pytest.approx(0.5 * (4 + 4 + 4 + 16) + 6)
    assert aoi.check_feasibility(10, 3, "inverse", s, alpha=0.5) == []
    bad = aoi.Schedule([2.0, 2.0, 2.0, 4.0], [3.0, 1.0, 1.0])
    names = [name for name, _ in aoi.check_feasibility(10, 3, "constant", bad, c=1.0)]
    assert names


def test_oracle_matches_closed_form():
    cfg = aoi.OracleConfig()
    cfg.restarts = 5
    cfg.seed = 3
    res = aoi.oracle_solve(3, 3, "proportional", c=1.0, alpha=0.4, config=cfg)
    closed = aoi.solve_proportional_age(3, 3, 1.0, 0.4)
    assert res["objective"] - closed.total_age == pytest.approx(0, abs=1e-6)


def test_trajectory_integral():
    sol = aoi.solve_constant(10, 3, 2.5)
    assert aoi.trajectory_integral(sol.schedule) == pytest.approx(sol.total_age, rel=1e-12)
    rows = aoi.trajectory(sol.schedule, 0.5)
    assert rows[0] == (0.0, 0.0)
    assert rows[-1][0] == pytest.approx(10.0)


def test_sweep_tradeoff():
    spec = aoi.tradeoff_preset()
    lo = aoi.distortion_eval(spec, spec.c_max)
    hi = aoi.distortion_eval(spec, 0.0)
    rows = aoi.sweep_tradeoff(spec, 10, 3, lo, hi, 50)
    ages = [r["avg_age"] for r in rows]
    assert len(rows) == 50
    assert all(a >= b - 1e-12 for a, b in zip(ages, ages[1:]))
    assert ages[-1] == pytest.approx(10 / 8, abs=1e-9)
    assert math.isclose(aoi.min_processing_for(spec, hi), 0.0)

import math

import pytest

import rkq


def test_builtin_tableaus():
    names = {t.name for t in rkq.builtin_tableaus()}
    assert {"euler", "rk3", "rk4", "rk8"} <= names
    rk8 = rkq.builtin_tableau("rk8")
    assert rk8.declared_order == 8
    assert rk8.stage_count >= 11
    assert abs(sum(rk8.b) - 1.0) <= 1e-14
    with pytest.raises(ValueError):
        rkq.builtin_tableau("nosuch")


def test_rk_step_with_python_rhs():
    out = rkq.rk_step(rkq.builtin_tableau("rk4"), lambda t, y: [y[0]], 0.0, [1.0], 0.1)
    expected = sum(0.1**k / math.factorial(k) for k in range(5))
    assert out[0] == pytest.approx(expected, rel=1e-14)


def test_pendulum_problem():
    prob = rkq.pendulum_problem()
    assert prob.h_exact == pytest.approx(0.8, rel=1e-13)
    assert prob.ivp.y0[0] == pytest.approx(math.acos(-0.8))
    assert rkq.eval_hamiltonian_error(prob, prob.ivp.y0) == 0.0
    f = prob.ivp.rhs(0.0, prob.ivp.y0)
    assert f[0] == pytest.approx(-0.8 / 6.0)
    assert f[1] == pytest.approx(-0.6)


def test_tolerance_and_quench():
    spec = rkq.ToleranceSpec(delta_abs=1e-6, delta_rel=1e-3, mode=rkq.ToleranceMode.relative)
    assert rkq.tolerance_at([2.0, 0.5], spec) == pytest.approx(5e-4)
    assert not rkq.quench_decision([1e-6, 1e-6], 1e-6)
    assert rkq.quench_decision([0.0, 1.1e-6], 1e-6)


def test_short_integration():
    config = rkq.RunConfig()
    config.t_end = 50.0
    config.tolerance = rkq.ToleranceSpec(delta_abs=1e-6)
    traj = rkq.integrate(rkq.pendulum_problem(), config)
    assert traj.summary.node_count == len(traj.nodes)
    assert traj.nodes[-1].t == 50.0
    assert traj.summary.max_gerr_q <= 1e-6
    assert traj.summary.max_gerr_p <= 1e-6
    assert traj.summary.reference_guard_ok

    plain = rkq.integrate_unquenched(rkq.pendulum_problem(), config)
    assert plain.summary.quench_count == 0


def test_diagnose_and_csv_roundtrip(tmp_path):
    prob = rkq.harmonic_problem()
    config = rkq.RunConfig()
    config.t_end = 2.0 * math.pi
    traj = rkq.integrate(prob, config)
    assert abs(traj.nodes[-1].y34[0] - 1.0) <= 1e-6

    report = rkq.diagnose(traj, prob, rkq.tolerance_series(traj, config.tolerance))
    assert report.bound_violations == 0
    assert len(report.trajectory_error) == len(traj.nodes)

    path = tmp_path / "traj.csv"
    rows = rkq.write_trajectory_csv(traj, path, subsample=5)
    back = rkq.read_trajectory_csv(path)
    assert len(back) == rows
    assert back[-1].t == traj.nodes[-1].t
    assert back[-1].y34 == traj.nodes[-1].y34


def test_empirical_order():
    prob = rkq.harmonic_problem()
    slope = rkq.empirical_order(
        rkq.builtin_tableau("rk4"), prob.ivp, 1.0, [1 / 8, 1 / 16, 1 / 32, 1 / 64]
    )
    assert slope == pytest.approx(4.0, abs=0.2)

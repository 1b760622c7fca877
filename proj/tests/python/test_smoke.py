"""Smoke tests for the python bindings. The heavy numerical checks live
in the C++ unit and acceptance suites; here we only confirm the bindings
expose the operations correctly and agree with a few known values."""

import math

import pytest

import adaptive_gibbs as ag


def test_selection_roundtrip():
    probs = ag.project_to_simplex([1.0, 0.0], 0.2)
    assert probs.probs == pytest.approx([0.8, 0.2])
    ag.validate_selection_probs(probs.probs, 0.2)
    a = ag.SelectionProbs()
    a.probs, a.epsilon = [0.5, 0.5], 0.1
    b = ag.SelectionProbs()
    b.probs, b.epsilon = [0.4, 0.6], 0.1
    assert ag.sup_distance(a, b) == pytest.approx(0.1)


def test_selection_errors_map_to_python():
    with pytest.raises(ag.AdgibbsError):
        ag.validate_selection_probs([0.05, 0.95], 0.1)


def test_bounds():
    assert ag.tv_finite([0.45, 0.08, 0.47], [0.35, 0.15, 0.5]) == pytest.approx(0.1)
    a = ag.SelectionProbs()
    a.probs, a.epsilon = [0.5, 0.5], 0.1
    b = ag.SelectionProbs()
    b.probs, b.epsilon = [0.4, 0.6], 0.1
    assert ag.kernel_lipschitz_bound(a, b) == pytest.approx(0.5)
    cert = ag.MinorizationCertificate()
    cert.m, cert.s = 2, 0.5
    b = ag.uniform_bound(cert, 0.1, 2, 10)
    assert 0 < b < 1
    up = ag.strong_unif_upgrade(1, 0.5)
    assert up.m == 5
    assert up.s == pytest.approx(0.03125)
    assert ag.drift_rate_r(0.5) == pytest.approx(1.25)
    s = ag.drift_exponent_select(0.1, 0.5)
    assert ag.drift_rate_r(s) < 1 + 0.05 / 0.9


def test_stair_schedule_and_kernel():
    sched = ag.StairSchedule(1000.0)
    assert sched.b(1) == 1000.0
    assert sched.regime(1000) == 1
    assert sched.a(1001) == pytest.approx(10.0 + math.log(2.0))
    assert ag.stair_pi_weight(5, 4) == pytest.approx(4.0 ** -2)

    row = dict(((i, j), p) for (i, j), p in ag.stair_kernel_row(2, 2, 1, sched))
    assert row[(2, 1)] == pytest.approx(0.08)
    assert row[(2, 2)] == pytest.approx(0.47)
    assert row[(3, 2)] == pytest.approx(0.45)
    assert sum(row.values()) == pytest.approx(1.0)


def test_simulate_stair_deterministic():
    sched = ag.StairSchedule()
    a = ag.simulate_stair_final(2000, 1729, 0, sched)
    b = ag.simulate_stair_final(2000, 1729, 0, sched)
    assert a == b
    i, j = a
    assert i == j or i == j + 1


def test_truncated_tv_curve_converges():
    curve = ag.truncated_tv_curve(8, ag.LinearSpeed(10.0, 1.0), [10, 1000, 100000])
    steps = [n for n, _ in curve]
    tvs = [tv for _, tv in curve]
    assert steps == [10, 1000, 100000]
    assert tvs[-1] < 1e-3
    assert tvs[0] > tvs[-1]


def test_dominance_and_tail():
    sched = ag.StairSchedule()
    assert ag.stair_row_dominates_walk(9, 9, 1, sched)
    assert ag.hoeffding_tail(200, 0.1) == pytest.approx(math.exp(-1.0))


def test_geometric_gaps():
    K = ag.geometric_truncation(0.5, 10)
    assert K == 39
    pmf = ag.geometric_qn_pmf(1, 0.5, K)
    assert sum(pmf) == pytest.approx(1.0)
    assert ag.geometric_q_gap(40, 0.5, ag.geometric_truncation(0.5, 45)) < 1e-3
    assert ag.geometric_p_gap_lower(40, 0.5, ag.geometric_truncation(0.5, 45)) == pytest.approx(
        0.5, abs=1e-3
    )


def test_glmm_run_smoke():
    out = ag.glmm_run(n_obs=5, strategy="accept44", steps=20000, burnin=1000, seed=1729)
    assert len(out.accept_rates) == 6
    assert len(out.gamma_final) == 6
    assert all(0.0 < r < 1.0 for r in out.accept_rates)
    assert math.isfinite(out.theta_mean)
    again = ag.glmm_run(n_obs=5, strategy="accept44", steps=20000, burnin=1000, seed=1729)
    assert again.theta_mean == out.theta_mean


def test_bound_suite():
    report = ag.run_bound_suite(seed=1729)
    assert report["all_passed"]
    names = {c["name"] for c in report["checks"]}
    assert {"lipschitz", "mixture-identity", "strong-uniform-upgrade"} <= names

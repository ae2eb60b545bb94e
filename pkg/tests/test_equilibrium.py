import json
import math

import numpy as np
import pytest

from ragame import (
    DomainError,
    GameConfig,
    RadialDistribution,
    Strategy,
    StrategyProfile,
    ThresholdProfile,
    best_response_iteration,
    cost_classes,
    cost_target,
    solve_sequential,
    solve_symmetric_uniform,
    success_probability,
    verify_nash,
)

from tests.generators import random_config
from tests.oracles import symmetric_cutoff_direct

R = 12.0
DISK = RadialDistribution.uniform_disk(R)


def uniform_cfg(costs):
    return GameConfig(distribution=DISK, n=len(costs), costs=tuple(costs))


def test_cost_classes_grouping():
    classes = cost_classes((1.0, 3.0, 3.0, 0.5))
    assert [(c.cost, c.members, c.rank) for c in classes] == [
        (3.0, (1, 2), 0),
        (1.0, (0,), 1),
        (0.5, (3,), 2),
    ]


def test_symmetric_closed_form_values():
    assert solve_symmetric_uniform(2, 1.0, R) == pytest.approx(8.485281374238571, abs=1e-12)
    assert solve_symmetric_uniform(3, 1.0, R) == pytest.approx(6.494353201754363, abs=1e-12)
    for n in (2, 3, 7):
        for c in (0.1, 1.0, 10.0):
            assert solve_symmetric_uniform(n, c, R) == pytest.approx(
                symmetric_cutoff_direct(n, c, R), abs=1e-15
            )


def test_symmetric_closed_form_monotone_and_limits():
    for n in (2, 5, 11):
        cs = np.linspace(0.01, 20.0, 50)
        ts = [solve_symmetric_uniform(n, c, R) for c in cs]
        assert all(a > b for a, b in zip(ts, ts[1:]))  # decreasing in cost
    for c in (0.2, 1.0, 3.0):
        ts = [solve_symmetric_uniform(n, c, R) for n in range(2, 30)]
        assert all(a > b for a, b in zip(ts, ts[1:]))  # decreasing in n
    assert solve_symmetric_uniform(2, 1e-12, R) == pytest.approx(R, abs=1e-5)
    with pytest.raises(DomainError):
        solve_symmetric_uniform(1, 1.0, R)
    with pytest.raises(DomainError):
        solve_symmetric_uniform(2, 0.0, R)


def test_symmetric_satisfies_success_target():
    for n in (2, 3, 5, 10):
        for c in (0.1, 1.0, 2.0):
            t = solve_symmetric_uniform(n, c, R)
            cfg = uniform_cfg((c,) * n)
            profile = ThresholdProfile((t,) * n).to_strategy_profile(R)
            g = success_probability(profile, cfg, 0, t)
            assert abs(g - cost_target(c)) <= 1e-12


def test_sequential_matches_symmetric_closed_form():
    for n in (2, 3, 8, 20):
        for c in (0.1, 1.0, 10.0):
            report = solve_sequential(uniform_cfg((c,) * n))
            t_closed = solve_symmetric_uniform(n, c, R)
            assert report.is_nash
            for t in report.profile.thresholds:
                assert abs(t - t_closed) <= 1e-9 * R


def test_sequential_two_costs():
    report = solve_sequential(uniform_cfg((3.0, 1.0)))
    t1, t2 = report.profile.thresholds
    assert abs(t1 - 6.0) <= 1e-9          # (1 - F(t)) = 3/4
    assert t2 == R
    assert report.profile.last_class_full
    assert report.is_nash
    # the full-transmit node clears its break-even bar at R
    profile = report.profile.to_strategy_profile(R)
    cfg = uniform_cfg((3.0, 1.0))
    g2 = success_probability(profile, cfg, 1, R)
    assert g2 == pytest.approx(0.75, abs=1e-9)
    assert g2 >= cost_target(1.0)


def test_sequential_three_costs_with_repeat():
    report = solve_sequential(uniform_cfg((3.0, 3.0, 1.0)))
    t = report.profile.thresholds
    assert abs(t[0] - 4.392304845413264) <= 1e-9  # (1 - F(t))^2 = 3/4
    assert t[0] == t[1]  # shared class threshold, exact
    assert t[2] == R
    assert report.profile.last_class_full
    assert report.is_nash
    assert report.verdicts["interior_success_targets"].residual <= 1e-10


def test_sequential_threshold_ordering():
    rng = np.random.default_rng(17)
    for _ in range(25):
        n = int(rng.integers(2, 8))
        cfg = random_config(rng, n, R)
        report = solve_sequential(cfg)
        assert report.is_nash
        class_ts = [c.threshold for c in report.classes]
        assert all(a < b for a, b in zip(class_ts, class_ts[1:]))
        at_r = [t for t in report.profile.thresholds if t == R]
        assert len(at_r) <= 1


def test_sequential_requires_strictly_increasing_cdf():
    flat = RadialDistribution.piecewise_linear_cdf(
        R, [[0.0, 0.0], [4.0, 0.5], [8.0, 0.5], [R, 1.0]]
    )
    cfg = GameConfig(distribution=flat, n=2, costs=(1.0, 1.0))
    with pytest.raises(DomainError):
        solve_sequential(cfg)


def test_verify_rejects_double_full_transmit():
    cfg = uniform_cfg((1.0, 1.0))
    profile = StrategyProfile((Strategy.always(R), Strategy.always(R)))
    report = verify_nash(profile, cfg)
    assert not report.is_nash
    assert not report.verdicts["single_full_transmitter"].passed
    # the best response to an always-transmitter is the interior cut-off
    assert report.nodes[0].best_response == pytest.approx(8.485281374238571, abs=1e-9)


def test_verify_rejects_perturbed_symmetric():
    t_star = solve_symmetric_uniform(2, 1.0, R)
    cfg = uniform_cfg((1.0, 1.0))
    t = t_star + 0.5
    report = verify_nash(ThresholdProfile((t, t)), cfg)
    assert not report.is_nash
    residual = report.verdicts["interior_success_targets"].residual
    expected = abs((1.0 - (t / R) ** 2) - 0.5)
    assert residual == pytest.approx(expected, abs=1e-12)
    assert residual > 0.01


def test_verify_detects_unequal_thresholds_for_equal_costs():
    cfg = uniform_cfg((1.0, 1.0, 1.0))
    report = verify_nash(ThresholdProfile((5.0, 7.0, 6.0)), cfg)
    assert not report.is_nash
    assert not report.verdicts["equal_costs_equal_cutoffs"].passed
    assert report.verdicts["equal_costs_equal_cutoffs"].residual == pytest.approx(2.0)


def test_verify_accepts_solver_output_on_random_configs():
    rng = np.random.default_rng(29)
    for _ in range(20):
        n = int(rng.integers(2, 9))
        cfg = random_config(rng, n, R)
        report = solve_sequential(cfg)
        assert report.is_nash
        assert all(v.passed for v in report.verdicts.values())
        # equal-cost thresholds are shared exactly, by construction
        assert report.verdicts["equal_costs_equal_cutoffs"].residual == 0.0


def test_verify_handles_general_interval_profiles():
    cfg = uniform_cfg((1.0, 1.0))
    banded = StrategyProfile(
        (Strategy(radius=R, intervals=((2.0, 5.0), (7.0, 9.0))), Strategy.threshold(6.0, R))
    )
    report = verify_nash(banded, cfg)
    assert not report.is_nash
    assert report.profile is None  # not a cut-off profile
    assert report.nodes[0].symmetric_difference > 0.01


def test_damped_iteration_agrees_with_sequential():
    for costs in ((1.0, 1.0), (3.0, 1.0), (3.0, 3.0, 1.0), (2.0, 1.0, 0.5)):
        cfg = uniform_cfg(costs)
        seq = solve_sequential(cfg).profile.thresholds
        itr = best_response_iteration(cfg).thresholds
        assert max(abs(a - b) for a, b in zip(seq, itr)) <= 1e-6 * R


def test_report_serializes_to_json():
    report = solve_sequential(uniform_cfg((3.0, 1.0)))
    blob = json.dumps(report.as_dict(), indent=2)
    back = json.loads(blob)
    assert back["is_nash"] is True
    assert back["thresholds"][1] == 12.0
    assert back["last_class_full"] is True
    assert {c["cost"] for c in back["classes"]} == {3.0, 1.0}
    assert set(back["verdicts"]) == {
        "single_full_transmitter",
        "interior_success_targets",
        "equal_costs_equal_cutoffs",
    }


def test_cost_target():
    assert cost_target(1.0) == 0.5
    assert cost_target(3.0) == 0.75
    assert math.isclose(cost_target(0.25), 0.2)

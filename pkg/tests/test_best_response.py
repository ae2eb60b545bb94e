import math

import numpy as np
import pytest

from ragame import (
    BOUNDARY_ZERO,
    FULL_TRANSMIT,
    INTERIOR,
    GameConfig,
    NumericError,
    RadialDistribution,
    Strategy,
    StrategyProfile,
    best_response_threshold,
    expected_utility_transmit,
)

from tests.generators import random_distribution, random_profile
from tests.oracles import expected_utility_direct, first_zero_scan

R = 12.0
DISK = RadialDistribution.uniform_disk(R)


def cfg_with_cost(c, n=2, dist=DISK):
    return GameConfig(distribution=dist, n=n, costs=(float(c),) * n)


def vs_opponent(s2: Strategy) -> StrategyProfile:
    return StrategyProfile((Strategy.always(R), s2))


def test_expected_utility_values():
    cfg = cfg_with_cost(1.0)
    profile = vs_opponent(Strategy.always(R))
    # util(0) = (1+c)*1 - c = 1
    assert expected_utility_transmit(profile, cfg, 0, 0.0) == pytest.approx(1.0, abs=1e-15)
    # pick d with success 0.6: F(d) = 0.4
    d = R * math.sqrt(0.4)
    assert expected_utility_transmit(profile, cfg, 0, d) == pytest.approx(0.2, abs=1e-12)
    # at success = c/(1+c) the utility crosses zero by construction
    d_half = R * math.sqrt(0.5)
    assert abs(expected_utility_transmit(profile, cfg, 0, d_half)) <= 1e-12


def test_interior_against_always_transmitter():
    cfg = cfg_with_cost(1.0)
    result = best_response_threshold(vs_opponent(Strategy.always(R)), cfg, 0)
    assert result.boundary_case == INTERIOR
    assert result.threshold == pytest.approx(8.485281374238571, abs=1e-12)
    assert abs(result.utility_at_threshold) <= 1e-12
    assert result.strategy.intervals == ((0.0, result.threshold),)


def test_full_transmit_against_silent_opponent():
    for c in (0.1, 1.0, 50.0):
        cfg = cfg_with_cost(c)
        result = best_response_threshold(vs_opponent(Strategy.never(R)), cfg, 0)
        assert result.boundary_case == FULL_TRANSMIT
        assert result.threshold == R
        assert result.utility_at_threshold == pytest.approx(1.0, abs=1e-12)


def test_full_transmit_against_cutoff_six():
    # Beyond the opponent's cut-off the success flattens at 0.75, so the
    # utility stays at 2 * 0.75 - 1 = 0.5 > 0 through R.
    cfg = cfg_with_cost(1.0)
    result = best_response_threshold(vs_opponent(Strategy.threshold(6.0, R)), cfg, 0)
    assert result.boundary_case == FULL_TRANSMIT
    assert result.threshold == R
    assert result.utility_at_threshold == pytest.approx(0.5, abs=1e-12)


def test_flat_at_zero_resolves_to_left_edge():
    # c = 3 makes the utility exactly zero on the whole flat stretch [6, R];
    # the first hit is its left edge.
    cfg = cfg_with_cost(3.0)
    result = best_response_threshold(vs_opponent(Strategy.threshold(6.0, R)), cfg, 0)
    assert result.boundary_case == INTERIOR
    assert result.threshold == pytest.approx(6.0, abs=1e-12)
    assert expected_utility_transmit(vs_opponent(Strategy.threshold(6.0, R)), cfg, 0, 7.0) == 0.0


def test_boundary_zero_case():
    # Opponent transmits only on (6, R]: success strictly decreases on (6, R)
    # down to success(R) = 1 - (F(R) - F(6)) = 0.25.  Cost c = 0.25/0.75
    # makes util(R) = 0 while util > 0 everywhere before R.
    c = 0.25 / 0.75
    cfg = cfg_with_cost(c)
    result = best_response_threshold(vs_opponent(Strategy(radius=R, intervals=((6.0, 12.0),))), cfg, 0)
    assert result.boundary_case == BOUNDARY_ZERO
    assert result.threshold == R
    assert abs(result.utility_at_threshold) <= 1e-12


def test_threshold_always_positive():
    rng = np.random.default_rng(8)
    for _ in range(50):
        n = int(rng.integers(2, 6))
        dist = random_distribution(rng, R)
        cfg = GameConfig(
            distribution=dist, n=n, costs=tuple(np.exp(rng.uniform(np.log(0.05), np.log(20), n)))
        )
        profile = random_profile(rng, n, R)
        result = best_response_threshold(profile, cfg, 0)
        assert result.threshold > 0.0


def test_sign_structure_on_random_instances():
    rng = np.random.default_rng(14)
    for _ in range(25):
        n = int(rng.integers(2, 6))
        dist = random_distribution(rng, R)
        cfg = GameConfig(
            distribution=dist, n=n, costs=tuple(np.exp(rng.uniform(np.log(0.05), np.log(20), n)))
        )
        profile = random_profile(rng, n, R)
        result = best_response_threshold(profile, cfg, 0)
        t = result.threshold
        left = np.linspace(0.0, t * (1.0 - 1e-9), 200)
        util_left = expected_utility_transmit(profile, cfg, 0, left)
        assert np.all(util_left > 0.0)
        if result.boundary_case != FULL_TRANSMIT:
            right = np.linspace(t, R, 200)
            util_right = expected_utility_transmit(profile, cfg, 0, right)
            assert np.all(util_right <= 1e-10)


def test_matches_dense_scan_oracle():
    rng = np.random.default_rng(23)
    for _ in range(5):
        n = int(rng.integers(2, 5))
        cfg = GameConfig(distribution=DISK, n=n, costs=tuple(rng.uniform(0.5, 4.0, n)))
        profile = random_profile(rng, n, R)
        transmit_sets = [list(s.intervals) for s in profile.strategies]

        def util(d):
            return expected_utility_direct(
                transmit_sets, lambda x: (x / R) ** 2, R, 0, d, cfg.costs[0]
            )

        oracle = first_zero_scan(util, R, n_points=40_001)
        result = best_response_threshold(profile, cfg, 0)
        if oracle is None:
            assert result.boundary_case in (FULL_TRANSMIT, BOUNDARY_ZERO)
        else:
            assert result.threshold == pytest.approx(oracle, abs=1e-9)


def test_monotone_in_cost():
    rng = np.random.default_rng(31)
    for _ in range(10):
        n = int(rng.integers(2, 5))
        profile = random_profile(rng, n, R)
        dist = random_distribution(rng, R)
        prev = None
        for c in (0.1, 0.5, 1.0, 2.0, 5.0, 20.0):
            cfg = GameConfig(distribution=dist, n=n, costs=(c,) * n)
            t = best_response_threshold(profile, cfg, 0).threshold
            if prev is not None:
                assert t <= prev + 1e-12
            prev = t


def test_explicit_tol_and_nonconvergence():
    cfg = cfg_with_cost(1.0)
    profile = vs_opponent(Strategy.always(R))
    exact = 8.485281374238571
    coarse = best_response_threshold(profile, cfg, 0, tol=1e-3)
    assert abs(coarse.threshold - exact) <= 1e-3
    with pytest.raises(NumericError):
        best_response_threshold(profile, cfg, 0, max_iter=3)

"""Stochastic oracle for success probabilities and transmit utilities.

Everything analytic in this package reduces to interval algebra on the
distance law; this module checks those results by brute simulation instead:
opponents' distances are drawn i.i.d. through the inverse CDF, their
strategies are applied, and the packet from the conditioned node succeeds
when no transmitting opponent sits strictly closer.  Inverse-CDF sampling
deliberately goes through ``quantile`` so the oracle never touches the
interval-measure code path it validates.

Reproducibility contract: the sample space is split into fixed-size chunks;
chunk c draws from a child seed spawned from (seed, c).  Estimates are exact
integer counts aggregated over chunks, so results are bit-identical for a
given (seed, samples) no matter how the chunks would be scheduled.

Distance ties between the conditioned node and an opponent are a null event
under an atomless law; if one ever occurs in floating point it is broken in
favour of the conditioned node and logged.
"""

from __future__ import annotations

import logging
import math
from dataclasses import dataclass

import numpy as np

from .errors import DomainError
from .strategy import GameConfig, StrategyProfile

logger = logging.getLogger(__name__)

#: Trials per chunk; fixed so the chunk layout depends only on `samples`.
CHUNK_SIZE = 1 << 16


@dataclass(frozen=True)
class SimConfig:
    """Simulation size, seed, and (optionally) the conditioned node."""

    samples: int
    seed: int
    conditioned_node: tuple[int, float] | None = None

    def __post_init__(self):
        if self.samples < 1:
            raise DomainError(f"samples must be >= 1, got {self.samples}")


@dataclass(frozen=True)
class SimEstimate:
    """Monte Carlo estimate with its CLT standard error."""

    mean: float
    std_error: float
    samples: int


def _chunk_seeds(seed: int, samples: int):
    n_chunks = math.ceil(samples / CHUNK_SIZE)
    return np.random.SeedSequence(seed).spawn(n_chunks)


def _check_conditioning(sim: SimConfig, i: int, d: float):
    if sim.conditioned_node is not None and sim.conditioned_node != (i, d):
        raise DomainError(
            f"sim config conditions node {sim.conditioned_node}, called with {(i, d)}"
        )


def _closest_transmitter_distances(profile, cfg, i, rng, size) -> np.ndarray:
    """Per trial, the distance of the closest transmitting opponent (inf if none)."""
    opponents = profile.opponents(i)
    u = rng.random((size, len(opponents)))
    distances = cfg.distribution.quantile(u)
    closest = np.full(size, np.inf)
    for j, s in enumerate(opponents):
        dj = distances[:, j]
        transmitting = s.transmit_mask(dj)
        closest = np.minimum(closest, np.where(transmitting, dj, np.inf))
    return closest


def estimate_success_probability(
    profile: StrategyProfile, cfg: GameConfig, i: int, d: float, sim: SimConfig
) -> SimEstimate:
    """Estimate node i's success probability with node i fixed at distance d.

    Node i is forced to transmit; success means no transmitting opponent is
    strictly closer than d.
    """
    _check_conditioning(sim, i, d)
    profile.check_index(i)
    if d < 0 or d > cfg.radius:
        raise DomainError(f"distance {d!r} outside [0, {cfg.radius}]")
    successes = 0
    ties = 0
    done = 0
    for child in _chunk_seeds(sim.seed, sim.samples):
        size = min(CHUNK_SIZE, sim.samples - done)
        closest = _closest_transmitter_distances(
            profile, cfg, i, np.random.default_rng(child), size
        )
        successes += int(np.count_nonzero(closest >= d))
        ties += int(np.count_nonzero(np.isfinite(closest) & (closest == d)))
        done += size
    if ties:
        logger.warning(
            "broke %d floating-point distance tie(s) in favour of node %d", ties, i
        )
    mean = successes / sim.samples
    std_error = math.sqrt(mean * (1.0 - mean) / sim.samples)
    return SimEstimate(mean=mean, std_error=std_error, samples=sim.samples)


def estimate_success_curve(
    profile: StrategyProfile, cfg: GameConfig, i: int, grid, sim: SimConfig
) -> list[SimEstimate]:
    """Estimate the success curve on a grid, sharing draws across distances.

    Every grid point sees the same opponent draws per trial, so the
    estimated curve is non-increasing in d exactly, not just statistically.
    """
    grid = np.asarray(grid, dtype=float)
    if np.any(grid < 0) or np.any(grid > cfg.radius):
        raise DomainError(f"grid escapes [0, {cfg.radius}]")
    profile.check_index(i)
    counts = np.zeros(grid.size, dtype=np.int64)
    done = 0
    for child in _chunk_seeds(sim.seed, sim.samples):
        size = min(CHUNK_SIZE, sim.samples - done)
        closest = _closest_transmitter_distances(
            profile, cfg, i, np.random.default_rng(child), size
        )
        closest.sort()
        # Trials with closest >= d succeed; ties count as success.
        counts += size - np.searchsorted(closest, grid, side="left")
        done += size
    out = []
    for c in counts:
        mean = int(c) / sim.samples
        std_error = math.sqrt(mean * (1.0 - mean) / sim.samples)
        out.append(SimEstimate(mean=mean, std_error=std_error, samples=sim.samples))
    return out


def estimate_expected_utility(
    profile: StrategyProfile, cfg: GameConfig, i: int, d: float, sim: SimConfig
) -> SimEstimate:
    """Estimate node i's expected utility at distance d under the profile.

    A node that backs off at d earns exactly zero (no transmission, no
    cost).  Otherwise each trial pays +1 on success and -cost on failure,
    which is the affine map (1 + cost) * success - cost of the success
    indicator, applied to the same trials as the success estimate.
    """
    if profile.strategies[i].evaluate(d) == 0:
        return SimEstimate(mean=0.0, std_error=0.0, samples=sim.samples)
    c = cfg.costs[i]
    base = estimate_success_probability(profile, cfg, i, d, sim)
    return SimEstimate(
        mean=(1.0 + c) * base.mean - c,
        std_error=(1.0 + c) * base.std_error,
        samples=base.samples,
    )


def write_estimates_csv(grid, estimates, fileobj):
    """CSV rows d, estimate, std_error (header included)."""
    fileobj.write("d,estimate,std_error\n")
    for d, est in zip(grid, estimates):
        fileobj.write(f"{float(d)!r},{est.mean!r},{est.std_error!r}\n")

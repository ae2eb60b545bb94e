"""Packet success probability as a function of own distance.

A transmission from distance d succeeds when no opponent both transmits and
sits closer to the sink.  With i.i.d. opponent distances the success
probability factorizes into one term per opponent,

    success(d) = prod_j q_j(d),
    q_j(d)     = P(opponent j backs off, or sits farther than d),

and each q_j is the measure of (d, R] union j's back-off set.  That union is
the complement of (j's transmit set intersected with [0, d]), so

    q_j(d) = 1 - mu(transmit_j  intersect  [0, d]),

which is the form computed here: a sum of clamped CDF differences.  It is
exact, and along any grid of d values it is non-increasing in floating point
term by term, so monotonicity of the curve is exact rather than approximate.
The measure-theoretic union form is the natural independent oracle against
which this identity is tested.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import DomainError
from .radial import RadialDistribution
from .strategy import GameConfig, Strategy, StrategyProfile


def opponent_factor(strategy: Strategy, dist: RadialDistribution, d):
    """q_j(d): probability that one opponent does not preempt distance d.

    For a cut-off rule with cutoff t this equals 1 - F(min(d, t)).  Accepts
    a scalar or an array of distances.
    """
    if isinstance(d, (float, int)):
        if d < 0 or d > dist.radius:
            raise DomainError(f"distance {d!r} outside [0, {dist.radius}]")
        return 1.0 - strategy.transmit_mass_below(dist, float(d))
    arr = np.asarray(d, dtype=float)
    if np.any(arr < 0) or np.any(arr > dist.radius):
        raise DomainError(f"distance {d!r} outside [0, {dist.radius}]")
    out = 1.0 - strategy.transmit_mass_below(dist, arr)
    return float(out) if arr.ndim == 0 else out


def success_evaluator(profile: StrategyProfile, cfg: GameConfig, i: int):
    """Scalar success-probability closure with all validation hoisted.

    Root-finders evaluate the curve millions of times; this strips the
    per-call overhead while computing exactly the same clamped-CDF sums as
    :func:`success_probability`.
    """
    _check(profile, cfg)
    profile.check_index(i)
    opponents = [s.intervals for s in profile.opponents(i)]
    cdf = cfg.distribution.cdf_scalar

    def evaluate(d: float) -> float:
        out = 1.0
        for intervals in opponents:
            mass = 0.0
            for a, b in intervals:
                x = d if d < b else b
                if x > a:
                    mass += cdf(x) - cdf(a)
            out *= 1.0 - mass
        return out

    return evaluate


def success_probability(profile: StrategyProfile, cfg: GameConfig, i: int, d):
    """Probability that node i's packet is captured when transmitted from d.

    Product of :func:`opponent_factor` over all opponents; node i's own
    strategy does not enter.  Accepts a scalar or an array of distances.
    """
    _check(profile, cfg)
    profile.check_index(i)
    if isinstance(d, (float, int)):
        if d < 0 or d > cfg.radius:
            raise DomainError(f"distance {d!r} outside [0, {cfg.radius}]")
        out = 1.0
        for s in profile.opponents(i):
            out *= 1.0 - s.transmit_mass_below(cfg.distribution, float(d))
        return out
    arr = np.asarray(d, dtype=float)
    if np.any(arr < 0) or np.any(arr > cfg.radius):
        raise DomainError(f"distance {d!r} outside [0, {cfg.radius}]")
    out = np.ones(arr.shape)
    for s in profile.opponents(i):
        out = out * (1.0 - s.transmit_mass_below(cfg.distribution, arr))
    return float(out) if arr.ndim == 0 else out


def breakpoints(profile: StrategyProfile, i: int) -> np.ndarray:
    """Sorted union of all opponents' interval endpoints.

    These are the only distances where the piecewise form of the success
    curve can change; between consecutive breakpoints every opponent factor
    is either constant or strictly decreasing.
    """
    pts = set()
    for s in profile.opponents(i):
        for a, b in s.intervals:
            pts.add(a)
            pts.add(b)
    return np.array(sorted(pts))


def lipschitz_constant(dist: RadialDistribution, n: int) -> float:
    """Provable Lipschitz constant (n - 1) * sup density of the success curve."""
    return (n - 1) * dist.density_sup


@dataclass(frozen=True)
class SuccessCurve:
    """Success probability of one node sampled on a grid."""

    node_index: int
    grid: np.ndarray
    values: np.ndarray
    breakpoints: np.ndarray

    def __post_init__(self):
        if np.any(self.values < 0) or np.any(self.values > 1):
            raise DomainError("success values escape [0, 1]")
        if np.any(np.diff(self.values) > 0):
            raise DomainError("success curve must be non-increasing")

    def write_csv(self, fileobj):
        fileobj.write("d,g\n")
        for d, g in zip(self.grid, self.values):
            fileobj.write(f"{float(d)!r},{float(g)!r}\n")


def success_curve(
    profile: StrategyProfile, cfg: GameConfig, i: int, grid_size: int = 1001
) -> SuccessCurve:
    """Evaluate node i's success probability on a uniform grid plus breakpoints.

    Inserting the opponents' interval endpoints guarantees the piecewise
    structure is captured regardless of the grid resolution.
    """
    if grid_size < 2:
        raise DomainError(f"grid_size must be >= 2, got {grid_size}")
    _check(profile, cfg)
    profile.check_index(i)
    bps = breakpoints(profile, i)
    grid = np.unique(np.concatenate([np.linspace(0.0, cfg.radius, grid_size), bps]))
    values = success_probability(profile, cfg, i, grid)
    return SuccessCurve(node_index=i, grid=grid, values=values, breakpoints=bps)


def _check(profile: StrategyProfile, cfg: GameConfig):
    if profile.n != cfg.n:
        raise DomainError(f"profile has {profile.n} strategies for {cfg.n} nodes")
    if profile.radius != cfg.radius:
        raise DomainError("profile radius and game radius disagree")

"""Equilibrium cut-off profiles: solving and verification.

At an equilibrium every node uses a cut-off rule, nodes with equal failure
cost share one cut-off, and cut-offs grow as costs shrink.  Grouping nodes
into cost classes (strictly decreasing class costs) reduces equilibrium
computation to one scalar equation per class, solved in cost order.

For a cut-off profile the success probability of a class-i member evaluated
at its own cut-off t_i factorizes exactly:

    success(t_i) = prod_{l < i} (1 - F(t_l))^{k_l} * (1 - F(t_i))^{e_i},
    e_i = (k_i - 1) + sum_{l > i} k_l,

where k_l is the size of class l: cheaper-or-equal classes are still
transmitting at t_i, costlier classes have already stopped.  Each class
condition  success(t_i) = cost_i / (1 + cost_i)  is therefore one monotone
root-find in t_i on (t_{i-1}, R).  The left edge value equals the previous
class target, which strictly exceeds the current target, and the value at R
is zero whenever e_i >= 1, so a root always brackets.

The only class with e_i = 0 is a cheapest class of size one.  Its members'
success is constant beyond t_{i-1} and equal to the previous class target,
which strictly exceeds its own target, so its transmit utility stays
positive through R: the node transmits everywhere and the profile carries
``last_class_full``.  By the same token at most one node ends at R.

Verification is independent of the solver: each node's best response is
recomputed from scratch and compared against the profile, and the
structural conditions (at most one cut-off at R; success at interior
cut-offs equal to cost/(1+cost); equal costs giving equal cut-offs) are
checked with explicit residuals.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

from .best_response import FULL_TRANSMIT, best_response_threshold
from .errors import DomainError, NumericError
from .strategy import GameConfig, Strategy, StrategyProfile
from .success import success_probability


def cost_target(cost: float) -> float:
    """Success level at which transmitting breaks even: cost / (1 + cost)."""
    return cost / (1.0 + cost)


@dataclass(frozen=True)
class CostClass:
    """Maximal set of nodes sharing one failure cost."""

    cost: float
    members: tuple[int, ...]
    rank: int  # 0 = costliest


def cost_classes(costs) -> list[CostClass]:
    """Partition node indices by exact cost equality, costliest class first."""
    groups: dict[float, list[int]] = {}
    for i, c in enumerate(costs):
        groups.setdefault(float(c), []).append(i)
    ordered = sorted(groups.items(), key=lambda kv: -kv[0])
    return [
        CostClass(cost=c, members=tuple(members), rank=r)
        for r, (c, members) in enumerate(ordered)
    ]


@dataclass(frozen=True)
class ThresholdProfile:
    """One cut-off distance per node; the equilibrium object."""

    thresholds: tuple[float, ...]
    last_class_full: bool = False

    def __post_init__(self):
        object.__setattr__(self, "thresholds", tuple(float(t) for t in self.thresholds))

    def to_strategy_profile(self, radius: float) -> StrategyProfile:
        return StrategyProfile(tuple(Strategy.threshold(t, radius) for t in self.thresholds))


@dataclass(frozen=True)
class Verdict:
    """Outcome of one structural check, with a numeric residual."""

    passed: bool
    residual: float
    detail: str

    def as_dict(self) -> dict:
        return {"passed": self.passed, "residual": self.residual, "detail": self.detail}


@dataclass(frozen=True)
class ClassSolution:
    cost: float
    members: tuple[int, ...]
    threshold: float
    success_value: float
    target: float

    @property
    def residual(self) -> float:
        return abs(self.success_value - self.target)

    def as_dict(self) -> dict:
        return {
            "cost": self.cost,
            "members": list(self.members),
            "threshold": self.threshold,
            "success_value": self.success_value,
            "target": self.target,
            "residual": self.residual,
        }


@dataclass(frozen=True)
class NodeCheck:
    """Best-response re-check of one node."""

    index: int
    cutoff: float
    best_response: float
    boundary_case: str
    threshold_residual: float
    symmetric_difference: float
    matched: bool

    def as_dict(self) -> dict:
        return {
            "index": self.index,
            "cutoff": self.cutoff,
            "best_response": self.best_response,
            "boundary_case": self.boundary_case,
            "threshold_residual": self.threshold_residual,
            "symmetric_difference": self.symmetric_difference,
            "matched": self.matched,
        }


@dataclass(frozen=True)
class EquilibriumReport:
    """Solved or candidate profile plus all verification verdicts."""

    profile: ThresholdProfile | None
    classes: tuple[ClassSolution, ...]
    nodes: tuple[NodeCheck, ...]
    verdicts: dict[str, Verdict] = field(default_factory=dict)
    is_nash: bool = False

    def as_dict(self) -> dict:
        return {
            "thresholds": list(self.profile.thresholds) if self.profile else None,
            "last_class_full": self.profile.last_class_full if self.profile else None,
            "classes": [c.as_dict() for c in self.classes],
            "nodes": [n.as_dict() for n in self.nodes],
            "verdicts": {k: v.as_dict() for k, v in self.verdicts.items()},
            "is_nash": self.is_nash,
        }


def solve_symmetric_uniform(n: int, c: float, radius: float) -> float:
    """Closed-form symmetric cut-off for n equal-cost nodes, uniform disk.

    Solves (1 - (t/R)^2)^(n-1) = c/(1+c), always interior.
    """
    if n < 2:
        raise DomainError(f"need at least 2 nodes, got {n}")
    if not (c > 0 and math.isfinite(c)):
        raise DomainError(f"cost must be in (0, inf), got {c!r}")
    if radius <= 0:
        raise DomainError(f"radius must be positive, got {radius!r}")
    return radius * math.sqrt(1.0 - cost_target(c) ** (1.0 / (n - 1)))


def solve_sequential(
    cfg: GameConfig, tol: float | None = None, residual_tol: float = 1e-8
) -> EquilibriumReport:
    """Solve the per-class cut-off equations in decreasing cost order.

    Requires a strictly increasing CDF so each class equation is strictly
    monotone.  Returns the solved profile together with the full
    verification report; a verification failure is reported, never silently
    swallowed.
    """
    dist = cfg.distribution
    if not dist.strictly_increasing:
        raise DomainError("sequential solve needs a strictly increasing CDF")
    radius = cfg.radius
    classes = cost_classes(cfg.costs)

    remaining = cfg.n
    prefix = 1.0  # prod over solved classes of (1 - F(t_l))^{k_l}
    prev_t = 0.0
    thresholds = [0.0] * cfg.n
    last_class_full = False
    for cls in classes:
        k = len(cls.members)
        remaining -= k
        exponent = (k - 1) + remaining
        target = cost_target(cls.cost)
        if exponent == 0:
            # Cheapest class is a singleton: success is flat at `prefix`
            # beyond prev_t, and prefix equals the previous class target,
            # which strictly exceeds this class's target.
            if prefix < target:
                raise NumericError(
                    f"class {cls.rank}: flat success {prefix!r} below target "
                    f"{target!r}; no cut-off profile of this form exists"
                )
            t = radius
            last_class_full = True
        else:
            t = _bisect_class_equation(dist, prefix, exponent, target, prev_t, radius)
        for m in cls.members:
            thresholds[m] = t
        prefix *= (1.0 - dist.cdf(t)) ** k
        prev_t = t

    profile = ThresholdProfile(tuple(thresholds), last_class_full=last_class_full)
    return verify_nash(profile, cfg, tol=tol, residual_tol=residual_tol)


def _bisect_class_equation(dist, prefix, exponent, target, lo, hi, max_iter=200):
    """First root of prefix * (1 - F(t))^exponent - target on (lo, hi).

    The function is strictly decreasing, positive at lo and negative at hi.
    Bisects until the bracket endpoints are adjacent floats.
    """

    def value(t: float) -> float:
        return prefix * (1.0 - dist.cdf(t)) ** exponent - target

    if value(lo) <= 0:
        raise NumericError(
            f"class equation not bracketed: value({lo!r}) = {value(lo)!r} <= 0"
        )
    for _ in range(max_iter):
        mid = 0.5 * (lo + hi)
        if mid <= lo or mid >= hi:
            return hi
        if value(mid) > 0.0:
            lo = mid
        else:
            hi = mid
    raise NumericError(f"class equation bisection stalled on [{lo!r}, {hi!r}]")


def best_response_iteration(
    cfg: GameConfig,
    damping: float = 0.5,
    tol: float | None = None,
    max_rounds: int = 10_000,
    initial: ThresholdProfile | None = None,
) -> ThresholdProfile:
    """Damped simultaneous best-response iteration; independent of the
    sequential solver, used as a cross-check oracle.

    Iterates t <- t + damping * (best_response(t) - t) until the fixed-point
    residual max_i |best_response_i - t_i| drops below ``tol`` (default
    1e-9 * radius).
    """
    if not (0 < damping <= 1):
        raise DomainError(f"damping must be in (0, 1], got {damping!r}")
    radius = cfg.radius
    if tol is None:
        tol = 1e-9 * radius
    thresholds = list(initial.thresholds) if initial else [radius] * cfg.n
    for _ in range(max_rounds):
        profile = ThresholdProfile(tuple(thresholds)).to_strategy_profile(radius)
        results = [best_response_threshold(profile, cfg, i) for i in range(cfg.n)]
        responses = [r.threshold for r in results]
        residual = max(abs(r - t) for r, t in zip(responses, thresholds))
        if residual <= tol:
            full = any(
                r.boundary_case == FULL_TRANSMIT for r in results if r.threshold == radius
            )
            return ThresholdProfile(tuple(responses), last_class_full=full)
        thresholds = [
            t + damping * (r - t) for r, t in zip(responses, thresholds)
        ]
    raise NumericError(
        f"best-response iteration did not reach residual {tol!r} "
        f"within {max_rounds} rounds"
    )


def verify_nash(
    profile: StrategyProfile | ThresholdProfile,
    cfg: GameConfig,
    tol: float | None = None,
    residual_tol: float = 1e-8,
) -> EquilibriumReport:
    """Re-check a candidate profile node by node and emit a full report.

    Each node's best response is recomputed against the others and compared
    with the node's actual strategy.  A node matches when the transmit
    sets' symmetric difference has measure at most that of a
    tol-neighbourhood of the best-response cut-off (``tol`` defaults to
    1e-10 * radius), so measure-null discrepancies never fail the check;
    the raw cut-off residual is reported alongside.  Structural verdicts:

    * ``single_full_transmitter`` -- at most one cut-off reaches R;
    * ``interior_success_targets`` -- success at each interior cut-off is
      within ``residual_tol`` of cost/(1+cost); a node at R instead needs
      success(R) >= its target;
    * ``equal_costs_equal_cutoffs`` -- equal-cost nodes share one cut-off.
    """
    dist = cfg.distribution
    radius = cfg.radius
    if tol is None:
        tol = 1e-10 * radius
    if tol <= 0:
        raise DomainError(f"tol must be positive, got {tol!r}")

    last_class_full = None
    if isinstance(profile, ThresholdProfile):
        last_class_full = profile.last_class_full
        strategy_profile = profile.to_strategy_profile(radius)
    else:
        strategy_profile = profile
    if strategy_profile.n != cfg.n:
        raise DomainError(f"profile has {strategy_profile.n} strategies for {cfg.n} nodes")
    if strategy_profile.radius != radius:
        raise DomainError("profile radius and game radius disagree")

    # Per-node best-response re-check.
    nodes = []
    for i, s in enumerate(strategy_profile.strategies):
        br = best_response_threshold(strategy_profile, cfg, i)
        cutoff = s.cutoff
        threshold_residual = abs(cutoff - br.threshold)
        sym_diff = s.symmetric_difference_measure(br.strategy, dist)
        # Discrepancies invisible to the law (null sets) must pass, so the
        # measure bar is the mass of a tol-ball around the best response.
        ball_lo = max(0.0, br.threshold - tol)
        ball_hi = min(radius, br.threshold + tol)
        measure_bar = dist.interval_measure(ball_lo, ball_hi) + 1e-15
        matched = sym_diff <= measure_bar
        nodes.append(
            NodeCheck(
                index=i,
                cutoff=cutoff,
                best_response=br.threshold,
                boundary_case=br.boundary_case,
                threshold_residual=threshold_residual,
                symmetric_difference=sym_diff,
                matched=matched,
            )
        )
    is_nash = all(nc.matched for nc in nodes)

    cutoffs = [nc.cutoff for nc in nodes]

    # At most one node may transmit all the way to R.
    at_r = [i for i, t in enumerate(cutoffs) if t >= radius - tol]
    verdict_single_full = Verdict(
        passed=len(at_r) <= 1,
        residual=float(max(0, len(at_r) - 1)),
        detail=f"nodes with cut-off at R: {at_r}",
    )

    # Success at interior cut-offs must sit at the break-even target;
    # a node stopping only at R needs success(R) >= target.
    residuals = []
    for i, t in enumerate(cutoffs):
        target = cost_target(cfg.costs[i])
        if t >= radius - tol:
            shortfall = target - success_probability(strategy_profile, cfg, i, radius)
            residuals.append(max(0.0, shortfall))
        else:
            g = success_probability(strategy_profile, cfg, i, t)
            residuals.append(abs(g - target))
    worst = max(residuals)
    verdict_targets = Verdict(
        passed=worst <= residual_tol,
        residual=worst,
        detail="max |success(cutoff) - cost/(1+cost)| over nodes "
        "(shortfall only for a node at R)",
    )

    # Equal costs force equal cut-offs (and equivalent strategies).
    eq_residual = 0.0
    for cls in cost_classes(cfg.costs):
        for m in cls.members[1:]:
            eq_residual = max(eq_residual, abs(cutoffs[m] - cutoffs[cls.members[0]]))
            eq_residual = max(
                eq_residual,
                strategy_profile.strategies[m].symmetric_difference_measure(
                    strategy_profile.strategies[cls.members[0]], dist
                ),
            )
    verdict_equal_costs = Verdict(
        passed=eq_residual <= tol,
        residual=eq_residual,
        detail="max cut-off / transmit-set discrepancy within a cost class",
    )

    verdicts = {
        "single_full_transmitter": verdict_single_full,
        "interior_success_targets": verdict_targets,
        "equal_costs_equal_cutoffs": verdict_equal_costs,
    }

    # Class table, evaluated at the profile's own cut-offs.
    classes = []
    for cls in cost_classes(cfg.costs):
        t = cutoffs[cls.members[0]]
        g = success_probability(strategy_profile, cfg, cls.members[0], min(t, radius))
        classes.append(
            ClassSolution(
                cost=cls.cost,
                members=cls.members,
                threshold=t,
                success_value=g,
                target=cost_target(cls.cost),
            )
        )

    threshold_profile = None
    if all(s.is_threshold for s in strategy_profile.strategies):
        if last_class_full is None:
            full = [nc for nc in nodes if nc.cutoff >= radius - tol]
            last_class_full = bool(full) and all(
                nc.boundary_case == FULL_TRANSMIT for nc in full
            )
        threshold_profile = ThresholdProfile(tuple(cutoffs), last_class_full=last_class_full)

    return EquilibriumReport(
        profile=threshold_profile,
        classes=tuple(classes),
        nodes=tuple(nodes),
        verdicts=verdicts,
        is_nash=is_nash,
    )

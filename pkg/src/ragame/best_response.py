"""Best-response cut-off computation.

The expected utility of transmitting from distance d is

    util(d) = (1 + c) * success(d) - c,

a continuous, non-increasing function starting at util(0) = 1.  A best
response is therefore always a cut-off rule: transmit below some critical
distance, back off beyond it.  Three regimes arise:

* ``full-transmit``   -- util stays positive through R; transmit everywhere.
* ``boundary-zero``   -- util is positive on [0, R) and zero at R; the tie
                         rule (back off at zero utility) applies only at the
                         single point R.
* ``interior``        -- util first reaches zero at some t < R; transmit on
                         [0, t), back off on [t, R].

The interior cut-off is the *first* zero of util.  Because util can be
exactly flat at zero over whole intervals (wherever every opponent is
silent), a plain sign-change bisection may land anywhere on the plateau; the
solver instead scans the breakpoint partition of the success curve left to
right, brackets the first cell whose right edge has util <= 0, and bisects
with the invariant util(lo) > 0 >= util(hi).  That invariant converges to
inf{d : util(d) <= 0}, i.e. the left edge of any flat-at-zero stretch.

One region needs the zero-tie tolerance rather than exact signs: beyond the
last distance at which any opponent still transmits, util is bit-exactly
constant.  At an equilibrium that constant is zero up to rounding, and its
floating-point sign is noise; landing at +2e-16 must not flip the best
response from the plateau's left edge to R.  So when the terminal constant
sits within ``VALUE_TOL`` of zero, the whole terminal region counts as tied
at zero and the cut-off resolves to its left edge.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import DomainError, NumericError
from .strategy import GameConfig, Strategy, StrategyProfile
from .success import breakpoints, success_evaluator, success_probability

INTERIOR = "interior"
FULL_TRANSMIT = "full-transmit"
BOUNDARY_ZERO = "boundary-zero"

#: util values within this of zero count as zero for the boundary classification.
VALUE_TOL = 1e-12


def expected_utility_transmit(profile: StrategyProfile, cfg: GameConfig, i: int, d):
    """Expected utility of node i given that it transmits from distance d."""
    c = cfg.costs[i]
    g = success_probability(profile, cfg, i, d)
    return (1.0 + c) * g - c


@dataclass(frozen=True)
class BestResponseResult:
    """Cut-off best response of one node against a fixed opponent profile."""

    node_index: int
    threshold: float
    boundary_case: str  # one of INTERIOR, FULL_TRANSMIT, BOUNDARY_ZERO
    utility_at_threshold: float
    strategy: Strategy


def best_response_threshold(
    profile: StrategyProfile,
    cfg: GameConfig,
    i: int,
    tol: float | None = None,
    max_iter: int = 200,
) -> BestResponseResult:
    """Critical distance below which node i should transmit.

    ``tol`` is the bisection width at which to stop; ``None`` (default)
    bisects until the bracket endpoints are adjacent floats, which always
    lands well inside the documented 1e-10 * radius guarantee.  The returned
    threshold t carries util(t) <= 0 (the node backs off at its own
    threshold), except in the full-transmit case where util stays positive
    everywhere including at R.
    """
    if tol is not None and tol <= 0:
        raise DomainError(f"tol must be positive, got {tol!r}")
    radius = cfg.radius
    success = success_evaluator(profile, cfg, i)
    c = cfg.costs[i]

    def util(d: float) -> float:
        return (1.0 + c) * success(d) - c

    util_end = util(radius)
    if util_end > VALUE_TOL:
        return BestResponseResult(
            node_index=i,
            threshold=radius,
            boundary_case=FULL_TRANSMIT,
            utility_at_threshold=util_end,
            strategy=Strategy.always(radius),
        )

    # util is bit-exactly constant (= util_end, now within VALUE_TOL of zero)
    # beyond the last distance at which any opponent transmits.
    silent_tail_start = max(
        (s.intervals[-1][1] for s in profile.opponents(i) if s.intervals), default=0.0
    )

    # Scan the breakpoint partition up to the terminal region for the first
    # cell whose right edge is non-positive; util > 0 on every cell before it.
    edges = [b for b in breakpoints(profile, i) if 0.0 < b <= silent_tail_start]
    lo, hi = 0.0, None
    for edge in edges:
        if util(edge) <= 0.0:
            hi = edge
            break
        lo = edge
    if hi is None:
        # util > 0 strictly until the terminal region, where it is constant
        # and tied at zero within VALUE_TOL: back off from the region's left
        # edge, or only at R itself if opponents transmit all the way out.
        if silent_tail_start == radius:
            case, threshold = BOUNDARY_ZERO, radius
        else:
            case, threshold = INTERIOR, silent_tail_start
        return BestResponseResult(
            node_index=i,
            threshold=threshold,
            boundary_case=case,
            utility_at_threshold=util_end,
            strategy=Strategy.threshold(threshold, radius)
            if case == INTERIOR
            else Strategy.always(radius),
        )

    # First-hit bisection: keep util(lo) > 0 >= util(hi).
    for _ in range(max_iter):
        if tol is not None and hi - lo <= tol:
            break
        mid = 0.5 * (lo + hi)
        if mid <= lo or mid >= hi:
            break
        if util(mid) > 0.0:
            lo = mid
        else:
            hi = mid
    else:
        raise NumericError(
            f"best-response bisection for node {i} did not converge: "
            f"bracket [{lo!r}, {hi!r}], util [{util(lo)!r}, {util(hi)!r}]"
        )

    if hi == radius:
        # Positive on every representable d < R: boundary case at R.
        case = BOUNDARY_ZERO
    else:
        case = INTERIOR
    return BestResponseResult(
        node_index=i,
        threshold=hi,
        boundary_case=case,
        utility_at_threshold=util(hi),
        strategy=Strategy.threshold(hi, radius),
    )

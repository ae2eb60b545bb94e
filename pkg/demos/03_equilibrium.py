"""Equilibrium cut-off profiles, solved and verified.

Nodes sharing one failure cost share one equilibrium cut-off, and cut-offs
grow as costs shrink, so equilibria are solved one cost class at a time.
When the cheapest class is a single node, everyone else has stopped before
it would, and it transmits at every distance.  The solver's output is
re-verified from scratch: every node's best response is recomputed and the
structural conditions are checked with explicit residuals.
"""

import json

from ragame import (
    GameConfig,
    RadialDistribution,
    ThresholdProfile,
    best_response_iteration,
    solve_sequential,
    verify_nash,
)

R = 12.0
DISK = RadialDistribution.uniform_disk(R)


def show(costs):
    cfg = GameConfig(distribution=DISK, n=len(costs), costs=costs)
    report = solve_sequential(cfg)
    print(f"costs {list(costs)}:")
    for cls in report.classes:
        where = "R (transmits everywhere)" if cls.threshold == R else f"{cls.threshold:.9f}"
        print(f"  class cost {cls.cost:g} (nodes {list(cls.members)}): cut-off {where}, "
              f"success there {cls.success_value:.9f} vs target {cls.target:.9f}")
    print(f"  is_nash = {report.is_nash}, "
          f"verdicts all pass = {all(v.passed for v in report.verdicts.values())}")
    iterated = best_response_iteration(cfg)
    drift = max(abs(a - b) for a, b in zip(iterated.thresholds, report.profile.thresholds))
    print(f"  damped best-response iteration agrees to {drift:.2e}\n")
    return cfg, report


def main():
    print(f"disk radius {R}, uniform-disk distances\n")
    show((1.0, 1.0))            # symmetric pair
    show((3.0, 1.0))            # costly node stops at 6, cheap one never stops
    show((3.0, 3.0, 1.0))       # a shared class plus a lone cheap node
    cfg, report = show((5.0, 2.0, 2.0, 0.7, 0.7))

    print("perturbing one cut-off away from equilibrium and re-verifying:")
    t = list(report.profile.thresholds)
    t[0] += 0.5
    broken = verify_nash(ThresholdProfile(tuple(t)), cfg)
    print(f"  is_nash = {broken.is_nash}, success-target residual = "
          f"{broken.verdicts['interior_success_targets'].residual:.4f}")

    print("\nfull JSON report for costs [3, 1]:")
    cfg31 = GameConfig(distribution=DISK, n=2, costs=(3.0, 1.0))
    print(json.dumps(solve_sequential(cfg31).as_dict(), indent=2))


if __name__ == "__main__":
    main()

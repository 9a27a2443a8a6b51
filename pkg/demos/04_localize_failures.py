"""Simulate failures, observe Boolean outcomes, recover the failure set.

Identifiability is exactly the promise that this round trip is unambiguous:
for any truth set within the network's maximum, the observations match one
candidate only.  Past the maximum, the demo shows the ambiguity that stops
localization.
"""

from itertools import combinations

from nodeloc import (
    CAP,
    Topology,
    distinguishable,
    localize,
    max_identifiability,
    simulate_measurements,
)

# single-monitor ring: the classic trap
RING = Topology(4, [(0, 1), (1, 2), (2, 3), (3, 0)], [0])


def main() -> None:
    omega = max_identifiability(RING, CAP)
    print(f"single-monitor ring, arbitrary-walk probing, max identifiability {omega}")
    print("\nround trips within the identifiable range:")
    pool = sorted(RING.non_monitors)
    for size in range(omega + 1):
        for truth in combinations(pool, size):
            outcome = simulate_measurements(RING, CAP, truth)
            found = localize(RING, CAP, outcome, omega)
            rendered = " ".join(f"v{v}:{'up' if outcome[v] else 'DOWN'}" for v in outcome)
            print(f"  truth {set(truth) or '{}'}  ->  {rendered}  ->  {found}")

    print("\npushing one past the maximum:")
    truth = frozenset({1, 2, 3})
    outcome = simulate_measurements(RING, CAP, truth)
    candidates = localize(RING, CAP, outcome, 3)
    print(f"  truth {set(truth)} produces candidates {candidates}")
    ok, witness = distinguishable(RING, CAP, frozenset({1, 3}), truth)
    print(f"  distinguishable({{1, 3}}, {set(truth)}) = {ok}: {witness}")
    print("""
  With nodes 1 and 3 down, node 2 is cut off from the monitor, so its own
  state cannot influence any walk; the two candidate sets are observation-
  equivalent and three failures are not localizable here.""")


if __name__ == "__main__":
    main()

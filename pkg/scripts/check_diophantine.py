"""Compare brute-force and closed-form solutions of the Diophantine system and list star parameters."""

from __future__ import annotations

import argparse
import time

from starquiver.diophantine import brute_force_solutions, closed_form_within, solutions_for_star


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--bound", type=int, default=60)
    args = parser.parse_args()

    start = time.perf_counter()
    brute = brute_force_solutions(args.bound)
    closed = closed_form_within(args.bound)
    print(f"bound {args.bound}: {len(brute)} brute-force, {len(closed)} closed-form, "
          f"equal={brute == closed} ({time.perf_counter() - start:.2f}s)")
    for p in range(5):
        print(f"  p={p}: {sum(1 for s in brute if s.p == p)} solutions")
    for p in (1, 2, 3, 4):
        unfiltered = solutions_for_star(p, args.bound, order_filter=False)
        kept = sorted(solutions_for_star(p, args.bound))
        print(f"star parameters p={p}: {len(unfiltered)} with the shape bounds, {len(kept)} with finite "
              f"reduced order: {kept}")


if __name__ == "__main__":
    main()

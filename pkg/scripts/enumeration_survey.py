"""Enumerate biregular graphs for the admissible star parameters and run the battery on each.

Parameter sets come from the Diophantine solutions with the shape and
reduced-order filters; sets with too many vertices are skipped.
"""

from __future__ import annotations

import argparse
import time
from collections import Counter

from starquiver.canon import EnumerationOptions, enumerate_biregular, is_isomorphic
from starquiver.catalog import GRAPH_NAMES, named_graph
from starquiver.coxeter import condition_battery
from starquiver.diophantine import solutions_for_star
from starquiver.quiver import StarAlgebra


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--max-vertices", type=int, default=16)
    parser.add_argument("--p", type=int, nargs="*", default=[1, 2, 3, 4])
    parser.add_argument("--workers", type=int, default=None)
    args = parser.parse_args()

    catalog = [(name, named_graph(name)) for name in GRAPH_NAMES]
    params = sorted(set().union(*(solutions_for_star(p) for p in args.p)))
    for r, s1, s, s2 in params:
        if (r, s1, s, s2) == (1, 1, 1, 1):
            continue
        if r + s > args.max_vertices:
            print(f"({r},{s1},{s},{s2}): skipped, {r + s} vertices")
            continue
        start = time.perf_counter()
        opts = EnumerationOptions(distinct_neighbourhoods=True, max_vertices=args.max_vertices,
                                  workers=args.workers)
        graphs = list(enumerate_biregular(r, s1, s, s2, opts))
        tally = Counter()
        survivors = []
        for G in graphs:
            verdict = condition_battery(StarAlgebra.from_graph(G))
            tally[verdict.overall] += 1
            for cond in verdict.failed:
                tally["fails " + cond] += 1
            if verdict.overall != "excluded":
                names = [n for n, H in catalog if is_isomorphic(G, H)]
                survivors.append(names[0] if names else "unnamed")
        print(f"({r},{s1},{s},{s2}): {len(graphs)} classes in {time.perf_counter() - start:.2f}s, "
              f"{dict(sorted(tally.items()))}, not excluded: {survivors}")


if __name__ == "__main__":
    main()

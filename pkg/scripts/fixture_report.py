"""Tabulate the invariants of every shipped star algebra fixture."""

from __future__ import annotations

import argparse
import json

from starquiver.catalog import STAR_NAMES, display_name, star_fixture
from starquiver.cli import star_report


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--json", action="store_true", help="print full reports as JSON")
    parser.add_argument("--order-bound", type=int, default=1000)
    args = parser.parse_args()

    reports = {}
    header = f"{'fixture':15s} {'r':>2s} {'s':>2s} {'p':>2s} {'order':>5s} {'refl':>5s} {'salem':>5s} " \
             f"{'dimL':>4s} {'dimT':>4s} {'dimG':>4s} verdict"
    if not args.json:
        print(header)
    for name in STAR_NAMES:
        report, failures = star_report(name, star_fixture(name), args.order_bound)
        reports[name] = report
        if args.json:
            continue
        dims = report["dimensions"]
        print(f"{name:15s} {report['r']:2d} {report['s']:2d} {report['p']:2d} {str(report['neg_phi_order']):>5s} "
              f"{str(report['graph']['reflexive']):>5s} {str(report['graph']['salem']):>5s} "
              f"{dims['lambda']:4d} {dims.get('trivial_extension', '-'):>4} {dims.get('gamma', '-'):>4} "
              f"{report['verdict']}  ({display_name(name)})" + (f" FAILURES: {failures}" if failures else ""))
    if args.json:
        print(json.dumps(reports, indent=2, sort_keys=True))


if __name__ == "__main__":
    main()

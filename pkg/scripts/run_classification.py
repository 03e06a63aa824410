"""Run the classification pipeline in every mode and print the status tables."""

from __future__ import annotations

import argparse

from starquiver.pipeline import MODES, PipelineConfig, classify


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--modes", nargs="*", default=list(MODES), choices=MODES)
    parser.add_argument("--max-vertices", type=int, default=16)
    parser.add_argument("--workers", type=int, default=None)
    args = parser.parse_args()

    for mode in args.modes:
        result = classify(PipelineConfig(mode=mode, max_vertices=args.max_vertices, workers=args.workers))
        print(f"== {mode}: survivors {result.survivors()}, undecided {result.with_status('undecided')}")
        for row in result.rows:
            if row.status != "excluded" or not row.name.startswith("enum"):
                print(f"   {row.name:24s} {str(row.params):16s} {row.status:10s} {row.note}")
        excluded = [row for row in result.rows if row.name.startswith("enum") and row.status == "excluded"]
        if excluded:
            print(f"   ({len(excluded)} enumerated graphs excluded)")
        if result.partial:
            print(f"   partial: skipped {list(result.skipped)}")


if __name__ == "__main__":
    main()

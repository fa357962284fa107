"""Time Buchberger and F4 on the Cyclic/Katsura suite and print a table.

    python3 scripts/run_benchmarks.py --timeout 600 --json bench.json
"""

import argparse
import json

from groebner.bench import bench, cells_as_dicts, default_timeout, format_table
from groebner.problems import SUITE


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--suite", nargs="+", default=sorted(SUITE))
    ap.add_argument("--algorithms", nargs="+", default=["buchberger", "f4"])
    ap.add_argument("--timeout", type=float, default=default_timeout())
    ap.add_argument("--order", default="drlex")
    ap.add_argument("--json", help="also write the cells to this file")
    args = ap.parse_args()

    cells = bench(args.suite, args.algorithms, timeout=args.timeout, order=args.order)
    print(format_table(cells))
    if args.json:
        with open(args.json, "w") as fh:
            json.dump(cells_as_dicts(cells), fh, indent=2)


if __name__ == "__main__":
    main()

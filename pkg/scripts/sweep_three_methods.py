"""Compare the crystal, sct and boxadd engines on every (alpha, beta) pair up to a size.

    python scripts/sweep_three_methods.py --max-size 8 --workers 4
"""

import argparse
import time
from collections import Counter

from nclr.coefficients import Method, nc_table
from nclr.verify import MAX_SIZE, VerifyConfig, composition_pairs, three_methods


def per_size_counts(max_size):
    sizes = Counter()
    for alpha, beta in composition_pairs(max_size):
        sizes[sum(alpha) + sum(beta)] += len(nc_table(alpha, beta, Method.SCT).entries)
    return sizes


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--max-size", type=int, default=7, choices=range(MAX_SIZE + 1))
    parser.add_argument("--workers", type=int, default=1)
    args = parser.parse_args()

    start = time.perf_counter()
    result = three_methods(VerifyConfig(max_size=args.max_size, workers=args.workers))
    print(f"{result.name}: {result.passed} pairs agree, {result.failed} disagree "
          f"({time.perf_counter() - start:.1f}s)")
    for case in result.failures:
        print("  disagreement:", case)
    for size, count in sorted(per_size_counts(args.max_size).items()):
        print(f"  |gamma| = {size}: {count} nonzero coefficients")
    raise SystemExit(0 if result.ok else 1)


if __name__ == "__main__":
    main()

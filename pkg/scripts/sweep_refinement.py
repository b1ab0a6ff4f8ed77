"""Check that summing noncommutative coefficients over rearrangements gives
the classical coefficient, for every partition triple up to a size."""

import argparse
import time

from nclr.verify import MAX_SIZE, VerifyConfig, refinement


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--max-size", type=int, default=7, choices=range(MAX_SIZE + 1))
    args = parser.parse_args()

    for n in range(1, args.max_size + 1):
        start = time.perf_counter()
        result = refinement(VerifyConfig(max_size=n))
        print(f"|lambda| <= {n}: {result.passed} cases, {result.failed} failed ({time.perf_counter() - start:.1f}s)")
        for case in result.failures:
            print("  failure:", case)
        if not result.ok:
            raise SystemExit(1)


if __name__ == "__main__":
    main()

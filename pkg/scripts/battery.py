#!/usr/bin/env python3
"""Run the chi-square battery on a stream and print a pass/fail table."""

import argparse

from rootrand import GeneratorConfig, batch_test
from rootrand.stats import DEFAULT_STRING_LENGTHS


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--strings", type=int, default=1000, help="strings per test")
    ap.add_argument("--alpha", type=float, default=0.05)
    ap.add_argument("--n-pairs", type=int, default=200)
    ap.add_argument("--rounds", type=int, default=4)
    ap.add_argument("--precision", type=int, default=20_000)
    ap.add_argument("--skip", type=int, default=50)
    ap.add_argument("--workers", type=int, default=1)
    args = ap.parse_args()

    config = GeneratorConfig(
        n_pairs=args.n_pairs,
        rounds=args.rounds,
        precision_digits=args.precision,
        skip_digits=args.skip,
    )
    print(f"{'test':<12}{'length':>8}{'passed':>8}{'failed':>8}{'failed %':>10}")
    for name, length in DEFAULT_STRING_LENGTHS.items():
        r = batch_test(config, name, args.strings, length, args.alpha, args.workers)
        print(f"{name:<12}{length:>8}{r.passed:>8}{r.failed:>8}{r.failed_percent:>10.2f}")


if __name__ == "__main__":
    main()

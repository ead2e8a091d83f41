#!/usr/bin/env python3
"""Compare the per-string ones-count spread against the normal curve."""

import argparse

from rootrand import GeneratorConfig, ones_count_distribution

NORMAL = (68.26895, 95.44997, 99.73002)


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--strings", type=int, default=10_000)
    ap.add_argument("--length", type=int, default=1000)
    ap.add_argument("--workers", type=int, default=1)
    args = ap.parse_args()

    config = GeneratorConfig()
    s = ones_count_distribution(config, args.strings, args.length, args.workers)
    print(f"{args.strings} strings of {args.length} bits")
    print(f"mean {s.mean:.1f}, sigma {s.sigma:.3f}, observed mean {s.observed_mean:.3f}")
    print()
    print(f"{'band':<10}{'observed %':>12}{'normal %':>12}")
    for k, (obs, norm) in enumerate(zip((s.within_1s, s.within_2s, s.within_3s), NORMAL), start=1):
        print(f"{k} sigma  {obs:>12.3f}{norm:>12.3f}")


if __name__ == "__main__":
    main()

#!/usr/bin/env python3
"""Tally compared digit pairs and print the 10x10 frequency table."""

import argparse

import numpy as np

from rootrand import GeneratorConfig, pair_frequency_table


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--pairs", type=int, default=1_000_000, help="digit pairs to tally")
    ap.add_argument("--n-pairs", type=int, default=200)
    ap.add_argument("--rounds", type=int, default=4)
    ap.add_argument("--precision", type=int, default=20_000)
    ap.add_argument("--skip", type=int, default=50)
    args = ap.parse_args()

    config = GeneratorConfig(
        n_pairs=args.n_pairs,
        rounds=args.rounds,
        precision_digits=args.precision,
        skip_digits=args.skip,
    )
    tally = pair_frequency_table(config, args.pairs)
    freq = tally.frequencies()

    header = "      " + "".join(f"{j:>9}" for j in range(10))
    print(header)
    for i in range(10):
        print(f"{i:>4}  " + "".join(f"{freq[i, j]:>9.5f}" for j in range(10)))

    off = ~np.eye(10, dtype=bool)
    print()
    print(f"pairs tallied          {tally.total}")
    print(f"off-diagonal range     [{freq[off].min():.5f}, {freq[off].max():.5f}]")
    print(f"tie (diagonal) range   [{freq[~off].min():.5f}, {freq[~off].max():.5f}]")
    print(f"largest asymmetry      {np.abs(freq - freq.T).max():.5f}")


if __name__ == "__main__":
    main()

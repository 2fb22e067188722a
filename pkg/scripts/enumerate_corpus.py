#!/usr/bin/env python3
"""Tabulate the enumerated lattices: counts, loc, well-separated, faithful."""
import argparse
import warnings

from locint.filters import is_completely_separated, is_well_separated
from locint.lattice import is_loc_lattice
from locint.oracle import enumerate_lattices
from locint.represent import represent_intervals


def main(argv=None) -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--max-n", type=int, default=6)
    args = ap.parse_args(argv)

    print(f"{'n':>2} {'all':>5} {'loc':>5} {'ws-low':>7} {'compl':>6} {'faithful':>9}")
    for n in range(1, args.max_n + 1):
        lats = list(enumerate_lattices(n))
        loc = [L for L in lats if is_loc_lattice(L)]
        low = sum(is_well_separated(L, "lower")[0] for L in loc)
        comp = sum(is_completely_separated(L)[0] for L in loc)
        with warnings.catch_warnings():
            warnings.simplefilter("ignore")
            faithful = sum(represent_intervals(L).faithful_checked for L in loc)
        print(f"{n:>2} {len(lats):>5} {len(loc):>5} {low:>7} {comp:>6} {faithful:>9}")


if __name__ == "__main__":
    main()

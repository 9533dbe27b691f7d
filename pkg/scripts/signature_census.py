#!/usr/bin/env python3
"""Count surviving prime signatures for several omega and prime ceilings."""

import argparse
from dataclasses import dataclass, field

from tenfriends.primes import nth_prime
from tenfriends.search import enumerate_signatures


@dataclass
class Experiment:
    omegas: list[int] = field(default_factory=lambda: [7, 8])
    ceiling_indices: list[int] = field(default_factory=lambda: [25, 50, 100])


def main():
    p = argparse.ArgumentParser(description=__doc__)
    p.add_argument("--omegas", type=int, nargs="+", default=Experiment().omegas)
    p.add_argument("--ceiling-indices", type=int, nargs="+", default=Experiment().ceiling_indices)
    exp = Experiment(**vars(p.parse_args()))
    print("omega  ceiling  considered  cut_sup  cut_min_sq  survivors  seconds")
    for omega in exp.omegas:
        for idx in exp.ceiling_indices:
            ceiling = nth_prime(idx)
            o = enumerate_signatures(omega, ceiling, max_report=0)
            s = o.pruning_stats
            print(f"{omega:5d}  {ceiling:7d}  {s.signatures_considered:10d}  {s.pruned_by_sup:7d}"
                  f"  {s.pruned_by_min_square:10d}  {s.survivors:9d}  {o.elapsed:7.2f}")


if __name__ == "__main__":
    main()

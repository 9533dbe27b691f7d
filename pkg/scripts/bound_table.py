#!/usr/bin/env python3
"""Write the q_2/q_3/q_4 bound table for a range of omega as CSV, together with
the exact slack 9/5 - prefix * ratio at each row."""

import argparse
import csv
import sys
from dataclasses import dataclass

from tenfriends.bounds import TARGET, bound_row, proof_ratio, spec_for


@dataclass
class Experiment:
    omega_min: int = 7
    omega_max: int = 40


def main():
    p = argparse.ArgumentParser(description=__doc__)
    p.add_argument("--omega-min", type=int, default=Experiment.omega_min)
    p.add_argument("--omega-max", type=int, default=Experiment.omega_max)
    exp = Experiment(**vars(p.parse_args()))
    w = csv.writer(sys.stdout, lineterminator="\n")
    w.writerow(["omega", "k", "index", "prime_bound", "rosser_form", "ratio", "slack"])
    for omega in range(exp.omega_min, exp.omega_max + 1):
        for k in (2, 3, 4):
            row = bound_row(k, omega)
            r = proof_ratio(k, omega)
            slack = TARGET - spec_for(k).prefix * r
            w.writerow([omega, k, row.index, row.prime_bound, row.rosser_form, r, slack])


if __name__ == "__main__":
    main()

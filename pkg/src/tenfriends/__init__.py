"""Abundancy-index toolkit for the friends-of-10 problem."""

from tenfriends.arith import (
    ExactRational,
    Factorization,
    abundancy,
    abundancy_min_square,
    abundancy_sup,
    ceil_ratio,
    factorize,
    sigma,
)
from tenfriends.bounds import TARGET, bound_index, bound_row, proof_ratio
from tenfriends.primes import nth_prime, rosser_bound, sieve

__version__ = "0.1.0"

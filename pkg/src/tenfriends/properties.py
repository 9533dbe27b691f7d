"""Randomized exact checks of the abundancy-index properties.

Each function takes a seeded :class:`random.Random` so runs are repeatable.
"""

from __future__ import annotations

import math
import random

from tenfriends.arith import (
    Factorization,
    abundancy,
    abundancy_of,
    abundancy_sup,
    factorize,
)
from tenfriends.bounds import Verification
from tenfriends.primes import primes_upto

N_MAX = 10**6


def multiplicativity(rng: random.Random, trials: int = 10**4) -> Verification:
    rep = Verification("multiplicative")
    done = 0
    while done < trials:
        m, n = rng.randint(1, N_MAX), rng.randint(1, N_MAX)
        if math.gcd(m, n) != 1:
            continue
        if abundancy_of(m * n) != abundancy_of(m) * abundancy_of(n):
            rep.violation = f"I({m}*{n}) != I({m}) I({n})"
            break
        done += 1
    rep.checks = done
    return rep


def strict_growth(rng: random.Random, trials: int = 10**4) -> Verification:
    rep = Verification("I(an) > I(n)")
    for _ in range(trials):
        n, a = rng.randint(1, N_MAX), rng.randint(2, 50)
        if not abundancy_of(a * n) > abundancy_of(n):
            rep.violation = f"I({a}*{n}) <= I({n})"
            break
        rep.checks += 1
    return rep


def _random_prime_pair(rng: random.Random, pool: list[int], m: int) -> tuple[list[int], list[int]]:
    """Two increasing prime lists with p_i <= q_i componentwise."""
    idx = sorted(rng.sample(range(len(pool) - 4 * m), m))
    jdx = []
    for i in idx:
        j = i + rng.randint(0, 3)
        jdx.append(max(j, jdx[-1] + 1) if jdx else j)
    return [pool[i] for i in idx], [pool[j] for j in jdx]


def domination(rng: random.Random, trials: int = 10**3) -> Verification:
    """p_i <= q_i with shared exponents gives I(prod p_i^t_i) >= I(prod q_i^t_i)."""
    rep = Verification("domination")
    pool = primes_upto(2000)
    for _ in range(trials):
        m = rng.randint(1, 6)
        ps, qs = _random_prime_pair(rng, pool, m)
        ts = [rng.randint(1, 6) for _ in range(m)]
        ip = abundancy(Factorization(tuple(zip(ps, ts))))
        iq = abundancy(Factorization(tuple(zip(qs, ts))))
        if not ip >= iq:
            rep.violation = f"I{list(zip(ps, ts))} < I{list(zip(qs, ts))}"
            break
        rep.checks += 1
    return rep


def strict_sup(rng: random.Random, trials: int = 10**3) -> Verification:
    rep = Verification("I(n) < prod p/(p-1)")
    for _ in range(trials):
        f = factorize(rng.randint(2, N_MAX) ** rng.randint(1, 4))
        if not abundancy(f) < abundancy_sup(f.primes()):
            rep.violation = f"I({f}) >= sup"
            break
        rep.checks += 1
    return rep


def run_all(seed: int = 0, scale: float = 1.0) -> list[Verification]:
    rng = random.Random(seed)
    return [
        multiplicativity(rng, int(10**4 * scale)),
        strict_growth(rng, int(10**4 * scale)),
        domination(rng, int(10**3 * scale)),
        strict_sup(rng, int(10**3 * scale)),
    ]

"""Prime tables, 1-indexed nth prime, and the Rosser-type bound on p_n."""

from __future__ import annotations

import math
import threading
from dataclasses import dataclass, field

import numpy as np

# bytes of sieve flags allowed for a single table
MEMORY_BUDGET = 1 << 30


@dataclass(frozen=True)
class PrimeTable:
    limit: int
    primes: np.ndarray = field(repr=False)

    def __len__(self) -> int:
        return len(self.primes)

    def __contains__(self, p: int) -> bool:
        i = int(np.searchsorted(self.primes, p))
        return i < len(self.primes) and int(self.primes[i]) == p

    def nth(self, n: int) -> int:
        """p_n with p_1 = 2."""
        if not 1 <= n <= len(self.primes):
            raise IndexError(f"table up to {self.limit} holds {len(self.primes)} primes, asked for p_{n}")
        return int(self.primes[n - 1])

    def rank(self, p: int) -> int:
        """Inverse of :meth:`nth`; raises if ``p`` is not a stored prime."""
        i = int(np.searchsorted(self.primes, p))
        if i == len(self.primes) or int(self.primes[i]) != p:
            raise KeyError(f"{p} is not a prime <= {self.limit}")
        return i + 1

    def count_upto(self, x: int) -> int:
        return int(np.searchsorted(self.primes, x, side="right"))

    def tolist(self) -> list[int]:
        return [int(p) for p in self.primes]


def sieve(limit: int, memory_budget: int = MEMORY_BUDGET) -> PrimeTable:
    if limit < 2:
        raise ValueError(f"sieve limit must be >= 2, got {limit}")
    if limit + 1 > memory_budget:
        raise MemoryError(
            f"sieve up to {limit} needs ~{limit + 1} bytes, budget is {memory_budget}"
        )
    flags = np.ones(limit + 1, dtype=bool)
    flags[:2] = False
    flags[4::2] = False
    for p in range(3, math.isqrt(limit) + 1, 2):
        if flags[p]:
            flags[p * p :: 2 * p] = False
    primes = np.flatnonzero(flags).astype(np.int64)
    primes.flags.writeable = False
    return PrimeTable(limit, primes)


_table = sieve(1 << 16)
_lock = threading.Lock()


def _upper_estimate(n: int) -> int:
    if n < 6:
        return 13
    return int(n * (math.log(n) + math.log(math.log(n)))) + 1


def table_covering(n: int) -> PrimeTable:
    """Shared table holding at least the first ``n`` primes, doubled as needed."""
    global _table
    table = _table
    if len(table) >= n:
        return table
    with _lock:
        table = _table
        limit = table.limit
        while len(table) < n:
            limit *= 2
            if limit < _upper_estimate(n):
                continue
            table = sieve(limit)
        _table = table
    return table


def nth_prime(n: int) -> int:
    if n < 1:
        raise ValueError(f"primes are 1-indexed, got n={n}")
    return table_covering(n).nth(n)


def primes_from(n: int, count: int) -> list[int]:
    """``[p_n, p_{n+1}, ..., p_{n+count-1}]``."""
    if count <= 0:
        return []
    table = table_covering(n + count - 1)
    return [int(p) for p in table.primes[n - 1 : n - 1 + count]]


def primes_upto(x: int) -> list[int]:
    table = _table
    while table.limit < x:
        table = table_covering(2 * len(table) + 1)
    return [int(p) for p in table.primes[: table.count_upto(x)]]


def prime_pi(x: int) -> int:
    return len(primes_upto(x)) if x >= 2 else 0


def rosser_bound(n: int) -> float:
    """n (log n + 2 log log n); an upper bound for p_n once n >= 4."""
    if n < 4:
        raise ValueError(f"the bound is only asserted for n >= 4, got {n}")
    return n * (math.log(n) + 2 * math.log(math.log(n)))


def rosser_violations(n_max: int, n_min: int = 4) -> list[int]:
    """Indices n in [n_min, n_max] with p_n >= rosser_bound(n)."""
    n_min = max(n_min, 4)
    if n_max < n_min:
        return []
    table = table_covering(n_max)
    ns = np.arange(n_min, n_max + 1, dtype=np.float64)
    bound = ns * (np.log(ns) + 2 * np.log(np.log(ns)))
    p = table.primes[n_min - 1 : n_max].astype(np.float64)
    return [int(n) for n in ns[p >= bound]]


def index_violations(n_max: int) -> list[int]:
    """Indices n in [1, n_max] where p_n > n fails."""
    table = table_covering(n_max)
    ns = np.arange(1, n_max + 1, dtype=np.int64)
    return [int(n) for n in ns[table.primes[:n_max] <= ns]]

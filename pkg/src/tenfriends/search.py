"""Desk-scale searches for a friend of 10.

``scan_for_friend`` tests 5 sigma(m) = 9 m for every m up to a limit with a
segmented divisor-sum sieve.  ``enumerate_signatures`` walks increasing
prime tuples (5, q_2, ..., q_omega) under the q_2/q_3/q_4 caps and prunes
with two exact cuts:

* sup cut: prod p/(p-1) <= 9/5 means no exponents can reach 9/5;
* min-square cut: I(prod p^2) > 9/5 means every square already overshoots.
"""

from __future__ import annotations

import math
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction

import numpy as np

from tenfriends.bounds import TARGET, prime_bound
from tenfriends.primes import primes_upto

MEMORY_BUDGET = 1 << 30
MAX_LIMIT = 10**15  # keeps 9 m and sigma(m) inside int64

FIVE_DIVIDES_NOTE = (
    "I(m) = 9/5 gives 5 sigma(m) = 9 m, so 5 | 9 m and hence 5 | m; "
    "restricting to multiples of 5 loses no friend."
)


@dataclass(frozen=True)
class SearchConfig:
    limit: int = 10**7
    mode: str = "unconditional"  # or "assume-paper"
    chunk: int = 1 << 20
    workers: int = 1
    memory_budget: int = MEMORY_BUDGET

    def __post_init__(self):
        if self.limit < 10:
            raise ValueError(f"limit must be >= 10, got {self.limit}")
        if self.limit > MAX_LIMIT:
            raise ValueError(f"limit {self.limit} exceeds {MAX_LIMIT}")
        if self.mode not in ("unconditional", "assume-paper"):
            raise ValueError(f"unknown mode {self.mode!r}")
        if self.chunk < 1 or self.workers < 1:
            raise ValueError("chunk and workers must be >= 1")
        need = self.memory_estimate()
        if need > self.memory_budget:
            raise MemoryError(
                f"block sieve needs ~{need} bytes ({self.workers} workers x chunk {self.chunk}), "
                f"budget is {self.memory_budget}"
            )

    def memory_estimate(self) -> int:
        # per worker: sigma block, quotient ramp, temporaries (int64 each)
        block = min(self.chunk, self.limit)
        return self.workers * 4 * 8 * block + 8 * (math.isqrt(self.limit) + 1)


@dataclass
class PruningStats:
    signatures_considered: int = 0
    pruned_by_sup: int = 0
    pruned_by_min_square: int = 0
    survivors: int = 0

    def as_dict(self) -> dict:
        return dict(self.__dict__)


@dataclass
class SearchOutcome:
    scanned: int = 0
    matches: list[int] = field(default_factory=list)
    elapsed: float = 0.0
    pruning_stats: PruningStats | None = None
    ranges: list[tuple[int, int]] = field(default_factory=list)
    notes: list[str] = field(default_factory=list)
    survivors: list[tuple[int, ...]] = field(default_factory=list)

    def as_dict(self, timing: bool = False) -> dict:
        """JSON-ready view. Timing is opt-in so equal runs serialize identically."""
        out = {
            "scanned": self.scanned,
            "matches": list(self.matches),
            "ranges": [list(r) for r in self.ranges],
            "pruning_stats": self.pruning_stats.as_dict() if self.pruning_stats else None,
            "survivors": [list(s) for s in self.survivors],
            "notes": list(self.notes),
        }
        if timing:
            out["elapsed"] = round(self.elapsed, 3)
        return out


# ---------------------------------------------------------------------------
# divisor-sum sieve
# ---------------------------------------------------------------------------

def sigma_block(lo: int, hi: int, divisors: np.ndarray | None = None) -> np.ndarray:
    """sigma(m) for m in [lo, hi), lo >= 1, as int64.

    Each divisor pair (d, m/d) with d <= sqrt(m) is added once: d runs up to
    isqrt(hi - 1) and for m >= d^2 the block gets d + m/d (just d when m = d^2).
    """
    if lo < 1 or hi <= lo:
        raise ValueError(f"bad block [{lo}, {hi})")
    size = hi - lo
    out = np.zeros(size, dtype=np.int64)
    ramp = np.arange(size, dtype=np.int64)
    top = math.isqrt(hi - 1)
    ds = range(1, top + 1) if divisors is None else divisors[divisors <= top].tolist()
    for d in ds:
        d = int(d)
        sq = d * d
        first = max(sq, -(-lo // d) * d)
        if first >= hi:
            continue
        s = first - lo
        count = (hi - 1 - first) // d + 1
        q0 = first // d
        # cofactor m/d runs q0, q0+1, ...
        out[s::d] += d + q0 + ramp[:count]
        if first == sq:
            out[s] -= d
    return out


def _scan_range(args: tuple[int, int, int, bool]) -> tuple[int, list[int], int]:
    chunk_id, lo, hi, only_fives = args
    sig = sigma_block(lo, hi)
    m = np.arange(lo, hi, dtype=np.int64)
    hit = 5 * sig == 9 * m
    if only_fives:
        mask = m % 5 == 0
        hit &= mask
        tested = int(mask.sum())
    else:
        tested = hi - lo
    if lo <= 10 < hi:
        # 10 is the number whose friend we seek, not a candidate
        hit[10 - lo] = False
        tested -= 1
    return chunk_id, [int(x) for x in m[hit]], tested


def scan_for_friend(cfg: SearchConfig) -> SearchOutcome:
    t0 = time.perf_counter()
    only_fives = cfg.mode == "assume-paper"
    jobs = []
    for i, lo in enumerate(range(1, cfg.limit + 1, cfg.chunk)):
        jobs.append((i, lo, min(lo + cfg.chunk, cfg.limit + 1), only_fives))
    if cfg.workers > 1 and len(jobs) > 1:
        with ProcessPoolExecutor(max_workers=cfg.workers) as pool:
            results = list(pool.map(_scan_range, jobs))
    else:
        results = [_scan_range(j) for j in jobs]
    results.sort(key=lambda r: r[0])
    out = SearchOutcome(ranges=[(1, cfg.limit)])
    for _, found, tested in results:
        out.matches.extend(found)
        out.scanned += tested
    if only_fives:
        out.notes.append(FIVE_DIVIDES_NOTE)
    out.elapsed = time.perf_counter() - t0
    return out


# ---------------------------------------------------------------------------
# signature enumeration
# ---------------------------------------------------------------------------

def _sup_factor(p: int) -> Fraction:
    return Fraction(p, p - 1)


def _square_factor(p: int) -> Fraction:
    return Fraction(p * p + p + 1, p * p)


def enumerate_signatures(
    omega: int, prime_ceiling: int | None, max_report: int = 100
) -> SearchOutcome:
    """Count prime tuples (5, q_2, ..., q_omega) that survive both cuts.

    q_2, q_3, q_4 are capped by the exact prime-index bounds; later primes by
    ``prime_ceiling``.  A subtree is dropped as soon as its best-case sup
    (the current prefix completed by the next consecutive primes) is
    <= 9/5, or its prefix min-square already exceeds 9/5.
    """
    if omega < 7:
        raise ValueError(f"a friend of 10 has omega >= 7, got {omega}")
    if prime_ceiling is None:
        raise ValueError("prime_ceiling is required: primes beyond q_4 are otherwise unbounded")
    if max_report < 0:
        raise ValueError("max_report must be >= 0")
    t0 = time.perf_counter()
    caps = {2: prime_bound(2, omega), 3: prime_bound(3, omega), 4: prime_bound(4, omega)}
    pool = [p for p in primes_upto(prime_ceiling) if p >= 7]
    n = len(pool)
    sup_f = [_sup_factor(p) for p in pool]
    sq_f = [_square_factor(p) for p in pool]
    stats = PruningStats()
    out = SearchOutcome(pruning_stats=stats)
    chosen = [5]

    def best_tail(i: int, need: int) -> Fraction | None:
        # largest achievable sup factor from `need` primes starting at pool[i]
        if i + need > n:
            return None
        acc = Fraction(1)
        for j in range(i, i + need):
            acc *= sup_f[j]
        return acc

    def walk(pos: int, start: int, sup: Fraction, low: Fraction) -> None:
        # pos: 1-based position of the next prime to pick (2..omega)
        cap = caps.get(pos)
        for i in range(start, n):
            p = pool[i]
            if cap is not None and p >= cap:
                break
            need = omega - pos
            if i + 1 + need > n:
                break
            stats.signatures_considered += 1
            s = sup * sup_f[i]
            tail = best_tail(i + 1, need)
            if s * tail <= TARGET:
                # larger p only shrinks the best case: stop this level
                stats.pruned_by_sup += 1
                break
            lw = low * sq_f[i]
            if lw > TARGET:
                # min-square decreases with p, so try the next prime
                stats.pruned_by_min_square += 1
                continue
            chosen.append(p)
            if pos == omega:
                stats.survivors += 1
                if len(out.survivors) < max_report:
                    out.survivors.append(tuple(chosen))
            else:
                walk(pos + 1, i + 1, s, lw)
            chosen.pop()

    walk(2, 0, _sup_factor(5), _square_factor(5))
    out.scanned = stats.signatures_considered
    out.ranges = [(7, prime_ceiling)]
    out.notes.append(f"caps q2<{caps[2]} q3<{caps[3]} q4<{caps[4]} qi<={prime_ceiling}")
    out.elapsed = time.perf_counter() - t0
    return out

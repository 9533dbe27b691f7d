"""Exact integer arithmetic: factorization, sigma and the abundancy index.

Rationals are :class:`fractions.Fraction` throughout; nothing in this module
touches floating point.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass
from fractions import Fraction
from functools import reduce
from typing import Iterable, Sequence

ExactRational = Fraction

TRIAL_LIMIT = 10**6

_SMALL_PRIMES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41)
# Deterministic Miller-Rabin bound for the 13 prime bases above.
_MR_DETERMINISTIC = 3_317_044_064_679_887_385_961_981


def _small_prime_list(limit: int) -> list[int]:
    flags = bytearray([1]) * (limit + 1)
    flags[0:2] = b"\x00\x00"
    for p in range(2, math.isqrt(limit) + 1):
        if flags[p]:
            flags[p * p :: p] = bytearray(len(range(p * p, limit + 1, p)))
    return [i for i, f in enumerate(flags) if f]


_TRIAL_PRIMES: list[int] | None = None


def _trial_primes() -> list[int]:
    global _TRIAL_PRIMES
    if _TRIAL_PRIMES is None:
        _TRIAL_PRIMES = _small_prime_list(TRIAL_LIMIT)
    return _TRIAL_PRIMES


# ---------------------------------------------------------------------------
# primality
# ---------------------------------------------------------------------------

def _strong_probable_prime(n: int, base: int) -> bool:
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    x = pow(base, d, n)
    if x == 1 or x == n - 1:
        return True
    for _ in range(s - 1):
        x = x * x % n
        if x == n - 1:
            return True
    return False


def _jacobi(a: int, n: int) -> int:
    a %= n
    result = 1
    while a:
        while a % 2 == 0:
            a //= 2
            if n % 8 in (3, 5):
                result = -result
        a, n = n, a
        if a % 4 == 3 and n % 4 == 3:
            result = -result
        a %= n
    return result if n == 1 else 0


def _strong_lucas_probable_prime(n: int) -> bool:
    # Selfridge parameter choice: first D in 5, -7, 9, -11, ... with (D/n) = -1.
    if math.isqrt(n) ** 2 == n:
        return False
    D = 5
    while _jacobi(D, n) != -1:
        D = -D - 2 if D > 0 else -D + 2
    P, Q = 1, (1 - D) // 4
    d, s = n + 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    inv2 = pow(2, -1, n)
    U, V, Qk = 0, 2, 1
    for bit in bin(d)[2:]:
        U, V = U * V % n, (V * V - 2 * Qk) % n
        Qk = Qk * Qk % n
        if bit == "1":
            U, V = (P * U + V) * inv2 % n, (D * U + P * V) * inv2 % n
            Qk = Qk * Q % n
    if U == 0 or V == 0:
        return True
    for _ in range(s - 1):
        V = (V * V - 2 * Qk) % n
        Qk = Qk * Qk % n
        if V == 0:
            return True
    return False


def is_prime(n: int) -> bool:
    """Primality test, deterministic below 3.3e24; BPSW above that."""
    if n < 2:
        return False
    for p in _SMALL_PRIMES:
        if n % p == 0:
            return n == p
    if n < 43 * 43:
        return True
    if n < _MR_DETERMINISTIC:
        return all(_strong_probable_prime(n, b) for b in _SMALL_PRIMES)
    return _strong_probable_prime(n, 2) and _strong_lucas_probable_prime(n)


# ---------------------------------------------------------------------------
# factorization
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class Factorization:
    """Canonical prime-power decomposition ``((p1, e1), (p2, e2), ...)``."""

    entries: tuple[tuple[int, int], ...] = ()

    def __post_init__(self):
        prev = 1
        for p, e in self.entries:
            if p <= prev:
                raise ValueError(f"primes must be strictly increasing, got {p} after {prev}")
            if e < 1:
                raise ValueError(f"exponent of {p} must be >= 1, got {e}")
            if not is_prime(p):
                raise ValueError(f"{p} is not prime")
            prev = p

    @classmethod
    def from_dict(cls, powers: dict[int, int]) -> Factorization:
        return cls(tuple(sorted((int(p), int(e)) for p, e in powers.items())))

    @classmethod
    def parse(cls, text: str) -> Factorization:
        """Parse ``"5^2*7^4*11^2"``. ``"1"`` (or an empty string) is the empty product."""
        text = text.strip()
        if text in ("", "1"):
            return cls()
        entries = []
        for term in text.split("*"):
            base, _, exp = term.strip().partition("^")
            try:
                p = int(base)
                e = int(exp) if exp else 1
            except ValueError:
                raise ValueError(f"malformed factor {term!r}") from None
            entries.append((p, e))
        return cls(tuple(entries))

    def value(self) -> int:
        return math.prod(p**e for p, e in self.entries)

    def omega(self) -> int:
        return len(self.entries)

    def primes(self) -> tuple[int, ...]:
        return tuple(p for p, _ in self.entries)

    def exponent(self, p: int) -> int:
        for q, e in self.entries:
            if q == p:
                return e
        return 0

    def as_dict(self) -> dict[int, int]:
        return dict(self.entries)

    def __str__(self) -> str:
        if not self.entries:
            return "1"
        return "*".join(f"{p}^{e}" if e > 1 else str(p) for p, e in self.entries)


def _brent_rho(n: int, rng: random.Random) -> int:
    """Return a nontrivial factor of the odd composite ``n``."""
    while True:
        y, c, m = rng.randrange(1, n), rng.randrange(1, n), 128
        g = r = q = 1
        while g == 1:
            x = y
            for _ in range(r):
                y = (y * y + c) % n
            k = 0
            while k < r and g == 1:
                ys = y
                for _ in range(min(m, r - k)):
                    y = (y * y + c) % n
                    q = q * abs(x - y) % n
                g = math.gcd(q, n)
                k += m
            r *= 2
        if g == n:
            g = 1
            while g == 1:
                ys = (ys * ys + c) % n
                g = math.gcd(abs(x - ys), n)
        if g != n:
            return g


def _split(n: int, out: dict[int, int], rng: random.Random) -> None:
    if n == 1:
        return
    if is_prime(n):
        out[n] = out.get(n, 0) + 1
        return
    r = math.isqrt(n)
    if r * r == n:
        _split(r, out, rng)
        _split(r, out, rng)
        return
    d = _brent_rho(n, rng)
    _split(d, out, rng)
    _split(n // d, out, rng)


def factorize(n: int) -> Factorization:
    if n < 1:
        raise ValueError(f"factorize needs a positive integer, got {n}")
    powers: dict[int, int] = {}
    for p in _trial_primes():
        if p * p > n:
            break
        if n % p == 0:
            e = 0
            while n % p == 0:
                n //= p
                e += 1
            powers[p] = e
    if n > 1:
        # Fixed seed keeps the factorization path reproducible.
        _split(n, powers, random.Random(n))
    return Factorization.from_dict(powers)


# ---------------------------------------------------------------------------
# sigma and abundancy
# ---------------------------------------------------------------------------

def sigma(f: Factorization) -> int:
    return math.prod((p ** (e + 1) - 1) // (p - 1) for p, e in f.entries)


def abundancy(f: Factorization) -> Fraction:
    return Fraction(sigma(f), f.value())


def abundancy_of(n: int) -> Fraction:
    return abundancy(factorize(n))


def abundancy_sup(primes: Iterable[int]) -> Fraction:
    """prod p/(p-1): strict upper bound on I(n) over all exponent choices."""
    return reduce(lambda acc, p: acc * Fraction(p, p - 1), primes, Fraction(1))


def abundancy_min_square(primes: Iterable[int]) -> Fraction:
    """I(prod p^2), the least abundancy any square on these primes can have."""
    return reduce(
        lambda acc, p: acc * Fraction(p**3 - 1, p * p * (p - 1)), primes, Fraction(1)
    )


def is_strictly_increasing_primes(primes: Sequence[int]) -> bool:
    return all(a < b for a, b in zip(primes, primes[1:])) and all(map(is_prime, primes))


# ---------------------------------------------------------------------------
# ceiling / floor / fractional part of a/b
# ---------------------------------------------------------------------------

def ceil_ratio(a: int, b: int) -> int:
    if b < 1:
        raise ValueError(f"denominator must be positive, got {b}")
    return -((-a) // b)


def floor_ratio(a: int, b: int) -> int:
    if b < 1:
        raise ValueError(f"denominator must be positive, got {b}")
    return a // b


def frac_ratio(a: int, b: int) -> Fraction:
    """Fractional part {a/b} = a/b - floor(a/b), in [0, 1)."""
    return Fraction(a - b * floor_ratio(a, b), b)

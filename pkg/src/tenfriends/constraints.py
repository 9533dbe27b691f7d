"""Necessary conditions for a candidate n to satisfy I(n) = 9/5, n != 10."""

from __future__ import annotations

from dataclasses import dataclass, field

from tenfriends.arith import (
    Factorization,
    abundancy,
    abundancy_min_square,
    abundancy_sup,
    factorize,
    sigma,
)
from tenfriends.bounds import TARGET, bound_index, spec_for
from tenfriends.primes import nth_prime


def multiplicative_order(base: int, modulus: int) -> int:
    """Least e >= 1 with base^e = 1 (mod modulus), modulus prime."""
    if modulus < 2:
        raise ValueError(f"modulus must be prime, got {modulus}")
    if base % modulus == 0:
        raise ValueError(f"{modulus} divides {base}")
    order = modulus - 1
    for q, _ in factorize(modulus - 1).entries:
        while order % q == 0 and pow(base, order // q, modulus) == 1:
            order //= q
    return order


def least_odd_exponent(r: int) -> int | None:
    """Least odd f > 1 with 5^f = 1 (mod r), or None if there is none.

    Every such f is a multiple of ord_r(5), so one exists exactly when the
    order is odd (and then it is the order, unless the order is 1).
    """
    if r in (2, 5):
        raise ValueError(f"r must be a prime other than 2 and 5, got {r}")
    e = multiplicative_order(5, r)
    if e % 2 == 0:
        return None
    # ord = 1 only for r | 4, i.e. r = 2, excluded above
    return e


@dataclass(frozen=True)
class OrderCondition:
    r: int
    order_of_5: int
    f: int | None
    a: int

    @property
    def satisfied(self) -> bool:
        return self.f is not None and (2 * self.a + 1) % self.f == 0


@dataclass(frozen=True)
class Check:
    name: str
    passed: bool
    witness: str | None = None

    def as_dict(self) -> dict:
        return {"name": self.name, "passed": self.passed, "witness": self.witness}


@dataclass(frozen=True)
class ConditionReport:
    candidate: Factorization
    checks: tuple[Check, ...] = field(default=())

    @property
    def overall(self) -> bool:
        return all(c.passed for c in self.checks)

    def __getitem__(self, name: str) -> Check:
        for c in self.checks:
            if c.name == name:
                return c
        raise KeyError(name)

    def failed(self) -> list[str]:
        return [c.name for c in self.checks if not c.passed]

    def as_dict(self) -> dict:
        return {
            "candidate": str(self.candidate),
            "checks": [c.as_dict() for c in self.checks],
            "overall": self.overall,
        }


CHECK_NAMES = (
    "odd",
    "not_ten",
    "square",
    "least_prime_5",
    "omega_at_least_7",
    "prime_1_mod_3",
    "prime_1_mod_6",
    "prime_1_mod_10",
    "order_condition",
    "q2_bound",
    "q3_bound",
    "q4_bound",
    "abundancy_feasible",
    "abundancy_equals_9_5",
)


def order_conditions(f: Factorization) -> list[OrderCondition]:
    a = f.exponent(5) // 2
    out = []
    for r in f.primes():
        if r in (2, 5):
            continue
        f_r = least_odd_exponent(r)
        out.append(OrderCondition(r, multiplicative_order(5, r), f_r, a))
    return out


def _bound_check(f: Factorization, k: int) -> Check:
    name = f"q{k}_bound"
    primes = f.primes()
    w = f.omega()
    if w < k:
        return Check(name, False, f"omega={w} has no q_{k}")
    q = primes[k - 1]
    lo = spec_for(k).lower_bound
    idx = bound_index(k, w)
    hi = nth_prime(idx)
    if q < lo:
        return Check(name, False, f"q_{k}={q} < {lo}")
    if q >= hi:
        return Check(name, False, f"q_{k}={q} >= p_{idx}={hi}")
    return Check(name, True, f"{lo} <= q_{k}={q} < p_{idx}={hi}")


def _exists(name: str, primes: tuple[int, ...], modulus: int) -> Check:
    hits = [p for p in primes if p % modulus == 1]
    if hits:
        return Check(name, True, f"{hits[0]} = 1 mod {modulus}")
    return Check(name, False, f"no prime divisor = 1 mod {modulus}")


def check_friend_conditions(f: Factorization | int) -> ConditionReport:
    """Evaluate every condition in :data:`CHECK_NAMES`, in order, without short-circuiting."""
    if isinstance(f, int):
        f = factorize(f)
    n = f.value()
    if n <= 1:
        raise ValueError("candidate must exceed 1")
    primes = f.primes()
    checks = []

    checks.append(Check("odd", n % 2 == 1, None if n % 2 else "2 | n"))
    checks.append(Check("not_ten", n != 10, "n = 10" if n == 10 else None))
    odd_exp = [(p, e) for p, e in f.entries if e % 2]
    checks.append(
        Check("square", not odd_exp, f"{odd_exp[0][0]}^{odd_exp[0][1]}" if odd_exp else None)
    )
    checks.append(
        Check("least_prime_5", primes[0] == 5, None if primes[0] == 5 else f"least prime {primes[0]}")
    )
    w = f.omega()
    checks.append(Check("omega_at_least_7", w >= 7, f"omega={w}"))
    checks.append(_exists("prime_1_mod_3", primes, 3))
    checks.append(_exists("prime_1_mod_6", primes, 6))
    checks.append(_exists("prime_1_mod_10", primes, 10))

    conds = [oc for oc in order_conditions(f) if oc.satisfied]
    a = f.exponent(5) // 2
    if f.exponent(5) % 2 or a == 0:
        checks.append(Check("order_condition", False, f"5^{f.exponent(5)} is not 5^(2a) with a >= 1"))
    elif conds:
        oc = conds[0]
        checks.append(Check("order_condition", True, f"r={oc.r}, f={oc.f} | 2a+1={2 * a + 1}"))
    else:
        checks.append(Check("order_condition", False, f"no r with odd f dividing 2a+1={2 * a + 1}"))

    for k in (2, 3, 4):
        checks.append(_bound_check(f, k))

    sup = abundancy_sup(primes)
    low = abundancy_min_square(primes)
    if sup <= TARGET:
        checks.append(Check("abundancy_feasible", False, f"sup {sup} <= 9/5"))
    elif low > TARGET:
        checks.append(Check("abundancy_feasible", False, f"min-square {low} > 9/5"))
    else:
        checks.append(Check("abundancy_feasible", True, f"{low} <= 9/5 < {sup}"))

    exact = 5 * sigma(f) == 9 * n
    checks.append(Check("abundancy_equals_9_5", exact, f"I(n) = {abundancy(f)}"))

    assert tuple(c.name for c in checks) == CHECK_NAMES
    return ConditionReport(f, tuple(checks))


"""Upper bounds on q_2, q_3, q_4 for a friend of 10, and exact checks of
every inequality used to derive them.

For k in {2, 3, 4} the bound is ``q_k < p_idx`` with ``idx = ceil(c_k * omega)``.
Assuming the opposite caps I(n) by ``prefix_k * R_k(omega)`` where

    R_k(omega) = (idx + omega - o_k) / (idx - 1)

and ``R_k < ratio_limit_k`` with ``prefix_k * ratio_limit_k < 9/5``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from tenfriends.arith import abundancy_sup, ceil_ratio, frac_ratio
from tenfriends.primes import nth_prime, primes_from, rosser_bound

TARGET = Fraction(9, 5)


@dataclass(frozen=True)
class MonotoneRationalMap:
    """t -> (a t - b) / (c t - d) on integers t >= start.

    Increasing when ``b c > a d``, decreasing when ``b c < a d``; either way
    the values approach ``a / c`` from one side.
    """

    a: int
    b: int
    c: int
    d: int
    start: int = 1

    def __call__(self, t: int) -> Fraction:
        return Fraction(self.a * t - self.b, self.c * t - self.d)

    @property
    def limit(self) -> Fraction:
        return Fraction(self.a, self.c)

    @property
    def increasing(self) -> bool:
        return self.b * self.c > self.a * self.d

    def validate(self) -> None:
        if min(self.a, self.c, self.start) < 1 or min(self.b, self.d) < 0:
            raise ValueError(f"{self}: a, c, start must be positive and b, d non-negative")
        if self.b * self.c == self.a * self.d:
            raise ValueError(f"{self}: bc = ad, the map is constant")
        if self.start * self.c <= self.d:
            raise ValueError(f"{self}: start must exceed d/c = {Fraction(self.d, self.c)}")


PSI = MonotoneRationalMap(1, 0, 1, 1, start=2)  # x / (x - 1)


@dataclass(frozen=True)
class ClosedForm:
    """Literal piecewise closed form of R_k, split on ``modulus | omega``.

    Off the divisible branch the ratio is
    ``(num_slope w + num_const - modulus {residue w / modulus})
    / (den_slope w - modulus {residue w / modulus})``;
    ``envelope_num``/``envelope_den`` are the constant offsets bracketing
    numerator and denominator once ``modulus {.}`` ranges over 1..modulus-1.
    """

    modulus: int
    residue: int
    num_slope: int
    num_const: int
    den_slope: int
    envelope_num: tuple[int, int]
    envelope_den: tuple[int, int]
    upper: MonotoneRationalMap  # f(t), non-divisible branch
    divisible: MonotoneRationalMap  # g(t), divisible branch


@dataclass(frozen=True)
class BoundSpec:
    k: int
    coefficient: Fraction
    offset: int
    prefix: Fraction
    ratio_limit: Fraction
    composite_limit: Fraction
    lower_bound: int
    prefix_primes: tuple[int, ...]
    closed_form: ClosedForm = field(repr=False)

    def check(self) -> None:
        assert self.prefix == abundancy_sup(self.prefix_primes), self.k
        assert self.prefix * self.ratio_limit == self.composite_limit, self.k
        assert self.composite_limit < TARGET, self.k
        cf = self.closed_form
        assert self.coefficient == Fraction(cf.den_slope, cf.modulus), self.k
        assert self.ratio_limit == Fraction(cf.num_slope, cf.den_slope), self.k
        assert cf.upper.limit == cf.divisible.limit == self.ratio_limit, self.k
        cf.upper.validate()
        cf.divisible.validate()
        assert cf.upper.increasing and cf.divisible.increasing, self.k


SPECS: dict[int, BoundSpec] = {
    2: BoundSpec(
        k=2,
        coefficient=Fraction(7, 3),
        offset=2,
        prefix=Fraction(5, 4),
        ratio_limit=Fraction(10, 7),
        composite_limit=Fraction(25, 14),
        lower_bound=7,
        prefix_primes=(5,),
        closed_form=ClosedForm(
            modulus=3, residue=1, num_slope=10, num_const=-3, den_slope=7,
            envelope_num=(-5, -4), envelope_den=(-2, -1),
            upper=MonotoneRationalMap(10, 4, 7, 2),
            divisible=MonotoneRationalMap(10, 6, 7, 3),
        ),
    ),
    3: BoundSpec(
        k=3,
        coefficient=Fraction(180, 41),
        offset=3,
        prefix=Fraction(35, 24),
        ratio_limit=Fraction(221, 180),
        composite_limit=Fraction(1547, 864),
        lower_bound=11,
        prefix_primes=(5, 7),
        closed_form=ClosedForm(
            modulus=41, residue=16, num_slope=221, num_const=-82, den_slope=180,
            envelope_num=(-122, -83), envelope_den=(-40, -1),
            upper=MonotoneRationalMap(221, 83, 180, 40),
            divisible=MonotoneRationalMap(221, 123, 180, 41),
        ),
    ),
    4: BoundSpec(
        k=4,
        coefficient=Fraction(390, 47),
        offset=4,
        prefix=Fraction(77, 48),
        ratio_limit=Fraction(437, 390),
        composite_limit=Fraction(33649, 18720),
        lower_bound=13,
        prefix_primes=(5, 7, 11),
        closed_form=ClosedForm(
            modulus=47, residue=14, num_slope=437, num_const=-141, den_slope=390,
            envelope_num=(-187, -142), envelope_den=(-46, -1),
            upper=MonotoneRationalMap(437, 142, 390, 46),
            divisible=MonotoneRationalMap(437, 188, 390, 47),
        ),
    ),
}

for _spec in SPECS.values():
    _spec.check()


def spec_for(k: int) -> BoundSpec:
    try:
        return SPECS[k]
    except KeyError:
        raise ValueError(f"bounds exist only for k in (2, 3, 4), got {k}") from None


def bound_index(k: int, omega: int) -> int:
    spec = spec_for(k)
    if omega < 1:
        raise ValueError(f"omega must be >= 1, got {omega}")
    c = spec.coefficient
    return ceil_ratio(c.numerator * omega, c.denominator)


def prime_bound(k: int, omega: int) -> int:
    """Exclusive upper bound on q_k: p_{bound_index(k, omega)}."""
    return nth_prime(bound_index(k, omega))


@dataclass(frozen=True)
class BoundRow:
    omega: int
    k: int
    index: int
    prime_bound: int
    rosser_form: float | None  # None when index < 4

    def as_dict(self) -> dict:
        return {
            "omega": self.omega,
            "k": self.k,
            "index": self.index,
            "prime_bound": self.prime_bound,
            "rosser_form": self.rosser_form,
        }


def bound_row(k: int, omega: int) -> BoundRow:
    idx = bound_index(k, omega)
    p = nth_prime(idx)
    if idx >= 4:
        rosser = rosser_bound(idx)
        assert p < rosser, (k, omega)
    else:
        rosser = None
    return BoundRow(omega, k, idx, p, rosser)


def proof_ratio(k: int, omega: int) -> Fraction:
    idx = bound_index(k, omega)
    den = idx - 1
    if den <= 0:
        raise ValueError(f"degenerate ratio at k={k}, omega={omega}")
    return Fraction(idx + omega - spec_for(k).offset, den)


def proof_ratio_closed_form(k: int, omega: int) -> Fraction:
    cf = spec_for(k).closed_form
    if omega < 1:
        raise ValueError(f"omega must be >= 1, got {omega}")
    if omega % cf.modulus == 0:
        return cf.divisible(omega)
    scaled_frac = cf.modulus * frac_ratio(cf.residue * omega, cf.modulus)
    return (cf.num_slope * omega + cf.num_const - scaled_frac) / (cf.den_slope * omega - scaled_frac)


@dataclass
class Verification:
    """Outcome of a pointwise sweep: ``checks`` performed, first failure if any."""

    name: str
    checks: int = 0
    violation: str | None = None

    @property
    def ok(self) -> bool:
        return self.violation is None

    def as_dict(self) -> dict:
        return {"name": self.name, "checks": self.checks, "ok": self.ok, "violation": self.violation}


def verify_ratio_limits(k: int, omega_max: int, omega_min: int = 1) -> Verification:
    """For each omega: ratio equals its closed form, stays below the limit,
    and prefix * ratio stays below 9/5.

    Comparisons are exact; the ratio is kept as an integer pair so the inner
    loop avoids building Fractions.
    """
    spec = spec_for(k)
    if omega_max < 1:
        raise ValueError(f"omega_max must be >= 1, got {omega_max}")
    rep = Verification(f"ratio_limits[k={k}]")
    cf = spec.closed_form
    c_num, c_den = spec.coefficient.numerator, spec.coefficient.denominator
    lim_n, lim_d = spec.ratio_limit.numerator, spec.ratio_limit.denominator
    # prefix * r < 9/5  <=>  r < 9 / (5 prefix)
    cap = TARGET / spec.prefix
    cap_n, cap_d = cap.numerator, cap.denominator
    B = cf.modulus
    for w in range(max(1, omega_min), omega_max + 1):
        idx = -((-c_num * w) // c_den)
        rn, rd = idx + w - spec.offset, idx - 1
        if w % B == 0:
            g = cf.divisible
            cn, cd = g.a * w - g.b, g.c * w - g.d
        else:
            s = (cf.residue * w) % B  # = B {residue w / B}
            cn, cd = cf.num_slope * w + cf.num_const - s, cf.den_slope * w - s
        if rn * cd != cn * rd:
            rep.violation = f"omega={w}: ratio {rn}/{rd} != closed form {cn}/{cd}"
            break
        if not rn * lim_d < lim_n * rd:
            rep.violation = f"omega={w}: ratio {Fraction(rn, rd)} >= {spec.ratio_limit}"
            break
        if not rn * cap_d < cap_n * rd:
            rep.violation = f"omega={w}: {spec.prefix}*{Fraction(rn, rd)} >= 9/5"
            break
        rep.checks += 1
    return rep


@dataclass
class EnvelopeCheck:
    omega: int
    numerator: tuple[int, int, int]  # (low, value, high)
    denominator: tuple[int, int, int]
    quotient: Fraction
    endpoint: Fraction

    @property
    def holds(self) -> bool:
        lo, v, hi = self.numerator
        dlo, dv, dhi = self.denominator
        return lo <= v <= hi and dlo <= dv <= dhi and self.quotient <= self.endpoint


def verify_fractional_envelope(k: int, omega: int) -> EnvelopeCheck:
    """Bracket numerator and denominator of the non-divisible closed form.

    Scaled by ``modulus`` both are integers, so the bracketing is exact.
    """
    cf = spec_for(k).closed_form
    if omega < 1:
        raise ValueError(f"omega must be >= 1, got {omega}")
    if omega % cf.modulus == 0:
        raise ValueError(f"{cf.modulus} divides omega={omega}: envelope applies only off that branch")
    s = cf.modulus * frac_ratio(cf.residue * omega, cf.modulus)
    assert s.denominator == 1 and 1 <= s <= cf.modulus - 1
    s = int(s)
    num = cf.num_slope * omega + cf.num_const - s
    den = cf.den_slope * omega - s
    n_lo, n_hi = (cf.num_slope * omega + e for e in cf.envelope_num)
    d_lo, d_hi = (cf.den_slope * omega + e for e in cf.envelope_den)
    return EnvelopeCheck(
        omega=omega,
        numerator=(n_lo, num, n_hi),
        denominator=(d_lo, den, d_hi),
        quotient=Fraction(num, den),
        endpoint=cf.upper(omega),
    )


def verify_monotone_map(m: MonotoneRationalMap, t_max: int) -> Verification:
    m.validate()
    word = "increasing" if m.increasing else "decreasing"
    rep = Verification(f"monotone[{m.a}t-{m.b}]/[{m.c}t-{m.d}] {word}")
    lim = m.limit
    prev = None
    for t in range(m.start, t_max + 1):
        v = m(t)
        if prev is not None and (v <= prev if m.increasing else v >= prev):
            rep.violation = f"t={t}: {v} not strictly {word} after {prev}"
            break
        if (v >= lim) if m.increasing else (v <= lim):
            rep.violation = f"t={t}: {v} on the wrong side of {lim}"
            break
        prev = v
        rep.checks += 1
    return rep


def worst_case_primes(k: int, omega: int) -> list[int]:
    """Smallest primes a candidate with q_k >= p_idx could have:
    the fixed prefix, then p_idx, p_idx+1, ... up to omega primes in total."""
    spec = spec_for(k)
    tail = omega - len(spec.prefix_primes)
    return list(spec.prefix_primes) + primes_from(bound_index(k, omega), tail)


def verify_worst_case_sup(k: int, omega_max: int = 200) -> Verification:
    """Replay the contradiction with actual primes instead of n/(n-1)."""
    rep = Verification(f"worst_case_sup[k={k}]")
    for w in range(max(2, k), omega_max + 1):
        sup = abundancy_sup(worst_case_primes(k, w))
        if not sup < TARGET:
            rep.violation = f"omega={w}: sup {sup} >= 9/5"
            break
        rep.checks += 1
    return rep


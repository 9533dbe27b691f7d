import math
from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from oracles import (
    abundancy_naive,
    ceil_by_subtraction,
    divisor_sum_naive,
    factor_naive,
    is_prime_naive,
)
from tenfriends.arith import (
    Factorization,
    abundancy,
    abundancy_min_square,
    abundancy_of,
    abundancy_sup,
    ceil_ratio,
    factorize,
    floor_ratio,
    frac_ratio,
    is_prime,
    sigma,
)

SMALL_PRIMES = [p for p in range(2, 3000) if is_prime_naive(p)]


def F(d):
    return Factorization.from_dict(d)


def test_factorize_examples():
    assert factorize(10).as_dict() == {2: 1, 5: 1}
    assert factorize(1).entries == ()
    assert factorize(1225).as_dict() == factor_naive(1225) == {5: 2, 7: 2}


def test_factorize_rejects_zero():
    with pytest.raises(ValueError):
        factorize(0)


@pytest.mark.parametrize(
    "n",
    [
        2**61 - 1,
        (10**9 + 7) * (10**9 + 9),
        (10**11 + 3) ** 2 * (10**12 + 39),
        3**40 * 5**7,
        600851475143,
    ],
)
def test_factorize_large(n):
    f = factorize(n)
    assert f.value() == n
    assert all(is_prime(p) for p in f.primes())


@given(st.integers(1, 10**7))
def test_factorize_matches_trial_division(n):
    assert factorize(n).as_dict() == factor_naive(n)


def test_is_prime_agrees_with_trial_division():
    assert [n for n in range(10**4) if is_prime(n)] == [n for n in range(10**4) if is_prime_naive(n)]


@pytest.mark.parametrize(
    "n, expected",
    [
        (2**89 - 1, True),
        (2**127 - 1, True),
        ((2**61 - 1) * (2**89 - 1), False),
        # strong pseudoprimes to the first 9 and first 12 prime bases
        (3825123056546413051, False),
        (318665857834031151167461, False),
    ],
)
def test_is_prime_large(n, expected):
    assert is_prime(n) is expected


def test_sigma_examples():
    assert sigma(F({2: 1, 5: 1})) == 18
    assert sigma(Factorization()) == 1
    assert sigma(F({5: 2, 7: 2})) == divisor_sum_naive(1225) == 1767


def test_abundancy_examples():
    assert abundancy(factorize(10)) == Fraction(9, 5)
    assert abundancy(Factorization()) == 1
    assert abundancy(factorize(1225)) == abundancy_naive(1225) == Fraction(1767, 1225)


@given(st.integers(1, 3000))
def test_abundancy_matches_divisor_sum(n):
    assert abundancy_of(n) == abundancy_naive(n)


def test_sup_and_min_square_examples():
    assert abundancy_sup([5]) == Fraction(5, 4)
    assert abundancy_sup([]) == 1
    assert abundancy_sup([5, 7, 11]) == Fraction(77, 48)
    assert abundancy_min_square([5]) == Fraction(31, 25)
    assert abundancy_min_square([5, 7]) == Fraction(1767, 1225) == abundancy_of(1225)
    assert abundancy_min_square([]) == 1


def test_ceil_ratio_examples():
    assert ceil_ratio(49, 3) == 17
    assert ceil_ratio(1260, 41) == 31
    assert 41 * 30 < 1260 <= 41 * 31
    assert ceil_ratio(21, 3) == 7
    assert ceil_ratio(21, 3) - floor_ratio(21, 3) == 0
    assert ceil_ratio(49, 3) - floor_ratio(49, 3) == 1
    assert frac_ratio(49, 3) == Fraction(1, 3)
    with pytest.raises(ValueError):
        ceil_ratio(1, 0)


def test_ceil_ratio_against_subtraction():
    for a in range(-100, 1001):
        for b in range(1, 51):
            c = ceil_ratio(a, b)
            assert c == ceil_by_subtraction(a, b)
            assert Fraction(a, b) == floor_ratio(a, b) + frac_ratio(a, b)
            assert 0 <= frac_ratio(a, b) < 1


@given(st.integers(1, 10**6), st.integers(1, 10**6))
def test_multiplicative(m, n):
    if math.gcd(m, n) == 1:
        assert abundancy_of(m * n) == abundancy_of(m) * abundancy_of(n)


@given(st.integers(1, 10**6), st.integers(2, 50))
def test_strict_growth(n, a):
    assert abundancy_of(a * n) > abundancy_of(n)


@given(
    st.lists(st.tuples(st.integers(0, 40), st.integers(0, 5), st.integers(1, 6)), min_size=1, max_size=5)
)
def test_domination(spec):
    # build p_i < p_{i+1}, q_i >= p_i, q increasing
    idx, jdx = [], []
    for step, shift, _ in spec:
        i = (idx[-1] + 1 if idx else 0) + step
        idx.append(i)
        jdx.append(max(i + shift, jdx[-1] + 1) if jdx else i + shift)
    ts = [t for _, _, t in spec]
    ps = [SMALL_PRIMES[i] for i in idx]
    qs = [SMALL_PRIMES[j] for j in jdx]
    assert abundancy(F(dict(zip(ps, ts)))) >= abundancy(F(dict(zip(qs, ts))))


@given(st.integers(2, 10**8))
def test_strict_sup(n):
    f = factorize(n)
    assert abundancy(f) < abundancy_sup(f.primes())


@given(st.lists(st.sampled_from(SMALL_PRIMES[2:40]), min_size=0, max_size=6, unique=True), st.integers(1, 4))
def test_min_square_is_least_square(ps, half):
    ps = sorted(ps)
    low = abundancy_min_square(ps)
    assert abundancy(F({p: 2 * half for p in ps})) >= low
    if ps:
        assert low < abundancy_sup(ps)


def test_factorization_text_roundtrip():
    f = Factorization.parse("5^2*7^4*11^2")
    assert f.as_dict() == {5: 2, 7: 4, 11: 2}
    assert str(f) == "5^2*7^4*11^2"
    assert Factorization.parse(str(factorize(10))) == factorize(10)
    assert Factorization.parse("1") == Factorization()


@pytest.mark.parametrize("bad", ["4^2", "7^2*5^2", "5^2*5^2", "5^0", "5^x", "a*b"])
def test_factorization_parse_rejects(bad):
    with pytest.raises(ValueError):
        Factorization.parse(bad)


def test_factorization_invariants():
    f = factorize(2 * 3**4 * 97**2)
    assert f.omega() == 3
    assert f.primes() == (2, 3, 97)
    assert f.value() == 2 * 3**4 * 97**2
    assert f.exponent(3) == 4 and f.exponent(5) == 0

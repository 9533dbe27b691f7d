from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from oracles import ceil_by_subtraction, primes_naive, sup_naive
from tenfriends.bounds import (
    PSI,
    SPECS,
    TARGET,
    MonotoneRationalMap,
    bound_index,
    bound_row,
    proof_ratio,
    proof_ratio_closed_form,
    spec_for,
    verify_fractional_envelope,
    verify_monotone_map,
    verify_ratio_limits,
    verify_worst_case_sup,
    worst_case_primes,
)

FIRST = primes_naive(2000)
COEFF = {2: (7, 3), 3: (180, 41), 4: (390, 47)}


def test_spec_constants():
    expected = {
        2: (Fraction(5, 4), Fraction(10, 7), Fraction(25, 14), 7),
        3: (Fraction(35, 24), Fraction(221, 180), Fraction(1547, 864), 11),
        4: (Fraction(77, 48), Fraction(437, 390), Fraction(33649, 18720), 13),
    }
    assert sorted(SPECS) == [2, 3, 4]
    for k, (prefix, limit, composite, lower) in expected.items():
        s = spec_for(k)
        assert (s.prefix, s.ratio_limit, s.composite_limit, s.lower_bound) == (prefix, limit, composite, lower)
        assert s.coefficient == Fraction(*COEFF[k])
        assert s.offset == k
        assert prefix * limit == composite < TARGET
    with pytest.raises(ValueError):
        spec_for(5)


def test_bound_index_examples():
    assert bound_index(2, 7) == 17
    assert bound_index(3, 7) == 31
    assert bound_index(4, 7) == 59
    with pytest.raises(ValueError):
        bound_index(1, 7)
    with pytest.raises(ValueError):
        bound_index(2, 0)


@pytest.mark.parametrize("k", [2, 3, 4])
def test_bound_index_against_oracle(k):
    a, b = COEFF[k]
    for w in range(1, 500):
        assert bound_index(k, w) == ceil_by_subtraction(a * w, b)


@pytest.mark.parametrize("k", [2, 3, 4])
def test_bound_index_steps(k):
    c = spec_for(k).coefficient
    lo, hi = c.numerator // c.denominator, -(-c.numerator // c.denominator)
    prev = bound_index(k, 1)
    for w in range(2, 5000):
        cur = bound_index(k, w)
        assert cur - prev in (lo, hi)
        prev = cur


@pytest.mark.parametrize(
    "k, index, prime, rosser",
    [(2, 17, 59, 83.5726186912982), (3, 31, 127, 182.944369592298), (4, 59, 277, 406.422911336460)],
)
def test_bound_row_omega_7(k, index, prime, rosser):
    row = bound_row(k, 7)
    assert (row.omega, row.k, row.index, row.prime_bound) == (7, k, index, prime)
    assert FIRST[index - 1] == prime
    assert row.rosser_form == pytest.approx(rosser, rel=1e-12)
    assert row.prime_bound < row.rosser_form


def test_bound_row_small_omega():
    row = bound_row(2, 1)
    assert row.index == 3 and row.prime_bound == 5 and row.rosser_form is None


def test_proof_ratio_examples():
    assert proof_ratio(2, 3) == Fraction(4, 3) < Fraction(10, 7)
    assert proof_ratio(2, 7) == Fraction(11, 8)
    assert proof_ratio(3, 41) == Fraction(218, 179)


def test_closed_form_examples():
    assert proof_ratio_closed_form(2, 6) == Fraction(54, 39) == Fraction(18, 13)
    assert proof_ratio_closed_form(2, 7) == Fraction(11, 8) == proof_ratio(2, 7)
    assert proof_ratio_closed_form(4, 47) == Fraction(20351, 18283)


@pytest.mark.parametrize("k", [2, 3, 4])
def test_closed_form_matches_ratio(k):
    for w in range(1, 3000):
        assert proof_ratio(k, w) == proof_ratio_closed_form(k, w)


@given(st.sampled_from([2, 3, 4]), st.integers(1, 10**9))
def test_ratio_below_limits(k, w):
    s = spec_for(k)
    r = proof_ratio(k, w)
    assert r == proof_ratio_closed_form(k, w)
    assert r < s.ratio_limit
    assert s.prefix * r < TARGET


@pytest.mark.parametrize("k", [2, 3, 4])
def test_verify_ratio_limits_sweep(k):
    rep = verify_ratio_limits(k, 20_000)
    assert rep.ok and rep.checks == 20_000


def test_verify_ratio_limits_reports_violation():
    # a deliberately wrong limit must be caught, not raise
    import dataclasses

    bad = dataclasses.replace(SPECS[2], ratio_limit=Fraction(4, 3))
    SPECS[2], saved = bad, SPECS[2]
    try:
        rep = verify_ratio_limits(2, 50)
    finally:
        SPECS[2] = saved
    assert not rep.ok and "omega=" in rep.violation


def test_envelope_examples():
    e = verify_fractional_envelope(2, 7)
    assert e.holds
    assert e.quotient == Fraction(11, 8)
    assert e.endpoint == Fraction(66, 47)
    e = verify_fractional_envelope(3, 1)
    assert e.holds and e.endpoint == Fraction(69, 70)
    with pytest.raises(ValueError):
        verify_fractional_envelope(2, 6)


@pytest.mark.parametrize("k", [2, 3, 4])
def test_envelope_sweep(k):
    m = spec_for(k).closed_form.modulus
    for w in range(1, 2000):
        if w % m:
            e = verify_fractional_envelope(k, w)
            assert e.holds, w
            assert e.quotient == proof_ratio(k, w)


@pytest.mark.parametrize(
    "m, limit",
    [
        (MonotoneRationalMap(10, 4, 7, 2), Fraction(10, 7)),
        (MonotoneRationalMap(10, 6, 7, 3), Fraction(10, 7)),
        (MonotoneRationalMap(221, 83, 180, 40), Fraction(221, 180)),
        (MonotoneRationalMap(221, 123, 180, 41), Fraction(221, 180)),
        (MonotoneRationalMap(437, 142, 390, 46), Fraction(437, 390)),
        (MonotoneRationalMap(437, 188, 390, 47), Fraction(437, 390)),
    ],
)
def test_monotone_maps(m, limit):
    assert m.limit == limit and m.increasing
    rep = verify_monotone_map(m, 10_000)
    assert rep.ok and rep.checks == 10_000


def test_psi_decreasing():
    assert not PSI.increasing
    rep = verify_monotone_map(PSI, 1000)
    assert rep.ok and rep.checks == 999


@pytest.mark.parametrize(
    "m",
    [
        MonotoneRationalMap(2, 2, 1, 1),  # bc = ad
        MonotoneRationalMap(10, 4, 7, 7),  # start 1 <= d/c
        MonotoneRationalMap(10, 4, 7, 2, start=0),
    ],
)
def test_monotone_map_rejects(m):
    with pytest.raises(ValueError):
        verify_monotone_map(m, 10)


def test_worst_case_primes_shape():
    assert worst_case_primes(2, 7) == [5] + FIRST[16:22]
    assert worst_case_primes(4, 7) == [5, 7, 11] + FIRST[58:62]


@pytest.mark.parametrize("k", [2, 3, 4])
def test_worst_case_sup_below_target(k):
    rep = verify_worst_case_sup(k, 200)
    assert rep.ok
    for w in range(max(2, k), 60):
        primes = list(spec_for(k).prefix_primes) + FIRST[bound_index(k, w) - 1 : bound_index(k, w) - 1 + w - k + 1]
        assert sup_naive(primes) < TARGET

import math

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from sqcycles import formulas as fm
from sqcycles.graph import cycle_period, l_bruteforce
from sqcycles.harness import primes_upto
from sqcycles.numcore import factorize, lcm, multiplicative_order, odd_part, two_adic_valuation


def iter_order(a, m):
    x, e = a % m, 1
    while x != 1 % m:
        x = x * a % m
        e += 1
    return e


def test_l_prime_examples():
    assert odd_part(22) == 11 and iter_order(2, 11) == 10
    assert fm.l_prime(23) == fm.LValue(23, 10, fm.Route.PRIME)
    assert fm.l_prime(17).value == 1
    assert fm.l_prime(2).value == 1
    with pytest.raises(ValueError):
        fm.l_prime(21)


def test_l_prime_square_examples():
    assert fm.l_prime_square(11).value == 20 == lcm(4, 10)
    assert iter_order(2, 47) == 23
    assert fm.l_prime_square(47).value == 253
    assert fm.l_prime_square(3).value == 2
    assert fm.l_prime_square(2) == fm.LValue(4, 1, fm.Route.PRIME_SQUARE)


def test_l_prime_power_examples():
    assert fm.l_prime_power(3, 4).value == 18
    assert fm.l_prime_power(5, 6).value == 2500
    assert fm.l_prime_power(2, 5).value == 1
    assert fm.l_prime_power(7, 1).route is fm.Route.PRIME
    assert fm.l_prime_power(7, 3).route is fm.Route.PRIME_POWER
    with pytest.raises(OverflowError):
        fm.l_prime_power(3, 41)


def test_l_of_examples():
    assert fm.l_of(675) == fm.LValue(675, 12, fm.Route.COMPOSITE_LCM)
    assert fm.l_of(3375).value == 60
    assert fm.l_of(15).value == 1
    assert fm.l_of(1).value == 1
    assert fm.l_of(4295098369) == fm.LValue(4295098369, 32, fm.Route.PRIME_SQUARE)
    with pytest.raises(ValueError):
        fm.l_of(0)


def test_oracle_agreement_up_to_20000():
    for m in range(1, 20001):
        assert fm.l_of(m).value == l_bruteforce(m), m


def test_carmichael_route_agrees_up_to_100000():
    for m in range(1, 100_001):
        assert fm.l_carmichael(m) == fm.l_of(m).value, m


@settings(max_examples=300, deadline=None)
@given(st.integers(min_value=1, max_value=2**62))
def test_carmichael_route_agrees_at_scale(m):
    assert fm.l_carmichael(m) == fm.l_of(m).value


def test_fermat_consistency():
    for k, p in enumerate(fm.FERMAT_PRIMES):
        assert p == 2 ** (2**k) + 1
        assert fm.fermat_l(k) == fm.l_prime(p).value == 1
        assert fm.fermat_l_square(k) == fm.l_prime_square(p).value == 2 ** (k + 1)
    with pytest.raises(ValueError):
        fm.fermat_l(5)
    with pytest.raises(ValueError):
        fm.fermat_l_square(-1)


def test_fermat_squares_examples():
    assert fm.fermat_l_square(3) == 16
    assert fm.fermat_l_square(4) == 32
    assert fm.fermat_l_square(0) == 2


def test_multiplicativity_exhaustive_small():
    for a in range(1, 300):
        for b in range(1, 300):
            if math.gcd(a, b) == 1:
                assert fm.l_of(a * b).value == lcm(fm.l_of(a).value, fm.l_of(b).value)


@settings(max_examples=500, deadline=None)
@given(st.integers(min_value=1, max_value=2000), st.integers(min_value=1, max_value=2000))
def test_multiplicativity_sampled(a, b):
    if math.gcd(a, b) == 1:
        assert fm.l_of(a * b).value == lcm(fm.l_of(a).value, fm.l_of(b).value)


def test_ladder_law():
    for p in (3, 5, 7, 11, 13):
        n = 3
        while p**n <= 200_000:
            here = fm.l_prime_power(p, n).value
            assert here == p * fm.l_prime_power(p, n - 1).value
            assert here == fm.ladder_value(p, n)
            assert here == l_bruteforce(p**n)
            n += 1


def test_powers_of_two_by_oracle():
    for n in range(1, 21):
        assert fm.l_prime_power(2, n).value == 1 == l_bruteforce(2**n)


def test_ladder_law_holds_for_non_wieferich_primes():
    for p in primes_upto(1000):
        if p == 2:
            continue
        for n in (3, 4):
            assert fm.l_prime_power(p, n).value == fm.ladder_value(p, n)


@pytest.mark.parametrize("p", [1093, 3511])
def test_ladder_law_breaks_at_wieferich_primes(p):
    # 2**(p-1) = 1 mod p**2, so ord_{p**2}(2) = ord_p(2) and the p-fold growth stalls one level
    assert pow(2, p - 1, p * p) == 1
    m = p**3
    value = fm.l_prime_power(p, 3).value
    assert value == fm.l_prime_square(p).value
    assert value != fm.ladder_value(p, 3)
    # a residue on a longest cycle: a unit whose order is the full odd part of phi(p**3)
    g = next(a for a in range(2, p) if multiplicative_order(a, m) == (p - 1) * p * p)
    x = pow(g, 2 ** two_adic_valuation(p - 1), m)
    assert multiplicative_order(x, m) == odd_part(p - 1) * p * p
    assert cycle_period(x, m) == value


def test_theorem_examples():
    assert fm.theorem_43_check(23) == fm.TheoremCheck(True, True)
    assert fm.theorem_43_check(59) == fm.TheoremCheck(True, True)
    assert fm.theorem_43_check(13) == fm.TheoremCheck(False, False)
    with pytest.raises(ValueError):
        fm.theorem_43_check(17)
    with pytest.raises(ValueError):
        fm.theorem_43_check(2)


def test_theorem_equivalence_below_1000():
    for p in primes_upto(999):
        if p == 2 or p in fm.FERMAT_PRIMES:
            continue
        r = fm.theorem_43_check(p)
        assert r.lhs == r.rhs, p


def test_bound_examples():
    assert fm.bound_45_check(29)
    assert fm.l_prime_square(29).value == 84 == 28 * fm.l_prime(29).value
    assert fm.bound_45_check(7) and fm.l_prime_square(7).value * 2 == 6 * fm.l_prime(7).value
    assert fm.bound_45_check(2)


def test_bound_and_equality_below_1000():
    for p in primes_upto(999):
        assert fm.bound_45_check(p)
        equal = fm.l_prime_square(p).value == (p - 1) * fm.l_prime(p).value
        assert equal == (fm.classify_ratio(p).k == 1)


def test_classify_examples():
    assert fm.classify_ratio(41).k == 8
    assert fm.classify_ratio(101).k == 20
    assert fm.classify_ratio(3).k == 1
    rec = fm.classify_ratio(47)
    assert rec == fm.PrimeClassRecord(47, 11, 253, 2)


def test_classify_exact_below_100000():
    for p in primes_upto(100_000):
        rec = fm.classify_ratio(p)
        assert rec.k * rec.l_p2 == (p - 1) * rec.l_p
        # closed form: k = (p-1) * gcd(L(p), ord_p(2)) / ord_p(2)
        if p > 2:
            o = fm.order_of_two(p)
            assert rec.k == (p - 1) * math.gcd(rec.l_p, o) // o


def test_divisor_maximum_agrees_below_500():
    for p in primes_upto(499):
        assert fm.l_prime_by_divisors(p) == fm.l_prime(p).value
        assert fm.l_prime_square_by_divisors(p) == fm.l_prime_square(p).value


def test_route_invariants():
    for m in range(1, 3000):
        lv = fm.l_of(m)
        assert lv.value >= 1
        if lv.route is fm.Route.COMPOSITE_LCM and m > 1:
            assert len(factorize(m)) >= 2

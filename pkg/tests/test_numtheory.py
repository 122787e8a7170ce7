import math

import pytest

from cacforge.errors import NotASubgroupOf, NotAUnit, NotPrime
from cacforge.numtheory import (
    Factorization,
    cosets,
    cyclic_subgroup,
    divisors,
    factorize,
    is_prime,
    is_sdr,
    multiplicative_order,
    primitive_root,
    totient,
    unit_group,
)


def test_is_prime_small():
    primes = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47}
    for n in range(-3, 50):
        assert is_prime(n) == (n in primes)


def test_is_prime_larger():
    assert is_prime(919)
    assert is_prime(2_305_843_009_213_693_951)  # 2^61 - 1
    assert not is_prime(561)  # Carmichael
    assert not is_prime(919 * 929)


def test_factorize_pins():
    f = factorize(840)
    assert f.factors == ((2, 3), (3, 1), (5, 1), (7, 1))
    assert f.primes == (2, 3, 5, 7)
    assert f.distinct_prime_count == 4
    assert factorize(919).factors == ((919, 1),)
    assert factorize(671).primes == (11, 61)
    assert factorize(1).factors == ()
    assert factorize(1).distinct_prime_count == 0


def test_factorization_validates():
    with pytest.raises(Exception):
        Factorization(12, ((2, 1), (3, 1)))  # product is 6, not 12
    with pytest.raises(Exception):
        Factorization(12, ((3, 1), (2, 2)))  # out of order
    with pytest.raises(Exception):
        Factorization(16, ((4, 2),))  # 4 is not prime


def test_factorize_random_roundtrip(rng):
    for _ in range(300):
        n = rng.randint(1, 10**6)
        f = factorize(n)
        prod = 1
        for p, e in f.factors:
            assert is_prime(p)
            prod *= p**e
        assert prod == n


def test_divisors():
    assert divisors(36) == [1, 2, 3, 4, 6, 9, 12, 18, 36]
    assert divisors(1) == [1]
    assert divisors(919) == [1, 919]


def test_totient_pins():
    assert totient(1) == 1
    assert totient(12) == 4
    assert totient(919) == 918
    assert totient(671) == 600


def test_totient_random(rng):
    for _ in range(50):
        n = rng.randint(1, 400)
        brute = sum(1 for k in range(1, n + 1) if math.gcd(k, n) == 1)
        assert totient(n) == brute


def test_multiplicative_order_pins():
    assert multiplicative_order(2, 7) == 3
    assert multiplicative_order(7, 919) == 918
    # regression: composite modulus where naive exponent halving goes wrong
    assert multiplicative_order(45, 671) == 30
    with pytest.raises(NotAUnit):
        multiplicative_order(6, 9)


def test_multiplicative_order_random(rng):
    for _ in range(200):
        L = rng.randint(2, 500)
        a = rng.randint(1, L - 1)
        if math.gcd(a, L) != 1:
            continue
        d = multiplicative_order(a, L)
        assert pow(a, d, L) == 1
        assert totient(L) % d == 0
        # minimality
        assert all(pow(a, k, L) != 1 for k in range(1, min(d, 40)))


def test_primitive_root():
    assert primitive_root(2) == 1
    assert primitive_root(7) == 3
    assert primitive_root(13) == 2
    assert primitive_root(919) == 7
    with pytest.raises(NotPrime):
        primitive_root(15)


def test_primitive_root_random(rng):
    for _ in range(40):
        p = rng.randint(3, 2000)
        if not is_prime(p):
            continue
        g = primitive_root(p)
        assert multiplicative_order(g, p) == p - 1


def test_cyclic_subgroup():
    H = cyclic_subgroup(9, 17)
    assert H.order == 8
    assert H.elements == frozenset({1, 2, 4, 8, 9, 13, 15, 16})
    assert cyclic_subgroup(1, 10).elements == frozenset({1})
    with pytest.raises(NotAUnit):
        cyclic_subgroup(4, 10)


def test_unit_group():
    assert unit_group(12) == frozenset({1, 5, 7, 11})
    assert len(unit_group(919)) == 918


def test_cosets():
    units = unit_group(13)
    H = cyclic_subgroup(4, 13)
    assert H.order == 6
    parts = cosets(H, units)
    assert len(parts) == 2
    # extraction order: smallest uncovered element first
    assert [min(c) for c in parts] == [1, 2]
    assert frozenset().union(*parts) == units
    with pytest.raises(NotASubgroupOf):
        cosets(cyclic_subgroup(2, 5), unit_group(13))


def test_cosets_random(rng):
    for _ in range(60):
        L = rng.randint(3, 200)
        units = unit_group(L)
        a = rng.choice(sorted(units))
        H = cyclic_subgroup(a, L)
        parts = cosets(H, units)
        assert all(len(c) == H.order for c in parts)
        assert len(parts) * H.order == len(units)


def test_is_sdr():
    parts = [frozenset({1, 4}), frozenset({2, 3})]
    assert is_sdr((1, 2), parts)
    assert is_sdr((4, 3), parts)
    assert not is_sdr((1, 4), parts)  # same coset twice
    assert not is_sdr((1,), parts)  # a coset left unhit
    assert not is_sdr((1, 2, 3), parts)  # too many reps

import math

import pytest

from powgraph.numtheory import (
    divisors,
    euler_phi,
    factorize,
    is_prime,
    is_prime_power,
    order_in_zn,
    primes_first,
    primorial,
    units,
)


def phi_oracle(n):
    return sum(1 for k in range(1, n + 1) if math.gcd(k, n) == 1)


def test_euler_phi_examples():
    assert euler_phi(1) == 1
    assert euler_phi(12) == 4 == phi_oracle(12)
    # phi(n^2) = n*phi(n)
    assert euler_phi(36) == 6 * euler_phi(6) == 12


def test_euler_phi_matches_counting_oracle():
    for n in range(1, 300):
        assert euler_phi(n) == phi_oracle(n)


def test_primes_and_primorials():
    assert primes_first(1) == [2] and primorial(1) == 2
    assert primes_first(5) == [2, 3, 5, 7, 11] and primorial(5) == 2310
    assert primorial(13) == 304250263527210
    ps = primes_first(100)
    assert len(ps) == 100 and all(is_prime(p) for p in ps[:20])
    assert ps == sorted(ps)


def test_factorize_and_divisors():
    assert factorize(1) == []
    assert factorize(360) == [(2, 3), (3, 2), (5, 1)]
    assert divisors(12) == [1, 2, 3, 4, 6, 12]
    for n in range(1, 200):
        ds = divisors(n)
        assert ds == sorted(d for d in range(1, n + 1) if n % d == 0)


def test_prime_power_predicate():
    assert is_prime_power(8) and is_prime_power(7) and is_prime_power(27)
    assert not is_prime_power(1) and not is_prime_power(6) and not is_prime_power(12)


def test_units_and_orders():
    assert units(1) == []
    assert units(6) == [1, 5]
    assert order_in_zn(0, 30) == 1
    assert order_in_zn(15, 30) == 2
    assert order_in_zn(5, 30) == 6


def test_bad_inputs():
    with pytest.raises(ValueError):
        euler_phi(0)
    with pytest.raises(ValueError):
        primes_first(0)

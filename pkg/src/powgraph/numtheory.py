"""Exact integer number theory: factorization, totient, primes, primorials.

Everything here is arbitrary-precision; nothing ever goes through floats.
"""

from __future__ import annotations

import math
from functools import lru_cache


def factorize(n: int) -> list[tuple[int, int]]:
    """Prime factorization of n >= 1 as a sorted list of (prime, exponent)."""
    if n < 1:
        raise ValueError("factorize expects n >= 1")
    out = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            e = 0
            while n % d == 0:
                n //= d
                e += 1
            out.append((d, e))
        d += 1 if d == 2 else 2
    if n > 1:
        out.append((n, 1))
    return out


def prime_divisors(n: int) -> list[int]:
    return [p for p, _ in factorize(n)]


def is_prime(n: int) -> bool:
    return n >= 2 and factorize(n) == [(n, 1)]


def is_prime_power(n: int) -> bool:
    """True iff n = p^k for a prime p and k >= 1."""
    return len(factorize(n)) == 1


def divisors(n: int) -> list[int]:
    """All divisors of n in increasing order."""
    divs = [1]
    for p, e in factorize(n):
        divs = [d * p**i for d in divs for i in range(e + 1)]
    return sorted(divs)


def euler_phi(n: int) -> int:
    """Euler's totient via the factorization product formula."""
    if n < 1:
        raise ValueError("euler_phi expects n >= 1")
    phi = 1
    for p, e in factorize(n):
        phi *= p ** (e - 1) * (p - 1)
    return phi


def phi_from_factorization(factors: list[tuple[int, int]]) -> int:
    """Totient of a number given directly by its factorization."""
    phi = 1
    for p, e in factors:
        phi *= p ** (e - 1) * (p - 1)
    return phi


@lru_cache(maxsize=None)
def _primes_up_to(limit: int) -> tuple[int, ...]:
    sieve = bytearray([1]) * (limit + 1)
    sieve[0:2] = b"\x00\x00"
    for i in range(2, int(limit**0.5) + 1):
        if sieve[i]:
            sieve[i * i :: i] = bytearray(len(sieve[i * i :: i]))
    return tuple(i for i in range(limit + 1) if sieve[i])


def primes_first(b: int) -> list[int]:
    """The first b primes, in order."""
    if b < 1:
        raise ValueError("primes_first expects b >= 1")
    # p_b < b (ln b + ln ln b) for b >= 6; pad the small cases.
    limit = 16
    if b >= 6:
        lb = math.log(b)
        limit = int(b * (lb + math.log(lb)) * 1.2) + 16
    ps = _primes_up_to(limit)
    while len(ps) < b:
        limit *= 2
        ps = _primes_up_to(limit)
    return list(ps[:b])


def primorial(b: int) -> int:
    """Product of the first b primes (exact, arbitrary precision)."""
    return math.prod(primes_first(b))


def units(n: int) -> list[int]:
    """Residues in [1, n) coprime to n, ascending; units(1) == [0] is excluded."""
    if n == 1:
        return []
    return [u for u in range(1, n) if math.gcd(u, n) == 1]


def order_in_zn(x: int, n: int) -> int:
    """Additive order of the residue x in Z_n: n / gcd(n, x)."""
    return n // math.gcd(n, x)

"""Exact integer number theory used throughout the package.

Everything here works on plain Python ints.  Inputs are range-checked
against the 63-bit window the rest of the package is designed for; the
only place large integers appear on purpose is brute-force verification.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache, reduce

INT_LIMIT = 1 << 63

# Deterministic for every n < 3.3 * 10**24, which covers the 64-bit range.
_MR_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)


@dataclass(frozen=True)
class Factorization:
    n: int
    factors: tuple[tuple[int, int], ...]

    @property
    def primes(self) -> tuple[int, ...]:
        return tuple(p for p, _ in self.factors)

    def value(self) -> int:
        return math.prod(p**e for p, e in self.factors)

    def __iter__(self):
        return iter(self.factors)


def _check_positive(n: int, name: str = "n") -> None:
    if not isinstance(n, int) or isinstance(n, bool):
        raise TypeError(f"{name} must be an int, got {type(n).__name__}")
    if n < 1:
        raise ValueError(f"{name} must be positive, got {n}")
    if n >= INT_LIMIT:
        raise OverflowError(f"{name}={n} exceeds the 63-bit range")


def is_prime(n: int) -> bool:
    """Deterministic Miller-Rabin primality test for n < 2**64."""
    if n < 2:
        return False
    for p in _MR_BASES:
        if n % p == 0:
            return n == p
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in _MR_BASES:
        x = pow(a, d, n)
        if x == 1 or x == n - 1:
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


@lru_cache(maxsize=4096)
def factorize(n: int) -> Factorization:
    """Factor ``n`` by trial division, stopping as soon as the cofactor is prime."""
    _check_positive(n)
    factors = []
    m = n
    for p in (2, 3):
        if m % p == 0:
            e = 0
            while m % p == 0:
                m //= p
                e += 1
            factors.append((p, e))
    p, step = 5, 2
    while m > 1 and p * p <= m:
        if is_prime(m):
            break
        if m % p == 0:
            e = 0
            while m % p == 0:
                m //= p
                e += 1
            factors.append((p, e))
        p += step
        step = 6 - step
    if m > 1:
        factors.append((m, 1))
    return Factorization(n, tuple(factors))


def radical(n: int) -> int:
    return math.prod(factorize(n).primes)


def valuation(ell: int, n: int) -> int:
    """Largest v with ell**v dividing n."""
    if not is_prime(ell):
        raise ValueError(f"{ell} is not prime")
    if n == 0:
        raise ValueError("valuation of 0 is infinite")
    n = abs(n)
    v = 0
    while n % ell == 0:
        n //= ell
        v += 1
    return v


def mobius(n: int) -> int:
    f = factorize(n)
    if any(e > 1 for _, e in f):
        return 0
    return -1 if len(f.factors) % 2 else 1


def euler_phi(n: int) -> int:
    result = n
    for p in factorize(n).primes:
        result -= result // p
    return result


def divisors(n: int) -> list[int]:
    """All positive divisors of n, ascending."""
    return list(_divisors(n))


@lru_cache(maxsize=4096)
def _divisors(n: int) -> tuple[int, ...]:
    divs = [1]
    for p, e in factorize(n):
        divs = [d * p**i for d in divs for i in range(e + 1)]
    return tuple(sorted(divs))


def lcm(*values: int) -> int:
    return reduce(math.lcm, values, 1)


def _phi_factorization(n: int) -> dict[int, int]:
    out: dict[int, int] = {}
    for p, e in factorize(n):
        if e > 1:
            out[p] = out.get(p, 0) + e - 1
        for r, f in factorize(p - 1):
            out[r] = out.get(r, 0) + f
    return out


def order_by_descent(start: int, prime_factors, is_identity) -> int:
    """Shrink a known exponent ``start`` to the exact order.

    ``is_identity(t)`` must report whether the element raised to t is the
    identity; ``start`` must be a multiple of the order.
    """
    t = start
    for ell in prime_factors:
        while t % ell == 0 and is_identity(t // ell):
            t //= ell
    return t


@lru_cache(maxsize=65536)
def mult_order(m: int, n: int) -> int:
    """Order of m in (Z/nZ)^*; by convention mult_order(m, 1) == 1."""
    _check_positive(n)
    if math.gcd(m, n) != 1:
        raise ValueError(f"gcd({m}, {n}) != 1")
    if n == 1:
        return 1
    m %= n
    phi_f = _phi_factorization(n)
    phi = math.prod(p**e for p, e in phi_f.items())
    t = order_by_descent(phi, sorted(phi_f), lambda s: pow(m, s, n) == 1)
    assert phi % t == 0 and pow(m, t, n) == 1
    return t


def lte_valuation(ell: int, m: int, d: int) -> int:
    """v_ell(m**d - 1) from the lifting-the-exponent closed forms.

    Odd ell requires ell | m - 1; ell == 2 requires m odd.
    """
    if not is_prime(ell):
        raise ValueError(f"{ell} is not prime")
    if d < 1:
        raise ValueError(f"exponent must be positive, got {d}")
    if ell != 2:
        if (m - 1) % ell != 0:
            raise ValueError(f"{ell} does not divide {m} - 1")
        if m == 1:
            raise ValueError("m = 1 gives m**d - 1 = 0")
        return valuation(ell, m - 1) + valuation(ell, d)
    if m % 2 == 0:
        raise ValueError(f"m must be odd for ell = 2, got {m}")
    if m == 1 or (m == -1 and d % 2 == 0):
        raise ValueError("m**d - 1 = 0")
    if m % 4 == 1:
        return valuation(2, m - 1) + valuation(2, d)
    if d % 2 == 1:
        return 1
    return valuation(2, m + 1) + valuation(2, d)


def prime_power(q: int) -> tuple[int, int]:
    """Split a prime power q into (p, e) with q == p**e."""
    _check_positive(q, "q")
    f = factorize(q)
    if len(f.factors) != 1:
        raise ValueError(f"{q} is not a prime power")
    return f.factors[0]


def mod_inverse(a: int, n: int) -> int:
    if math.gcd(a, n) != 1:
        raise ValueError(f"{a} is not a unit mod {n}")
    return pow(a, -1, n) if n > 1 else 0

"""Finite fields GF(p^k) as dense coefficient vectors over GF(p).

Elements are tuples of k residues (low to high) modulo a monic irreducible
polynomial.  Field contexts are built deterministically: the modulus is the
monic irreducible of degree k whose lower coefficients (c0, ..., c_{k-1}) are
lexicographically least, and the generator is the first element of full
order in the base-p integer enumeration of elements.

Fields past 2^63 elements are supported for root-of-unity work even when
p^k - 1 cannot be factored completely: roots of unity then come from the
subgroup whose order is fully factored, which contains every root of unity
of small order.
"""

from __future__ import annotations

import itertools
from functools import cached_property, lru_cache

import numpy as np

from .numtheory import (
    INT_LIMIT,
    Factorization,
    divisors,
    factorize,
    is_prime,
    mobius,
    mult_order,
    order_by_descent,
    prime_power,
)


# -- GF(p)[X] helpers on plain int lists (low to high) -------------------------

def _trim(a: list[int]) -> list[int]:
    while a and a[-1] == 0:
        a.pop()
    return a


def _pmod(a: list[int], f: list[int], p: int) -> list[int]:
    a = _trim([x % p for x in a])
    df = len(f) - 1
    inv_lc = pow(f[-1], -1, p)
    while len(a) - 1 >= df:
        c = a[-1] * inv_lc % p
        shift = len(a) - 1 - df
        for i, fi in enumerate(f):
            a[shift + i] = (a[shift + i] - c * fi) % p
        _trim(a)
    return a


def _pmulmod(a: list[int], b: list[int], f: list[int], p: int) -> list[int]:
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return _pmod(out, f, p)


def _ppowmod(a: list[int], e: int, f: list[int], p: int) -> list[int]:
    result = [1]
    base = _pmod(a, f, p)
    while e:
        if e & 1:
            result = _pmulmod(result, base, f, p)
        base = _pmulmod(base, base, f, p)
        e >>= 1
    return _pmod(result, f, p)


def _pgcd(a: list[int], b: list[int], p: int) -> list[int]:
    a, b = _trim([x % p for x in a]), _trim([x % p for x in b])
    while b:
        a, b = b, _pmod(a, b, p)
    return a


def is_irreducible_mod_p(f: list[int], p: int) -> bool:
    """Rabin's test for a monic polynomial over GF(p)."""
    k = len(f) - 1
    if k < 1:
        return False
    if k == 1:
        return True
    x = [0, 1]
    # X^(p^i) mod f for i = 0..k by repeated Frobenius
    frob = [x]
    for _ in range(k):
        frob.append(_ppowmod(frob[-1], p, f, p))
    if _trim(frob[k][:]) != x:
        return False
    for ell in factorize(k).primes:
        h = frob[k // ell][:] + [0] * 2
        h[1] -= 1
        g = _pgcd(f, h, p)
        if len(g) != 1:
            return False
    return True


def _int_to_digits(i: int, p: int, k: int) -> tuple[int, ...]:
    out = []
    for _ in range(k):
        i, r = divmod(i, p)
        out.append(r)
    return tuple(out)


FIELD_LIMIT = 1 << 1024
# degree from which products go through numpy
_NUMPY_DEGREE = 8

# float64 arithmetic (BLAS matmul) is exact while every accumulated sum stays below this
_NP_SAFE = 1 << 52


def _numpy_ok(p: int, k: int) -> bool:
    return k * k * (p - 1) ** 3 < _NP_SAFE


def _reduction_rows(f, p: int) -> np.ndarray:
    """Rows X^(k+i) mod f for i = 0..k-2, f monic of degree k."""
    k = len(f) - 1
    rows = np.zeros((max(k - 1, 0), k))
    cur = np.array([(-c) % p for c in f[:k]], dtype=np.float64)
    for i in range(k - 1):
        rows[i] = cur
        top = cur[-1]
        cur = np.concatenate(([0.0], cur[:-1]))
        if top:
            cur = np.fmod(cur + top * rows[0], p)
    return rows


def _np_mulmod(a: np.ndarray, b: np.ndarray, rows: np.ndarray, p: int) -> np.ndarray:
    """a * b mod (f, p) on float64 vectors holding residues."""
    k = rows.shape[1]
    prod = np.convolve(a, b)
    out = prod[:k].copy()
    if len(prod) > k:
        out += prod[k:] @ rows[: len(prod) - k]
    return np.fmod(out, p)


def _np_powmod(a: np.ndarray, e: int, rows: np.ndarray, p: int) -> np.ndarray:
    result = np.zeros(rows.shape[1])
    result[0] = 1
    while e:
        if e & 1:
            result = _np_mulmod(result, a, rows, p)
        e >>= 1
        if e:
            a = _np_mulmod(a, a, rows, p)
    return result


def is_irreducible_mod_p_fast(f: list[int], p: int) -> bool:
    """Irreducibility of a monic f over GF(p) by distinct-degree search.

    f is irreducible exactly when gcd(f, X^(p^i) - X) = 1 for every i <= k / 2.
    The factors X^(p^i) - X are multiplied together mod f and the gcd is taken
    at i = 1, 2, 4, 8, ... and at k / 2, so most reducible inputs are rejected
    within a few Frobenius steps.
    """
    k = len(f) - 1
    if k < 1:
        return False
    if k == 1:
        return True
    if not _numpy_ok(p, k):
        return is_irreducible_mod_p(f, p)
    rows = _reduction_rows(f, p)
    x = np.zeros(k)
    x[1] = 1
    h = x
    acc = np.zeros(k)
    acc[0] = 1
    fl = list(f)
    last = k // 2
    for i in range(1, last + 1):
        h = _np_powmod(h, p, rows, p)
        acc = _np_mulmod(acc, np.fmod(h - x + p, p), rows, p)
        if i & (i - 1) == 0 or i == last:
            if len(_pgcd(fl, [int(c) for c in acc], p)) != 1:
                return False
            acc = np.zeros(k)
            acc[0] = 1
    return True


@lru_cache(maxsize=None)
def _first_irreducible(p: int, k: int) -> tuple[int, ...]:
    """Monic irreducible of degree k whose (c0, ..., c_{k-1}) is lexicographically least."""
    if k == 1:
        return (0, 1)
    # c0 = 0 means X divides the candidate
    for low in itertools.product(range(1, p), *[range(p)] * (k - 1)):
        f = list(low) + [1]
        if is_irreducible_mod_p_fast(f, p):
            return tuple(f)
    raise AssertionError(f"no irreducible polynomial of degree {k} over GF({p})")


def _cyclotomic_value(d: int, p: int) -> int:
    num = den = 1
    for e in divisors(d):
        mu = mobius(d // e)
        if mu == 1:
            num *= p**e - 1
        elif mu == -1:
            den *= p**e - 1
    return num // den


_TRIAL_BOUND = 1 << 16


@lru_cache(maxsize=None)
def _small_primes() -> tuple[int, ...]:
    sieve = bytearray([1]) * _TRIAL_BOUND
    sieve[0] = sieve[1] = 0
    for i in range(2, int(_TRIAL_BOUND**0.5) + 1):
        if sieve[i]:
            sieve[i * i :: i] = bytearray(len(range(i * i, _TRIAL_BOUND, i)))
    return tuple(i for i, v in enumerate(sieve) if v)


def _partial_factor(n: int) -> tuple[dict[int, int], int]:
    """Prime powers of n that can be certified cheaply, and the leftover cofactor.

    Trial division up to 2^16; the cofactor counts as a prime when it is below
    2^32 or passes the deterministic 64-bit Miller-Rabin test.
    """
    exps: dict[int, int] = {}
    for ell in _small_primes():
        if ell * ell > n:
            break
        while n % ell == 0:
            exps[ell] = exps.get(ell, 0) + 1
            n //= ell
    if n == 1:
        return exps, 1
    if n < _TRIAL_BOUND**2 or (n < INT_LIMIT and is_prime(n)):
        exps[n] = exps.get(n, 0) + 1
        return exps, 1
    return exps, n


@lru_cache(maxsize=None)
def _order_split(p: int, k: int) -> tuple[Factorization, int]:
    """(factorization of the certified part A, cofactor U) with A * U = p^k - 1.

    Below 2^63 the order is factored completely, so U = 1.
    """
    # p^k - 1 = prod_{d | k} Phi_d(p); the pieces are much easier to factor
    complete = p**k < INT_LIMIT
    exps: dict[int, int] = {}
    unknown = 1
    for d in divisors(k):
        piece = _cyclotomic_value(d, p)
        known, rest = (dict(factorize(piece).factors), 1) if complete else _partial_factor(piece)
        for ell, e in known.items():
            exps[ell] = exps.get(ell, 0) + e
        unknown *= rest
    # a certified prime may still divide an uncertified cofactor
    for ell in list(exps):
        while unknown % ell == 0:
            unknown //= ell
            exps[ell] += 1
    order = (p**k - 1) // unknown
    return Factorization(order, tuple(sorted(exps.items()))), unknown


def _group_order_factorization(p: int, k: int) -> Factorization:
    known, unknown = _order_split(p, k)
    if unknown != 1:
        raise OverflowError(f"{p}^{k} - 1 has a factor {unknown} beyond the factoring range")
    return known


# -- field contexts -----------------------------------------------------------

class FieldCtx:
    """GF(p^k) with a fixed modulus.  Instances are cached by ``make_field``."""

    __slots__ = ("p", "k", "modulus", "cardinality", "__dict__")

    def __init__(self, p: int, k: int, modulus: tuple[int, ...]):
        self.p = p
        self.k = k
        self.modulus = modulus
        self.cardinality = p**k

    def __repr__(self) -> str:
        return f"GF({self.p}^{self.k})"

    def __eq__(self, other):
        if not isinstance(other, FieldCtx):
            return NotImplemented
        return (self.p, self.k, self.modulus) == (other.p, other.k, other.modulus)

    def __hash__(self):
        return hash((self.p, self.k, self.modulus))

    def __reduce__(self):
        return make_field, (self.p, self.k)

    @cached_property
    def _np_rows(self) -> np.ndarray | None:
        if self.k < _NUMPY_DEGREE or not _numpy_ok(self.p, self.k):
            return None
        return _reduction_rows(self.modulus, self.p)

    @cached_property
    def _reduction(self) -> list[list[int]]:
        # rows: X^(k+i) mod modulus, i = 0..k-2
        k, p = self.k, self.p
        rows = []
        cur = [(-c) % p for c in self.modulus[:k]]
        for _ in range(k - 1):
            rows.append(cur)
            top = cur[-1]
            nxt = [0] + cur[:-1]
            if top:
                nxt = [(x + top * r) % p for x, r in zip(nxt, rows[0])]
            cur = nxt
        return rows

    @cached_property
    def order_factorization(self) -> Factorization:
        """Factorization of the multiplicative group order cardinality - 1.

        Raises OverflowError when that order cannot be factored completely.
        """
        return _group_order_factorization(self.p, self.k)

    @property
    def certified_order(self) -> Factorization:
        """Factorization of the largest divisor of cardinality - 1 with certified primes."""
        return _order_split(self.p, self.k)[0]

    # element constructors
    def element(self, coeffs) -> FieldElement:
        if isinstance(coeffs, int):
            return FieldElement(self, (coeffs % self.p,) + (0,) * (self.k - 1))
        coeffs = tuple(int(c) % self.p for c in coeffs)
        if len(coeffs) > self.k:
            raise ValueError(f"{len(coeffs)} coefficients do not fit in {self}")
        return FieldElement(self, coeffs + (0,) * (self.k - len(coeffs)))

    def __call__(self, value) -> FieldElement:
        if isinstance(value, FieldElement):
            if value.ctx != self:
                raise ValueError(f"element of {value.ctx} used in {self}")
            return value
        return self.element(value)

    def from_int(self, i: int) -> FieldElement:
        """Element whose coefficient vector is the base-p expansion of i."""
        if not 0 <= i < self.cardinality:
            raise ValueError(f"{i} out of range for {self}")
        return FieldElement(self, _int_to_digits(i, self.p, self.k))

    @cached_property
    def zero(self) -> FieldElement:
        return self.element(0)

    @cached_property
    def one(self) -> FieldElement:
        return self.element(1)

    def elements(self):
        for i in range(self.cardinality):
            yield self.from_int(i)

    def _mul(self, a: tuple[int, ...], b: tuple[int, ...]) -> tuple[int, ...]:
        p, k = self.p, self.k
        if k == 1:
            return (a[0] * b[0] % p,)
        rows = self._np_rows
        if rows is not None:
            out = _np_mulmod(np.array(a, dtype=np.float64), np.array(b, dtype=np.float64), rows, p)
            return tuple(out.astype(np.int64).tolist())
        return self._mul_schoolbook(a, b)

    def _mul_schoolbook(self, a: tuple[int, ...], b: tuple[int, ...]) -> tuple[int, ...]:
        p, k = self.p, self.k
        if k == 1:
            return (a[0] * b[0] % p,)
        prod = [0] * (2 * k - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    prod[i + j] += x * y
        out = prod[:k]
        for i, row in enumerate(self._reduction):
            c = prod[k + i]
            if c:
                for j in range(k):
                    out[j] += c * row[j]
        return tuple(x % p for x in out)


@lru_cache(maxsize=None)
def make_field(p: int, k: int = 1) -> FieldCtx:
    if p >= INT_LIMIT:
        raise OverflowError(f"characteristic {p} exceeds the 63-bit range")
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")
    if k < 1:
        raise ValueError(f"extension degree must be >= 1, got {k}")
    if p**k >= FIELD_LIMIT:
        raise OverflowError(f"GF({p}^{k}) exceeds the {FIELD_LIMIT.bit_length() - 1}-bit cardinality limit")
    return FieldCtx(p, k, _first_irreducible(p, k))


def base_field(q: int) -> FieldCtx:
    """GF(q) for a prime power q."""
    p, e = prime_power(q)
    return make_field(p, e)


def ambient_field(q: int, n: int) -> FieldCtx:
    """The field GF(q^t), t = ord_n(q): the smallest extension holding zeta_n."""
    p, e = prime_power(q)
    if n % p == 0:
        raise ValueError(f"characteristic {p} divides n = {n}")
    return make_field(p, e * mult_order(q, n))


# -- elements -----------------------------------------------------------------

class FieldElement:
    __slots__ = ("ctx", "coeffs")

    def __init__(self, ctx: FieldCtx, coeffs: tuple[int, ...]):
        self.ctx = ctx
        self.coeffs = coeffs

    def _coerce(self, other) -> tuple[int, ...] | None:
        if isinstance(other, FieldElement):
            if other.ctx is not self.ctx and other.ctx != self.ctx:
                raise ValueError(f"cannot combine elements of {self.ctx} and {other.ctx}")
            return other.coeffs
        if isinstance(other, int) and not isinstance(other, bool):
            return (other % self.ctx.p,) + (0,) * (self.ctx.k - 1)
        return None

    def __add__(self, other):
        b = self._coerce(other)
        if b is None:
            return NotImplemented
        p = self.ctx.p
        return FieldElement(self.ctx, tuple((x + y) % p for x, y in zip(self.coeffs, b)))

    __radd__ = __add__

    def __neg__(self):
        p = self.ctx.p
        return FieldElement(self.ctx, tuple(-x % p for x in self.coeffs))

    def __sub__(self, other):
        b = self._coerce(other)
        if b is None:
            return NotImplemented
        p = self.ctx.p
        return FieldElement(self.ctx, tuple((x - y) % p for x, y in zip(self.coeffs, b)))

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        b = self._coerce(other)
        if b is None:
            return NotImplemented
        return FieldElement(self.ctx, self.ctx._mul(self.coeffs, b))

    __rmul__ = __mul__

    def __pow__(self, e: int):
        if e < 0:
            return self.inverse() ** (-e)
        ctx = self.ctx
        result = ctx.one.coeffs
        base = self.coeffs
        while e:
            if e & 1:
                result = ctx._mul(result, base)
            e >>= 1
            if e:
                base = ctx._mul(base, base)
        return FieldElement(ctx, result)

    def inverse(self) -> FieldElement:
        if not self:
            raise ZeroDivisionError(f"zero has no inverse in {self.ctx}")
        return self ** (self.ctx.cardinality - 2)

    def __truediv__(self, other):
        b = self._coerce(other)
        if b is None:
            return NotImplemented
        return self * FieldElement(self.ctx, b).inverse()

    def __rtruediv__(self, other):
        return self.inverse() * other

    def __eq__(self, other):
        b = self._coerce(other)
        if b is None:
            return NotImplemented
        return self.coeffs == b

    def __hash__(self):
        return hash((self.ctx.p, self.ctx.k, self.coeffs))

    def __bool__(self):
        return any(self.coeffs)

    def __int__(self):
        p = self.ctx.p
        out = 0
        for c in reversed(self.coeffs):
            out = out * p + c
        return out

    def is_base(self) -> bool:
        """True when the element lies in the prime field."""
        return not any(self.coeffs[1:])

    def frobenius(self, power: int = 1) -> FieldElement:
        return self ** (self.ctx.p**power)

    def __repr__(self):
        if self.ctx.k == 1:
            return str(self.coeffs[0])
        return "[" + ",".join(map(str, self.coeffs)) + "]"


def element_order(a: FieldElement) -> int:
    """Multiplicative order of a nonzero element, by descent on the group order."""
    if not a:
        raise ValueError("zero has no multiplicative order")
    ctx = a.ctx
    n = ctx.cardinality - 1
    t = order_by_descent(n, ctx.order_factorization.primes, lambda s: a**s == 1)
    return t


@lru_cache(maxsize=None)
def find_generator(ctx: FieldCtx) -> FieldElement:
    """First element of full order; needs cardinality - 1 completely factored."""
    n = ctx.cardinality - 1
    primes = ctx.order_factorization.primes
    for i in range(1, ctx.cardinality):
        g = ctx.from_int(i)
        if all(g ** (n // ell) != 1 for ell in primes):
            return g
    raise AssertionError(f"{ctx} has no generator")


@lru_cache(maxsize=None)
def certified_generator(ctx: FieldCtx) -> FieldElement:
    """Generator h of the subgroup of order A (the certified part of cardinality - 1).

    h = x^((|F| - 1) / A) for the first x in the integer enumeration that
    makes h of order exactly A.  When A = |F| - 1 this is find_generator.
    """
    known = ctx.certified_order
    if known.n == ctx.cardinality - 1:
        return find_generator(ctx)
    cofactor = (ctx.cardinality - 1) // known.n
    for i in range(1, ctx.cardinality):
        h = ctx.from_int(i) ** cofactor
        if all(h ** (known.n // ell) != 1 for ell in known.primes):
            return h
    raise AssertionError(f"{ctx} has no element of order {known.n}")


@lru_cache(maxsize=None)
def primitive_root_of_unity(n: int, ctx: FieldCtx) -> FieldElement:
    """zeta_n = h^(A / n) for the canonical generator h of the certified subgroup.

    Powers of one generator make the family compatible:
    zeta_n ** (n // m) == zeta_m whenever m | n.  When |F| - 1 is fully
    factored, h is the canonical generator and A = |F| - 1.
    """
    if n < 1 or (ctx.cardinality - 1) % n:
        raise ValueError(f"{ctx} has no primitive {n}-th root of unity")
    order = ctx.certified_order.n
    if order % n:
        raise OverflowError(f"{n} has a prime factor outside the certified part of |{ctx}| - 1")
    return certified_generator(ctx) ** (order // n)


@lru_cache(maxsize=None)
def _embedding_root(source: FieldCtx, target: FieldCtx) -> FieldElement:
    j, k = source.k, target.k
    h = primitive_root_of_unity(source.cardinality - 1, target)
    mod = source.modulus

    def is_root(x: FieldElement) -> bool:
        acc = target.zero
        for c in reversed(mod):
            acc = acc * x + c
        return not acc

    x = target.one
    for _ in range(source.cardinality - 1):
        if is_root(x):
            roots = [x.frobenius(s) for s in range(j)]
            return min(roots, key=int)
        x = x * h
    raise AssertionError(f"modulus of {source} has no root in {target}")


def embed(a: FieldElement, target: FieldCtx) -> FieldElement:
    """Ring embedding GF(p^j) -> GF(p^k), j | k."""
    source = a.ctx
    if source == target:
        return a
    if source.p != target.p or target.k % source.k:
        raise ValueError(f"{source} does not embed in {target}")
    if source.k == 1:
        return target.element(a.coeffs[0])
    r = _embedding_root(source, target)
    acc = target.zero
    for c in reversed(a.coeffs):
        acc = acc * r + c
    return acc


@lru_cache(maxsize=None)
def _pullback_table(source: FieldCtx, target: FieldCtx) -> dict:
    return {embed(x, target).coeffs: x for x in source.elements()}


def restrict(a: FieldElement, source: FieldCtx) -> FieldElement:
    """Inverse of ``embed``: the element of ``source`` mapping to ``a``."""
    if a.ctx == source:
        return a
    if source.k == 1:
        if not a.is_base():
            raise ValueError(f"{a!r} does not lie in {source}")
        return source.element(a.coeffs[0])
    try:
        return _pullback_table(source, a.ctx)[a.coeffs]
    except KeyError:
        raise ValueError(f"{a!r} does not lie in the image of {source}") from None

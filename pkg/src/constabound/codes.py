"""Constacyclic codes (f) in GF(q)[X]/(X^m - lambda) and an exhaustive
minimum-distance oracle used to validate the bounds.

Words are sequences of integer encodings of GF(q) elements (plain residues
when q is prime).
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from .bounds import BoundReport, bound_report
from .cyclotomic import Coset, all_cosets
from .finite_field import FieldCtx, FieldElement, ambient_field, base_field, element_order, embed, primitive_root_of_unity
from .polynomial import Poly, coset_minimal_polynomial, defining_set
from .residues import DefiningSet

DEFAULT_BUDGET = 10**7
_CHUNK = 1 << 16


class BudgetExceeded(RuntimeError):
    """The exhaustive search would need more codeword evaluations than allowed."""


@dataclass(frozen=True)
class ConstacyclicCode:
    q: int
    m: int
    lam: FieldElement
    generator: Poly

    @property
    def ctx(self) -> FieldCtx:
        return self.generator.ctx

    @property
    def k(self) -> int:
        return self.m - self.generator.degree

    def modulus(self) -> Poly:
        return Poly.monomial(self.ctx, self.m) - Poly(self.ctx, [self.lam])

    def word_poly(self, word) -> Poly:
        if len(word) != self.m:
            raise ValueError(f"word has length {len(word)}, code length is {self.m}")
        return Poly(self.ctx, [w if isinstance(w, FieldElement) else self.ctx.from_int(int(w)) for w in word])

    def contains(self, word) -> bool:
        return not (self.word_poly(word) % self.generator)

    def encode(self, message) -> tuple[int, ...]:
        """Codeword a(X) f(X) for a message of length k."""
        if len(message) != self.k:
            raise ValueError(f"message has length {len(message)}, dimension is {self.k}")
        a = Poly(self.ctx, [self.ctx.from_int(int(v)) for v in message])
        c = (a * self.generator) % self.modulus()
        return tuple(int(c.coeff(i)) for i in range(self.m))


@dataclass(frozen=True)
class DistanceResult:
    distance: int
    exhaustive: bool
    witness: tuple[int, ...]

    def as_dict(self) -> dict:
        return {"distance": self.distance, "exhaustive": self.exhaustive, "witness": list(self.witness)}

    @classmethod
    def from_dict(cls, data: dict) -> DistanceResult:
        return cls(data["distance"], data["exhaustive"], tuple(data["witness"]))


def build_code(q: int, m: int, lam, f: Poly) -> ConstacyclicCode:
    ctx = base_field(q)
    if m < 1:
        raise ValueError(f"length must be positive, got {m}")
    if m % ctx.p == 0:
        raise ValueError(f"p={ctx.p} divides m={m}: repeated-root codes are not supported")
    lam = lam if isinstance(lam, FieldElement) else ctx.element(lam)
    if lam.ctx != ctx:
        raise ValueError(f"lambda must lie in GF({q})")
    if not lam:
        raise ValueError("lambda must be nonzero")
    if f.ctx != ctx:
        raise ValueError(f"generator must have coefficients in GF({q})")
    if not f:
        raise ValueError("generator must be nonzero")
    if not f.is_monic():
        f = f.monic()
    code = ConstacyclicCode(q, m, lam, f)
    if code.modulus() % f:
        raise ValueError(f"{f} does not divide X^{m} - {lam!r}")
    return code


def shift(code: ConstacyclicCode, word) -> tuple[int, ...]:
    """(c0, ..., c_{m-1}) -> (lambda c_{m-1}, c0, ..., c_{m-2})."""
    if len(word) != code.m:
        raise ValueError(f"word has length {len(word)}, code length is {code.m}")
    ctx = code.ctx
    last = code.lam * ctx.from_int(int(word[-1]))
    return (int(last),) + tuple(int(w) for w in word[:-1])


@lru_cache(maxsize=None)
def _tables(ctx: FieldCtx) -> tuple[np.ndarray, np.ndarray]:
    q = ctx.cardinality
    elems = list(ctx.elements())
    add = np.array([[int(a + b) for b in elems] for a in elems], dtype=np.int32)
    mul = np.array([[int(a * b) for b in elems] for a in elems], dtype=np.int32)
    assert add.shape == (q, q)
    return add, mul


def _digits(count: int, width: int, q: int) -> np.ndarray:
    """All width-digit base-q vectors (digit 0 fastest), shape (count, width)."""
    idx = np.arange(count, dtype=np.int64)
    out = np.empty((count, width), dtype=np.int32)
    for i in range(width):
        out[:, i] = idx % q
        idx //= q
    return out


def brute_force_distance(code: ConstacyclicCode, budget: int = DEFAULT_BUDGET) -> DistanceResult:
    """Exact minimum weight over all nonzero codewords a(X) f(X), deg a < k.

    Only monic messages are visited; weights are invariant under scalars.
    """
    k, m = code.k, code.m
    q = code.ctx.cardinality
    if k == 0:
        raise ValueError("the zero code has no nonzero codewords")
    if q**k - 1 > budget:
        raise BudgetExceeded(f"{q}^{k} - 1 codewords exceed the budget of {budget}")
    add, mul = _tables(code.ctx)
    fvec = [int(c) for c in code.generator.coeffs]
    rows = np.zeros((k, m), dtype=np.int32)
    for i in range(k):
        rows[i, i:i + len(fvec)] = fvec

    best, witness = m + 1, None
    for j in range(k):
        # messages X^j + a_{j-1} X^{j-1} + ... + a_0: low digits vectorized, high digits looped
        low = 0
        while low < j and q ** (low + 1) <= _CHUNK:
            low += 1
        low_digits = _digits(q**low, low, q)
        low_words = np.broadcast_to(rows[j], (q**low, m)).copy()
        for i in range(low):
            low_words = add[low_words, mul[low_digits[:, i][:, None], rows[i][None, :]]]
        for high in itertools.product(range(q), repeat=j - low):
            offset = np.zeros(m, dtype=np.int32)
            for i, a in zip(range(low, j), high):
                if a:
                    offset = add[offset, mul[a, rows[i]]]
            words = add[low_words, offset[None, :]]
            weights = np.count_nonzero(words, axis=1)
            pos = int(np.argmin(weights))
            if weights[pos] < best:
                best, witness = int(weights[pos]), tuple(int(v) for v in words[pos])
    if best == 1 and code.generator.degree > 0:
        raise AssertionError("a weight-1 codeword exists for a non-unit generator")
    return DistanceResult(best, True, witness)


@dataclass(frozen=True)
class CodeReport:
    status: str
    defining_set: DefiningSet | None
    bounds: BoundReport | None
    distance: DistanceResult | None


def code_bound_report(code: ConstacyclicCode, budget: int = DEFAULT_BUDGET,
                      ambient: FieldCtx | None = None) -> CodeReport:
    """Bounds for the code's generator plus, when affordable, the exact distance.

    The exact distance is checked against every bound in the family.
    """
    f = code.generator
    if code.k == 0:
        return CodeReport("zero code", None, None, None)
    if f.degree == 0:
        T = DefiningSet(1, code.q, ())
    else:
        T = defining_set(f, ambient)
    report = bound_report(T)
    try:
        dist = brute_force_distance(code, budget)
    except BudgetExceeded:
        return CodeReport("distance unavailable", T, report, None)
    for d, b in report.gamma_family:
        if dist.distance > b:
            raise AssertionError(f"distance {dist.distance} exceeds the MED bound {b} (d={d})")
    if dist.distance > code.m - code.k + 1:
        raise AssertionError("distance exceeds the Singleton bound m - k + 1")
    return CodeReport("ok", T, report, dist)


@dataclass(frozen=True)
class RootIndexing:
    """Roots of X^m - lambda as powers zeta_N^g, N = m * ord(lambda), g = a (mod ord(lambda))."""

    N: int
    rho: int
    a: int
    ctx: FieldCtx
    cosets: tuple[Coset, ...]


def root_indexing(q: int, m: int, lam) -> RootIndexing:
    base = base_field(q)
    lam = lam if isinstance(lam, FieldElement) else base.element(lam)
    if not lam:
        raise ValueError("lambda must be nonzero")
    if m % base.p == 0:
        raise ValueError(f"p={base.p} divides m={m}")
    rho = element_order(lam)
    N = m * rho
    ctx = ambient_field(q, N)
    zeta_rho = primitive_root_of_unity(rho, ctx)
    target = embed(lam, ctx)
    a = next(i for i in range(rho) if zeta_rho**i == target)
    cosets = tuple(c for c in all_cosets(N, q) if c.rep % rho == a)
    assert sum(c.tau for c in cosets) == m
    return RootIndexing(N, rho, a, ctx, cosets)


def generator_divisors(q: int, m: int, lam, max_dimension: int | None = None):
    """Yield (f, cosets) for every monic divisor f of X^m - lambda over GF(q).

    Divisors correspond to subsets of the q-cosets inside the root index set.
    ``max_dimension`` skips divisors with m - deg f above it.
    """
    base = base_field(q)
    idx = root_indexing(q, m, lam)
    factors = [coset_minimal_polynomial(c, idx.ctx).restrict(base) for c in idx.cosets]
    full = Poly(base, [base.one])
    for g in factors:
        full = full * g
    lam_el = lam if isinstance(lam, FieldElement) else base.element(lam)
    if full != Poly.monomial(base, m) - Poly(base, [lam_el]):
        raise AssertionError("coset minimal polynomials do not multiply to X^m - lambda")
    for mask in range(1 << len(factors)):
        chosen = [i for i in range(len(factors)) if mask >> i & 1]
        deg = sum(idx.cosets[i].tau for i in chosen)
        if max_dimension is not None and m - deg > max_dimension:
            continue
        f = Poly(base, [base.one])
        for i in chosen:
            f = f * factors[i]
        yield f, tuple(idx.cosets[i] for i in chosen)


def indexed_defining_set(q: int, N: int, cosets) -> DefiningSet:
    """Defining set of prod M_c read off the root indices mod N, rescaled to Z/nZ, n = ord."""
    elems = [g for c in cosets for g in c.elems]
    if not elems:
        return DefiningSet(1, q, ())
    n = math.lcm(*(N // math.gcd(g, N) for g in elems))
    scale = N // n
    return DefiningSet(n, q, tuple(sorted(g // scale for g in elems)))

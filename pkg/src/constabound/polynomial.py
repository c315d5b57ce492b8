"""Dense univariate polynomials over a field context, and the constructions
that tie polynomials to subsets of Z/nZ: order, defining set, coset minimal
polynomials, binomials of equal-difference sets and cyclotomic polynomials.
"""

from __future__ import annotations

import math
import re
import warnings
from functools import lru_cache

from .cyclotomic import Coset, all_cosets, coset
from .finite_field import (
    FieldCtx,
    FieldElement,
    _group_order_factorization,
    ambient_field,
    base_field,
    embed,
    primitive_root_of_unity,
    restrict,
)
from .numtheory import divisors, lcm, order_by_descent
from .residues import DefiningSet, is_progression

__all__ = [
    "DefiningSet",
    "Poly",
    "binomial_factorization",
    "binomial_from_ed_set",
    "coset_field",
    "coset_minimal_polynomial",
    "cyclotomic_polynomial",
    "defining_set",
    "factor_into_cosets",
    "format_poly",
    "is_simple_rooted",
    "parse_poly",
    "poly_gcd",
    "poly_order",
    "root_power",
]


class Poly:
    """Polynomial with coefficients in ``ctx``, stored low to high without trailing zeros."""

    __slots__ = ("ctx", "coeffs")

    def __init__(self, ctx: FieldCtx, coeffs=()):
        cs = [c if isinstance(c, FieldElement) else ctx.element(c) for c in coeffs]
        for c in cs:
            if c.ctx is not ctx and c.ctx != ctx:
                raise ValueError(f"coefficient from {c.ctx} in a polynomial over {ctx}")
        while cs and not cs[-1]:
            cs.pop()
        self.ctx = ctx
        self.coeffs = tuple(cs)

    # constructors
    @classmethod
    def from_ints(cls, ctx: FieldCtx, ints) -> Poly:
        return cls(ctx, [ctx.element(int(c)) for c in ints])

    @classmethod
    def x(cls, ctx: FieldCtx) -> Poly:
        return cls(ctx, [ctx.zero, ctx.one])

    @classmethod
    def monomial(cls, ctx: FieldCtx, degree: int, coeff=1) -> Poly:
        c = coeff if isinstance(coeff, FieldElement) else ctx.element(coeff)
        return cls(ctx, [ctx.zero] * degree + [c])

    @classmethod
    def constant(cls, ctx: FieldCtx, c) -> Poly:
        return cls(ctx, [c])

    # basic properties
    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def lc(self) -> FieldElement:
        return self.coeffs[-1] if self.coeffs else self.ctx.zero

    def is_zero(self) -> bool:
        return not self.coeffs

    def __bool__(self):
        return bool(self.coeffs)

    def is_monic(self) -> bool:
        return bool(self.coeffs) and self.coeffs[-1] == 1

    def coeff(self, i: int) -> FieldElement:
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else self.ctx.zero

    def weight(self) -> int:
        """Number of nonzero coefficients."""
        return sum(1 for c in self.coeffs if c)

    def __len__(self):
        return len(self.coeffs)

    def __repr__(self):
        return f"Poly({self.ctx}, {format_poly(self)})"

    def __str__(self):
        terms = []
        for i in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[i]
            if not c:
                continue
            mono = "" if i == 0 else ("X" if i == 1 else f"X^{i}")
            if c == 1 and i:
                terms.append(mono)
            else:
                terms.append(f"{c!r}{'*' + mono if mono else ''}")
        return " + ".join(terms) or "0"

    def _other(self, other) -> Poly:
        if isinstance(other, Poly):
            if other.ctx != self.ctx:
                raise ValueError(f"cannot combine polynomials over {self.ctx} and {other.ctx}")
            return other
        if isinstance(other, (int, FieldElement)):
            return Poly(self.ctx, [self.ctx(other)])
        return NotImplemented

    def __eq__(self, other):
        if isinstance(other, Poly):
            return self.ctx == other.ctx and self.coeffs == other.coeffs
        if isinstance(other, (int, FieldElement)):
            return self == Poly(self.ctx, [self.ctx(other)])
        return NotImplemented

    def __hash__(self):
        return hash((self.ctx, self.coeffs))

    # ring operations
    def __add__(self, other):
        other = self._other(other)
        if other is NotImplemented:
            return other
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        return Poly(self.ctx, [x + y for x, y in zip(a, b)] + list(a[len(b):]))

    __radd__ = __add__

    def __neg__(self):
        return Poly(self.ctx, [-c for c in self.coeffs])

    def __sub__(self, other):
        other = self._other(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._other(other)
        if other is NotImplemented:
            return other
        if not self.coeffs or not other.coeffs:
            return Poly(self.ctx)
        zero = self.ctx.zero
        out = [zero] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    if b:
                        out[i + j] = out[i + j] + a * b
        return Poly(self.ctx, out)

    __rmul__ = __mul__

    def __pow__(self, e: int):
        result = Poly(self.ctx, [self.ctx.one])
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def __divmod__(self, other):
        other = self._other(other)
        if other is NotImplemented:
            return other
        if not other.coeffs:
            raise ZeroDivisionError("division by the zero polynomial")
        rem = list(self.coeffs)
        dd = other.degree
        inv_lc = other.lc.inverse()
        quot = [self.ctx.zero] * max(len(rem) - dd, 0)
        for i in range(len(rem) - 1, dd - 1, -1):
            c = rem[i]
            if not c:
                continue
            c = c * inv_lc
            quot[i - dd] = c
            for j, b in enumerate(other.coeffs):
                rem[i - dd + j] = rem[i - dd + j] - c * b
        return Poly(self.ctx, quot), Poly(self.ctx, rem[:dd])

    def __floordiv__(self, other):
        return divmod(self, other)[0]

    def __mod__(self, other):
        return divmod(self, other)[1]

    def monic(self) -> Poly:
        if not self.coeffs:
            raise ValueError("the zero polynomial has no monic associate")
        inv = self.lc.inverse()
        return Poly(self.ctx, [c * inv for c in self.coeffs])

    def derivative(self) -> Poly:
        return Poly(self.ctx, [c * i for i, c in enumerate(self.coeffs)][1:])

    def __call__(self, x):
        """Evaluate by Horner; x may live in an extension of ``ctx``."""
        if isinstance(x, FieldElement) and x.ctx != self.ctx:
            cs = [embed(c, x.ctx) for c in self.coeffs]
            zero = x.ctx.zero
        else:
            x = self.ctx(x)
            cs = self.coeffs
            zero = self.ctx.zero
        acc = zero
        for c in reversed(cs):
            acc = acc * x + c
        return acc

    def powmod(self, e: int, modulus: Poly) -> Poly:
        result = Poly(self.ctx, [self.ctx.one]) % modulus
        base = self % modulus
        while e:
            if e & 1:
                result = (result * base) % modulus
            e >>= 1
            if e:
                base = (base * base) % modulus
        return result

    def embed(self, target: FieldCtx) -> Poly:
        return Poly(target, [embed(c, target) for c in self.coeffs])

    def restrict(self, source: FieldCtx) -> Poly:
        """Pull coefficients back into the subfield ``source``; ValueError if impossible."""
        return Poly(source, [restrict(c, source) for c in self.coeffs])

    def inflate(self, k: int) -> Poly:
        """f(X^k)."""
        zero = self.ctx.zero
        out = []
        for i, c in enumerate(self.coeffs):
            out.append(c)
            if i < len(self.coeffs) - 1:
                out.extend([zero] * (k - 1))
        return Poly(self.ctx, out)


def poly_gcd(a: Poly, b: Poly) -> Poly:
    """Monic gcd; gcd(0, 0) is the zero polynomial."""
    while b:
        a, b = b, a % b
    return a.monic() if a else a


# -- text format ---------------------------------------------------------------

_TOKEN = re.compile(r"\[[^\]]*\]|[^,\[\]\s]+")


def parse_poly(text: str, ctx: FieldCtx) -> Poly:
    """Parse "c0,c1,..." (low to high); extension coefficients as "[a0,a1,...]"."""
    tokens = _TOKEN.findall(text)
    if not tokens:
        raise ValueError(f"no coefficients in {text!r}")
    cs = []
    for tok in tokens:
        try:
            if tok.startswith("["):
                cs.append(ctx.element([int(v) for v in tok[1:-1].split(",") if v.strip()]))
            else:
                cs.append(ctx.element(int(tok)))
        except ValueError as exc:
            raise ValueError(f"bad coefficient {tok!r} in {text!r}: {exc}") from None
    return Poly(ctx, cs)


def format_poly(f: Poly) -> str:
    return ",".join(repr(c) for c in f.coeffs) if f.coeffs else "0"


# -- order and defining sets -----------------------------------------------------

def _normalized(f: Poly) -> Poly:
    if not f.is_monic():
        warnings.warn(f"normalizing non-monic polynomial {f} to its monic associate", stacklevel=3)
        return f.monic()
    return f


def is_simple_rooted(f: Poly) -> bool:
    """Monic, nonzero constant term and coprime to its derivative."""
    if f.degree < 1:
        raise ValueError("is_simple_rooted needs a nonconstant polynomial")
    if not f.is_monic() or not f.coeff(0):
        return False
    return poly_gcd(f, f.derivative()).degree == 0


def _require_simple_rooted(f: Poly) -> Poly:
    f = _normalized(f)
    if not is_simple_rooted(f):
        raise ValueError(f"{f} is not simple-rooted with nonzero constant term")
    return f


def poly_order(f: Poly) -> int:
    """Smallest n with f | X^n - 1.

    Distinct-degree splitting groups the irreducible factors by degree i; the
    roots of each group live in GF(q^i), so the order of X modulo the group
    divides q^i - 1 and is found by descent.  The lcm is then checked directly.
    """
    f = _require_simple_rooted(f)
    ctx = f.ctx
    q = ctx.cardinality
    x = Poly.x(ctx)
    one = Poly(ctx, [ctx.one])
    rest = f
    h = x % rest
    orders = []
    i = 0
    while rest.degree > 0:
        i += 1
        if 2 * i > rest.degree:
            # what remains is irreducible of degree rest.degree
            group, i = rest, rest.degree
        else:
            h = h.powmod(q, rest)
            group = poly_gcd(rest, h - x)
        if group.degree > 0:
            exp = _group_order_factorization(ctx.p, ctx.k * i)
            orders.append(order_by_descent(exp.n, exp.primes, lambda s, g=group: x.powmod(s, g) == one))
            rest = rest // group
            h = h % rest if rest.degree > 0 else h
    n = lcm(*orders)
    if x.powmod(n, f) != one:
        raise AssertionError(f"order {n} does not satisfy f | X^n - 1 for {f}")
    return n


def root_power(ctx: FieldCtx, n: int, e: int) -> FieldElement:
    """zeta_n ** e, needing only zeta_{n / gcd(e, n)} to exist in ``ctx``."""
    e %= n
    g = math.gcd(e, n)
    return primitive_root_of_unity(n // g, ctx) ** (e // g)


def coset_field(c: Coset) -> FieldCtx:
    """GF(q^tau): the field generated over GF(q) by the roots of M_gamma."""
    return ambient_field(c.q, c.n_gamma)


def coset_minimal_polynomial(c: Coset, ctx: FieldCtx | None = None) -> Poly:
    """M_gamma(X) = prod (X - zeta_n^(gamma q^i)) as a polynomial over ``ctx``."""
    ctx = ctx or coset_field(c)
    base = base_field(c.q)
    if (ctx.cardinality - 1) % c.n_gamma:
        raise ValueError(f"{ctx} does not contain the roots of M_gamma for {c}")
    result = Poly(ctx, [ctx.one])
    for g in c.elems:
        result = result * Poly(ctx, [-root_power(ctx, c.n, g), ctx.one])
    result.restrict(base)
    return result


def defining_set(f: Poly, ambient: FieldCtx | None = None) -> DefiningSet:
    """T_f = {g in Z/nZ : f(zeta_n^g) = 0}, n = ord(f), by direct evaluation."""
    f = _require_simple_rooted(f)
    n = poly_order(f)
    q = f.ctx.cardinality
    ctx = ambient or ambient_field(q, n)
    zeta = primitive_root_of_unity(n, ctx)
    coeffs = [embed(c, ctx) for c in f.coeffs]
    elems = []
    x = ctx.one
    for g in range(n):
        acc = ctx.zero
        for c in reversed(coeffs):
            acc = acc * x + c
        if not acc:
            elems.append(g)
        x = x * zeta
    if len(elems) != f.degree:
        raise AssertionError(f"found {len(elems)} roots for a polynomial of degree {f.degree}")
    return DefiningSet(n, q, tuple(elems), root=zeta)


def factor_into_cosets(f: Poly, ambient: FieldCtx | None = None) -> list[Coset]:
    """Cosets mod ord(f) whose minimal polynomials multiply to f (checked exactly)."""
    f = _require_simple_rooted(f)
    ts = defining_set(f, ambient)
    ctx = ts.root.ctx
    remaining = set(ts.elems)
    out = []
    while remaining:
        c = coset(ts.n, ts.q, min(remaining))
        if not remaining.issuperset(c.elems):
            raise AssertionError(f"defining set is not a union of cosets at {c}")
        remaining.difference_update(c.elems)
        out.append(c)
    prod = Poly(ctx, [ctx.one])
    for c in out:
        prod = prod * coset_minimal_polynomial(c, ctx)
    if prod != f.embed(ctx):
        raise AssertionError("product of coset minimal polynomials differs from f")
    return out


# -- binomials ------------------------------------------------------------------

def binomial_from_ed_set(elems, n: int, q: int, ctx: FieldCtx) -> tuple[Poly, bool]:
    """X^(n/d) - zeta_n^(gamma n / d) for E = gamma + d Z/nZ, and whether it lies over GF(q).

    Rationality is decided by gamma q = gamma (mod d).
    """
    d = is_progression(elems, n)
    if d is None:
        raise ValueError(f"{sorted(elems)} is not an equal-difference set mod {n}")
    gamma = min(elems)
    size = n // d
    poly = Poly.monomial(ctx, size) - Poly(ctx, [root_power(ctx, n, gamma * size)])
    return poly, (gamma * q - gamma) % d == 0


def binomial_factorization(c: Coset, d: int, ctx: FieldCtx | None = None) -> list[Poly]:
    """The t = d tau / n binomials X^(n/d) - zeta_n^(gamma q^i n / d) whose product is M_gamma."""
    ctx = ctx or coset_field(c)
    if c.n % d or (d * c.tau) % c.n:
        raise ValueError(f"{d} is not a valid common difference for {c}")
    t = d * c.tau // c.n
    size = c.n // d
    out = []
    g = c.rep
    for _ in range(t):
        out.append(Poly.monomial(ctx, size) - Poly(ctx, [root_power(ctx, c.n, g * size)]))
        g = g * c.q % c.n
    return out


@lru_cache(maxsize=None)
def _integer_cyclotomic(n: int) -> tuple[int, ...]:
    # (X^n - 1) / prod_{d | n, d < n} Phi_d over Z
    num = [-1] + [0] * (n - 1) + [1]
    for d in divisors(n)[:-1]:
        den = _integer_cyclotomic(d)
        quot = [0] * (len(num) - len(den) + 1)
        rem = num[:]
        for i in range(len(quot) - 1, -1, -1):
            c = rem[i + len(den) - 1]
            quot[i] = c
            for j, b in enumerate(den):
                rem[i + j] -= c * b
        assert not any(rem), "cyclotomic division left a remainder"
        num = quot
    return tuple(num)


def cyclotomic_polynomial(n: int, ctx: FieldCtx) -> Poly:
    if n % ctx.p == 0:
        raise ValueError(f"characteristic {ctx.p} divides {n}")
    return Poly.from_ints(ctx, _integer_cyclotomic(n))


def cyclotomic_factors(n: int, q: int) -> list[Poly]:
    """Irreducible factors of Phi_n over GF(q), one per coset of units mod n, by smallest member."""
    base = base_field(q)
    ctx = ambient_field(q, n)
    out = []
    for c in all_cosets(n, q):
        if math.gcd(c.rep, n) == 1:
            out.append(coset_minimal_polynomial(c, ctx).restrict(base))
    return out

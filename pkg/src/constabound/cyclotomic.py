"""q-cyclotomic cosets modulo n and their MED representations."""

from __future__ import annotations

import math
from dataclasses import dataclass

from .numtheory import divisors, mult_order, radical
from .residues import DefiningSet, MedRep, is_progression, progression


@dataclass(frozen=True)
class Coset:
    n: int
    q: int
    rep: int
    elems: tuple[int, ...]
    tau: int
    n_gamma: int

    def __len__(self):
        return self.tau

    def __iter__(self):
        return iter(self.elems)

    def as_defining_set(self) -> DefiningSet:
        return DefiningSet(self.n, self.q, self.elems)


@dataclass(frozen=True)
class CosetMedIndex:
    coset: Coset
    omega: int
    sigma_set: tuple[int, ...]


def _orbit(gamma: int, mult: int, n: int) -> list[int]:
    out = [gamma]
    x = gamma * mult % n
    while x != gamma:
        out.append(x)
        x = x * mult % n
    return out


def coset(n: int, q: int, gamma: int) -> Coset:
    """c_{n/q}(gamma), the orbit of gamma under multiplication by q mod n."""
    if n < 1:
        raise ValueError(f"modulus must be positive, got {n}")
    if math.gcd(n, q) != 1:
        raise ValueError(f"gcd(n={n}, q={q}) != 1")
    gamma %= n
    orbit = _orbit(gamma, q % n, n)
    n_gamma = n // math.gcd(gamma, n)
    tau = len(orbit)
    assert tau == mult_order(q, n_gamma)
    elems = tuple(sorted(orbit))
    return Coset(n, q, elems[0], elems, tau, n_gamma)


def all_cosets(n: int, q: int) -> list[Coset]:
    """Partition of Z/nZ into q-cyclotomic cosets, ordered by smallest member."""
    if math.gcd(n, q) != 1:
        raise ValueError(f"gcd(n={n}, q={q}) != 1")
    seen = bytearray(n)
    out = []
    for g in range(n):
        if not seen[g]:
            c = coset(n, q, g)
            for x in c.elems:
                seen[x] = 1
            out.append(c)
    return out


def primitive_form(c: Coset) -> Coset:
    g = math.gcd(c.rep, c.n)
    return coset(c.n_gamma, c.q, c.rep // g)


def _is_equal_difference_direct(c: Coset) -> bool:
    return is_progression(c.elems, c.n) is not None


def is_equal_difference(c: Coset) -> bool:
    """rad(n_gamma) | q - 1, and q = 1 mod 4 whenever 8 | n_gamma.

    The arithmetic criterion is cross-checked against a direct test that
    the coset is an arithmetic progression of difference n / tau.
    """
    crit = (c.q - 1) % radical(c.n_gamma) == 0 and (c.n_gamma % 8 != 0 or c.q % 4 == 1)
    direct = _is_equal_difference_direct(c)
    if crit != direct:
        raise AssertionError(f"equal-difference criterion disagrees with direct check on {c}")
    return crit


def omega(c: Coset) -> int:
    """Number of classes in the coarsest MED representation of the coset."""
    o = mult_order(c.q, radical(c.n_gamma))
    if c.n_gamma % 8 == 0 and pow(c.q, o, 4) == 3:
        return 2 * o
    return o


def sigma_gamma(c: Coset) -> CosetMedIndex:
    """Admissible common differences d = n t / tau, omega | t | tau."""
    w = omega(c)
    if c.tau % w:
        raise AssertionError(f"omega={w} does not divide tau={c.tau} for {c}")
    ds = []
    for t in divisors(c.tau):
        if t % w == 0:
            if (c.n * t) % c.tau:
                raise AssertionError(f"n t / tau is not integral for t={t}, {c}")
            ds.append(c.n * t // c.tau)
    return CosetMedIndex(c, w, tuple(sorted(ds)))


def coset_med(c: Coset, d: int) -> MedRep:
    """The MED representation with common difference d: orbits of gamma q^i under q^t."""
    if d not in sigma_gamma(c).sigma_set:
        raise ValueError(f"{d} is not an admissible common difference for {c}")
    t = d * c.tau // c.n
    qt = pow(c.q, t, c.n) if c.n > 1 else 0
    classes = []
    g = c.rep
    for _ in range(t):
        cls = tuple(sorted(_orbit(g, qt, c.n)))
        if progression(cls[0], d, c.n) != cls:
            raise AssertionError(f"class {cls} is not equal-difference with difference {d}")
        classes.append(cls)
        g = g * c.q % c.n
    classes.sort()
    return MedRep(c.as_defining_set(), d, tuple(classes))


def binomial_fields(c: Coset, check: bool = True) -> list[int]:
    """Degrees t of the extensions GF(q^t) over which M_gamma splits into binomials.

    With ``check`` the binomial factorization is multiplied out and compared
    with M_gamma coefficient by coefficient.
    """
    ds = sigma_gamma(c).sigma_set
    ts = [d * c.tau // c.n for d in ds]
    if check:
        from .polynomial import binomial_factorization, coset_minimal_polynomial, coset_field

        ctx = coset_field(c)
        target = coset_minimal_polynomial(c, ctx)
        for d in ds:
            prod = None
            for b in binomial_factorization(c, d, ctx):
                prod = b if prod is None else prod * b
            if prod != target:
                raise AssertionError(f"binomial product for d={d} differs from M_gamma of {c}")
    return ts

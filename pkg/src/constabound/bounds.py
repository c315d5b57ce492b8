"""Upper bounds on the Hamming distance of a constacyclic code read off its
generator's defining set.

Every MED representation with common difference d gives the bound
tau d / n + 1; the trivial representation (d = n) is the Singleton bound and
the coarsest one (d = d0) is the arithmetic Singleton bound tau / sigma_f + 1.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import NamedTuple

from .cyclotomic import coset, omega as coset_omega
from .medrep import stabilizer, stable_divisors, translation_mask
from .numtheory import factorize, mult_order, radical, valuation
from .residues import DefiningSet, MedRep


@dataclass(frozen=True)
class BoundReport:
    tau: int
    n: int
    singleton: int
    arithmetic: int
    gamma_family: tuple[tuple[int, int], ...]
    coincide: bool
    sigma_f_order: int
    omega: int | None = None

    @property
    def sigma_f(self) -> tuple[int, ...]:
        return tuple(d for d, _ in self.gamma_family)

    def as_dict(self) -> dict:
        return {
            "tau": self.tau,
            "n": self.n,
            "singleton": self.singleton,
            "arithmetic": self.arithmetic,
            "gamma_family": [{"d": d, "bound": b} for d, b in self.gamma_family],
            "coincide": self.coincide,
            "sigma_f_order": self.sigma_f_order,
            "omega": self.omega,
        }

    @classmethod
    def from_dict(cls, data: dict) -> BoundReport:
        return cls(
            tau=data["tau"],
            n=data["n"],
            singleton=data["singleton"],
            arithmetic=data["arithmetic"],
            gamma_family=tuple((g["d"], g["bound"]) for g in data["gamma_family"]),
            coincide=data["coincide"],
            sigma_f_order=data["sigma_f_order"],
            omega=data["omega"],
        )


def _med_bound(tau: int, d: int, n: int) -> int:
    if (tau * d) % n:
        raise ValueError(f"tau*d/n = {tau}*{d}/{n} is not an integer")
    return tau * d // n + 1


def bound_from_med(rep: MedRep, tau: int) -> int:
    """The distance bound tau d / n + 1 carried by one MED representation."""
    if tau != len(rep.base):
        raise ValueError(f"tau={tau} but the defining set has {len(rep.base)} elements")
    bound = _med_bound(tau, rep.d, rep.base.n)
    if bound != rep.r + 1:
        raise AssertionError("bound does not match the number of classes")
    return bound


def gamma_family(mask: int, tau: int, n: int) -> tuple[tuple[int, int], ...]:
    """(d, tau d / n + 1) for every divisor d of n fixing the set under translation."""
    return tuple((d, _med_bound(tau, d, n)) for d in stable_divisors(mask, n))


def arithmetic_bound_two_ways(mask: int, elems, n: int) -> tuple[int, int]:
    """min over the MED bound family, and tau / sigma_f + 1 with sigma_f counted
    as the size of the full translation group."""
    tau = len(elems)
    family_min = min(b for _, b in gamma_family(mask, tau, n))
    sigma = translation_mask(mask, elems, n).bit_count()
    if tau % sigma:
        raise AssertionError(f"sigma_f={sigma} does not divide tau={tau}")
    return family_min, tau // sigma + 1


def _single_coset_omega(T: DefiningSet) -> int | None:
    if not T.elems:
        return None
    c = coset(T.n, T.q, T.elems[0])
    return coset_omega(c) if c.elems == T.elems else None


def bound_report(T: DefiningSet, check: bool = True) -> BoundReport:
    """Singleton bound, arithmetic Singleton bound and the whole family of MED bounds.

    The arithmetic bound is computed both as the minimum of the family and as
    tau / sigma_f + 1, with sigma_f the size of the translation group of T
    (counted independently of the divisor scan when ``check`` is set).
    """
    tau, n = len(T), T.n
    stab = stabilizer(T, check=check)
    family = gamma_family(T.mask, tau, n)
    if tuple(d for d, _ in family) != stab.sigma_f:
        raise AssertionError("MED bound family and stabilizer disagree")
    sigma_order = translation_mask(T.mask, T.elems, n).bit_count() if check else stab.group_order
    if tau % sigma_order:
        raise AssertionError(f"sigma_f={sigma_order} does not divide tau={tau}")
    arithmetic = min(b for _, b in family)
    if arithmetic != tau // sigma_order + 1:
        raise AssertionError(f"min over family {arithmetic} != tau/sigma_f + 1 for {T}")
    singleton = dict(family)[n]
    if singleton != tau + 1:
        raise AssertionError("trivial representation does not give the Singleton bound")
    coincide = sigma_order == 1
    if coincide != (len(family) == 1) or coincide != (singleton == arithmetic):
        raise AssertionError(f"coincidence criteria disagree for {T}")
    return BoundReport(
        tau=tau,
        n=n,
        singleton=singleton,
        arithmetic=arithmetic,
        gamma_family=family,
        coincide=coincide,
        sigma_f_order=sigma_order,
        omega=_single_coset_omega(T),
    )


class IrreducibleBounds(NamedTuple):
    singleton: int
    arithmetic: int
    omega: int
    tau: int


def _omega_for_order(q: int, n: int) -> int:
    o = mult_order(q, radical(n))
    if n % 8 == 0 and pow(q, o, 4) == 3:
        return 2 * o
    return o


def irreducible_bounds(q: int, n: int) -> IrreducibleBounds:
    """Closed-form bounds for a code whose generator is irreducible of order n."""
    if math.gcd(n, q) != 1:
        raise ValueError(f"gcd(n={n}, q={q}) != 1")
    w = _omega_for_order(q, n)
    qw1 = q**w - 1
    tau = w
    for p, e in factorize(n):
        tau *= p ** max(e - valuation(p, qw1), 0)
    if tau != mult_order(q, n):
        raise AssertionError(f"closed-form degree {tau} != ord_{n}({q})")
    return IrreducibleBounds(tau + 1, w + 1, w, tau)


def irreducible_coincide(q: int, n: int) -> bool:
    if math.gcd(n, q) != 1:
        raise ValueError(f"gcd(n={n}, q={q}) != 1")
    qw1 = q ** _omega_for_order(q, n) - 1
    verdict = all(e <= valuation(p, qw1) for p, e in factorize(n))
    b = irreducible_bounds(q, n)
    if verdict != (b.singleton == b.arithmetic):
        raise AssertionError(f"coincidence criterion disagrees with the bounds for q={q}, n={n}")
    return verdict

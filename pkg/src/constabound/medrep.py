"""MED representations of general defining sets.

The translations a with T + a = T form a subgroup of Z/nZ generated by its
smallest positive element d0; the admissible common differences are exactly
the divisors of n that are multiples of d0, one representation each.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .numtheory import divisors, mod_inverse
from .residues import DefiningSet, MedRep, progression


@dataclass(frozen=True)
class Stabilizer:
    n: int
    d0: int
    sigma_f: tuple[int, ...]
    group_order: int


def rotate(mask: int, a: int, n: int) -> int:
    """Bitset of {g + a mod n : g in mask}."""
    a %= n
    if a == 0:
        return mask
    full = (1 << n) - 1
    return ((mask << a) | (mask >> (n - a))) & full


def stable_divisors(mask: int, n: int) -> tuple[int, ...]:
    """Divisors d of n with mask + d = mask."""
    return tuple(d for d in divisors(n) if rotate(mask, d, n) == mask)


def translation_mask(mask: int, elems, n: int) -> int:
    """Bitset of all a with T + a = T, the intersection of T - t over t in T."""
    full = (1 << n) - 1
    candidates = full
    for t in elems:
        s = (n - t) % n
        candidates &= ((mask << s) | (mask >> (n - s))) & full if s else mask
        if candidates == 1:
            break
    return candidates


def translation_group(T: DefiningSet) -> list[int]:
    """All a in Z/nZ with T + a = T."""
    candidates = translation_mask(T.mask, T.elems, T.n)
    return [a for a in range(T.n) if candidates >> a & 1]


def stabilizer(T: DefiningSet, check: bool = True) -> Stabilizer:
    """Divisors d of n with T + d = T, their minimum d0 and the group order n / d0.

    With ``check`` the full translation group is recomputed independently
    and must equal the multiples of d0.
    """
    n = T.n
    sigma = stable_divisors(T.mask, n)
    d0 = sigma[0]
    if any(d % d0 for d in sigma):
        raise AssertionError(f"d0={d0} does not divide every stabilizing divisor {sigma}")
    if check:
        group = translation_group(T)
        if group != list(range(0, n, d0)):
            raise AssertionError(f"translation group {group} is not generated by d0={d0}")
    return Stabilizer(n, d0, sigma, n // d0)


def med_representation(T: DefiningSet, d: int, stab: Stabilizer | None = None) -> MedRep:
    """The unique MED representation of T with common difference d, built greedily."""
    stab = stab or stabilizer(T, check=False)
    if d not in stab.sigma_f:
        raise ValueError(f"no MED representation of T with common difference {d}")
    remaining = set(T.elems)
    classes = []
    while remaining:
        cls = progression(min(remaining), d, T.n)
        remaining.difference_update(cls)
        classes.append(cls)
    return MedRep(T, d, tuple(classes))


def all_med_representations(T: DefiningSet) -> list[MedRep]:
    stab = stabilizer(T)
    return [med_representation(T, d, stab) for d in stab.sigma_f]


def coarsest_med(T: DefiningSet) -> MedRep:
    stab = stabilizer(T)
    return med_representation(T, stab.d0, stab)


def is_coarser(a: MedRep, b: MedRep) -> bool:
    """True when every class of b sits inside a class of a (equivalently a.d | b.d)."""
    if a.base != b.base:
        raise ValueError("MED representations of different sets are not comparable")
    owner = {g: i for i, cls in enumerate(a.classes) for g in cls}
    by_classes = all(len({owner[g] for g in cls}) == 1 for cls in b.classes)
    by_divisibility = b.d % a.d == 0
    if by_classes != by_divisibility:
        raise AssertionError(f"refinement order disagrees with divisibility for d={a.d}, {b.d}")
    return by_classes


def relabel_by_unit(T: DefiningSet, r: int) -> DefiningSet:
    """r^{-1} T: the defining set read against zeta_n^r instead of zeta_n."""
    if math.gcd(r, T.n) != 1:
        raise ValueError(f"{r} is not a unit mod {T.n}")
    inv = mod_inverse(r, T.n)
    return DefiningSet(T.n, T.q, tuple(sorted(inv * g % T.n for g in T.elems)))

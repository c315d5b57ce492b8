"""Subsets of Z/nZ: defining sets and their equal-difference partitions."""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from functools import cached_property

from .numtheory import lcm


@dataclass(frozen=True)
class DefiningSet:
    """A q-stable subset of Z/nZ.

    ``root`` optionally records the primitive n-th root of unity the set was
    read off against; it does not take part in equality.
    """

    n: int
    q: int
    elems: tuple[int, ...]
    root: object = field(default=None, compare=False, repr=False)

    def __post_init__(self):
        if self.n < 1:
            raise ValueError(f"modulus must be positive, got {self.n}")
        if math.gcd(self.n, self.q) != 1:
            raise ValueError(f"gcd(n={self.n}, q={self.q}) != 1")
        elems = tuple(sorted(set(self.elems)))
        if len(elems) != len(self.elems) or elems != tuple(self.elems):
            object.__setattr__(self, "elems", elems)
        if elems and not (0 <= elems[0] and elems[-1] < self.n):
            raise ValueError(f"residues must lie in [0, {self.n})")
        members = set(elems)
        if any(g * self.q % self.n not in members for g in elems):
            raise ValueError(f"set is not closed under multiplication by q={self.q} mod {self.n}")

    def __len__(self):
        return len(self.elems)

    def __iter__(self):
        return iter(self.elems)

    def __contains__(self, g):
        return g in self._members

    @cached_property
    def _members(self) -> frozenset[int]:
        return frozenset(self.elems)

    @cached_property
    def mask(self) -> int:
        """Bitset with bit g set for every member g."""
        out = 0
        for g in self.elems:
            out |= 1 << g
        return out

    def order(self) -> int:
        """lcm of n / gcd(g, n) over members: the order of the polynomial it defines."""
        return lcm(*(self.n // math.gcd(g, self.n) for g in self.elems))

    def has_full_order(self) -> bool:
        return self.order() == self.n

    def translate(self, a: int) -> frozenset[int]:
        return frozenset((g + a) % self.n for g in self.elems)


def progression(start: int, d: int, n: int) -> tuple[int, ...]:
    """The equal-difference set {start + j d mod n}, sorted."""
    if d < 1 or n % d:
        raise ValueError(f"common difference {d} must divide {n}")
    return tuple(sorted((start + j * d) % n for j in range(n // d)))


def is_progression(elems, n: int) -> int | None:
    """Common difference of ``elems`` as an equal-difference set mod n, or None."""
    elems = sorted(set(elems))
    size = len(elems)
    if size == 0 or n % size:
        return None
    d = n // size
    return d if tuple(elems) == progression(elems[0], d, n) else None


@dataclass(frozen=True)
class MedRep:
    """Partition of a defining set into equal-difference classes of one common difference."""

    base: DefiningSet
    d: int
    classes: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        n = self.base.n
        size = n // self.d if self.d and n % self.d == 0 else None
        if size is None:
            raise ValueError(f"common difference {self.d} does not divide {n}")
        seen: set[int] = set()
        for cls in self.classes:
            if len(cls) != size or progression(cls[0], self.d, n) != tuple(cls):
                raise ValueError(f"class {cls} is not an equal-difference set with difference {self.d}")
            if seen.intersection(cls):
                raise ValueError("classes overlap")
            seen.update(cls)
        if seen != set(self.base.elems):
            raise ValueError("classes do not cover the defining set")

    @property
    def r(self) -> int:
        return len(self.classes)

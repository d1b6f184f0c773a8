"""Nonzero-digit decompositions of positive integers in a fixed base.

A positive integer ``n`` written in base ``b`` is kept as the list of its
nonzero digits together with their positions::

    17199 = 1*7**2 + 1*7**3 + 1*7**5   ->   terms ((2, 1), (3, 1), (5, 1))

Everything the colorings need is read off that list: the lowest position
``lam``, the highest position ``mu``, the digit at the lowest position
``first_digit`` and the gaps between consecutive positions.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import NamedTuple

from .errors import DomainError

__all__ = [
    "Gap",
    "Decomposition",
    "ResidueClass",
    "decompose",
    "residue_class",
    "in_residue_class",
    "pm_class",
    "check_positive",
]


def check_positive(n, what: str = "n") -> int:
    """Return ``n`` if it is a positive ``int``, raise :class:`DomainError` otherwise."""
    if isinstance(n, bool) or not isinstance(n, int):
        raise DomainError(f"{what} must be an integer, got {n!r}")
    if n < 1:
        raise DomainError(f"{what} must be a positive integer, got {n}")
    return n


def _check_base(base) -> int:
    if isinstance(base, bool) or not isinstance(base, int) or base < 2:
        raise DomainError(f"base must be an integer >= 2, got {base!r}")
    return base


class Gap(NamedTuple):
    """Open interval between two consecutive nonzero-digit positions."""

    lo: int
    hi: int


class ResidueClass(NamedTuple):
    """The class of numbers ``n`` with ``n = digit * base**level (mod base**(level+1))``."""

    level: int
    digit: int

    def contains(self, n: int, base: int) -> bool:
        check_positive(n)
        _check_base(base)
        return n % base ** (self.level + 1) == self.digit * base**self.level


@dataclass(frozen=True)
class Decomposition:
    base: int
    terms: tuple[tuple[int, int], ...]
    value: int
    gaps: tuple[Gap, ...] = field(init=False, repr=False)

    def __post_init__(self) -> None:
        _check_base(self.base)
        check_positive(self.value, "value")
        if not self.terms:
            raise DomainError("a decomposition needs at least one term")
        total = 0
        last = -1
        for pos, digit in self.terms:
            if pos <= last:
                raise DomainError("positions must be strictly increasing")
            if not 1 <= digit < self.base:
                raise DomainError(f"digit {digit} outside [1, {self.base - 1}]")
            total += digit * self.base**pos
            last = pos
        if total != self.value:
            raise DomainError(f"terms sum to {total}, not {self.value}")
        positions = self.positions
        gaps = tuple(Gap(a, b) for a, b in zip(positions, positions[1:]))
        object.__setattr__(self, "gaps", gaps)

    @property
    def positions(self) -> tuple[int, ...]:
        return tuple(pos for pos, _ in self.terms)

    @property
    def lam(self) -> int:
        """Lowest nonzero position."""
        return self.terms[0][0]

    @property
    def mu(self) -> int:
        """Highest nonzero position."""
        return self.terms[-1][0]

    @property
    def first_digit(self) -> int:
        return self.terms[0][1]

    @property
    def residue(self) -> ResidueClass:
        return ResidueClass(self.lam, self.first_digit)

    def evaluate(self) -> int:
        return sum(d * self.base**p for p, d in self.terms)


def decompose(n: int, base: int) -> Decomposition:
    """Decompose ``n`` into its nonzero base-``base`` digits, lowest position first.

    >>> decompose(11, 3).terms
    ((0, 2), (2, 1))
    """
    check_positive(n)
    _check_base(base)
    terms = []
    pos = 0
    rest = n
    while rest:
        rest, digit = divmod(rest, base)
        if digit:
            terms.append((pos, digit))
        pos += 1
    return Decomposition(base, tuple(terms), n)


def residue_class(n: int, base: int) -> ResidueClass:
    """Return the unique ``(k, i)`` with ``n`` in ``O_{k,i}``."""
    check_positive(n)
    _check_base(base)
    k = 0
    while n % base == 0:
        n //= base
        k += 1
    return ResidueClass(k, n % base)


def in_residue_class(n: int, level: int, digit: int, base: int) -> bool:
    return ResidueClass(level, digit).contains(n, base)


_PM = {1: 1, 6: 1, 2: 2, 5: 2, 3: 3, 4: 3}


def pm_class(i: int) -> int:
    """Map a nonzero base-7 digit to its class up to sign: ±1 -> 1, ±2 -> 2, ±3 -> 3."""
    if isinstance(i, bool) or i not in _PM:
        raise DomainError(f"pm_class expects a digit in [1, 6], got {i!r}")
    return _PM[i]

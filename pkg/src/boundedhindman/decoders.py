"""Reading information back out of monochromatic sets.

* :func:`decode_delta2` turns a solution for the two-coloring into the sets
  ``B0``/``B1`` of indices whose limit it pins down.
* :func:`decode_range_membership` decides ``y in range(f)`` from a chain
  using bounded evaluations of ``f`` only.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

from .colorings import Coloring
from .errors import DecodeRangeError, DomainError, StructureError
from .numerals import check_positive, decompose, residue_class
from .solver import SolutionCandidate
from .stages import bounded_range_query

__all__ = [
    "MembershipVerdict",
    "Delta2Evidence",
    "BSets",
    "decode_delta2",
    "decode_range_membership",
    "decode_range_table",
    "decodable_limit",
    "replay_verdict",
]


@dataclass(frozen=True)
class MembershipVerdict:
    y: int
    member: bool
    n: int
    m: int
    bound: int
    certified: bool = False


@dataclass(frozen=True)
class Delta2Evidence:
    element: int
    level: int
    digit: int
    color: int

    @property
    def verdict(self) -> int:
        return self.color if self.digit == 1 else 1 - self.color


@dataclass(frozen=True)
class BSets:
    B0: frozenset[int]
    B1: frozenset[int]
    evidence: tuple[Delta2Evidence, ...] = ()

    @property
    def disjoint(self) -> bool:
        return not (self.B0 & self.B1)


def decode_delta2(W: Iterable[int], c: Coloring, K: int) -> BSets:
    """Collect ``k <= K`` into ``B_i`` whenever some ``n`` in ``W`` lies in
    ``O_{k,1}`` with ``c(n) = i`` or in ``O_{k,2}`` with ``c(n) = 1 - i``.

    Only residue classes and colors are consulted.
    """
    elements = sorted(set(W))
    if not elements:
        raise DomainError("W must be nonempty")
    if isinstance(K, bool) or not isinstance(K, int) or K < 0:
        raise DomainError(f"K must be a non-negative integer, got {K!r}")
    bins: tuple[set[int], set[int]] = (set(), set())
    evidence = []
    for n in elements:
        k, i = residue_class(n, 3)
        if k > K:
            continue
        ev = Delta2Evidence(n, k, i, c(n))
        bins[ev.verdict].add(k)
        evidence.append(ev)
    return BSets(frozenset(bins[0]), frozenset(bins[1]), tuple(evidence))


def _chain(Xc, base: int):
    xs = tuple(Xc.elements if isinstance(Xc, SolutionCandidate) else Xc)
    ds = [decompose(x, base) for x in xs]
    for a, b in zip(ds, ds[1:]):
        if a.value >= b.value:
            raise StructureError("chain elements must be strictly increasing")
        if a.mu >= b.lam:
            raise StructureError(f"chain condition fails between {a.value} and {b.value}: mu={a.mu} >= lam={b.lam}")
    return ds


def decodable_limit(Xc, base: int) -> int:
    """Largest ``y`` a chain can decode: ``mu`` of its second-largest element (0 if none)."""
    ds = _chain(Xc, base)
    return ds[-2].mu if len(ds) >= 2 else 0


def _decode(ds, f, y: int, certified: bool) -> MembershipVerdict:
    check_positive(y, "y")
    if len(ds) < 2 or y > ds[-2].mu:
        limit = ds[-2].mu if len(ds) >= 2 else 0
        raise DecodeRangeError(f"y={y} exceeds the decodable range [1, {limit}]")
    j = next(j for j, d in enumerate(ds[:-1]) if d.mu >= y)
    m = ds[j + 1]
    return MembershipVerdict(y, bounded_range_query(f, y, m.lam), ds[j].value, m.value, m.lam, certified)


def decode_range_membership(Xc, f, y: int, base: int, certified: bool = False) -> MembershipVerdict:
    """Decide ``y in range(f)`` from the chain ``Xc``.

    Takes the first element ``n`` with ``mu(n) >= y`` and its successor ``m``;
    the verdict is whether ``f(x) = y`` for some ``x <= lam(m)``. Correct when
    ``m`` is fresh over ``n``; pass ``certified=True`` only when that is known.
    """
    return _decode(_chain(Xc, base), f, y, certified)


def decode_range_table(Xc, f, base: int, certified: bool = False) -> list[MembershipVerdict]:
    ds = _chain(Xc, base)
    if len(ds) < 2:
        raise DecodeRangeError("a chain needs at least two elements to decode anything")
    return [_decode(ds, f, y, certified) for y in range(1, ds[-2].mu + 1)]


def replay_verdict(v: MembershipVerdict, f) -> bool:
    """Recompute a verdict from its recorded bound."""
    return bounded_range_query(f, v.y, v.bound) == v.member

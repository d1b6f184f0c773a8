"""Bounded-sum closures, monochromaticity certificates, backtracking search,
thinning, and synthesizers of guaranteed solutions.
"""

from __future__ import annotations

import itertools
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from typing import Iterable, Sequence

from .colorings import Coloring
from .errors import DomainError, UnsatisfiableError
from .numerals import check_positive, decompose
from .stages import EnumeratedFunction, LimitApproximation, witness_bound

__all__ = [
    "SolutionCandidate",
    "MonoCertificate",
    "fs_bounded",
    "is_monochromatic",
    "search_monochromatic",
    "thin_chain",
    "thin_first_digit",
    "is_chain",
    "synthesize_power_solution",
    "synthesize_delta2_solution",
]


@dataclass(frozen=True)
class SolutionCandidate:
    elements: tuple[int, ...]
    sum_bound: int

    def __post_init__(self) -> None:
        object.__setattr__(self, "elements", _sorted_distinct(self.elements, allow_empty=True))
        check_positive(self.sum_bound, "sum_bound")

    def __iter__(self):
        return iter(self.elements)

    def __len__(self) -> int:
        return len(self.elements)


@dataclass(frozen=True)
class MonoCertificate:
    verdict: bool
    color: int | None = None
    violation: tuple[tuple[int, ...], tuple[int, ...]] | None = None

    def __bool__(self) -> bool:
        return self.verdict


def _sorted_distinct(X: Iterable[int], allow_empty: bool = False) -> tuple[int, ...]:
    xs = tuple(X)
    for x in xs:
        check_positive(x, "element")
    out = tuple(sorted(set(xs)))
    if len(out) != len(xs):
        raise DomainError("elements must be distinct")
    if not out and not allow_empty:
        raise DomainError("the set must be nonempty")
    return out


def _increasing(X: Iterable[int]) -> tuple[int, ...]:
    xs = tuple(X)
    for x in xs:
        check_positive(x, "element")
    if any(a >= b for a, b in zip(xs, xs[1:])):
        raise DomainError("elements must be strictly increasing")
    return xs


def fs_bounded(X: Iterable[int], n: int) -> list[int]:
    """All sums of between 1 and ``n`` distinct elements of ``X``, sorted, without repeats.

    >>> fs_bounded({1, 2, 4}, 2)
    [1, 2, 3, 4, 5, 6]
    """
    xs = _sorted_distinct(X)
    check_positive(n, "sum bound")
    # by_size[j] holds the sums of exactly j elements seen so far
    by_size: list[set[int]] = [{0}] + [set() for _ in range(n)]
    for x in xs:
        for j in range(n - 1, -1, -1):
            by_size[j + 1].update(s + x for s in by_size[j])
    return sorted(set().union(*by_size[1:]))


def _subsets(xs: tuple[int, ...], n: int):
    for size in range(1, min(n, len(xs)) + 1):
        yield from itertools.combinations(xs, size)


def is_monochromatic(c: Coloring, X: Iterable[int], n: int) -> MonoCertificate:
    """Check whether ``FS^{<=n}(X)`` is monochromatic under ``c``.

    On failure the certificate carries the least offending pair of subsets,
    subsets being ordered by size and then lexicographically.
    """
    xs = _sorted_distinct(X)
    check_positive(n, "sum bound")
    if len(set(map(c, fs_bounded(xs, n)))) == 1:
        return MonoCertificate(True, c(xs[0]))
    subsets = _subsets(xs, n)
    first = next(subsets)
    ref = c(sum(first))
    for other in subsets:
        if c(sum(other)) != ref:
            return MonoCertificate(False, None, (first, other))
    raise AssertionError("closure is bi-colored but no violating subset was found")


class _Search:
    def __init__(self, c: Coloring, N: int, n: int, size: int):
        self.c, self.N, self.n, self.size = c, N, n, size
        self._cache: dict[int, int] = {}

    def color(self, v: int) -> int:
        col = self._cache.get(v)
        if col is None:
            col = self._cache[v] = self.c(v)
        return col

    def extend(self, chosen: list[int], levels: list[set[int]], color, x: int):
        """Add ``x``; return updated ``(levels, color)`` or ``None`` on a color conflict."""
        new_levels = [set(lv) for lv in levels]
        for j in range(min(len(chosen), self.n - 1), -1, -1):
            for s in levels[j]:
                col = self.color(s + x)
                if color is None:
                    color = col
                elif col != color:
                    return None
                if j + 1 < self.n:
                    new_levels[j + 1].add(s + x)
        return new_levels, color

    def run(self, chosen: list[int], levels: list[set[int]], color, start: int):
        if len(chosen) == self.size:
            return tuple(chosen)
        last = self.N - (self.size - len(chosen)) + 1
        for x in range(start, last + 1):
            step = self.extend(chosen, levels, color, x)
            if step is None:
                continue
            chosen.append(x)
            found = self.run(chosen, step[0], step[1], x + 1)
            chosen.pop()
            if found is not None:
                return found
        return None

    def root_levels(self) -> list[set[int]]:
        return [{0}] + [set() for _ in range(self.n - 1)]

    def from_first(self, x: int):
        levels, color = self.extend([], self.root_levels(), None, x)
        return self.run([x], levels, color, x + 1)


def _branch(args):
    c, N, n, size, x = args
    return _Search(c, N, n, size).from_first(x)


def search_monochromatic(c: Coloring, N: int, n: int, size: int, jobs: int = 1) -> SolutionCandidate | None:
    """Lexicographically least ``X`` within ``[1, N]`` with ``|X| = size`` and ``FS^{<=n}(X)`` monochromatic.

    Backtracks in increasing order, keeping the sums of fewer than ``n``
    chosen elements so that each new element only colors its new sums.
    With ``jobs > 1`` the branches for each first element run in worker
    processes; the answer is the same as the sequential one.
    """
    check_positive(N, "N")
    check_positive(n, "sum bound")
    check_positive(size, "size")
    if size > N:
        raise DomainError(f"size {size} exceeds horizon {N}")
    firsts = range(1, N - size + 2)
    if jobs <= 1:
        search = _Search(c, N, n, size)
        found = search.run([], search.root_levels(), None, 1)
    else:
        found = None
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            for result in pool.map(_branch, [(c, N, n, size, x) for x in firsts]):
                if result is not None:
                    found = result
                    break
    return None if found is None else SolutionCandidate(found, n)


def is_chain(X: Sequence[int], base: int) -> bool:
    """Consecutive elements ``a < b`` satisfy ``mu(a) < lam(b)``."""
    ds = [decompose(x, base) for x in X]
    return all(a.mu < b.lam for a, b in zip(ds, ds[1:]))


def thin_chain(X: Iterable[int], base: int) -> tuple[int, ...]:
    """Greedy chain: keep the first element, then each ``x`` with ``lam(x) > mu(last kept)``."""
    kept: list[int] = []
    top = -1
    for x in _increasing(X):
        d = decompose(x, base)
        if not kept or d.lam > top:
            kept.append(x)
            top = d.mu
    return tuple(kept)


def thin_first_digit(X: Iterable[int], base: int) -> tuple[int, ...]:
    """Largest class of ``X`` by first nonzero digit; ties go to the smaller digit."""
    classes: dict[int, list[int]] = {}
    for x in _increasing(X):
        classes.setdefault(decompose(x, base).first_digit, []).append(x)
    if not classes:
        return ()
    digit = min(classes, key=lambda d: (-len(classes[d]), d))
    return tuple(classes[digit])


def synthesize_power_solution(f: EnumeratedFunction, base: int, length: int, sum_bound: int = 3) -> SolutionCandidate:
    """Powers ``base**k_1 < ... < base**k_L`` with each exponent fresh over the previous one.

    ``k_1 = 1`` and ``k_{j+1} = max(k_j + 1, W(k_j))`` where ``W(k)`` bounds the
    witnesses of every ``y <= k`` in ``range(f)``. No gap of any sum is then
    short, so VSG vanishes and every sum shares the first digit 1. Uses
    privileged range knowledge.
    """
    if base not in (3, 7):
        raise DomainError(f"base must be 3 or 7, got {base!r}")
    check_positive(length, "length")
    check_positive(sum_bound, "sum bound")
    if sum_bound > 3:
        raise DomainError("synthesized solutions are only guaranteed for sum bounds up to 3")
    exponents = [1]
    while len(exponents) < length:
        k = exponents[-1]
        exponents.append(max(k + 1, witness_bound(f, k)))
    return SolutionCandidate(tuple(base**k for k in exponents), sum_bound)


def _least_in_class_at_least(k: int, floor: int) -> int:
    """Least ``s >= floor`` with ``s = 3**k (mod 3**(k+1))``."""
    lo, step = 3**k, 3 ** (k + 1)
    if floor <= lo:
        return lo
    return lo + -(-(floor - lo) // step) * step


def synthesize_delta2_solution(a: LimitApproximation, count: int, value: int | None = None) -> SolutionCandidate:
    """One element of ``O_{k,1}`` for each of ``count`` indices sharing a limit value.

    Every element is at least the largest stabilization stage up to the
    horizon, so each element and each pairwise sum (which stays in the
    smaller index's ``O_{k,1}``) is colored by the settled limit. With
    ``value=None`` the limit value whose first ``count`` indices end
    earliest is used, 0 on ties.
    """
    check_positive(count, "count")
    K = a.horizon
    by_value = {v: [k for k in range(K + 1) if a.limit(k) == v] for v in (0, 1)}
    if value is None:
        usable = [v for v in (0, 1) if len(by_value[v]) >= count]
        if not usable:
            raise UnsatisfiableError(f"no limit value is shared by {count} indices up to {K}")
        value = min(usable, key=lambda v: (by_value[v][count - 1], v))
    elif value not in (0, 1):
        raise DomainError(f"value must be 0 or 1, got {value!r}")
    indices = by_value[value][:count]
    if len(indices) < count:
        raise UnsatisfiableError(f"only {len(indices)} indices up to {K} have limit {value}, need {count}")
    floor = max(a.stabilization(k) for k in range(K + 1))
    return SolutionCandidate(tuple(_least_in_class_at_least(k, floor) for k in indices), 2)

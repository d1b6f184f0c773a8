"""Finite stand-ins for computable 1-1 functions and limit approximations,
plus the short / very short gap counters built on them.

Two kinds of access to ``range(f)`` exist here and they must not be mixed:

* bounded queries (:func:`bounded_range_query`, :func:`bounded_preimages`)
  evaluate ``f`` at arguments up to an explicit bound and nothing else;
* privileged queries (:func:`range_oracle`, :func:`witness_bound`,
  :func:`is_fresh`, :func:`sg`) exploit the table-plus-tail shape of
  :class:`EnumeratedFunction` to decide membership outright.

Decoders only ever use the first kind.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Mapping

from .errors import DomainError, PrivilegedAccessError
from .numerals import Decomposition, Gap, check_positive, decompose

__all__ = [
    "EnumeratedFunction",
    "InstrumentedFunction",
    "LimitApproximation",
    "GapVerdict",
    "evaluate",
    "bounded_range_query",
    "bounded_preimages",
    "range_oracle",
    "witness_bound",
    "is_fresh",
    "approx_eval",
    "limit_value",
    "stabilization_stage",
    "gap_is_short",
    "classify_gap",
    "gap_verdicts",
    "sg",
    "vsg",
]


def _check_nonneg(v, what: str) -> int:
    if isinstance(v, bool) or not isinstance(v, int) or v < 0:
        raise DomainError(f"{what} must be a non-negative integer, got {v!r}")
    return v


@dataclass(frozen=True)
class EnumeratedFunction:
    """Total injective ``f`` on the positive integers: a finite table, then ``x + c``.

    ``f(x) = exceptions[x]`` for tabulated ``x <= threshold`` and
    ``f(x) = x + tail_offset`` everywhere else.
    """

    exceptions: tuple[tuple[int, int], ...]
    tail_offset: int
    threshold: int
    _table: dict = field(init=False, repr=False, compare=False)
    _inverse: dict = field(init=False, repr=False, compare=False)

    def __init__(self, exceptions: Mapping[int, int] | tuple = (), tail_offset: int = 1, threshold: int = 0):
        pairs = dict(exceptions)
        object.__setattr__(self, "exceptions", tuple(sorted(pairs.items())))
        object.__setattr__(self, "tail_offset", tail_offset)
        object.__setattr__(self, "threshold", threshold)
        self._validate(pairs)

    def _validate(self, pairs: dict) -> None:
        check_positive(self.tail_offset, "tail_offset")
        _check_nonneg(self.threshold, "threshold")
        T, c = self.threshold, self.tail_offset
        for x, y in pairs.items():
            check_positive(x, "exception argument")
            check_positive(y, "exception value")
            if x > T:
                raise DomainError(f"exception at x={x} lies above threshold {T}")
        # Every value at x <= T must avoid the tail's values {x + c : x > T},
        # i.e. stay <= T + c, and the head values must be pairwise distinct.
        inverse: dict[int, int] = {}
        for x in range(1, T + 1):
            y = pairs.get(x, x + c)
            if y > T + c:
                raise DomainError(f"f({x}) = {y} collides with the tail value f({y - c})")
            if y in inverse:
                raise DomainError(f"f is not injective: f({inverse[y]}) = f({x}) = {y}")
            inverse[y] = x
        object.__setattr__(self, "_table", pairs)
        object.__setattr__(self, "_inverse", inverse)

    def __call__(self, x: int) -> int:
        check_positive(x, "x")
        if x <= self.threshold:
            return self._table.get(x, x + self.tail_offset)
        return x + self.tail_offset

    def preimage(self, y: int) -> int | None:
        """The unique ``x`` with ``f(x) = y``, or ``None``. Privileged."""
        check_positive(y, "y")
        if y > self.threshold + self.tail_offset:
            return y - self.tail_offset
        return self._inverse.get(y)

    def __reduce__(self):
        return (EnumeratedFunction, (self.exceptions, self.tail_offset, self.threshold))


class InstrumentedFunction:
    """Wraps an :class:`EnumeratedFunction`, recording every argument it is called with.

    Privileged access through :meth:`preimage` raises, so running a decoder
    against this wrapper proves it stayed within bounded queries.
    """

    def __init__(self, f: EnumeratedFunction):
        self.inner = f
        self.calls: list[int] = []

    def __call__(self, x: int) -> int:
        self.calls.append(x)
        return self.inner(x)

    def preimage(self, y: int):
        raise PrivilegedAccessError("range membership requested through an instrumented function")

    @property
    def max_argument(self) -> int:
        return max(self.calls, default=0)

    def reset(self) -> None:
        self.calls.clear()


def evaluate(f: EnumeratedFunction, x: int) -> int:
    return f(x)


def bounded_range_query(f, y: int, bound: int) -> bool:
    """True iff ``f(x) = y`` for some ``1 <= x <= bound``; evaluates ``f`` only there."""
    _check_nonneg(bound, "bound")
    return any(f(x) == y for x in range(1, bound + 1))


def bounded_preimages(f, bound: int) -> dict[int, int]:
    """Map ``y -> x`` for every ``x <= bound``. One pass over the bounded arguments."""
    _check_nonneg(bound, "bound")
    return {f(x): x for x in range(1, bound + 1)}


def range_oracle(f: EnumeratedFunction, y: int) -> bool:
    return f.preimage(y) is not None


def witness_bound(f: EnumeratedFunction, k: int) -> int:
    """Least ``W`` such that every ``y <= k`` in ``range(f)`` has a witness ``x <= W``."""
    _check_nonneg(k, "k")
    return max((x for y in range(1, k + 1) if (x := f.preimage(y)) is not None), default=0)


def is_fresh(f: EnumeratedFunction, n: int, m: int, base: int) -> bool:
    """Whether every ``y <= mu(n)`` in ``range(f)`` has a witness ``<= lam(m)``."""
    return witness_bound(f, decompose(n, base).mu) <= decompose(m, base).lam


@dataclass(frozen=True)
class LimitApproximation:
    """A {0,1}-valued ``f(k, s)`` given by finite mind-change schedules.

    ``schedules`` maps an index ``k <= horizon`` to stage-sorted ``(stage, value)``
    pairs beginning at stage 0. Indices without a schedule, including all
    ``k > horizon``, are constant at ``default``.
    """

    schedules: tuple[tuple[int, tuple[tuple[int, int], ...]], ...]
    default: int
    horizon: int

    def __init__(self, schedules: Mapping[int, list] | tuple = (), default: int = 0, horizon: int | None = None):
        sched = {k: tuple(tuple(e) for e in entries) for k, entries in dict(schedules).items()}
        if horizon is None:
            horizon = max(sched, default=0)
        object.__setattr__(self, "schedules", tuple(sorted(sched.items())))
        object.__setattr__(self, "default", default)
        object.__setattr__(self, "horizon", horizon)
        self._validate()

    def _validate(self) -> None:
        if self.default not in (0, 1) or isinstance(self.default, bool):
            raise DomainError(f"default must be 0 or 1, got {self.default!r}")
        _check_nonneg(self.horizon, "horizon")
        for k, entries in self.schedules:
            _check_nonneg(k, "index")
            if k > self.horizon:
                raise DomainError(f"schedule for k={k} beyond horizon {self.horizon}")
            if not entries or entries[0][0] != 0:
                raise DomainError(f"schedule for k={k} must start at stage 0")
            last = -1
            for s, v in entries:
                _check_nonneg(s, "stage")
                if s <= last:
                    raise DomainError(f"stages for k={k} must be strictly increasing")
                if v not in (0, 1) or isinstance(v, bool):
                    raise DomainError(f"value at k={k}, s={s} must be 0 or 1")
                last = s

    def schedule(self, k: int) -> tuple[tuple[int, int], ...]:
        _check_nonneg(k, "k")
        for key, entries in self.schedules:
            if key == k:
                return entries
        return ((0, self.default),)

    def __call__(self, k: int, s: int) -> int:
        _check_nonneg(s, "s")
        value = None
        for stage, v in self.schedule(k):
            if stage > s:
                break
            value = v
        return value

    def limit(self, k: int) -> int:
        return self.schedule(k)[-1][1]

    def stabilization(self, k: int) -> int:
        return self.schedule(k)[-1][0]


def approx_eval(a: LimitApproximation, k: int, s: int) -> int:
    return a(k, s)


def limit_value(a: LimitApproximation, k: int) -> int:
    return a.limit(k)


def stabilization_stage(a: LimitApproximation, k: int) -> int:
    return a.stabilization(k)


@dataclass(frozen=True)
class GapVerdict:
    gap: Gap
    short: bool
    very_short: bool


def gap_is_short(f: EnumeratedFunction, gap: Gap) -> bool:
    """Some ``y <= gap.lo`` is in ``range(f)`` with no witness ``<= gap.hi``. Privileged."""
    lo, hi = gap
    return any((x := f.preimage(y)) is not None and x > hi for y in range(1, lo + 1))


def _very_short(gap: Gap, bounded: dict[int, int]) -> bool:
    lo, hi = gap
    return any(y in bounded and bounded[y] > hi for y in range(1, lo + 1))


def _check_gap(gap: Gap, mu: int) -> Gap:
    gap = Gap(*gap)
    if not gap.lo < gap.hi:
        raise DomainError(f"gap {tuple(gap)} is empty")
    if mu < gap.hi:
        raise DomainError(f"mu={mu} is below the gap's upper end {gap.hi}")
    return gap


def classify_gap(f: EnumeratedFunction, gap: Gap, mu: int) -> GapVerdict:
    """Classify ``gap`` of a number whose highest position is ``mu``."""
    gap = _check_gap(gap, mu)
    very = _very_short(gap, bounded_preimages(f, mu))
    return GapVerdict(gap, gap_is_short(f, gap), very)


def gap_verdicts(f: EnumeratedFunction, n: int | Decomposition, base: int | None = None) -> list[GapVerdict]:
    d = n if isinstance(n, Decomposition) else decompose(n, base)
    bounded = bounded_preimages(f, d.mu)
    return [GapVerdict(g, gap_is_short(f, g), _very_short(g, bounded)) for g in d.gaps]


def sg(f: EnumeratedFunction, n: int, base: int) -> int:
    """Number of short gaps of ``n``."""
    return sum(gap_is_short(f, g) for g in decompose(n, base).gaps)


def vsg(f, n: int, base: int) -> int:
    """Number of very short gaps of ``n``; queries ``f`` only at arguments ``<= mu(n)``."""
    d = decompose(n, base)
    if not d.gaps:
        return 0
    bounded = bounded_preimages(f, d.mu)
    return sum(_very_short(g, bounded) for g in d.gaps)

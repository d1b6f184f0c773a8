"""Plain-text file formats.

Enumerated function::

    1 4
    2 6
    tail 6 4          # f(x) = x + 6 for x > 4

Limit approximation::

    0: 0=0 5=1
    1: 0=0
    default 0
    horizon 1

Integer set: one decimal per line, strictly increasing, ``#`` comments.

Blank lines and ``#`` comments are accepted in all three.
"""

from __future__ import annotations

from pathlib import Path

from .errors import FormatError, HindmanError
from .stages import EnumeratedFunction, LimitApproximation

__all__ = [
    "parse_enumerated_function",
    "format_enumerated_function",
    "parse_limit_approximation",
    "format_limit_approximation",
    "parse_int_set",
    "format_int_set",
    "parse_interval",
    "read_text",
]


def _lines(text: str):
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if line:
            yield lineno, line


def _int(token: str, lineno: int) -> int:
    try:
        return int(token, 10)
    except ValueError:
        raise FormatError(f"line {lineno}: expected a decimal integer, got {token!r}") from None


def read_text(path) -> str:
    return Path(path).read_text(encoding="utf-8")


def parse_enumerated_function(text: str) -> EnumeratedFunction:
    exceptions: dict[int, int] = {}
    tail = None
    for lineno, line in _lines(text):
        parts = line.split()
        if tail is not None:
            raise FormatError(f"line {lineno}: content after the tail line")
        if parts[0] == "tail":
            if len(parts) != 3:
                raise FormatError(f"line {lineno}: expected 'tail c T'")
            tail = (_int(parts[1], lineno), _int(parts[2], lineno))
            continue
        if len(parts) != 2:
            raise FormatError(f"line {lineno}: expected 'x y'")
        x, y = _int(parts[0], lineno), _int(parts[1], lineno)
        if x in exceptions:
            raise FormatError(f"line {lineno}: duplicate argument {x}")
        exceptions[x] = y
    if tail is None:
        raise FormatError("missing final 'tail c T' line")
    try:
        return EnumeratedFunction(exceptions, tail_offset=tail[0], threshold=tail[1])
    except HindmanError as exc:
        raise FormatError(str(exc)) from exc


def format_enumerated_function(f: EnumeratedFunction) -> str:
    rows = [f"{x} {y}" for x, y in f.exceptions]
    rows.append(f"tail {f.tail_offset} {f.threshold}")
    return "\n".join(rows) + "\n"


def parse_limit_approximation(text: str) -> LimitApproximation:
    schedules: dict[int, list[tuple[int, int]]] = {}
    default = horizon = None
    for lineno, line in _lines(text):
        head, _, rest = line.partition(":")
        if _:
            k = _int(head.strip(), lineno)
            if k in schedules:
                raise FormatError(f"line {lineno}: duplicate schedule for k={k}")
            entries = []
            for token in rest.split():
                s, eq, v = token.partition("=")
                if not eq:
                    raise FormatError(f"line {lineno}: expected 'stage=value', got {token!r}")
                entries.append((_int(s, lineno), _int(v, lineno)))
            schedules[k] = entries
            continue
        parts = line.split()
        if len(parts) == 2 and parts[0] == "default":
            default = _int(parts[1], lineno)
        elif len(parts) == 2 and parts[0] == "horizon":
            horizon = _int(parts[1], lineno)
        else:
            raise FormatError(f"line {lineno}: unrecognized line {line!r}")
    if default is None or horizon is None:
        raise FormatError("both 'default v' and 'horizon K' lines are required")
    try:
        return LimitApproximation(schedules, default=default, horizon=horizon)
    except HindmanError as exc:
        raise FormatError(str(exc)) from exc


def format_limit_approximation(a: LimitApproximation) -> str:
    rows = [f"{k}: " + " ".join(f"{s}={v}" for s, v in entries) for k, entries in a.schedules]
    rows += [f"default {a.default}", f"horizon {a.horizon}"]
    return "\n".join(rows) + "\n"


def parse_int_set(text: str) -> tuple[int, ...]:
    values: list[int] = []
    for lineno, line in _lines(text):
        v = _int(line, lineno)
        if v < 1:
            raise FormatError(f"line {lineno}: {v} is not a positive integer")
        if values and v <= values[-1]:
            raise FormatError(f"line {lineno}: values must be strictly increasing")
        values.append(v)
    return tuple(values)


def format_int_set(values, comment: str | None = None) -> str:
    head = [f"# {comment}"] if comment else []
    return "\n".join(head + [str(v) for v in values]) + "\n"


def parse_interval(text: str) -> tuple[int, int]:
    """Parse ``A..B`` into an inclusive pair of positive integers."""
    lo, sep, hi = text.partition("..")
    try:
        a, b = int(lo), int(hi)
    except ValueError:
        raise FormatError(f"expected an interval 'A..B', got {text!r}") from None
    if not sep or a < 1 or b < a:
        raise FormatError(f"expected an interval 'A..B' with 1 <= A <= B, got {text!r}")
    return a, b

"""Total colorings of the positive integers.

Every coloring is an immutable, picklable value: calling it on ``n >= 1``
returns a color in ``range(color_count)``. The three adversarial colorings
are :func:`delta2_coloring` (two colors, driven by a limit approximation),
:func:`four_coloring` (base-3 gaps) and :func:`three_coloring` (base-7
residues, R/G/B).
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import IntEnum

from .numerals import check_positive, pm_class, residue_class
from .stages import EnumeratedFunction, LimitApproximation, vsg

__all__ = [
    "ColorName",
    "Coloring",
    "ParityColoring",
    "ConstantColoring",
    "DeltaTwoColoring",
    "FourColoring",
    "ThreeColoring",
    "THREE_COLOR_TABLE",
    "parity_coloring",
    "constant_coloring",
    "delta2_coloring",
    "four_coloring",
    "three_coloring",
    "eval_color",
    "color_label",
]


class ColorName(IntEnum):
    R = 0
    G = 1
    B = 2


# pm class -> (color when VSG is even, color when VSG is odd)
THREE_COLOR_TABLE = {
    1: (ColorName.R, ColorName.G),
    2: (ColorName.G, ColorName.B),
    3: (ColorName.B, ColorName.R),
}


class Coloring:
    """Base class; subclasses implement :meth:`_color` and set ``color_count``."""

    color_count: int = 2
    scheme: str = "coloring"

    def __call__(self, n: int) -> int:
        check_positive(n)
        return self._color(n)

    def _color(self, n: int) -> int:
        raise NotImplementedError

    @property
    def descriptor(self) -> str:
        return self.scheme


@dataclass(frozen=True)
class ParityColoring(Coloring):
    color_count = 2
    scheme = "parity"

    def _color(self, n: int) -> int:
        return n % 2


@dataclass(frozen=True)
class ConstantColoring(Coloring):
    value: int = 0
    colors: int = 2
    scheme = "const"

    @property
    def color_count(self) -> int:
        return self.colors

    def _color(self, n: int) -> int:
        return self.value

    @property
    def descriptor(self) -> str:
        return f"const value={self.value}"


@dataclass(frozen=True)
class DeltaTwoColoring(Coloring):
    """``c(s) = f(k_s, s)`` on ``O_{k,1}`` and ``1 - f(k_s, s)`` on ``O_{k,2}`` (base 3)."""

    approximation: LimitApproximation
    color_count = 2
    scheme = "delta2"

    def _color(self, n: int) -> int:
        k, i = residue_class(n, 3)
        guess = self.approximation(k, n)
        return guess if i == 1 else 1 - guess

    @property
    def descriptor(self) -> str:
        return f"delta2 approx={self.approximation!r}"


@dataclass(frozen=True)
class FourColoring(Coloring):
    """Parity of VSG (base 3), shifted by 2 when the first digit is 2."""

    function: EnumeratedFunction
    color_count = 4
    scheme = "four"

    def _color(self, n: int) -> int:
        parity = vsg(self.function, n, 3) % 2
        return parity if residue_class(n, 3).digit == 1 else 2 + parity

    @property
    def descriptor(self) -> str:
        return f"four f={self.function!r}"


@dataclass(frozen=True)
class ThreeColoring(Coloring):
    """R/G/B from the ± class of the first base-7 digit and the parity of VSG.

    ``gap_base`` selects which decomposition VSG is read from; 7 by default.
    """

    function: EnumeratedFunction
    gap_base: int = 7
    color_count = 3
    scheme = "three"

    def _color(self, n: int) -> int:
        parity = vsg(self.function, n, self.gap_base) % 2
        return int(THREE_COLOR_TABLE[pm_class(residue_class(n, 7).digit)][parity])

    @property
    def descriptor(self) -> str:
        return f"three gap_base={self.gap_base} f={self.function!r}"


def parity_coloring() -> ParityColoring:
    return ParityColoring()


def constant_coloring(value: int = 0) -> ConstantColoring:
    return ConstantColoring(value)


def delta2_coloring(a: LimitApproximation) -> DeltaTwoColoring:
    return DeltaTwoColoring(a)


def four_coloring(f: EnumeratedFunction) -> FourColoring:
    return FourColoring(f)


def three_coloring(f: EnumeratedFunction, gap_base: int = 7) -> ThreeColoring:
    return ThreeColoring(f, gap_base)


def eval_color(c: Coloring, n: int) -> int:
    return c(n)


def color_label(c: Coloring, color: int) -> str:
    """Human-readable color: R/G/B for the three-coloring, the integer otherwise."""
    if isinstance(c, ThreeColoring):
        return ColorName(color).name
    return str(color)

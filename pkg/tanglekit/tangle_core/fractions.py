"""Extended rationals naming rational tangles, and their twist words.

A twist word ``(c_1, ..., c_n)`` is read right to left into the fraction
``c_n + 1/(c_{n-1} + ... + 1/c_1)``.  Entry ``c_i`` is a horizontal twist
when ``n - i`` is even and a vertical twist otherwise; the untwisted base
is ``1/0`` for even ``n`` and ``0/1`` for odd ``n``.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from enum import Enum
from math import gcd

from tanglekit.errors import TangleParseError


class Axis(Enum):
    HORIZONTAL = "horizontal"
    VERTICAL = "vertical"


@dataclass(frozen=True, order=True)
class TangleFraction:
    """Reduced a/b with den >= 0. Infinity is exactly 1/0, zero is 0/1."""

    num: int
    den: int

    def __post_init__(self) -> None:
        num, den = self.num, self.den
        if num == 0 and den == 0:
            raise ValueError("0/0 does not name a tangle")
        g = gcd(num, den)
        num, den = num // g, den // g
        if den < 0 or (den == 0 and num < 0):
            num, den = -num, -den
        object.__setattr__(self, "num", num)
        object.__setattr__(self, "den", den)

    @classmethod
    def of(cls, value: int | TangleFraction) -> TangleFraction:
        if isinstance(value, TangleFraction):
            return value
        return cls(value, 1)

    @property
    def is_infinity(self) -> bool:
        return self.den == 0

    @property
    def is_integer(self) -> bool:
        return self.den == 1

    def reciprocal(self) -> TangleFraction:
        return TangleFraction(self.den, self.num)

    def __neg__(self) -> TangleFraction:
        return TangleFraction(-self.num, self.den)

    def __add__(self, other: int | TangleFraction) -> TangleFraction:
        other = TangleFraction.of(other)
        if self.is_infinity or other.is_infinity:
            if self.is_infinity and other.is_infinity:
                raise ValueError("1/0 + 1/0 is undefined")
            return TangleFraction(1, 0)
        return TangleFraction(
            self.num * other.den + other.num * self.den, self.den * other.den
        )

    __radd__ = __add__

    def __str__(self) -> str:
        return f"{self.num}/{self.den}"


INFINITY = TangleFraction(1, 0)
ZERO = TangleFraction(0, 1)

_FRACTION_RE = re.compile(r"\s*([+-]?\d+)\s*(?:/\s*([+-]?\d+))?\s*")


def parse_fraction(text: str) -> TangleFraction:
    """Parse ``p/q`` or an integer. ``1/0`` is the only allowed zero denominator."""
    m = _FRACTION_RE.fullmatch(text)
    if not m:
        raise TangleParseError(f"not a fraction: {text!r}", 0)
    num = int(m.group(1))
    den = int(m.group(2)) if m.group(2) is not None else 1
    if den == 0 and num not in (1, -1):
        raise TangleParseError(f"zero denominator in {text.strip()!r}", m.start(2))
    return TangleFraction(num, den)


def apply_twist(f: TangleFraction, c: int, axis: Axis) -> TangleFraction:
    """Horizontal: f + c. Vertical: 1/(c + 1/f), so 1/0 becomes 1/c."""
    if axis is Axis.HORIZONTAL:
        if f.is_infinity:
            return f
        return f + c
    return (f.reciprocal() + c).reciprocal()


def _axis_at(index: int, length: int) -> Axis:
    # index is 0-based; entry c_{index+1} of a word of the given length
    return Axis.HORIZONTAL if (length - index - 1) % 2 == 0 else Axis.VERTICAL


def circle_product_fraction(f: TangleFraction, word: tuple[int, ...]) -> TangleFraction:
    """Fraction of the tangle with fraction ``f`` twisted by ``word``."""
    for i, c in enumerate(word):
        f = apply_twist(f, c, _axis_at(i, len(word)))
    return f


def cf_to_fraction(word: tuple[int, ...]) -> TangleFraction:
    base = INFINITY if len(word) % 2 == 0 else ZERO
    return circle_product_fraction(base, tuple(word))


def fraction_to_cf(f: TangleFraction) -> tuple[int, ...]:
    """Canonical word of uniform sign (the alternating diagram of ``f``).

    Every entry but the last is nonzero; ``0/1`` maps to ``(0,)`` and
    ``1/0`` to the empty word.
    """
    if f.is_infinity:
        return ()
    if f.num == 0:
        return (0,)
    sign = 1 if f.num > 0 else -1
    a, b = abs(f.num), f.den
    quotients = []
    while b:
        q, r = divmod(a, b)
        quotients.append(q)
        a, b = b, r
    return tuple(sign * q for q in reversed(quotients))

"""Tangle expressions: rational leaves, ordered sums and circle products.

Grammar::

    expr := frac | "(" expr ("+" expr)* ")" | expr "o" "(" int ("," int)* ")"
    frac := int | int "/" int

A parenthesised single expression is plain grouping.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from functools import reduce

from tanglekit.errors import TangleParseError
from tanglekit.tangle_core.fractions import (
    TangleFraction,
    circle_product_fraction,
    fraction_to_cf,
    parse_fraction,
)


@dataclass(frozen=True)
class RationalLeaf:
    fraction: TangleFraction

    def __str__(self) -> str:
        return format_expr(self)


@dataclass(frozen=True)
class Sum:
    """Tangle sum; term order is significant."""

    terms: tuple[TangleExpr, ...]

    def __post_init__(self) -> None:
        if len(self.terms) < 2:
            raise ValueError(f"a sum needs at least two terms, got {len(self.terms)}")

    def __str__(self) -> str:
        return format_expr(self)


@dataclass(frozen=True)
class CircleProduct:
    inner: TangleExpr
    word: tuple[int, ...]

    def __str__(self) -> str:
        return format_expr(self)


TangleExpr = RationalLeaf | Sum | CircleProduct


def leaf(num: int, den: int = 1) -> RationalLeaf:
    return RationalLeaf(TangleFraction(num, den))


def as_expr(value: TangleExpr | TangleFraction | int) -> TangleExpr:
    if isinstance(value, (RationalLeaf, Sum, CircleProduct)):
        return value
    return RationalLeaf(TangleFraction.of(value))


def tangle_sum(*terms: TangleExpr | TangleFraction | int) -> TangleExpr:
    exprs = tuple(as_expr(t) for t in terms)
    return exprs[0] if len(exprs) == 1 else Sum(exprs)


# ---- Printing ----


def format_expr(e: TangleExpr) -> str:
    match e:
        case RationalLeaf(fraction):
            return str(fraction)
        case Sum(terms):
            return "(" + " + ".join(format_expr(t) for t in terms) + ")"
        case CircleProduct(inner, word):
            return f"{format_expr(inner)} o ({','.join(str(c) for c in word)})"
    raise TypeError(f"not a tangle expression: {e!r}")


# ---- Parsing ----

_TOKEN_RE = re.compile(r"\s*(?:(-?\d+)|(\S)|\Z)")


def _tokenize(text: str) -> list[tuple[str, str, int]]:
    tokens = []
    pos = 0
    while pos < len(text):
        m = _TOKEN_RE.match(text, pos)
        if m is None:
            break
        if m.group(1) is not None:
            tokens.append(("int", m.group(1), m.start(1)))
        elif m.group(2) is not None:
            ch = m.group(2)
            if ch not in "()+,/o":
                raise TangleParseError(f"unexpected character {ch!r}", m.start(2))
            tokens.append((ch, ch, m.start(2)))
        pos = m.end()
    tokens.append(("end", "", len(text)))
    return tokens


class _Parser:
    def __init__(self, text: str) -> None:
        self.text = text
        self.tokens = _tokenize(text)
        self.i = 0

    def peek(self) -> tuple[str, str, int]:
        return self.tokens[self.i]

    def take(self, kind: str) -> tuple[str, str, int]:
        tok = self.peek()
        if tok[0] != kind:
            found = "end of input" if tok[0] == "end" else repr(tok[1])
            raise TangleParseError(f"expected {kind!r}, found {found}", tok[2])
        self.i += 1
        return tok

    def parse(self) -> TangleExpr:
        e = self.expr()
        self.take("end")
        return e

    def expr(self) -> TangleExpr:
        e = self.primary()
        while self.peek()[0] == "o":
            self.take("o")
            e = CircleProduct(e, self.word())
        return e

    def word(self) -> tuple[int, ...]:
        self.take("(")
        entries = [int(self.take("int")[1])]
        while self.peek()[0] == ",":
            self.take(",")
            entries.append(int(self.take("int")[1]))
        self.take(")")
        return tuple(entries)

    def primary(self) -> TangleExpr:
        kind, _, pos = self.peek()
        if kind == "int":
            num = self.take("int")
            text = num[1]
            if self.peek()[0] == "/":
                self.take("/")
                den = self.take("int")
                text = f"{num[1]}/{den[1]}"
            try:
                return RationalLeaf(parse_fraction(text))
            except TangleParseError as e:
                raise TangleParseError(f"invalid fraction {text!r}", pos) from e
        if kind == "(":
            self.take("(")
            terms = [self.expr()]
            while self.peek()[0] == "+":
                self.take("+")
                terms.append(self.expr())
            self.take(")")
            return terms[0] if len(terms) == 1 else Sum(tuple(terms))
        found = "end of input" if kind == "end" else repr(self.peek()[1])
        raise TangleParseError(f"expected a fraction or '(', found {found}", pos)


def parse_expr(text: str) -> TangleExpr:
    return _Parser(text).parse()


# ---- Evaluation ----


def _is_integer_leaf(e: TangleExpr) -> bool:
    return isinstance(e, RationalLeaf) and e.fraction.is_integer


def is_rational(e: TangleExpr) -> bool:
    """Leaf, circle product of a rational, or rational plus integer tangles."""
    match e:
        case RationalLeaf():
            return True
        case CircleProduct(inner, _):
            return is_rational(inner)
        case Sum(terms):
            others = [t for t in terms if not _is_integer_leaf(t)]
            return len(others) <= 1 and all(is_rational(t) for t in others)
    return False


def rational_value(e: TangleExpr) -> TangleFraction | None:
    """Fraction of ``e`` when it is a rational tangle, else None."""
    if not is_rational(e):
        return None
    match e:
        case RationalLeaf(fraction):
            return fraction
        case CircleProduct(inner, word):
            return circle_product_fraction(rational_value(inner), word)
        case Sum(terms):
            return reduce(lambda acc, t: acc + rational_value(t), terms[1:], rational_value(terms[0]))
    return None


def crossing_count(e: TangleExpr) -> int:
    """Crossings of the standard diagram: sum of |entries| over twist regions."""
    match e:
        case RationalLeaf(fraction):
            return sum(abs(c) for c in fraction_to_cf(fraction))
        case Sum(terms):
            return sum(crossing_count(t) for t in terms)
        case CircleProduct(inner, word):
            return crossing_count(inner) + sum(abs(c) for c in word)
    raise TypeError(f"not a tangle expression: {e!r}")


def pretzel_expr(*columns: int) -> TangleExpr:
    """Pretzel tangle P(a_1, ..., a_r): vertical twist columns -1/a_i side by side."""
    if not columns or any(a == 0 for a in columns):
        raise ValueError(f"pretzel columns must be nonzero, got {columns}")
    return tangle_sum(*(TangleFraction(-1, a) for a in columns))

"""Names for the 2-bridge knots and links the solver talks about.

The table is closed: anything outside it (other than the T(2,n) torus
family) is printed as b(p,q) only.
"""

from __future__ import annotations

import re
from dataclasses import dataclass

from tanglekit.errors import TangleParseError
from tanglekit.tangle_core.fractions import TangleFraction, parse_fraction
from tanglekit.tangle_core.twobridge import TwoBridgeLink, closure_of_rational

KNOT_TABLE: dict[str, TangleFraction] = {
    "unknot": TangleFraction(1, 1),
    "unlink": TangleFraction(0, 1),
    "Hopf": TangleFraction(2, 1),
    "3_1": TangleFraction(3, 1),
    "4_1": TangleFraction(5, 2),
    "5_2": TangleFraction(7, 2),
    "7_2": TangleFraction(11, 2),
    "7_4": TangleFraction(15, 4),
    "9_2": TangleFraction(15, 2),
    "9_5": TangleFraction(23, 4),
    "11a247": TangleFraction(19, 2),
    "11a343": TangleFraction(31, 4),
    "11a363": TangleFraction(35, 6),
}

_ALIASES = {
    "trefoil": "3_1",
    "figure-eight": "4_1",
    "hopf": "Hopf",
}


@dataclass(frozen=True)
class KnotName:
    label: str
    link: TwoBridgeLink
    mirror: bool = False

    def __str__(self) -> str:
        return f"{self.label} (mirror)" if self.mirror else self.label


@dataclass(frozen=True)
class LinkSpec:
    """A link named on the command line, with an optional linking number."""

    link: TwoBridgeLink
    lk: int | None = None

    def __str__(self) -> str:
        text = describe_link(self.link)
        return text if self.lk is None else f"{text} lk={self.lk:+d}"


def torus_link(n: int) -> TwoBridgeLink:
    """T(2, n) = N(n)."""
    return closure_of_rational(TangleFraction(n, 1))


def name_link(link: TwoBridgeLink) -> KnotName | None:
    for label, fraction in KNOT_TABLE.items():
        base = closure_of_rational(fraction)
        if link == base:
            return KnotName(label, link)
        if link == base.mirror():
            return KnotName(label, link, mirror=True)
    # torus family T(2, n) for the remaining |n|
    if link.p >= 2 and link.q in (1, link.p - 1):
        n = link.p if link.q == 1 else -link.p
        return KnotName(f"T(2,{n})", link)
    return None


def describe_link(link: TwoBridgeLink) -> str:
    name = name_link(link)
    return f"{link} {name}" if name else str(link)


def lookup_name(label: str) -> TwoBridgeLink:
    """Table label, optionally prefixed with '-' or '!' for the mirror image."""
    text = label.strip()
    mirrored = text[:1] in ("-", "!")
    if mirrored:
        text = text[1:]
    text = _ALIASES.get(text.lower(), text)
    if text not in KNOT_TABLE:
        raise TangleParseError(f"unknown knot name: {label!r}")
    link = closure_of_rational(KNOT_TABLE[text])
    return link.mirror() if mirrored else link


_BRIDGE_RE = re.compile(r"b\(\s*(\d+)\s*,\s*(-?\d+)\s*\)")
_CLOSURE_RE = re.compile(r"N\((.+)\)")
_TORUS_RE = re.compile(r"T\(\s*2\s*,\s*(-?\d+)\s*(?:,\s*lk\s*=\s*([+-]?\d+)\s*)?\)")


def parse_link_spec(text: str) -> LinkSpec:
    """Parse ``b(p,q)``, ``N(z/v)``, ``z/v``, ``T(2,n)``, ``T(2,2k,lk=+-k)`` or a table name."""
    text = text.strip()
    if m := _BRIDGE_RE.fullmatch(text):
        try:
            return LinkSpec(TwoBridgeLink(int(m.group(1)), int(m.group(2))))
        except ValueError as e:
            raise TangleParseError(str(e)) from e
    if m := _CLOSURE_RE.fullmatch(text):
        return LinkSpec(closure_of_rational(parse_fraction(m.group(1))))
    if m := _TORUS_RE.fullmatch(text):
        n = int(m.group(1))
        lk = int(m.group(2)) if m.group(2) is not None else None
        if lk is not None and (n % 2 or abs(lk) != abs(n) // 2):
            raise TangleParseError(f"T(2,{n}) cannot have linking number {lk}")
        return LinkSpec(torus_link(n), lk)
    if re.fullmatch(r"[+-]?\d+(/[+-]?\d+)?", text):
        return LinkSpec(closure_of_rational(parse_fraction(text)))
    return LinkSpec(lookup_name(text))

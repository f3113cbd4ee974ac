"""Schubert classification of numerator closures of rational tangles."""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from math import gcd

from tanglekit.errors import PreconditionError
from tanglekit.tangle_core.fractions import TangleFraction


class LinkKind(Enum):
    TWO_BRIDGE = "two-bridge"
    UNKNOT = "unknot"
    UNLINK = "unlink"


def _inverse_mod(q: int, p: int) -> int:
    return pow(q, -1, p) if p > 1 else 0


@dataclass(frozen=True, eq=False)
class TwoBridgeLink:
    """b(p, q) with 0 <= q < p, p = 1 the unknot and p = 0 the 2-component unlink.

    Equality is b(p, q) = b(p, q') iff q' = q^{+-1} (mod p), so mirror
    images stay distinct.
    """

    p: int
    q: int

    def __post_init__(self) -> None:
        p, q = self.p, self.q
        if p < 0:
            raise ValueError(f"b(p,q) needs p >= 0, got p={p}")
        if p == 0:
            q = 1
        elif p == 1:
            q = 0
        else:
            q %= p
            if gcd(p, q) != 1:
                raise ValueError(f"b({p},{self.q}) is not reduced")
        object.__setattr__(self, "q", q)

    @classmethod
    def from_fraction(cls, f: TangleFraction) -> TwoBridgeLink:
        # N(-z/v) = N(z/-v); N(1/0) is one unknotted circle
        if f.is_infinity:
            return cls(1, 0)
        sign = -1 if f.num < 0 else 1
        return cls(abs(f.num), sign * f.den)

    @property
    def kind(self) -> LinkKind:
        if self.p == 0:
            return LinkKind.UNLINK
        if self.p == 1:
            return LinkKind.UNKNOT
        return LinkKind.TWO_BRIDGE

    @property
    def components(self) -> int:
        return 2 if self.p % 2 == 0 else 1

    @property
    def key(self) -> tuple[int, int]:
        """Smallest representative of {q, q^-1} mod p."""
        if self.p < 2:
            return (self.p, self.q)
        return (self.p, min(self.q, _inverse_mod(self.q, self.p)))

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, TwoBridgeLink):
            return NotImplemented
        return self.key == other.key

    def __hash__(self) -> int:
        return hash(self.key)

    def __str__(self) -> str:
        return f"b({self.p},{self.q})"

    def mirror(self) -> TwoBridgeLink:
        if self.p < 2:
            return self
        return TwoBridgeLink(self.p, self.p - self.q)

    @property
    def is_amphichiral(self) -> bool:
        return self.mirror() == self

    def as_fraction(self) -> TangleFraction:
        if self.p == 0:
            return TangleFraction(0, 1)
        return TangleFraction(self.p, self.q if self.p > 1 else 1)


def closure_of_rational(f: TangleFraction) -> TwoBridgeLink:
    """N(a/b): b(|a|, +-b), the unknot when |a| = 1 and the unlink when a = 0."""
    return TwoBridgeLink.from_fraction(f)


def two_bridge_equal(a: TwoBridgeLink, b: TwoBridgeLink) -> bool:
    return a == b


def mirror_link(link: TwoBridgeLink) -> TwoBridgeLink:
    return link.mirror()


def genus_one_fraction(m: int, n: int) -> TangleFraction:
    """(4mn - 1)/(2m), whose closure is the genus-one 2-bridge knot for (m, n)."""
    if m == 0 or n == 0:
        raise PreconditionError(f"m and n must be nonzero, got m={m} n={n}")
    return TangleFraction(4 * m * n - 1, 2 * m)


def crossing_number_genus1(m: int, n: int) -> int:
    """Crossing number of N((4mn-1)/2m).

    For mn < 0 the alternating diagram has 2(|m|+|n|) crossings; that is
    what is returned there.
    """
    if m == 0 or n == 0:
        raise PreconditionError(f"m and n must be nonzero, got m={m} n={n}", reason="mn=0")
    if m * n > 0:
        return 2 * (abs(m) + abs(n)) - 1
    return 2 * (abs(m) + abs(n))


def bezout_pair(b: int, a: int) -> tuple[int, int]:
    """Integers (x, y) with b*x - a*y = 1; b and a must be coprime."""
    if gcd(a, b) != 1:
        raise PreconditionError(f"{b} and {a} are not coprime")
    if a == 0:
        return b, 0
    if abs(a) == 1:
        return 0, -a
    x = pow(b, -1, abs(a))
    return x, (b * x - 1) // a


def sum_closure(u: TangleFraction, r: TangleFraction) -> TwoBridgeLink:
    """N(a/b + t/w) = N((tb + wa)/(ty + wx)) where bx - ay = 1."""
    a, b = u.num, u.den
    t, w = r.num, r.den
    x, y = bezout_pair(b, a)
    return closure_of_rational(TangleFraction(t * b + w * a, t * y + w * x))

"""Laurent polynomials with integer coefficients, on top of sympy's ZZ[x].

A value is ``x^low * poly`` where ``poly`` is a sparse ring element whose
lowest term has degree 0.  Exponents count in units of ``1/denom``, so the
Jones polynomial of a link (half-integer powers of t) uses ``denom=2``.
"""

from __future__ import annotations

from collections.abc import Iterator, Mapping
from functools import lru_cache

from sympy.polys.domains import ZZ
from sympy.polys.rings import PolyElement, PolyRing, ring


@lru_cache(maxsize=None)
def _ring(var: str) -> PolyRing:
    return ring(var, ZZ)[0]


class LaurentPoly:
    __slots__ = ("var", "denom", "_low", "_poly")

    def __init__(self, terms: Mapping[int, int] | None = None, var: str = "A", denom: int = 1) -> None:
        self.var = var
        self.denom = denom
        terms = {e: c for e, c in (terms or {}).items() if c}
        self._low = min(terms, default=0)
        self._poly = _ring(var).from_dict({(e - self._low,): c for e, c in terms.items()})

    @classmethod
    def _wrap(cls, poly: PolyElement, low: int, var: str, denom: int) -> LaurentPoly:
        if not poly:
            return cls({}, var, denom)
        shift = min(m for (m,), _ in poly.items())
        out = cls.__new__(cls)
        out.var, out.denom = var, denom
        out._low = low + shift
        out._poly = poly if shift == 0 else _ring(var).from_dict({(m - shift,): c for (m,), c in poly.items()})
        return out

    @classmethod
    def monomial(cls, exponent: int, coeff: int = 1, var: str = "A", denom: int = 1) -> LaurentPoly:
        return cls({exponent: coeff}, var, denom)

    @classmethod
    def one(cls, var: str = "A", denom: int = 1) -> LaurentPoly:
        return cls({0: 1}, var, denom)

    @property
    def terms(self) -> dict[int, int]:
        return {m + self._low: int(c) for (m,), c in sorted(self._poly.items())}

    def _check(self, other: LaurentPoly) -> None:
        if (self.var, self.denom) != (other.var, other.denom):
            raise ValueError(
                f"cannot combine polynomials in {self.var}^(1/{self.denom}) "
                f"and {other.var}^(1/{other.denom})"
            )

    def __add__(self, other: LaurentPoly) -> LaurentPoly:
        self._check(other)
        if not other:
            return self
        if not self:
            return other
        x = _ring(self.var).gens[0]
        low = min(self._low, other._low)
        poly = self._poly * x ** (self._low - low) + other._poly * x ** (other._low - low)
        return LaurentPoly._wrap(poly, low, self.var, self.denom)

    def __neg__(self) -> LaurentPoly:
        return LaurentPoly._wrap(-self._poly, self._low, self.var, self.denom)

    def __sub__(self, other: LaurentPoly) -> LaurentPoly:
        return self + (-other)

    def __mul__(self, other: LaurentPoly | int) -> LaurentPoly:
        if isinstance(other, int):
            return LaurentPoly._wrap(self._poly * other, self._low, self.var, self.denom)
        self._check(other)
        return LaurentPoly._wrap(self._poly * other._poly, self._low + other._low, self.var, self.denom)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> LaurentPoly:
        if n < 0:
            if len(self._poly) != 1:
                raise ValueError("only monomials have negative powers")
            c = int(self._poly.LC)
            if c not in (1, -1):
                raise ValueError("only unit monomials have negative powers")
            return LaurentPoly.monomial(self._low * n, c ** (-n), self.var, self.denom)
        return LaurentPoly._wrap(self._poly**n, self._low * n, self.var, self.denom)

    def __iter__(self) -> Iterator[tuple[int, int]]:
        return iter(self.terms.items())

    def __bool__(self) -> bool:
        return bool(self._poly)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return (self.var, self.denom, self.terms) == (other.var, other.denom, other.terms)

    def __hash__(self) -> int:
        return hash((self.var, self.denom, tuple(self.terms.items())))

    def __repr__(self) -> str:
        return f"LaurentPoly({self.terms!r}, {self.var!r}, {self.denom})"

    def invert(self) -> LaurentPoly:
        """Substitute var -> 1/var."""
        return LaurentPoly({-e: c for e, c in self.terms.items()}, self.var, self.denom)

    def unit_normalized(self) -> LaurentPoly:
        """Shift so the lowest exponent is 0 and the leading coefficient is positive."""
        if not self:
            return self
        sign = 1 if self._poly.LC > 0 else -1
        return LaurentPoly._wrap(self._poly * sign, 0, self.var, self.denom)

    def _format_exponent(self, e: int) -> str:
        if e % self.denom == 0:
            return str(e // self.denom)
        return f"({e}/{self.denom})"

    def __str__(self) -> str:
        if not self:
            return "0"
        return " + ".join(f"{c}*{self.var}^{self._format_exponent(e)}" for e, c in self.terms.items())

"""Result types shared by the solvers."""

from __future__ import annotations

from collections.abc import Iterator
from dataclasses import dataclass, field
from enum import Enum
from typing import Any

from tanglekit.errors import PreconditionError
from tanglekit.tangle_core.expr import TangleExpr, format_expr, rational_value
from tanglekit.tangle_core.fractions import TangleFraction
from tanglekit.tangle_core.knot_table import LinkSpec

# case labels
BAND_K_M = "band:k=m"
BAND_K_N = "band:k=n"
BAND_K_SUM_PLUS = "band:k=m+n+1"
BAND_K_SUM_MINUS = "band:k=m+n-1"
XER = "xer:2k->2k+1"
TREFOIL_HOPF = "trefoil->hopf"
GENERALIZED_RATIONAL = "generalized-M:rational"
GENERALIZED_SUM = "generalized-M:sum"
NONBAND_RATIONAL = "nonband:rational"
PSI = "psi:(-1/3,-4/3)"


class Status(Enum):
    SOLVED = "solved"
    NO_SOLUTION = "no-solution"
    OBSTRUCTED = "obstructed"
    UNKNOWN = "unknown"


@dataclass(frozen=True)
class Move:
    """A (P, R) move: the tangle P in the substrate is replaced by R."""

    p: TangleFraction
    r: TangleFraction

    def __post_init__(self) -> None:
        if self.p == self.r:
            raise PreconditionError(f"a move needs P != R, got ({self.p}, {self.r})")

    def __str__(self) -> str:
        return f"({self.p}, {self.r})"


@dataclass(frozen=True)
class Instance:
    """One concrete U, with the parameter values that produced it.

    ``move`` and ``product`` override the family's when the instance
    belongs to a family whose move or target varies with the parameters.
    """

    u: TangleExpr
    params: tuple[tuple[str, int], ...] = ()
    move: Move | None = None
    product: LinkSpec | None = None

    @property
    def key(self) -> tuple[tuple[tuple[str, int], ...], str]:
        return self.params, format_expr(self.u)

    def display(self) -> str:
        """U as printed in reports: rational tangles by their fraction."""
        value = rational_value(self.u)
        return str(value) if value is not None else format_expr(self.u)


@dataclass(frozen=True)
class SolutionFamily:
    case: str
    move: Move
    substrate: LinkSpec
    product: LinkSpec
    closed_form: str
    parameters: dict[str, Any] = field(default_factory=dict)
    instances: tuple[Instance, ...] = ()
    notes: tuple[str, ...] = ()

    def __iter__(self) -> Iterator[Instance]:
        return iter(self.instances)

    def move_of(self, instance: Instance) -> Move:
        return instance.move or self.move

    def product_of(self, instance: Instance) -> LinkSpec:
        return instance.product or self.product


@dataclass
class SolutionReport:
    status: Status
    families: list[SolutionFamily] = field(default_factory=list)
    reason: str | None = None
    notes: list[str] = field(default_factory=list)

    @property
    def solved(self) -> bool:
        return self.status is Status.SOLVED


def obstructed(reason: str, *notes: str) -> SolutionReport:
    return SolutionReport(Status.OBSTRUCTED, reason=f"obstructed: {reason}", notes=list(notes))


def unknown(*notes: str) -> SolutionReport:
    return SolutionReport(Status.UNKNOWN, reason="open: unknown", notes=list(notes))


def no_solution(*notes: str) -> SolutionReport:
    return SolutionReport(Status.NO_SOLUTION, reason="no solution", notes=list(notes))


def solved(families: list[SolutionFamily], *notes: str) -> SolutionReport:
    if not families:
        return no_solution(*notes)
    return SolutionReport(Status.SOLVED, families, notes=list(notes))

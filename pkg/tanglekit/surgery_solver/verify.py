"""Check solver output against the diagram oracle."""

from __future__ import annotations

import logging
from dataclasses import dataclass, replace

from tanglekit.diagram_oracle.classify import Unrecognized, classify_diagram
from tanglekit.diagram_oracle.diagram import (
    closure_diagram,
    component_count,
    induced_orientation,
    linking_number,
)
from tanglekit.diagram_oracle.signature import signature
from tanglekit.errors import CrossingCapExceeded, DiagramError
from tanglekit.oracle_pool import oracle_pool
from tanglekit.surgery_solver.families import Move, SolutionFamily
from tanglekit.tangle_core.expr import TangleExpr, crossing_count, format_expr
from tanglekit.tangle_core.knot_table import LinkSpec, describe_link

logger = logging.getLogger(__name__)

VERIFIED = "verified"
CAP_EXCEEDED = "cap-exceeded: unverified"


@dataclass(frozen=True)
class Verification:
    u: str
    status: str
    substrate: str | None = None
    product: str | None = None
    lk: int | None = None
    murasugi: bool | None = None
    case: str | None = None
    params: tuple[tuple[str, int], ...] = ()

    @property
    def verified(self) -> bool:
        return self.status == VERIFIED

    @property
    def failed(self) -> bool:
        return self.status.startswith("failed")

    def as_dict(self) -> dict:
        return {
            "U": self.u,
            "status": self.status,
            "substrate": self.substrate,
            "product": self.product,
            "lk": self.lk,
            "murasugi": self.murasugi,
        }


def _found(result) -> str:
    return str(result) if isinstance(result, Unrecognized) else describe_link(result)


def _is_band(move: Move) -> bool:
    return move.p.num == 0 and abs(move.r.num) == 1


def verify_instance(
    u: TangleExpr,
    move: Move,
    substrate: LinkSpec,
    product: LinkSpec,
    cap: int | None = None,
) -> Verification:
    """Classify N(U + P) and N(U + R) and compare with the demanded links.

    A demanded linking number is checked with the link oriented to agree
    with the knot on the other side everywhere inside U.  For band moves
    the signatures must also differ by at most one.
    """
    text = format_expr(u)
    try:
        d_p = closure_diagram(u, move.p, cap)
        d_r = closure_diagram(u, move.r, cap)
    except CrossingCapExceeded as e:
        logger.info("skipping %s: %s", text, e)
        return Verification(text, CAP_EXCEEDED)
    found_p = classify_diagram(d_p)
    found_r = classify_diagram(d_r)
    problems = []
    if isinstance(found_p, Unrecognized) or found_p != substrate.link:
        problems.append("substrate")
    if isinstance(found_r, Unrecognized) or found_r != product.link:
        problems.append("product")

    lk = None
    murasugi = None
    shared = crossing_count(u)
    sides = [(d_p, substrate), (d_r, product)]
    links = [(d, spec) for d, spec in sides if component_count(d) == 2]
    knots = [d for d, _ in sides if component_count(d) == 1]
    if not problems and len(links) == 1 and len(knots) == 1:
        link_d, spec = links[0]
        try:
            oriented = induced_orientation(knots[0], link_d, shared)
            lk = linking_number(oriented)
            if spec.lk is not None and lk != spec.lk:
                problems.append(f"lk={lk:+d}")
            if _is_band(move):
                murasugi = abs(signature(oriented) - signature(knots[0])) <= 1
                if not murasugi:
                    problems.append("signature jump")
        except DiagramError as e:
            if spec.lk is not None:
                problems.append("orientation")
            logger.debug("no coherent orientation for %s: %s", text, e)
    status = VERIFIED if not problems else "failed: " + ", ".join(problems)
    if problems:
        logger.warning("%s does not solve %s: %s", text, move, status)
    return Verification(text, status, _found(found_p), _found(found_r), lk, murasugi)


def _job(args: tuple[SolutionFamily, int, int | None]) -> Verification:
    family, ii, cap = args
    instance = family.instances[ii]
    result = verify_instance(
        instance.u, family.move_of(instance), family.substrate, family.product_of(instance), cap
    )
    return replace(result, case=family.case, params=instance.params)


def verify_families(families: list[SolutionFamily], cap: int | None = None) -> list[Verification]:
    """verify_instance over every materialized instance, in family then instance-key order."""
    jobs = []
    for family in families:
        order = sorted(range(len(family.instances)), key=lambda i, f=family: f.instances[i].key)
        jobs.extend((family, ii, cap) for ii in order)
    results = oracle_pool.map_ordered(_job, jobs)
    logger.debug("verified %d instances: %d ok", len(results), sum(r.verified for r in results))
    return results

"""The golden corpus: solver tables regenerated and compared byte for byte.

Every fixture is algebraic output only, so regeneration is fast and does
not depend on the oracle or on settings.
"""

from __future__ import annotations

import difflib
import json
import logging
from collections.abc import Callable
from dataclasses import dataclass
from pathlib import Path
from typing import Any

from tanglekit.errors import MissingFixtureError
from tanglekit.surgery_solver.band import admitted, solve_2k_to_2k1, solve_trefoil_hopf
from tanglekit.surgery_solver.families import Status
from tanglekit.surgery_solver.nonband import (
    divisor_bounds,
    nonrational_certificate,
    psi_move_solve,
    residues,
)
from tanglekit.tangle_core.fractions import TangleFraction
from tanglekit.tangle_core.knot_table import name_link
from tanglekit.tangle_core.twobridge import TwoBridgeLink

logger = logging.getLogger(__name__)

FIXTURE_DIR = Path(__file__).parent / "fixtures"


def _label(link: TwoBridgeLink) -> str:
    name = name_link(link)
    return str(name) if name else str(link)


def _xer_products(k: int) -> list[dict[str, Any]]:
    """Admitted products of the 2k -> 2k+1 system, grouped by knot in order of appearance."""
    rows: dict[TwoBridgeLink, dict[str, Any]] = {}
    for family in solve_2k_to_2k1(k):
        if not admitted(family):
            continue
        m, n = family.parameters["m"], family.parameters["n"]
        link = family.product.link
        row = rows.setdefault(
            link,
            {
                "knot": _label(link),
                "fraction": str(TangleFraction(4 * m * n - 1, 2 * m)),
                "pairs": [],
                "solutions": [],
            },
        )
        row["pairs"].append(f"({m},{n})")
        for instance in family.instances:
            if instance.display() not in row["solutions"]:
                row["solutions"].append(instance.display())
    return list(rows.values())


def xer_table(k: int) -> dict[str, Any]:
    rejected = [
        f"({f.parameters['m']},{f.parameters['n']})" for f in solve_2k_to_2k1(k) if not admitted(f)
    ]
    return {
        "substrate": f"T(2,{2 * k},lk={-k:+d})",
        "w": -1,
        "products": _xer_products(k),
        "rejected": rejected,
    }


def trefoil_hopf_table() -> dict[str, Any]:
    return {
        "substrate": "3_1",
        "product": "Hopf",
        "rows": [{"w": w, "U": str(solve_trefoil_hopf(w))} for w in range(-5, 6)],
    }


def psi_table(k: int) -> dict[str, Any]:
    rows = []
    for product in _xer_products(k):
        zv = TangleFraction(*map(int, product["fraction"].split("/")))
        report = psi_move_solve(k, zv)
        row: dict[str, Any] = {"knot": product["knot"], "fraction": product["fraction"]}
        if report.status is Status.SOLVED:
            family = report.families[0]
            row |= {
                "status": "solved",
                "U": family.instances[0].display(),
                "U0": family.parameters["U0"],
                "epsilon": family.parameters["epsilon"],
                "v'": family.parameters["v'"],
                "h": family.parameters["h"],
            }
        else:
            row["status"] = "no solution"
        rows.append(row)
    return {"substrate": f"T(2,{2 * k})", "move": "(-1/3, -4/3)", "rows": rows}


def nonband_table(k: int) -> dict[str, Any]:
    rows = []
    substrate = TangleFraction(2 * k, 1)
    for product in _xer_products(k):
        z, v = map(int, product["fraction"].split("/"))
        rows.append(
            {
                "knot": product["knot"],
                "fraction": product["fraction"],
                "residues": residues(z, v, both_chiralities=True),
                "divisor_bounds": list(divisor_bounds(2 * k, z)),
                "nonrational_candidates": [
                    c.as_dict() for c in nonrational_certificate(substrate, TangleFraction(z, v))
                ],
            }
        )
    return {
        "substrate": f"T(2,{2 * k})",
        "closed_form": f"t/w = (z - {2 * k}v')/(v' - (z - {2 * k}v')h), U = {2 * k}/({2 * k}h + 1)",
        "rows": rows,
    }


FIXTURES: dict[str, Callable[[], dict[str, Any]]] = {
    "torus6_to_7crossing": lambda: xer_table(3),
    "torus8_to_9crossing": lambda: xer_table(4),
    "torus10_to_11crossing": lambda: xer_table(5),
    "trefoil_to_hopf": trefoil_hopf_table,
    "psi_torus6": lambda: psi_table(3),
    "psi_torus8": lambda: psi_table(4),
    "psi_torus10": lambda: psi_table(5),
    "nonband_torus6": lambda: nonband_table(3),
    "nonband_torus8": lambda: nonband_table(4),
    "nonband_torus10": lambda: nonband_table(5),
}


def render_fixture(name: str) -> str:
    payload = {"fixture": name} | FIXTURES[name]()
    return json.dumps(payload, indent=2, ensure_ascii=False) + "\n"


@dataclass(frozen=True)
class FixtureResult:
    name: str
    status: str
    diff: str = ""

    def as_dict(self) -> dict[str, str]:
        out = {"fixture": self.name, "status": self.status}
        if self.diff:
            out["diff"] = self.diff
        return out


# ---- Public API ----


def report_golden(corpus: Path | str = FIXTURE_DIR) -> list[FixtureResult]:
    """Regenerate every fixture and compare with the files in ``corpus``."""
    corpus = Path(corpus)
    if not corpus.is_dir() or not any(corpus.glob("*.json")):
        raise MissingFixtureError(f"no fixtures found in {corpus}")
    results = []
    for name in FIXTURES:
        path = corpus / f"{name}.json"
        if not path.exists():
            results.append(FixtureResult(name, "missing"))
            continue
        expected = path.read_text(encoding="utf-8")
        actual = render_fixture(name)
        if expected == actual:
            results.append(FixtureResult(name, "pass"))
            continue
        diff = "".join(
            difflib.unified_diff(
                expected.splitlines(keepends=True),
                actual.splitlines(keepends=True),
                fromfile=f"{name}.json",
                tofile=f"{name}.json (regenerated)",
            )
        )
        results.append(FixtureResult(name, "fail", diff))
    logger.debug("golden corpus %s: %s", corpus, [r.status for r in results])
    return results


def write_golden(corpus: Path | str) -> list[Path]:
    corpus = Path(corpus)
    corpus.mkdir(parents=True, exist_ok=True)
    written = []
    for name in FIXTURES:
        path = corpus / f"{name}.json"
        path.write_text(render_fixture(name), encoding="utf-8")
        written.append(path)
    logger.info("wrote %d fixtures to %s", len(written), corpus)
    return written

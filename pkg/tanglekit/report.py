"""Report records and their text/JSON rendering."""

from __future__ import annotations

import json
from typing import Any

from tanglekit import __version__
from tanglekit.surgery_solver.families import SolutionFamily, SolutionReport, Status
from tanglekit.surgery_solver.verify import Verification
from tanglekit.tangle_core.expr import format_expr

SCHEMA = "tanglekit.report/1"

EXIT_CODES = {
    "ok": 0,
    Status.SOLVED.value: 0,
    Status.NO_SOLUTION.value: 1,
    Status.OBSTRUCTED.value: 1,
    "failed": 1,
    Status.UNKNOWN.value: 3,
    "unsupported": 3,
}


def make_report(
    command: str,
    input: dict[str, Any],
    status: str = "ok",
    reason: str | None = None,
    results: Any = None,
    verification: Any = None,
) -> dict[str, Any]:
    return {
        "schema": SCHEMA,
        "version": __version__,
        "command": command,
        "input": input,
        "status": status,
        "reason": reason,
        "results": results,
        "verification": verification,
    }


def instance_record(family: SolutionFamily, index: int, check: Verification | None = None) -> dict[str, Any]:
    instance = family.instances[index]
    record: dict[str, Any] = {
        "U": instance.display(),
        "U_expr": format_expr(instance.u),
    }
    if instance.params:
        record["params"] = dict(instance.params)
    if instance.move is not None:
        record["move"] = str(instance.move)
    record["substrate"] = str(family.substrate)
    record["product"] = str(family.product_of(instance))
    record["verified"] = check.status if check else None
    return record


def family_record(family: SolutionFamily, checks: dict[tuple, Verification] | None = None) -> dict[str, Any]:
    checks = checks or {}
    instances = [
        instance_record(family, i, checks.get((family.case, inst.params, format_expr(inst.u))))
        for i, inst in enumerate(family.instances)
    ]
    return {
        "theorem_case": family.case,
        "parameters": family.parameters,
        "closed_form": family.closed_form,
        "move": str(family.move),
        "substrate": str(family.substrate),
        "product": str(family.product),
        "instances": instances,
        "notes": list(family.notes),
    }


def index_checks(checks: list[Verification]) -> dict[tuple, Verification]:
    return {(c.case, c.params, c.u): c for c in checks}


def solution_results(report: SolutionReport, checks: list[Verification] | None = None) -> dict[str, Any]:
    index = index_checks(checks or [])
    return {
        "families": [family_record(f, index) for f in report.families],
        "notes": list(report.notes),
    }


def verification_summary(checks: list[Verification]) -> dict[str, Any]:
    statuses = [c.status for c in checks]
    return {
        "instances": len(checks),
        "verified": statuses.count("verified"),
        "cap_exceeded": sum(1 for s in statuses if s.startswith("cap-exceeded")),
        "failed": sum(1 for s in statuses if s.startswith("failed")),
    }


# ---- Rendering ----


def to_json(report: dict[str, Any]) -> str:
    return json.dumps(report, indent=2, ensure_ascii=False) + "\n"


def format_value(value: Any, indent: int = 0) -> str:
    pad = "  " * indent
    if value is None:
        return "(nil)"
    if isinstance(value, bool):
        return str(value).lower()
    if isinstance(value, (int, float, str)):
        return str(value)
    if isinstance(value, list):
        if not value:
            return "(empty)"
        lines = []
        for i, item in enumerate(value, 1):
            if isinstance(item, (dict, list)) and item:
                lines.append(f"{pad}{i})")
                lines.append(format_value(item, indent + 1))
            else:
                lines.append(f"{pad}{i}) {format_value(item)}")
        return "\n".join(lines)
    if isinstance(value, dict):
        lines = []
        for k, v in value.items():
            if isinstance(v, (dict, list)) and v:
                lines.append(f"{pad}{k}:")
                lines.append(format_value(v, indent + 1))
            else:
                lines.append(f"{pad}{k}: {format_value(v)}")
        return "\n".join(lines)
    return str(value)


def to_text(report: dict[str, Any]) -> str:
    """Plain rendering: the results, then status and verification lines when informative."""
    lines = []
    results = report["results"]
    if results is not None:
        lines.append(format_value(results))
    if report["status"] not in ("ok", Status.SOLVED.value):
        reason = f" ({report['reason']})" if report["reason"] else ""
        lines.append(f"status: {report['status']}{reason}")
    if report["verification"] is not None:
        lines.append("verification:")
        lines.append(format_value(report["verification"], 1))
    return "\n".join(lines) + "\n"


def exit_code(report: dict[str, Any]) -> int:
    return EXIT_CODES.get(report["status"], 3)

"""Deterministic report serialization: stable-key JSON and aligned tables."""

from __future__ import annotations

import json
from dataclasses import is_dataclass
from fractions import Fraction

from .germs import BranchRecord, IndexReport
from .parsing import poly_to_text
from .polys import Poly1, Poly2
from .series import AboveDegree, TruncatedSeries1, TruncatedSeries2
from .surd import Surd


def exact_value(value):
    """Serialize an exact number: int when integral, 'p/q' when rational,
    a component dict otherwise."""
    if isinstance(value, Surd):
        if value.is_rational():
            value = value.a
        else:
            return value.to_json()
    if isinstance(value, Fraction):
        return value.numerator if value.denominator == 1 else str(value)
    return value


def jsonable(obj):
    """Recursively convert domain objects to JSON-compatible values."""
    if obj is None or isinstance(obj, (bool, int, str)):
        return obj
    if isinstance(obj, (Fraction, Surd)):
        return exact_value(obj)
    if isinstance(obj, float):
        if obj != obj or obj in (float("inf"), float("-inf")):
            return str(obj)
        return obj
    if isinstance(obj, AboveDegree):
        return {"above_degree": obj.n}
    if isinstance(obj, Poly2):
        return poly_to_text(obj)
    if isinstance(obj, (Poly1, TruncatedSeries1, TruncatedSeries2)):
        return repr(obj)
    if isinstance(obj, BranchRecord):
        return {
            "factor": poly_to_text(obj.defining_polynomial),
            "nu_p": obj.nu_p,
            "type": obj.branch_type,
            "mu_p": obj.mu_p,
        }
    if isinstance(obj, IndexReport):
        return {
            "delta": obj.delta,
            "nu_A": obj.nu_A,
            "branches": [jsonable(b) for b in obj.branches],
        }
    if is_dataclass(obj):
        return {k: jsonable(v) for k, v in vars(obj).items()}
    if isinstance(obj, dict):
        return {str(k): jsonable(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [jsonable(v) for v in obj]
    return repr(obj)


def emit_json(payload) -> str:
    return json.dumps(jsonable(payload), sort_keys=True, indent=2)


def render_table(rows: list[dict], columns: list[str]) -> str:
    """Aligned-column text table; values pass through jsonable first."""
    if not rows:
        return "(empty)"
    cells = [[_cell(jsonable(r.get(c))) for c in columns] for r in rows]
    widths = [max(len(columns[i]), max(len(row[i]) for row in cells))
              for i in range(len(columns))]
    out = ["  ".join(c.ljust(w) for c, w in zip(columns, widths))]
    out.append("  ".join("-" * w for w in widths))
    for row in cells:
        out.append("  ".join(c.ljust(w) for c, w in zip(row, widths)))
    return "\n".join(out)


def _cell(value) -> str:
    if value is None:
        return "-"
    if isinstance(value, (dict, list)):
        return json.dumps(value, sort_keys=True)
    return str(value)


def emit_report(payload, fmt: str, columns: list[str] | None = None) -> str:
    """Spec-level entry point: deterministic serialization of any report."""
    if fmt == "json":
        return emit_json(payload)
    if isinstance(payload, list) and columns:
        return render_table(payload, columns)
    return emit_json(payload)

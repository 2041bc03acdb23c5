"""Canonical report serialization and the exit-code contract.

JSON output has a fixed field order and fixed float formatting (six decimal
places, no locale), so identical runs emit identical bytes. Wall time is
omitted (zeroed) unless explicitly requested, because byte-identical output
across repeated runs is part of the contract.

Exit codes: 0 completed with an expected outcome, 1 internal error or
failed recheck, 2 a rechecked power-equation witness with exponent >= 3
(deliberately loud), 64 usage error.
"""

from __future__ import annotations

import json
import re

from .experiments import ExperimentReport
from .errors import UsageError

SCHEMA_VERSION = 1
TOOL_VERSION = "0.1.0"

EXIT_OK = 0
EXIT_INTERNAL = 1
EXIT_SENSATIONAL = 2
EXIT_USAGE = 64

_FLOAT_MARK = "\x00f:"
_FLOAT_TOKEN = re.compile(r'"\\u0000f:(-?\d+\.\d{6})"')

# Report tags whose witnesses are instances of the two power equations.
_EQUATION_TAGS = {"T1_SCHUR_FLT", "T3_ROTH_DM", "T5_HINDMAN", "FLT_ORACLE", "DM_ORACLE", "AP_ORACLE"}


def _mark_floats(obj):
    if isinstance(obj, bool):
        return obj
    if isinstance(obj, float):
        return _FLOAT_MARK + f"{obj:.6f}"
    if isinstance(obj, dict):
        return {k: _mark_floats(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [_mark_floats(v) for v in obj]
    return obj


def canonical_json(obj) -> str:
    """Deterministic JSON: insertion order kept, floats fixed to six places."""
    text = json.dumps(_mark_floats(obj), ensure_ascii=True, separators=(",", ":"))
    return _FLOAT_TOKEN.sub(r"\1", text)


def report_to_dict(report: ExperimentReport, timing: bool = False) -> dict:
    return {
        "schema_version": SCHEMA_VERSION,
        "theorem": report.theorem,
        "params": report.params,
        "outcome": report.outcome,
        "witnesses": report.witnesses,
        "stats": report.stats,
        "timing_ms": round(report.wall_ms, 3) if timing else 0,
        "seed": report.seed,
        "version": TOOL_VERSION,
    }


def _render_value(value) -> str:
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, float):
        return f"{value:.6f}"
    if isinstance(value, dict):
        return "{" + ", ".join(f"{k}={_render_value(v)}" for k, v in value.items()) + "}"
    if isinstance(value, (list, tuple)):
        return "[" + ", ".join(_render_value(v) for v in value) + "]"
    return str(value)


def render_text(report: ExperimentReport, timing: bool = False) -> str:
    data = report_to_dict(report, timing=timing)
    lines = [f"{key}: {_render_value(value)}" for key, value in data.items()]
    return "\n".join(lines) + "\n"


def emit_report(report: ExperimentReport, fmt: str = "json", timing: bool = False) -> bytes:
    """Serialize one report; CSV is defined for density tables only."""
    if fmt == "json":
        return (canonical_json(report_to_dict(report, timing=timing)) + "\n").encode()
    if fmt == "text":
        return render_text(report, timing=timing).encode()
    if fmt == "csv":
        csv_text = report.stats.get("csv")
        if report.theorem != "DENSITY" or csv_text is None:
            raise UsageError("csv format is only defined for density tables")
        return csv_text.encode()
    raise UsageError(f"unknown format {fmt!r}")


def exit_code_for(report: ExperimentReport) -> int:
    """Classify a finished report under the exit-code contract.

    Reports only reach serialization after their witnesses recheck (a failed
    recheck raises and maps to exit 1), so a power-equation witness with
    exponent >= 3 here is the sensational case by construction.
    """
    if report.theorem == "SUITE":
        return EXIT_OK if report.outcome == "expected" else EXIT_INTERNAL
    if report.outcome == "witness_found" and report.theorem in _EQUATION_TAGS:
        if report.params.get("exponent", 1) >= 3:
            return EXIT_SENSATIONAL
    if report.theorem in ("FLT_ORACLE", "DM_ORACLE", "AP_ORACLE") and report.witnesses:
        if report.params.get("exponent", 1) >= 3:
            return EXIT_SENSATIONAL
    return EXIT_OK

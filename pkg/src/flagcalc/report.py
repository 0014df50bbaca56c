"""Structured reports: key-sorted JSON or an equivalent line-per-field text form."""

from __future__ import annotations

import json

from . import __version__

FORMAT_VERSION = 1


def make_report(command: str, inputs: dict, result, timing: dict | None = None, cache: dict | None = None) -> dict:
    return {
        "format_version": FORMAT_VERSION,
        "engine_version": __version__,
        "command": command,
        "inputs": inputs,
        "result": result,
        "cache": cache or {},
        "timing": timing or {},
    }


def render_json(report: dict) -> str:
    return json.dumps(report, sort_keys=True, indent=2) + "\n"


def _flatten(prefix, value, out):
    if isinstance(value, dict):
        if not value:
            out.append((prefix, "{}"))
        for k in sorted(value):
            _flatten(f"{prefix}.{k}" if prefix else str(k), value[k], out)
    elif isinstance(value, list):
        if not value:
            out.append((prefix, "[]"))
        for i, v in enumerate(value):
            _flatten(f"{prefix}[{i}]", v, out)
    else:
        out.append((prefix, json.dumps(value) if not isinstance(value, str) else value))


def render_text(report: dict) -> str:
    rows = []
    _flatten("", report, rows)
    return "".join(f"{k}: {v}\n" for k, v in rows)


def render(report: dict, fmt: str) -> str:
    if fmt == "json":
        return render_json(report)
    if fmt == "text":
        return render_text(report)
    raise ValueError(f"unknown format {fmt!r}")


def without_timing(report: dict) -> dict:
    return {k: v for k, v in report.items() if k != "timing"}

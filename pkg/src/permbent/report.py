"""Deterministic report assembly and JSON/CSV emission.

Reports are plain dicts: header (context summary, tool version, config
echo), records, and a short summary.  JSON carries the whole report; CSV
carries the records only, one row per record, encoding the same fields so
the two formats parse back to identical record lists.  Histogram-valued
fields are written as "value:multiplicity" runs joined by semicolons,
ascending in the value.  Timing never goes to stdout, keeping bytes stable
for fixed config and seed.
"""

from __future__ import annotations

import csv
import io
import json

from .field import FieldCtx

TOOL = "permbent"

# record fields holding {integer value -> count} maps
_HIST_FIELDS = {"histogram", "inner", "outer"}


def hist_str(d: dict[int, int]) -> str:
    return ";".join(f"{k}:{d[k]}" for k in sorted(d))


def parse_hist(s: str) -> dict[int, int]:
    """Inverse of hist_str, for consumers of the CSV form."""
    if not s:
        return {}
    out = {}
    for part in s.split(";"):
        k, v = part.split(":")
        out[int(k)] = int(v)
    return out


def ascending(d: dict[int, int]) -> dict[int, int]:
    """Re-key a histogram in ascending value order (JSON keeps insertion order)."""
    return {k: d[k] for k in sorted(d)}


def make_header(ctx: FieldCtx, version: str, config: dict) -> dict:
    return {"tool": TOOL, "version": version, "context": ctx.summary(), "config": config}


def make_report(header: dict, records: list[dict], summary: dict) -> dict:
    return {"header": header, "records": records, "summary": summary}


def emit_json(rep: dict) -> str:
    return json.dumps(rep, indent=2) + "\n"


def _cell(field: str, value) -> str:
    if value is None:
        return ""
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, dict):
        if field in _HIST_FIELDS:
            return hist_str(value)
        return json.dumps(value, separators=(",", ":"))
    return str(value)


def emit_csv(records: list[dict]) -> str:
    """Records as CSV; every record must share one field set."""
    if not records:
        return ""
    cols = list(records[0].keys())
    for rec in records:
        if list(rec.keys()) != cols:
            raise ValueError("records disagree on their field sets")
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(cols)
    for rec in records:
        writer.writerow([_cell(c, rec[c]) for c in cols])
    return buf.getvalue()

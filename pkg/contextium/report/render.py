"""Output helpers: JSON documents, CSV rows and fixed-width tables."""

import csv
import io
import json
from typing import Any, Iterable, Sequence

from pydantic import BaseModel

TABLE_PRECISION = 6


def to_jsonable(obj: Any) -> Any:
    if isinstance(obj, BaseModel):
        return obj.model_dump(mode="json")
    if isinstance(obj, (list, tuple)):
        return [to_jsonable(item) for item in obj]
    if isinstance(obj, dict):
        return {key: to_jsonable(value) for key, value in obj.items()}
    return obj


def dumps_json(obj: Any) -> str:
    """Deterministic JSON: sorted keys, 2-space indent, shortest round-trip floats."""
    return json.dumps(to_jsonable(obj), indent=2, sort_keys=True, allow_nan=False) + "\n"


def dumps_csv(rows: Iterable[dict[str, Any]], columns: Sequence[str]) -> str:
    buffer = io.StringIO()
    writer = csv.DictWriter(buffer, fieldnames=list(columns), lineterminator="\n", extrasaction="ignore")
    writer.writeheader()
    for row in rows:
        writer.writerow({key: repr(float(value)) if isinstance(value, float) else value for key, value in row.items()})
    return buffer.getvalue()


def dumps_pairs_csv(pairs: Iterable[tuple[str, Any]]) -> str:
    """Key/value listing as a two-column `quantity,value` CSV."""
    return dumps_csv(({"quantity": key, "value": value} for key, value in pairs), ["quantity", "value"])


def format_cell(value: Any) -> str:
    if isinstance(value, bool):
        return "✅" if value else "❌"
    if isinstance(value, float):
        return f"{value:.{TABLE_PRECISION}g}"
    if value is None:
        return "-"
    return str(value)


def format_table(rows: Sequence[dict[str, Any]], title: str, columns: Sequence[dict[str, Any]]) -> str:
    """Fixed-width table; each column is {"key", "name", "width"}."""
    lines = [f"\n📋 {title}", "=" * 80]
    header = " | ".join(f"{col['name']:<{col['width']}}" for col in columns)
    lines.append(header)
    lines.append("-" * len(header))
    for row in rows:
        lines.append(" | ".join(f"{format_cell(row.get(col['key'])):<{col['width']}}" for col in columns))
    return "\n".join(lines) + "\n"


def format_pairs(pairs: Sequence[tuple[str, Any]], title: str) -> str:
    """Two-column key/value listing."""
    width = max((len(key) for key, _ in pairs), default=0)
    lines = [f"\n📊 {title}", "=" * 80]
    lines.extend(f"  {key:<{width}} : {format_cell(value)}" for key, value in pairs)
    return "\n".join(lines) + "\n"

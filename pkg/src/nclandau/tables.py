"""Deterministic table assembly and serialization.

CSV layout: every non-data line starts with '#'.  The first comment line
versions the schema (command name + column list), further comment lines
carry run metadata.  Floats are written with 17 significant digits, '.'
decimal separator and '\n' line endings, so identical configs reproduce
byte-identical files.  JSON output is an array of row objects keyed by the
column names.
"""

from __future__ import annotations

import json
import sys
from dataclasses import dataclass, field
from pathlib import Path


def format_value(value) -> str:
    if value is None:
        return ""
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, int):
        return str(value)
    if isinstance(value, float):
        return f"{value:.17g}"
    return str(value)


@dataclass(frozen=True)
class Table:
    """Rows plus the versioned schema line and metadata comments."""

    name: str
    version: int
    columns: tuple
    rows: list
    meta: tuple = field(default_factory=tuple)  # (key, value) pairs

    def schema_line(self) -> str:
        return f"# nclandau {self.name} v{self.version} columns: " + ",".join(self.columns)

    def to_csv(self) -> str:
        lines = [self.schema_line()]
        lines += [f"# {key} = {format_value(value)}" for key, value in self.meta]
        for row in self.rows:
            lines.append(",".join(format_value(v) for v in row))
        return "\n".join(lines) + "\n"

    def to_json(self) -> str:
        payload = [dict(zip(self.columns, row)) for row in self.rows]
        return json.dumps(payload, indent=1) + "\n"

    def render(self, fmt: str) -> str:
        return self.to_csv() if fmt == "csv" else self.to_json()


def write_text(text: str, path: str | None):
    """Write to a file ('\n' endings) or stdout when path is None."""
    if path is None:
        sys.stdout.write(text)
        return
    target = Path(path)
    if target.parent != Path(""):
        target.parent.mkdir(parents=True, exist_ok=True)
    with open(target, "w", encoding="utf-8", newline="\n") as fh:
        fh.write(text)

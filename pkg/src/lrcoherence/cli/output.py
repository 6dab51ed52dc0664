"""Deterministic CSV files and the run manifest."""

from __future__ import annotations

import hashlib
import os
from dataclasses import dataclass, field

import numpy as np


def fmt(x) -> str:
    """17 significant digits: round-trips every double exactly."""
    if isinstance(x, str):
        return x
    if x is None:
        return "not_relaxed"
    if isinstance(x, (int, np.integer)) and not isinstance(x, bool):
        return str(int(x))
    return format(float(x), ".17g")


def csv_text(meta: dict, header: list[str], columns) -> str:
    lines = [f"# {k}={v}" for k, v in meta.items()]
    lines.append(",".join(header))
    for row in zip(*columns):
        lines.append(",".join(fmt(x) for x in row))
    return "\n".join(lines) + "\n"


@dataclass
class OutputSet:
    """Collects written files and their parameters for the manifest."""

    directory: str
    command: str
    entries: list[tuple[str, dict, str]] = field(default_factory=list)

    def __post_init__(self):
        os.makedirs(self.directory, exist_ok=True)

    def write(self, name: str, text: str, params: dict) -> str:
        path = os.path.join(self.directory, name)
        data = text.encode("utf-8")
        with open(path, "wb") as fh:
            fh.write(data)
        self.entries.append((name, dict(params), hashlib.sha256(data).hexdigest()))
        return path

    def write_csv(self, name: str, meta: dict, header: list[str], columns, params=None) -> str:
        return self.write(name, csv_text(meta, header, columns), meta if params is None else params)

    def write_manifest(self, top: dict | list[str], extra: dict | None = None) -> str:
        lines = [f"# lrcoherence {self.command} manifest"]
        if isinstance(top, dict):
            lines += [f"{k}={v}" for k, v in top.items()]
        else:
            lines += list(top)
        for k, v in (extra or {}).items():
            lines.append(f"# {k}={v}")
        for name, params, digest in self.entries:
            lines.append("")
            lines.append(f"[{name}]")
            lines.append(f"sha256={digest}")
            lines += [f"{k}={v}" for k, v in params.items()]
        path = os.path.join(self.directory, "manifest.txt")
        with open(path, "w", encoding="utf-8") as fh:
            fh.write("\n".join(lines) + "\n")
        return path


def read_manifest(path) -> dict[str, dict[str, str]]:
    """Map each listed file name to its recorded parameters (including ``sha256``)."""
    sections: dict[str, dict[str, str]] = {}
    current = None
    with open(path, encoding="utf-8") as fh:
        for line in fh:
            line = line.strip()
            if not line or line.startswith("#"):
                continue
            if line.startswith("[") and line.endswith("]"):
                current = sections.setdefault(line[1:-1], {})
            elif current is not None:
                key, value = line.split("=", 1)
                current[key] = value
    return sections

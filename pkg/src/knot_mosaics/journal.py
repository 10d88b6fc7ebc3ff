"""Append-only JSON-lines journal of computed counts."""

from __future__ import annotations

import json
import os
import time
from pathlib import Path

from .counting import CountResult

CACHE_ENV = "KNOT_MOSAICS_CACHE_DIR"
JOURNAL_NAME = "results.jsonl"
CACHE_PREFIX = "cache:"


def default_cache_dir() -> Path | None:
    value = os.environ.get(CACHE_ENV)
    return Path(value) if value else None


class Journal:
    def __init__(self, directory: str | os.PathLike):
        self.directory = Path(directory)
        self.path = self.directory / JOURNAL_NAME

    def records(self) -> list[dict]:
        if not self.path.exists():
            return []
        out = []
        with open(self.path) as fh:
            for line in fh:
                line = line.strip()
                if line:
                    out.append(json.loads(line))
        return out

    def lookup(self, m: int, n: int, quantity: str) -> CountResult | None:
        """Latest journaled result for (m, n, quantity), labeled as a cache hit."""
        hit = None
        for rec in self.records():
            if rec["m"] == m and rec["n"] == n and rec["quantity"] == quantity:
                hit = rec
        if hit is None:
            return None
        method = hit["method"]
        if not method.startswith(CACHE_PREFIX):
            method = CACHE_PREFIX + method
        return CountResult(m, n, quantity, int(hit["value"]), method)

    def append(self, result: CountResult) -> None:
        self.directory.mkdir(parents=True, exist_ok=True)
        rec = result.as_json()
        rec["timestamp"] = time.strftime("%Y-%m-%dT%H:%M:%S%z")
        with open(self.path, "a") as fh:
            fh.write(json.dumps(rec) + "\n")

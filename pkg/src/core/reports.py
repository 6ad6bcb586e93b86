"""
Deterministic report files: JSON envelopes and plot-ready CSV tables.
"""
import csv
import json
import math
from dataclasses import asdict, is_dataclass
from fractions import Fraction
from pathlib import Path
from typing import Any, Iterable, List, Optional, Sequence

import numpy as np
from loguru import logger
from pydantic import BaseModel

from src.core.config import settings


def to_jsonable(value: Any) -> Any:
    """Convert payload values to plain JSON types; non-finite floats become strings."""
    if isinstance(value, BaseModel):
        return to_jsonable(value.model_dump())
    if is_dataclass(value) and not isinstance(value, type):
        return to_jsonable(asdict(value))
    if isinstance(value, dict):
        return {str(k): to_jsonable(v) for k, v in value.items()}
    if isinstance(value, (set, frozenset)):
        return sorted(to_jsonable(v) for v in value)
    if isinstance(value, (list, tuple, range)):
        return [to_jsonable(v) for v in value]
    if isinstance(value, np.ndarray):
        return [to_jsonable(v) for v in value.tolist()]
    if isinstance(value, (bool, np.bool_)):
        return bool(value)
    if isinstance(value, (int, np.integer)):
        return int(value)
    if isinstance(value, Fraction):
        return to_jsonable(float(value))
    if isinstance(value, complex):
        return value.real if value.imag == 0 else [to_jsonable(value.real), to_jsonable(value.imag)]
    if isinstance(value, (float, np.floating)):
        x = float(value)
        if math.isfinite(x):
            return x
        return "nan" if math.isnan(x) else ("inf" if x > 0 else "-inf")
    return value


def format_cell(value: Any) -> str:
    if isinstance(value, (bool, np.bool_)):
        return "true" if value else "false"
    if isinstance(value, (int, np.integer)):
        return str(int(value))
    if isinstance(value, Fraction):
        value = float(value)
    if isinstance(value, (float, np.floating)):
        return f"{float(value):.17g}"
    return str(value)


class ReportWriter:
    """
    Writes ``<command>_<action>.json`` envelopes and CSV tables into ``out_dir``.
    Output is byte-stable: sorted keys, no timestamps, fixed float formatting.
    """

    def __init__(self, out_dir: Optional[Path] = None):
        self.out_dir = Path(out_dir or settings.OUTPUT_DIR)
        self.written: List[Path] = []

    def _prepare(self, name: str) -> Path:
        self.out_dir.mkdir(parents=True, exist_ok=True)
        path = self.out_dir / name
        self.written.append(path)
        return path

    def write_json(self, command: str, action: str, passed: bool, payload: Any) -> Path:
        envelope = {
            "schema_version": settings.SCHEMA_VERSION,
            "command": command,
            "action": action,
            "passed": bool(passed),
            "payload": to_jsonable(payload),
        }
        path = self._prepare(f"{command}_{action}.json")
        path.write_text(
            json.dumps(envelope, sort_keys=True, indent=2, ensure_ascii=False, allow_nan=False) + "\n",
            encoding="utf-8",
        )
        logger.info(f"Wrote {path}")
        return path

    def write_csv(self, name: str, header: Sequence[str], rows: Iterable[Sequence[Any]]) -> Path:
        path = self._prepare(name)
        with path.open("w", encoding="utf-8", newline="") as fh:
            writer = csv.writer(fh, lineterminator="\n")
            writer.writerow(header)
            for row in rows:
                writer.writerow([format_cell(cell) for cell in row])
        logger.info(f"Wrote {path}")
        return path

"""CSV / JSON writers for solver, majorant and sweep results."""
from __future__ import annotations

import csv
import io
import json
import sys
from dataclasses import dataclass, field
from pathlib import Path
from typing import Any, Mapping, Optional, Sequence

import numpy as np

from .extremal import MarginTable
from .operators import MajorantValue
from .radius import RootCertificate

__all__ = ["Table", "as_table", "emit_table", "fmt_number"]


@dataclass
class Table:
    """Flat rows for CSV plus a nested document for JSON."""

    header: Sequence[str]
    rows: list
    document: dict = field(default_factory=dict)


def fmt_number(x: Any) -> str:
    """Positional decimal with 15 significant digits; ints and text unchanged."""
    if isinstance(x, (bool, np.bool_)):
        return str(bool(x)).lower()
    if isinstance(x, (int, np.integer)):
        return str(int(x))
    if isinstance(x, (float, np.floating)):
        return np.format_float_positional(float(x) + 0.0, precision=15, unique=False, fractional=False, trim="-")
    return str(x)


def _jsonable(x):
    if isinstance(x, np.ndarray):
        return [_jsonable(v) for v in x.tolist()]
    if isinstance(x, (list, tuple)):
        return [_jsonable(v) for v in x]
    if isinstance(x, dict):
        return {k: _jsonable(v) for k, v in x.items()}
    if isinstance(x, np.integer):
        return int(x)
    if isinstance(x, np.floating):
        return float(x)
    if isinstance(x, np.bool_):
        return bool(x)
    return x


def as_table(obj, meta: Optional[Mapping[str, Any]] = None) -> Table:
    meta = dict(meta or {})
    if isinstance(obj, Table):
        obj.document = {**meta, **obj.document}
        return obj
    if isinstance(obj, RootCertificate):
        fields = {
            "root": obj.root,
            "bracket_lo": obj.bracket[0],
            "bracket_hi": obj.bracket[1],
            "residual_at_root": obj.residual_at_root,
            "iterations": obj.iterations,
        }
        doc = {**meta, "root": obj.root, "bracket": list(obj.bracket),
               "residual_at_root": obj.residual_at_root, "iterations": obj.iterations}
        merged = {**meta, **fields}
        return Table(list(merged), [list(merged.values())], doc)
    if isinstance(obj, MajorantValue):
        fields = {"value": obj.value, "truncation_order": obj.truncation_order, "tail_bound": obj.tail_bound}
        merged = {**meta, **fields}
        return Table(list(merged), [list(merged.values())], merged)
    if isinstance(obj, MarginTable):
        rows = [[a, rho, m] for a, rho, m in obj.rows()]
        doc = {
            **meta,
            "operator": obj.operator.label,
            "gamma": obj.gamma,
            "a_grid": obj.a_grid,
            "rho_grid": obj.rho_grid,
            "margins": obj.margins,
        }
        return Table(["a", "rho", "margin"], rows, doc)
    raise TypeError(f"cannot tabulate {type(obj).__name__}")


def emit_table(obj, fmt: str = "csv", path="-", meta: Optional[Mapping[str, Any]] = None) -> None:
    """Write ``obj`` as CSV or JSON to ``path`` ('-' is stdout)."""
    table = as_table(obj, meta)
    if fmt == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(table.header)
        for row in table.rows:
            writer.writerow([fmt_number(v) for v in row])
        text = buf.getvalue()
    elif fmt == "json":
        text = json.dumps(_jsonable(table.document), indent=2) + "\n"
    else:
        raise ValueError(f"unknown format {fmt!r}")
    if str(path) == "-":
        sys.stdout.write(text)
        return
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_text(text)

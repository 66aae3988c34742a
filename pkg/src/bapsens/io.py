"""Matrix files and JSON reports.

Matrices come as CSV (one row per line, ``inf`` allowed) or JSON
(``{"n", "m", "weights"}`` or a bare nested list). Reports are JSON with
1-based edges in the caller's orientation and signed interval endpoints.
Floats are written with Python's shortest round-trip repr.
"""
from __future__ import annotations

import csv
import io
import json
import math
from pathlib import Path
from typing import Optional

import numpy as np

from .core import INF, Assignment, Edge, WeightMatrix
from .errors import ParseError
from .intervals import IntervalArray


def _token(tok) -> float:
    if isinstance(tok, bool):
        raise ParseError(f"not a number: {tok!r}")
    if isinstance(tok, (int, float)):
        return float(tok)
    s = str(tok).strip().lower()
    if s in ("inf", "+inf", "infinity", "+infinity"):
        return INF
    if s in ("-inf", "-infinity"):
        return -INF
    try:
        value = float(s)
    except ValueError:
        raise ParseError(f"not a number: {tok!r}") from None
    if math.isnan(value):
        raise ParseError("NaN is not a valid weight")
    return value


def sniff_format(text: str, path: Optional[str] = None) -> str:
    if path and Path(path).suffix.lower() == ".json":
        return "json"
    if path and Path(path).suffix.lower() == ".csv":
        return "csv"
    return "json" if text.lstrip()[:1] in ("{", "[") else "csv"


def parse_matrix(text: str, fmt: Optional[str] = None) -> list[list[float]]:
    fmt = fmt or sniff_format(text)
    if fmt == "json":
        try:
            obj = json.loads(text)
        except json.JSONDecodeError as exc:
            raise ParseError(f"invalid JSON: {exc}") from None
        rows = obj.get("weights") if isinstance(obj, dict) else obj
        if not isinstance(rows, list) or not all(isinstance(r, list) for r in rows):
            raise ParseError("expected 'weights' as a list of rows")
        out = [[_token(t) for t in r] for r in rows]
        if isinstance(obj, dict):
            n, m = obj.get("n", len(out)), obj.get("m", len(out[0]) if out else 0)
            if n != len(out) or any(len(r) != m for r in out):
                raise ParseError(f"declared size {n}x{m} does not match weights")
    elif fmt == "csv":
        reader = csv.reader(io.StringIO(text))
        out = [[_token(t) for t in row] for row in reader if row and any(c.strip() for c in row)]
    else:
        raise ParseError(f"unknown format {fmt!r}")
    if not out or not out[0]:
        raise ParseError("empty matrix")
    if any(len(r) != len(out[0]) for r in out):
        raise ParseError("rows have different lengths")
    return out


def read_matrix(path: str, fmt: Optional[str] = None) -> list[list[float]]:
    text = Path(path).read_text()
    return parse_matrix(text, fmt or sniff_format(text, path))


def parse_assignment(text: str, W: WeightMatrix) -> Assignment:
    """1-based ``[i, j]`` pairs in the caller's orientation."""
    text = text.strip()
    if text[:1] in ("{", "["):
        try:
            obj = json.loads(text)
        except json.JSONDecodeError as exc:
            raise ParseError(f"invalid JSON: {exc}") from None
        pairs = obj.get("assignment") if isinstance(obj, dict) else obj
    else:
        pairs = [row for row in csv.reader(io.StringIO(text)) if row]
    try:
        edges = [W.internal_edge(Edge.from_one_based(p)) for p in pairs]
    except (TypeError, ValueError) as exc:
        raise ParseError(f"bad assignment pairs: {exc}") from None
    return Assignment.from_edges(edges)


def encode_number(x: float):
    x = float(x)
    if x == INF:
        return "inf"
    if x == -INF:
        return "-inf"
    return x


def decode_number(x) -> float:
    return _token(x)


def encode_edge(W: WeightMatrix, e: Edge) -> list[int]:
    return W.external_edge(Edge(*e)).one_based()


def encode_edges(W: WeightMatrix, edges) -> list[list[int]]:
    return sorted(encode_edge(W, e) for e in edges)


def encode_intervals(W: WeightMatrix, L: IntervalArray) -> list[list[dict]]:
    lower = W.external_array(L.lower)
    upper = W.external_array(L.upper)
    return [[{"lo": encode_number(-lo), "hi": encode_number(hi)} for lo, hi in zip(rl, ru)]
            for rl, ru in zip(lower.tolist(), upper.tolist())]


def decode_intervals(rows) -> IntervalArray:
    """Inverse of ``encode_intervals`` (caller orientation)."""
    lower = np.array([[-decode_number(c["lo"]) for c in r] for r in rows])
    upper = np.array([[decode_number(c["hi"]) for c in r] for r in rows])
    return IntervalArray(lower, upper)


def dumps_report(report: dict) -> str:
    return json.dumps(report, indent=2, allow_nan=False) + "\n"


def loads_report(text: str) -> dict:
    return json.loads(text)

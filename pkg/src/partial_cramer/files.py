"""JSON system and model files.

System file::

    {
      "scalar": "rational",          # optional, "rational" (default) or "float"
      "n": 3,                        # optional, checked against the matrix when present
      "matrix": [[1, -1, 0], [0, 1, -1], [0, 0, 1]],
      "rhs": [1, "2/3", 3]
    }

Model file::

    {"model": "chain", "masses": [1, 2, 3], "acceleration": 2, "scalar": "rational"}

In rational mode entries are integers or ``"p/q"`` strings; in float mode
they are JSON numbers. Syntax errors report line and column; value errors
report the JSON path of the offending entry.
"""

from __future__ import annotations

import json
from pathlib import Path
from typing import Any

from .errors import DimensionError, LinearSystemError
from .matrix import ColumnVector, Matrix, SystemSpec
from .models import ChainSpec
from .scalars import ScalarKind, convert, parse_scalar

SUPPORTED_MODELS = ("chain",)


class FileFormatError(LinearSystemError, ValueError):
    """The input file is not valid JSON or does not follow the schema."""


def _read_json(path: str | Path) -> dict[str, Any]:
    try:
        text = Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise FileFormatError(f"{path}: cannot read file: {exc.strerror or exc}") from None
    except UnicodeDecodeError as exc:
        raise FileFormatError(f"{path}: not valid UTF-8 ({exc.reason} at byte {exc.start})") from None
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise FileFormatError(f"{path}:{exc.lineno}:{exc.colno}: {exc.msg}") from None
    if not isinstance(data, dict):
        raise FileFormatError(f"{path}: top level must be a JSON object")
    return data


def _kind(data: dict[str, Any], path: str | Path) -> ScalarKind:
    try:
        return ScalarKind.parse(data.get("scalar", "rational"))
    except ValueError as exc:
        raise FileFormatError(f"{path}: scalar: {exc}") from None


def _value(raw: Any, kind: ScalarKind, where: str, path: str | Path):
    try:
        return parse_scalar(raw, kind)
    except ValueError as exc:
        raise FileFormatError(f"{path}: {where}: {exc}") from None


def parse_system(data: dict[str, Any], path: str | Path = "<input>") -> SystemSpec:
    kind = _kind(data, path)
    for key in ("matrix", "rhs"):
        if key not in data:
            raise FileFormatError(f"{path}: missing required field {key!r}")
    rows, rhs = data["matrix"], data["rhs"]
    if not isinstance(rows, list) or not all(isinstance(r, list) for r in rows):
        raise FileFormatError(f"{path}: matrix must be a list of rows")
    if not isinstance(rhs, list):
        raise FileFormatError(f"{path}: rhs must be a list")
    if not rows:
        raise DimensionError(f"{path}: matrix has no rows")
    n = len(rows)
    if "n" in data:
        declared = data["n"]
        if isinstance(declared, bool) or not isinstance(declared, int):
            raise FileFormatError(f"{path}: n must be an integer")
        if declared != n:
            raise DimensionError(f"{path}: n = {declared} but matrix has {n} rows")
    for i, row in enumerate(rows, start=1):
        if len(row) != n:
            raise DimensionError(f"{path}: matrix row {i} has {len(row)} entries; a {n}x{n} matrix is required")
    if len(rhs) != n:
        raise DimensionError(f"{path}: rhs has {len(rhs)} entries, expected {n}")
    entries = tuple(
        _value(v, kind, f"matrix[{i}][{k}]", path) for i, row in enumerate(rows, start=1) for k, v in enumerate(row, start=1)
    )
    vector = tuple(_value(v, kind, f"rhs[{i}]", path) for i, v in enumerate(rhs, start=1))
    return SystemSpec(Matrix(n, n, entries, kind), ColumnVector(n, vector, kind))


def load_system(path: str | Path, kind: ScalarKind | None = None) -> SystemSpec:
    """Read a system file; ``kind`` converts the parsed values afterwards."""
    sys = parse_system(_read_json(path), path)
    return as_kind(sys, kind) if kind is not None else sys


def as_kind(sys: SystemSpec, kind: ScalarKind) -> SystemSpec:
    if sys.kind is kind:
        return sys
    r = Matrix(sys.n, sys.n, tuple(convert(v, kind) for v in sys.r.entries), kind)
    return SystemSpec(r, ColumnVector(sys.n, tuple(convert(v, kind) for v in sys.x_prime), kind))


def parse_model(data: dict[str, Any], path: str | Path = "<input>") -> ChainSpec:
    model = data.get("model")
    if model not in SUPPORTED_MODELS:
        raise FileFormatError(f"{path}: model must be one of {', '.join(SUPPORTED_MODELS)}, got {model!r}")
    kind = _kind(data, path)
    masses = data.get("masses")
    if not isinstance(masses, list):
        raise FileFormatError(f"{path}: masses must be a list")
    if not masses:
        raise FileFormatError(f"{path}: masses must not be empty")
    if "acceleration" not in data:
        raise FileFormatError(f"{path}: missing required field 'acceleration'")
    values = [_value(m, kind, f"masses[{i}]", path) for i, m in enumerate(masses, start=1)]
    accel = _value(data["acceleration"], kind, "acceleration", path)
    try:
        return ChainSpec(tuple(values), accel, kind)
    except ValueError as exc:
        raise FileFormatError(f"{path}: {exc}") from None


def load_model(path: str | Path, kind: ScalarKind | None = None) -> ChainSpec:
    spec = parse_model(_read_json(path), path)
    if kind is not None and kind is not spec.kind:
        spec = ChainSpec(tuple(convert(m, kind) for m in spec.masses), convert(spec.acceleration, kind), kind)
    return spec

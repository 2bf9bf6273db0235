"""JSON/CSV readers and writers for configurations, functions, boundaries and reports."""

from __future__ import annotations

import csv
import dataclasses
import io
import json
import math
from pathlib import Path
from typing import Any

import numpy as np

from .geometry import PointConfig, RealSequence
from .rpdf import Bernstein, DiscreteMeasure, ExpDecay, OmegaKernel, RadialFunction, Schoenberg
from .spectral import BoundaryOperator

__all__ = [
    "load_json",
    "parse_config",
    "parse_sequence",
    "parse_function",
    "parse_boundary",
    "parse_grid",
    "to_jsonable",
    "dumps",
    "matrix_csv",
]


def load_json(path: str | Path) -> Any:
    with open(path, encoding="utf-8") as fh:
        return json.load(fh)


def _require(doc: Any, key: str, what: str) -> Any:
    if not isinstance(doc, dict) or key not in doc:
        raise ValueError(f"{what} JSON needs a '{key}' field")
    return doc[key]


def parse_config(doc: Any) -> PointConfig:
    """``{"points": [[x, y, z], ...]}``"""
    pts = _require(doc, "points", "config")
    return PointConfig(np.asarray(pts, dtype=float))


def parse_sequence(doc: Any) -> RealSequence:
    """``{"lambdas": [...]}``"""
    return RealSequence(np.asarray(_require(doc, "lambdas", "sequence"), dtype=float))


def _measure(atoms: Any) -> DiscreteMeasure:
    if not isinstance(atoms, list) or not atoms:
        raise ValueError("'atoms' must be a nonempty list of {s, w} objects")
    try:
        return DiscreteMeasure.from_atoms([(float(a["s"]), float(a["w"])) for a in atoms])
    except (KeyError, TypeError) as exc:
        raise ValueError(f"bad atom entry: {exc}") from exc


def parse_function(doc: Any) -> RadialFunction:
    variant = _require(doc, "variant", "function")
    if variant == "exp":
        return ExpDecay(float(_require(doc, "a", "exp function")))
    if variant == "omega":
        return OmegaKernel(int(_require(doc, "n", "omega function")), float(doc.get("r", 1.0)))
    if variant == "bernstein":
        return Bernstein(_measure(_require(doc, "atoms", "bernstein function")))
    if variant == "schoenberg":
        return Schoenberg(
            int(_require(doc, "n", "schoenberg function")),
            _measure(_require(doc, "atoms", "schoenberg function")),
        )
    raise ValueError(f"unknown function variant {variant!r}")


def parse_boundary(doc: Any) -> BoundaryOperator:
    kind = _require(doc, "type", "boundary")
    if kind == "diagonal":
        return BoundaryOperator.diagonal(_require(doc, "alpha", "diagonal boundary"))
    if kind == "dense":
        return BoundaryOperator(np.asarray(_require(doc, "matrix", "dense boundary"), dtype=float))
    raise ValueError(f"unknown boundary type {kind!r}")


def parse_grid(doc: Any) -> tuple[np.ndarray, np.ndarray]:
    """``{"x": [[...], ...], "y": [[...], ...]}``; evaluated on every (x, y) pair."""
    xs = np.asarray(_require(doc, "x", "grid"), dtype=float).reshape(-1, 3)
    ys = np.asarray(_require(doc, "y", "grid"), dtype=float).reshape(-1, 3)
    return xs, ys


def to_jsonable(obj: Any) -> Any:
    """Recursively convert dataclasses, arrays and non-finite floats to JSON values.

    Infinities become the strings ``"inf"``/``"-inf"``, NaN becomes ``"nan"``,
    complex numbers become ``{"re": ..., "im": ...}``.
    """
    if dataclasses.is_dataclass(obj) and not isinstance(obj, type):
        return {f.name: to_jsonable(getattr(obj, f.name)) for f in dataclasses.fields(obj)}
    if isinstance(obj, dict):
        return {str(k): to_jsonable(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [to_jsonable(v) for v in obj]
    if isinstance(obj, np.ndarray):
        return to_jsonable(obj.tolist())
    if isinstance(obj, (bool, np.bool_)):
        return bool(obj)
    if isinstance(obj, (int, np.integer)):
        return int(obj)
    if isinstance(obj, (complex, np.complexfloating)):
        return {"re": to_jsonable(float(obj.real)), "im": to_jsonable(float(obj.imag))}
    if isinstance(obj, (float, np.floating)):
        v = float(obj)
        if math.isnan(v):
            return "nan"
        if math.isinf(v):
            return "inf" if v > 0 else "-inf"
        return v
    return obj


def dumps(obj: Any) -> str:
    # float repr is the shortest round-trip representation (at most 17 digits)
    return json.dumps(to_jsonable(obj), indent=2, sort_keys=False, allow_nan=False)


def matrix_csv(matrix: np.ndarray) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    for row in np.asarray(matrix):
        w.writerow([repr(float(v)) for v in row])
    return buf.getvalue()

from __future__ import annotations

import json
import re
from dataclasses import dataclass, field
from fractions import Fraction
from pathlib import Path
from typing import Any

import numpy as np

from app.errors import DocumentError
from app.projective.core import HPoint2, HPoint3, to_rational

_HEADER_RE = re.compile(r"^\s*(dimension|homogeneous)\s*[:=]\s*(\S+)\s*$", re.IGNORECASE)
_NUMBER_RE = re.compile(r"^[+-]?(\d+(\.\d*)?|\.\d+)([eE][+-]?\d+)?(/\d+)?$")
_SPLIT_RE = re.compile(r"[\s,;()]+")
_TRUE = {"1", "true", "yes", "on"}
_FALSE = {"0", "false", "no", "off"}


@dataclass
class PointSetDocument:
    """Labeled points with exact rational coordinates.

    Text form, one record per line (`#` starts a comment):

        dimension: 2
        homogeneous: false
        P 2 3
        Q 3 5

    The JSON form carries the same fields:
    {"dimension": 2, "homogeneous": false, "points": [{"label": "P", "coords": ["2", "3"]}]}
    """

    dimension: int
    homogeneous: bool
    points: list[tuple[Fraction, ...]]
    labels: list[str] = field(default_factory=list)

    @property
    def width(self) -> int:
        return self.dimension + 1 if self.homogeneous else self.dimension

    def require(self, count: int | None = None, dimension: int | tuple[int, ...] | None = None, min_count: int | None = None) -> "PointSetDocument":
        if dimension is not None:
            allowed = (dimension,) if isinstance(dimension, int) else dimension
            if self.dimension not in allowed:
                raise DocumentError(f"expected dimension {' or '.join(map(str, allowed))}, got {self.dimension}")
        if count is not None and len(self.points) != count:
            raise DocumentError(f"expected {count} points, got {len(self.points)}")
        if min_count is not None and len(self.points) < min_count:
            raise DocumentError(f"expected at least {min_count} points, got {len(self.points)}")
        return self

    def homogeneous_coords(self) -> list[tuple[Fraction, ...]]:
        if self.homogeneous:
            return list(self.points)
        return [(Fraction(1),) + p for p in self.points]

    def hpoints2(self) -> list[HPoint2]:
        self.require(dimension=2)
        try:
            return [HPoint2(c) for c in self.homogeneous_coords()]
        except ValueError as exc:
            raise DocumentError(str(exc)) from exc

    def hpoints3(self) -> list[HPoint3]:
        self.require(dimension=3)
        try:
            return [HPoint3(c) for c in self.homogeneous_coords()]
        except ValueError as exc:
            raise DocumentError(str(exc)) from exc

    def finite(self) -> tuple[np.ndarray, list[str]]:
        """Cartesian coordinates and labels of the points not at infinity."""
        keep = [i for i, p in enumerate(self.points) if not self.homogeneous or p[0] != 0]
        if not keep:
            raise DocumentError("every point is at infinity")
        return self.affine_of(keep), [self.labels[i] for i in keep]

    def affine(self) -> np.ndarray:
        """Cartesian float coordinates, shape (n, dimension)."""
        return self.affine_of(range(len(self.points)))

    def affine_of(self, indices) -> np.ndarray:
        rows = []
        for i in indices:
            p = self.points[i]
            if self.homogeneous:
                if p[0] == 0:
                    raise DocumentError(f"point {self.labels[i]} is at infinity")
                p = tuple(c / p[0] for c in p[1:])
            rows.append([float(c) for c in p])
        return np.array(rows, dtype=float).reshape(len(rows), self.dimension)

    def as_dict(self) -> dict[str, Any]:
        return {
            "dimension": self.dimension,
            "homogeneous": self.homogeneous,
            "points": [
                {"label": label, "coords": [_exact_text(c) for c in p]}
                for label, p in zip(self.labels, self.points)
            ],
        }


def _exact_text(v: Fraction) -> str:
    return str(v.numerator) if v.denominator == 1 else f"{v.numerator}/{v.denominator}"


def _parse_number(token: Any, where: str) -> Fraction:
    if isinstance(token, bool):
        raise DocumentError(f"{where}: boolean is not a coordinate")
    if isinstance(token, (int, float)):
        return to_rational(token)
    text = str(token).strip()
    if not _NUMBER_RE.match(text):
        raise DocumentError(f"{where}: {text!r} is not a number")
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError) as exc:
        raise DocumentError(f"{where}: {text!r} is not a number") from exc


def _parse_flag(value: Any, where: str) -> bool:
    if isinstance(value, bool):
        return value
    text = str(value).strip().lower()
    if text in _TRUE:
        return True
    if text in _FALSE:
        return False
    raise DocumentError(f"{where}: {value!r} is not a boolean")


def _finish(dimension: int | None, homogeneous: bool, points: list, labels: list[str]) -> PointSetDocument:
    if not points:
        raise DocumentError("document has no points")
    width = len(points[0])
    if dimension is None:
        dimension = width - 1 if homogeneous else width
    if dimension not in (2, 3):
        raise DocumentError(f"dimension must be 2 or 3, got {dimension}")
    expected = dimension + 1 if homogeneous else dimension
    for i, p in enumerate(points):
        if len(p) != expected:
            raise DocumentError(f"point {labels[i]}: expected {expected} coordinates, got {len(p)}")
    if len(set(labels)) != len(labels):
        raise DocumentError("point labels must be unique")
    return PointSetDocument(dimension=dimension, homogeneous=homogeneous, points=points, labels=labels)


def _parse_text(text: str) -> PointSetDocument:
    dimension: int | None = None
    homogeneous = False
    points: list[tuple[Fraction, ...]] = []
    labels: list[str] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        where = f"line {lineno}"
        m = _HEADER_RE.match(line)
        if m:
            key, value = m.group(1).lower(), m.group(2)
            if key == "dimension":
                if not value.isdigit():
                    raise DocumentError(f"{where}: dimension {value!r} is not an integer")
                dimension = int(value)
            else:
                homogeneous = _parse_flag(value, where)
            continue
        tokens = [t for t in _SPLIT_RE.split(line.replace(":", " ")) if t]
        label = None
        if tokens and not _NUMBER_RE.match(tokens[0]):
            label = tokens.pop(0)
        if not tokens:
            raise DocumentError(f"{where}: point record has no coordinates")
        points.append(tuple(_parse_number(t, where) for t in tokens))
        labels.append(label or f"P{len(points)}")
    return _finish(dimension, homogeneous, points, labels)


def _parse_json(text: str) -> PointSetDocument:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise DocumentError(f"invalid JSON: {exc}") from exc
    if not isinstance(data, dict) or not isinstance(data.get("points"), list):
        raise DocumentError("JSON document needs a 'points' list")
    dimension = data.get("dimension")
    if dimension is not None and (isinstance(dimension, bool) or not isinstance(dimension, int)):
        raise DocumentError(f"dimension {dimension!r} is not an integer")
    homogeneous = _parse_flag(data.get("homogeneous", False), "homogeneous")
    points: list[tuple[Fraction, ...]] = []
    labels: list[str] = []
    for i, item in enumerate(data["points"]):
        where = f"points[{i}]"
        if isinstance(item, dict):
            coords = item.get("coords")
            label = item.get("label")
        else:
            coords, label = item, None
        if not isinstance(coords, list) or not coords:
            raise DocumentError(f"{where}: coords must be a non-empty list")
        points.append(tuple(_parse_number(c, where) for c in coords))
        labels.append(str(label) if label is not None else f"P{i + 1}")
    return _finish(dimension, homogeneous, points, labels)


def parse_document(text: str) -> PointSetDocument:
    if text.lstrip().startswith("{"):
        return _parse_json(text)
    return _parse_text(text)


def load_document(path: str | Path) -> PointSetDocument:
    path = Path(path)
    if not path.exists():
        raise DocumentError(f"input document not found: {path}")
    try:
        text = path.read_text(encoding="utf-8")
    except (OSError, UnicodeDecodeError) as exc:
        raise DocumentError(f"cannot read {path}: {exc}") from exc
    return parse_document(text)

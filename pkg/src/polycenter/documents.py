"""Polygon documents: a small JSON schema for one polygon per file.

Top-level object carries an optional ``name`` plus exactly one of
``vertices`` (array of [x, y] pairs, at least 3) or ``distances`` (an
n-by-n symmetric array). Schema violations raise DocumentError with a
JSON-path diagnostic; floats are written with repr so a write/read
round trip reproduces every bit.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass
from typing import Optional

from .errors import DocumentError
from .geometry import DistanceMatrix, Point2, Polygon
from .reconstruction import reconstruct


@dataclass(frozen=True)
class PolygonDocument:
    name: str = ""
    vertices: Optional[Polygon] = None
    distances: Optional[DistanceMatrix] = None

    def __post_init__(self) -> None:
        if (self.vertices is None) == (self.distances is None):
            raise DocumentError("exactly one of vertices/distances is required")

    def polygon(self) -> Polygon:
        """The stored polygon, reconstructing from distances if needed."""
        if self.vertices is not None:
            return self.vertices
        assert self.distances is not None
        return reconstruct(self.distances).polygon

    def matrix(self) -> DistanceMatrix:
        if self.distances is not None:
            return self.distances
        assert self.vertices is not None
        from .geometry import distance_matrix

        return distance_matrix(self.vertices)


def _number(value: object, where: str) -> float:
    if isinstance(value, bool) or not isinstance(value, (int, float)):
        raise DocumentError(f"{where}: expected a number, got {value!r}")
    # json.load accepts the Infinity/NaN extensions; keep them out here.
    if not math.isfinite(value):
        raise DocumentError(f"{where}: expected a finite number, got {value!r}")
    return float(value)


def document_from_data(data: object, path: str = "$") -> PolygonDocument:
    """Build a document from already-decoded JSON data."""
    if not isinstance(data, dict):
        raise DocumentError(f"{path}: expected an object", path)
    unknown = set(data) - {"name", "vertices", "distances"}
    if unknown:
        raise DocumentError(
            f"{path}: unknown keys {sorted(unknown)}", path
        )
    name = data.get("name", "")
    if not isinstance(name, str):
        raise DocumentError(f"{path}.name: expected a string", path)
    has_v = "vertices" in data
    has_d = "distances" in data
    if has_v == has_d:
        raise DocumentError(
            f"{path}: exactly one of vertices/distances is required", path
        )

    if has_v:
        raw = data["vertices"]
        if not isinstance(raw, list) or len(raw) < 3:
            raise DocumentError(
                f"{path}.vertices: expected an array of at least 3 pairs", path
            )
        points = []
        for k, pair in enumerate(raw):
            if not isinstance(pair, list) or len(pair) != 2:
                raise DocumentError(
                    f"{path}.vertices[{k}]: expected [x, y]", path
                )
            points.append(
                Point2(
                    _number(pair[0], f"{path}.vertices[{k}][0]"),
                    _number(pair[1], f"{path}.vertices[{k}][1]"),
                )
            )
        try:
            return PolygonDocument(name, Polygon(tuple(points)), None)
        except ValueError as exc:
            raise DocumentError(f"{path}.vertices: {exc}", path) from exc

    raw = data["distances"]
    if not isinstance(raw, list) or len(raw) < 3:
        raise DocumentError(
            f"{path}.distances: expected at least 3 rows", path
        )
    rows = []
    for i, row in enumerate(raw):
        if not isinstance(row, list) or len(row) != len(raw):
            raise DocumentError(
                f"{path}.distances[{i}]: expected {len(raw)} entries", path
            )
        rows.append(
            tuple(
                _number(v, f"{path}.distances[{i}][{j}]")
                for j, v in enumerate(row)
            )
        )
    try:
        return PolygonDocument(name, None, DistanceMatrix(tuple(rows)))
    except ValueError as exc:
        raise DocumentError(f"{path}.distances: {exc}", path) from exc


def read_document(path: str) -> PolygonDocument:
    try:
        with open(path, "r", encoding="utf-8") as fh:
            data = json.load(fh)
    except OSError as exc:
        reason = exc.strerror or str(exc)
        raise DocumentError(f"cannot read {path}: {reason}", path) from exc
    except json.JSONDecodeError as exc:
        raise DocumentError(
            f"{path} is not valid JSON: {exc}", path
        ) from exc
    try:
        return document_from_data(data)
    except DocumentError as exc:
        raise DocumentError(f"{path}: {exc}", path) from exc


def document_to_data(doc: PolygonDocument) -> dict:
    data: dict = {}
    if doc.name:
        data["name"] = doc.name
    if doc.vertices is not None:
        data["vertices"] = [[v.x, v.y] for v in doc.vertices.vertices]
    else:
        assert doc.distances is not None
        data["distances"] = [list(row) for row in doc.distances.d]
    return data


def write_document(doc: PolygonDocument, path: str) -> None:
    data = document_to_data(doc)
    try:
        with open(path, "w", encoding="utf-8") as fh:
            json.dump(data, fh, indent=2)
            fh.write("\n")
    except OSError as exc:
        raise DocumentError(f"cannot write {path}: {exc}", path) from exc

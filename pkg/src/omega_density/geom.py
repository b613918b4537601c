"""Planar convex geometry: polygons, areas, support functions, support hexagons.

All coordinates are float64.  Polygons are immutable; their vertex arrays are
stored read-only and always listed counterclockwise.
"""
from __future__ import annotations

import json
import math
from dataclasses import dataclass, field
from typing import NamedTuple, Sequence

import numpy as np

from . import kernels
from .errors import (
    DegenerateConfigurationError,
    InvalidInputError,
    NotCentrallySymmetricError,
)

CONVEX_TOL = 1e-12
SYMMETRY_TOL = 1e-9


class Point(NamedTuple):
    x: float
    y: float


def _as_vertices(vertices) -> np.ndarray:
    arr = np.array(vertices, dtype=float)
    if arr.ndim != 2 or arr.shape[1] != 2:
        raise InvalidInputError(f"expected an (N, 2) vertex array, got shape {arr.shape}")
    if not np.all(np.isfinite(arr)):
        raise InvalidInputError("vertex coordinates must be finite")
    arr.setflags(write=False)
    return arr


def _scale(arr: np.ndarray) -> float:
    ext = float(np.max(np.ptp(arr, axis=0))) if len(arr) else 0.0
    return ext if ext > 0 else 1.0


def _shoelace(arr: np.ndarray) -> float:
    x, y = arr[:, 0], arr[:, 1]
    return 0.5 * float(np.sum(x * np.roll(y, -1) - np.roll(x, -1) * y))


def _turns(arr: np.ndarray) -> np.ndarray:
    e = np.roll(arr, -1, axis=0) - arr
    f = np.roll(e, -1, axis=0)
    return e[:, 0] * f[:, 1] - e[:, 1] * f[:, 0]


@dataclass(frozen=True, eq=False)
class ConvexPolygon:
    vertices: np.ndarray

    def __post_init__(self):
        arr = _as_vertices(self.vertices)
        if len(arr) < 3:
            raise InvalidInputError("a polygon needs at least 3 vertices")
        scale = _scale(arr)
        gaps = np.hypot(*(np.roll(arr, -1, axis=0) - arr).T)
        if np.any(gaps < CONVEX_TOL * scale):
            raise InvalidInputError("duplicate consecutive vertices")
        if np.any(_turns(arr) <= -CONVEX_TOL * scale**2):
            raise InvalidInputError("vertices are not in convex counterclockwise position")
        if _shoelace(arr) <= 0:
            raise InvalidInputError("polygon has non-positive area")
        object.__setattr__(self, "vertices", arr)

    def __len__(self):
        return len(self.vertices)

    def points(self) -> list[Point]:
        return [Point(float(x), float(y)) for x, y in self.vertices]

    @property
    def scale(self) -> float:
        return _scale(self.vertices)


@dataclass(frozen=True, eq=False)
class CSPolygon:
    """Origin-centred centrally symmetric polygon, stored by half its vertices.

    The full vertex list is ``half`` followed by ``-half``; for it to be
    counterclockwise, ``half`` must cover strictly less than a half-turn.
    """

    half: np.ndarray
    polygon: ConvexPolygon = field(init=False, repr=False)

    def __post_init__(self):
        half = _as_vertices(self.half)
        if len(half) < 2:
            raise InvalidInputError("a centrally symmetric polygon needs m >= 2")
        object.__setattr__(self, "half", half)
        object.__setattr__(self, "polygon", ConvexPolygon(np.vstack([half, -half])))

    @property
    def m(self) -> int:
        return len(self.half)

    @property
    def vertices(self) -> np.ndarray:
        return self.polygon.vertices

    @property
    def scale(self) -> float:
        return self.polygon.scale

    def transformed(self, matrix) -> CSPolygon:
        """Image under a linear map; orientation is restored if the map reverses it."""
        mat = np.asarray(matrix, dtype=float)
        half = self.half @ mat.T
        if np.linalg.det(mat) < 0:
            full = np.vstack([half, -half])[::-1]
            half = full[: self.m]
        return CSPolygon(half)

    def scaled(self, c: float) -> CSPolygon:
        return CSPolygon(self.half * c)

    @classmethod
    def regular(cls, n: int, circumradius: float = 1.0, phase: float = 0.0) -> CSPolygon:
        if n % 2 or n < 4:
            raise InvalidInputError("a regular centrally symmetric polygon needs an even n >= 4")
        k = np.arange(n // 2)
        ang = phase + 2 * math.pi * k / n
        return cls(circumradius * np.column_stack([np.cos(ang), np.sin(ang)]))

    @classmethod
    def from_vertices(cls, vertices, tol: float = SYMMETRY_TOL) -> CSPolygon:
        """Build from a full CCW vertex list, re-centred on its vertex centroid.

        Raises NotCentrallySymmetricError unless v[i + m] == -v[i] within
        ``tol`` times the polygon scale.
        """
        arr = _as_vertices(vertices)
        n = len(arr)
        if n < 4 or n % 2:
            raise NotCentrallySymmetricError(f"{n} vertices cannot form a centrally symmetric polygon")
        arr = arr - arr.mean(axis=0)
        m = n // 2
        err = float(np.max(np.abs(arr[m:] + arr[:m])))
        if err > tol * _scale(arr):
            raise NotCentrallySymmetricError(f"not centrally symmetric (max mismatch {err:.3g})")
        ConvexPolygon(arr)
        return cls(0.5 * (arr[:m] - arr[m:]))


@dataclass(frozen=True, eq=False)
class Hexagon:
    """Six CCW vertices; repeated or collinear vertices are allowed."""

    vertices: np.ndarray

    def __post_init__(self):
        arr = _as_vertices(self.vertices)
        if len(arr) != 6:
            raise InvalidInputError(f"a hexagon has 6 vertices, got {len(arr)}")
        tol = 1e-9 * _scale(arr) ** 2
        if _shoelace(arr) < -tol or np.any(_turns(arr) < -tol):
            raise InvalidInputError("hexagon vertices are not weakly convex and counterclockwise")
        object.__setattr__(self, "vertices", arr)

    def points(self) -> list[Point]:
        return [Point(float(x), float(y)) for x, y in self.vertices]


def _vertices_of(poly) -> np.ndarray:
    if isinstance(poly, (ConvexPolygon, CSPolygon, Hexagon)):
        return poly.vertices
    return _as_vertices(poly)


def area(poly) -> float:
    """Shoelace area of a polygon, hexagon or raw CCW vertex array."""
    arr = _vertices_of(poly)
    if len(arr) < 3:
        raise InvalidInputError("area needs at least 3 vertices")
    return _shoelace(arr)


def support_value(poly, angle: float) -> float:
    return float(kernels.support(_vertices_of(poly), float(angle) % (2 * math.pi)))


def hexagon_from_support_angles(poly: CSPolygon, angles: Sequence[float]) -> Hexagon:
    """Hexagon cut out by the support lines of ``poly`` at the given angles and their opposites.

    Angles must satisfy 0 <= a < b < c < pi with every cyclic gap (including
    pi - (c - a)) at least 1e-9.
    """
    a, b, c = (float(t) for t in angles)
    if not (0.0 <= a < b < c < math.pi):
        raise DegenerateConfigurationError("support angles must satisfy 0 <= a < b < c < pi")
    if min(b - a, c - b, math.pi - (c - a)) < kernels.MIN_GAP:
        raise DegenerateConfigurationError("adjacent support lines are nearly parallel")
    verts = _vertices_of(poly)
    out = np.empty((3, 2))
    kernels.hexagon_half(verts, a, b, c, out)
    return Hexagon(np.vstack([out, -out]))


def contains_point(poly, p, tol: float = 1e-9) -> bool:
    """Half-plane test; points within ``tol`` of the boundary count as inside."""
    arr = _vertices_of(poly)
    px, py = float(p[0]), float(p[1])
    e = np.roll(arr, -1, axis=0) - arr
    length = np.hypot(e[:, 0], e[:, 1])
    # near-duplicate vertices leave edges with arbitrary direction
    keep = length > CONVEX_TOL * _scale(arr)
    cross = e[:, 0] * (py - arr[:, 1]) - e[:, 1] * (px - arr[:, 0])
    return bool(np.all(cross[keep] / length[keep] >= -tol))


def load_polygon_json(source) -> ConvexPolygon:
    """Read ``{"vertices": [[x, y], ...]}`` from a path or an open file."""
    data = _read_json(source)
    return ConvexPolygon(_vertex_list(data))


def load_cs_polygon_json(source) -> CSPolygon:
    return CSPolygon.from_vertices(_vertex_list(_read_json(source)))


def polygon_json(poly) -> dict:
    return {"vertices": _vertices_of(poly).tolist()}


def _read_json(source):
    if hasattr(source, "read"):
        return json.load(source)
    with open(source) as fh:
        return json.load(fh)


def _vertex_list(data):
    if not isinstance(data, dict) or "vertices" not in data:
        raise InvalidInputError('polygon JSON must be an object with a "vertices" list')
    return data["vertices"]

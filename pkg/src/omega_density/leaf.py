"""The arcs alpha, beta of the density plane and the leaf region they bound.

Both arcs come from "hybrid" disks built from the unit circle and a concentric
regular hexagon whose vertices point along angle 0:

* intersection disks ``kt_disk(u)``: circle cut by a hexagon of apothem
  ``sqrt(4 - u**2) / 2``, so every hexagon edge line carries a chord of length u;
* hull disks ``lt_disk(v)``: convex hull of the circle and a hexagon of
  circumradius ``2 / sqrt(4 - v**2)``; at each hexagon vertex the two tangent
  segments have total length v relative to the circumradius.

Each disk is sandwiched between a circle and a regular hexagon that tiles, so
its packing and covering densities are area ratios and come out in closed
form.  The closed form of alpha used here carries a factor ``u`` in front of
``3 * sqrt(4 - u**2)``; without it the arc misses both of its endpoints (see
`alpha_point(printed=True)` for the uncorrected expression).
"""
from __future__ import annotations

import functools
import math
from dataclasses import dataclass
from enum import Enum
from typing import NamedTuple

import numpy as np

from .errors import DomainError, InvalidInputError, SandwichOrderError
from .geom import contains_point

SQRT3 = math.sqrt(3.0)
# density pair of the circular disk
CIRCLE_POINT = (math.pi / math.sqrt(12.0), 2 * math.pi / math.sqrt(27.0))
TILE_POINT = (1.0, 1.0)
DEFAULT_SAMPLES = 4096

# relative slack for sandwich ordering, so that a tile measured against itself passes
_ORDER_SLACK = 1e-12


class DensityPoint(NamedTuple):
    delta: float
    theta: float


class HybridKind(Enum):
    INTERSECTION = "intersection"
    HULL = "hull"


def _check_param(name: str, value: float) -> float:
    value = float(value)
    if not (0.0 <= value <= 1.0):
        raise DomainError(f"{name} must lie in [0, 1], got {value!r}")
    return value


def _asin_half(x: float) -> float:
    return math.asin(min(1.0, max(-1.0, x / 2.0)))


def alpha_numerator(u: float, printed: bool = False) -> float:
    """Twice the area of ``kt_disk(u)``.

    ``printed=True`` returns the expression without the factor u on the
    square-root term, kept only as a negative control.
    """
    u = _check_param("u", u)
    root = math.sqrt(4.0 - u * u)
    tail = 3.0 * root if printed else 3.0 * u * root
    return 2 * math.pi - 12.0 * _asin_half(u) + tail


def alpha_point(u: float, printed: bool = False) -> DensityPoint:
    n = alpha_numerator(u, printed=printed)
    u = float(u)
    return DensityPoint(n / (SQRT3 * (4.0 - u * u)), n / (3.0 * SQRT3))


def beta_point(v: float) -> DensityPoint:
    v = _check_param("v", v)
    root = math.sqrt(4.0 - v * v)
    w = math.pi / 6 - _asin_half(v)
    return DensityPoint(SQRT3 * (w + v / root), (SQRT3 / 3.0) * ((4.0 - v * v) * w + v * root))


@dataclass(frozen=True)
class HybridDisk:
    """Unit circle combined with a concentric regular hexagon (vertex at angle 0).

    ``param`` is u for the intersection kind and v for the hull kind.
    """

    kind: HybridKind
    param: float
    circle_radius: float = 1.0
    orientation: float = 0.0

    def __post_init__(self):
        _check_param("u" if self.kind is HybridKind.INTERSECTION else "v", self.param)
        if self.circle_radius != 1.0 or self.orientation != 0.0:
            raise InvalidInputError("hybrid disks are normalised to a unit circle at orientation 0")

    @property
    def hex_param(self) -> float:
        """Hexagon apothem (intersection kind) or circumradius (hull kind)."""
        p = self.param
        if self.kind is HybridKind.INTERSECTION:
            return math.sqrt(4.0 - p * p) / 2.0
        return 2.0 / math.sqrt(4.0 - p * p)

    @property
    def hexagon_circumradius(self) -> float:
        if self.kind is HybridKind.INTERSECTION:
            return 2.0 * self.hex_param / SQRT3
        return self.hex_param

    def hexagon_vertices(self) -> np.ndarray:
        return _regular_hexagon(self.hexagon_circumradius)

    def breakpoints(self) -> np.ndarray:
        """Polar angles where the boundary switches between arc and segment."""
        if self.kind is HybridKind.INTERSECTION:
            half = math.acos(min(1.0, self.hex_param))
            normals = math.pi / 6 + np.arange(6) * math.pi / 3
            pts = np.concatenate([normals - half, normals + half])
        else:
            half = math.acos(min(1.0, 1.0 / self.hex_param))
            corners = np.arange(6) * math.pi / 3
            pts = np.concatenate([corners - half, corners, corners + half])
        return np.mod(pts, 2 * math.pi)

    def boundary_radius(self, phi) -> np.ndarray:
        """Distance from the centre to the boundary along polar angle ``phi``."""
        phi = np.asarray(phi, dtype=float)
        if self.kind is HybridKind.INTERSECTION:
            d = self.hex_param
            # offset from the nearest edge normal at pi/6 + k*pi/3
            off = np.mod(phi, math.pi / 3) - math.pi / 6
            return np.minimum(1.0, d / np.cos(off))
        psi = math.acos(min(1.0, 1.0 / self.hex_param))
        off = np.abs(np.mod(phi + math.pi / 6, math.pi / 3) - math.pi / 6)
        on_segment = off <= psi
        r = np.ones_like(off)
        r[on_segment] = 1.0 / np.cos(off[on_segment] - psi)
        return r

    def contains(self, p, tol: float = 1e-9) -> bool:
        x, y = float(p[0]), float(p[1])
        rho = math.hypot(x, y)
        return bool(rho <= float(self.boundary_radius(math.atan2(y, x))) + tol)

    # sandwich tiles: inner tile lies in the disk, outer tile contains it

    def inner_tile(self) -> np.ndarray:
        if self.kind is HybridKind.INTERSECTION:
            return _regular_hexagon(1.0)
        return self.hexagon_vertices()

    def outer_tile(self) -> np.ndarray:
        if self.kind is HybridKind.INTERSECTION:
            return self.hexagon_vertices()
        return _regular_hexagon(2.0 / SQRT3)

    def inner_tile_area(self) -> float:
        if self.kind is HybridKind.INTERSECTION:
            return 1.5 * SQRT3
        return 1.5 * SQRT3 * self.hex_param**2

    def outer_tile_area(self) -> float:
        if self.kind is HybridKind.INTERSECTION:
            return 2.0 * SQRT3 * self.hex_param**2
        return 2.0 * SQRT3


def _regular_hexagon(circumradius: float) -> np.ndarray:
    ang = np.arange(6) * math.pi / 3
    return circumradius * np.column_stack([np.cos(ang), np.sin(ang)])


def kt_disk(u: float) -> HybridDisk:
    return HybridDisk(HybridKind.INTERSECTION, _check_param("u", u))


def lt_disk(v: float) -> HybridDisk:
    return HybridDisk(HybridKind.HULL, _check_param("v", v))


def hybrid_area_closed(h: HybridDisk) -> float:
    p = h.param
    if h.kind is HybridKind.INTERSECTION:
        # six circular segments of chord u are cut away
        return math.pi - 6.0 * (_asin_half(p) - 0.25 * p * math.sqrt(4.0 - p * p))
    tangent = p / math.sqrt(4.0 - p * p)
    return math.pi + 6.0 * (tangent - _asin_half(p))


def hybrid_area_oracle(h: HybridDisk, n: int) -> float:
    """Area of the polygon through n equally spaced boundary points plus all breakpoints.

    Built from the radial boundary function alone, independently of the
    segment formulas in `hybrid_area_closed`.
    """
    if n < 96 or n % 6:
        raise DomainError("oracle resolution n must be a multiple of 6 and at least 96")
    phi = np.unique(np.concatenate([2 * math.pi * np.arange(n) / n, h.breakpoints()]))
    r = h.boundary_radius(phi)
    x, y = r * np.cos(phi), r * np.sin(phi)
    return 0.5 * float(np.sum(x * np.roll(y, -1) - np.roll(x, -1) * y))


def generated_packing_density(body_area: float, tile_area: float) -> float:
    """Density of the packing generated by a tile containing the body."""
    if not (0 < body_area <= tile_area * (1 + _ORDER_SLACK)):
        raise SandwichOrderError(f"packing needs 0 < body ({body_area}) <= tile ({tile_area})")
    return min(1.0, body_area / tile_area)


def generated_covering_density(body_area: float, tile_area: float) -> float:
    """Density of the covering generated by a tile contained in the body."""
    if not (0 < tile_area <= body_area * (1 + _ORDER_SLACK)):
        raise SandwichOrderError(f"covering needs 0 < tile ({tile_area}) <= body ({body_area})")
    return max(1.0, body_area / tile_area)


def hybrid_density(h: HybridDisk, body_area: float | None = None) -> DensityPoint:
    """Density pair of a hybrid disk from its sandwich tiles.

    ``body_area`` defaults to the closed-form area; pass an oracle area to
    get the independently derived pair.
    """
    a = hybrid_area_closed(h) if body_area is None else body_area
    return DensityPoint(
        generated_packing_density(a, h.outer_tile_area()),
        generated_covering_density(a, h.inner_tile_area()),
    )


def oracle_density(h: HybridDisk, n: int = 6 * 2**12) -> DensityPoint:
    return hybrid_density(h, hybrid_area_oracle(h, n))


def alpha_arc(samples: int) -> np.ndarray:
    """alpha sampled at u = 1 -> 0, as an (samples, 3) array of (u, delta, theta)."""
    us = np.linspace(1.0, 0.0, samples)
    return np.array([(u, *alpha_point(u)) for u in us])


def beta_arc(samples: int) -> np.ndarray:
    vs = np.linspace(0.0, 1.0, samples)
    return np.array([(v, *beta_point(v)) for v in vs])


def leaf_boundary(samples_per_arc: int) -> np.ndarray:
    """Closed polyline around the leaf: alpha from (1, 1) to C, then beta back to (1, 1).

    The shared point C appears once; the final row repeats the first, so the
    result has ``2 * samples_per_arc - 1`` rows.
    """
    if samples_per_arc < 2:
        raise InvalidInputError("samples_per_arc must be at least 2")
    a = alpha_arc(samples_per_arc)[:, 1:]
    b = beta_arc(samples_per_arc)[1:, 1:]
    return np.vstack([a, b])


@functools.lru_cache(maxsize=8)
def _leaf_polygon(samples: int) -> np.ndarray:
    # alpha runs along the top right to left, so the ring is already counterclockwise
    ring = leaf_boundary(samples)[:-1].copy()
    ring.setflags(write=False)
    return ring


def leaf_polygon(samples: int = DEFAULT_SAMPLES) -> np.ndarray:
    return _leaf_polygon(int(samples))


def leaf_contains(p, samples: int = DEFAULT_SAMPLES, tol: float = 1e-9) -> bool:
    if samples < 64:
        raise InvalidInputError("leaf membership needs at least 64 samples per arc")
    return contains_point(_leaf_polygon(int(samples)), p, tol)


def arcs_csv_rows(samples: int):
    """Rows (arc, param, delta, theta) in leaf-boundary order."""
    for u, d, t in alpha_arc(samples):
        yield "alpha", u, d, t
    for v, d, t in beta_arc(samples)[1:]:
        yield "beta", v, d, t


def write_arcs_csv(fh, samples: int) -> int:
    fh.write("arc,param,delta,theta\n")
    n = 0
    for arc, p, d, t in arcs_csv_rows(samples):
        fh.write(f"{arc},{p:.17g},{d:.17g},{t:.17g}\n")
        n += 1
    return n

"""Regions of the density plane (x = packing density, y = covering density).

* ``P``   pentagon cut out by the five known bounds valid for every convex disk;
* ``P0``  region for centrally symmetric disks (lattice densities): P with the
  sharp ceiling 2*pi/sqrt(27), plus x + y >= 2, y <= 1 + (5/4) sqrt(1 - x)
  and x * y >= 1;
* ``U``   exact range of the density pairs of centrally symmetric octagons;
* the leaf, delegated to :mod:`omega_density.leaf`.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Callable

import numpy as np

from . import leaf
from .errors import DomainError
from .geom import Point

TOL = 1e-9

PACKING_FLOOR = math.sqrt(3.0) / 2.0  # delta >= sqrt(3)/2 for every convex disk
COVERING_CEILING = 1.2281772  # best known bound, no closed form
SYMMETRIC_COVERING_CEILING = 2 * math.pi / math.sqrt(27.0)
SLANT = 4.0 / 3.0  # 3 theta <= 4 delta
APEX_Y = 4.0 - 2.0 * math.sqrt(2.0)  # covering density of the regular octagon
APEX_Y_CONJUGATE = 4.0 + 2.0 * math.sqrt(2.0)


def _xy(p) -> tuple[float, float]:
    return float(p[0]), float(p[1])


def _pentagon_violations(x, y, ceiling, tol, prefix):
    out = []
    if x < PACKING_FLOOR - tol:
        out.append(f"{prefix}:left")
    if x > 1.0 + tol:
        out.append(f"{prefix}:right")
    if y < 1.0 - tol:
        out.append(f"{prefix}:floor")
    if y > ceiling + tol:
        out.append(f"{prefix}:ceiling")
    if y > SLANT * x + tol:
        out.append(f"{prefix}:slant")
    return out


def pentagon_P_violations(p, tol: float = TOL) -> list[str]:
    return _pentagon_violations(*_xy(p), COVERING_CEILING, tol, "P")


def pentagon_P_contains(p, tol: float = TOL) -> bool:
    return not pentagon_P_violations(p, tol)


def pentagon_P_vertices() -> list[Point]:
    return [
        Point(PACKING_FLOOR, 1.0),
        Point(1.0, 1.0),
        Point(1.0, COVERING_CEILING),
        Point(COVERING_CEILING / SLANT, COVERING_CEILING),
        Point(PACKING_FLOOR, SLANT * PACKING_FLOOR),
    ]


def region_P0_violations(p, tol: float = TOL) -> list[str]:
    x, y = _xy(p)
    out = _pentagon_violations(x, y, SYMMETRIC_COVERING_CEILING, tol, "P0")
    if x + y < 2.0 - tol:
        out.append("P0:sum")
    if y > 1.0 + 1.25 * math.sqrt(max(0.0, 1.0 - x)) + tol:
        out.append("P0:sqrt")
    if x * y < 1.0 - tol:
        out.append("P0:product")
    return out


def region_P0_contains(p, tol: float = TOL) -> bool:
    return not region_P0_violations(p, tol)


def prose_sqrt_curve_ok(p, tol: float = TOL) -> bool:
    """Diagnostic only: y <= 1 + sqrt(1 - x), the curve without the 5/4 factor."""
    x, y = _xy(p)
    return y <= 1.0 + math.sqrt(max(0.0, 1.0 - x)) + tol


def U_bounds(y: float) -> tuple[float, float]:
    """Left and right abscissae of the octagon range U at height y."""
    y = float(y)
    if not (1.0 <= y <= APEX_Y):
        raise DomainError(f"U is defined for 1 <= y <= 4 - 2*sqrt(2), got {y!r}")
    x_min = (5 * y * y - 12 * y + 8) / (2 * y * y - 5 * y + 4)
    # y^2 - 8y + 8 in factored form, so that it vanishes exactly at the apex
    radicand = (y - APEX_Y) * (y - APEX_Y_CONJUGATE)
    x_max = y * (y + 4 + math.sqrt(max(0.0, radicand))) / (4 * y + 2)
    return x_min, x_max


def U_violations(p, tol: float = TOL) -> list[str]:
    x, y = _xy(p)
    if y < 1.0 - tol:
        return ["U:floor"]
    if y > APEX_Y + tol:
        return ["U:ceiling"]
    x_min, x_max = U_bounds(min(max(y, 1.0), APEX_Y))
    out = []
    if x < x_min - tol:
        out.append("U:lower")
    if x > x_max + tol:
        out.append("U:upper")
    return out


def U_contains(p, tol: float = TOL) -> bool:
    return not U_violations(p, tol)


def inequality_suite(p, tol: float = TOL) -> list[str]:
    """Every bound asserted for lattice densities of centrally symmetric disks.

    Returns the names of the violated ones.
    """
    x, y = _xy(p)
    out = []
    if not (0.0 < x <= 1.0 + tol and y >= 1.0 - tol):
        out.append("chain")
    if 3 * y > 4 * x + tol:
        out.append("slant")
    if x + y < 2.0 - tol:
        out.append("sum")
    if x * y < 1.0 - tol:
        out.append("product")
    if y > 1.0 + 1.25 * math.sqrt(max(0.0, 1.0 - x)) + tol:
        out.append("sqrt")
    if y > SYMMETRIC_COVERING_CEILING + tol:
        out.append("ceiling")
    return out


@dataclass
class RegionReport:
    point: leaf.DensityPoint
    in_P: bool
    in_P0: bool
    in_U: bool
    in_leaf: bool
    violated: list[str] = field(default_factory=list)

    def to_json(self) -> dict:
        return {
            "point": {"delta": self.point.delta, "theta": self.point.theta},
            "in_P": self.in_P,
            "in_P0": self.in_P0,
            "in_U": self.in_U,
            "in_leaf": self.in_leaf,
            "violated": list(self.violated),
        }


def classify(p, tol: float = TOL, leaf_samples: int = leaf.DEFAULT_SAMPLES) -> RegionReport:
    x, y = _xy(p)
    vp = pentagon_P_violations((x, y), tol)
    vp0 = region_P0_violations((x, y), tol)
    vu = U_violations((x, y), tol)
    in_leaf = leaf.leaf_contains((x, y), leaf_samples, tol)
    violated = vp + vp0 + vu + ([] if in_leaf else ["leaf:outside"])
    return RegionReport(leaf.DensityPoint(x, y), not vp, not vp0, not vu, in_leaf, violated)


# boundary polylines, counterclockwise and closed (last point repeats the first)

def pentagon_P_boundary() -> np.ndarray:
    v = np.array(pentagon_P_vertices())
    return np.vstack([v, v[:1]])


def _p0_upper(x):
    return min(SYMMETRIC_COVERING_CEILING, SLANT * x, 1.0 + 1.25 * math.sqrt(max(0.0, 1.0 - x)))


def _p0_lower(x):
    return max(1.0, 2.0 - x, 1.0 / x)


def region_P0_boundary(n: int = 512) -> np.ndarray:
    # the hyperbola xy = 1 meets the slant side exactly at x = sqrt(3)/2, and all
    # upper bounds meet y = 1 at x = 1, so P0 pinches at both ends of [sqrt(3)/2, 1]
    xs = np.linspace(PACKING_FLOOR, 1.0, n)
    lower = np.array([[x, _p0_lower(x)] for x in xs])
    upper = np.array([[x, _p0_upper(x)] for x in xs[-2:0:-1]])
    return np.vstack([lower, upper, lower[:1]])


def U_boundary(n: int = 512) -> np.ndarray:
    ys = np.linspace(1.0, APEX_Y, n)
    bounds = np.array([U_bounds(y) for y in ys])
    right = np.column_stack([bounds[:, 1], ys])
    left = np.column_stack([bounds[::-1, 0], ys[::-1]])
    return np.vstack([right, left[1:]])


def leaf_boundary(n: int = 512) -> np.ndarray:
    return leaf.leaf_boundary(n)


@dataclass(frozen=True)
class Region:
    name: str
    contains: Callable[..., bool]
    boundary: Callable[..., np.ndarray]


REGIONS = {
    "P": Region("P", pentagon_P_contains, lambda n=0: pentagon_P_boundary()),
    "P0": Region("P0", region_P0_contains, region_P0_boundary),
    "U": Region("U", U_contains, U_boundary),
    "leaf": Region("leaf", lambda p, tol=TOL: leaf.leaf_contains(p, tol=tol), leaf_boundary),
}


def leaf_U_overlap(n: int = 100, samples: int = 1024) -> float:
    """Fraction of the leaf's area (on an n-by-n grid) that also lies in U."""
    ring = leaf.leaf_polygon(samples)
    lo, hi = ring.min(axis=0), ring.max(axis=0)
    xs = np.linspace(lo[0], hi[0], n)
    ys = np.linspace(lo[1], hi[1], n)
    inside = both = 0
    for y in ys:
        for x in xs:
            if leaf.leaf_contains((x, y), samples, 0.0):
                inside += 1
                both += U_contains((x, y), 0.0)
    return both / inside if inside else 0.0

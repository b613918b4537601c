"""Lattice densities of centrally symmetric polygons from extremal hexagons.

For a centrally symmetric convex disk K, the lattice packing density is
``|K| / |H(K)|`` and the lattice covering density is ``|K| / |h(K)|``, where
``H(K)`` is the smallest hexagon containing K and ``h(K)`` the largest hexagon
contained in it.  Both extremal hexagons may be taken centrally symmetric.
"""
from __future__ import annotations

import itertools
import math
from dataclasses import dataclass

import numpy as np

from . import kernels
from .errors import InvalidInputError
from .geom import CSPolygon, Hexagon, area, hexagon_from_support_angles
from .leaf import DensityPoint

DEFAULT_GRID = 48
DEFAULT_REFINEMENTS = 3
DESCENT_TOL = 1e-10
MAX_SWEEPS = 200
SCAN = 48
KEEP = 10

# relative window inside which two inscribed areas count as tied
_TIE = 1e-13


@dataclass(frozen=True, eq=False)
class DowkerResult:
    area: float
    inscribed: Hexagon
    circumscribed: Hexagon
    inscribed_area: float
    circumscribed_area: float
    densities: DensityPoint
    inscribed_triple: tuple = ()
    support_angles: tuple = ()

    @property
    def delta_L(self) -> float:
        return self.densities.delta

    @property
    def theta_L(self) -> float:
        return self.densities.theta

    def to_json(self) -> dict:
        return {
            "area": self.area,
            "inscribed": {"vertices": self.inscribed.vertices.tolist(), "area": self.inscribed_area},
            "circumscribed": {
                "vertices": self.circumscribed.vertices.tolist(),
                "area": self.circumscribed_area,
            },
            "delta_L": self.delta_L,
            "theta_L": self.theta_L,
        }


def _cs(K) -> CSPolygon:
    if not isinstance(K, CSPolygon):
        raise InvalidInputError("Dowker optimisers need a CSPolygon")
    return K


def inscribed_max_cs_hexagon(K: CSPolygon) -> tuple[Hexagon, float]:
    hexagon, a, _ = _inscribed(K)
    return hexagon, a


def _inscribed(K):
    K = _cs(K)
    verts = np.ascontiguousarray(K.vertices)
    triples, areas = kernels.inscribed_areas(verts)
    best = float(areas.max())
    # enumeration order is lexicographic, so the first near-maximal triple wins ties
    r = int(np.flatnonzero(areas >= best - _TIE * abs(best))[0])
    i, j, k = (int(t) for t in triples[r])
    p = verts[[i, j, k]]
    return Hexagon(np.vstack([p, -p])), float(areas[r]), (i, j, k)


def inscribed_bruteforce_oracle(K: CSPolygon) -> float:
    """Largest hexagon on K's vertices with no symmetry assumption (2m <= 16)."""
    verts = _cs(K).vertices
    n = len(verts)
    if n > 16:
        raise InvalidInputError("brute-force oracle is limited to 16 vertices")
    combos = np.array(list(itertools.combinations(range(n), min(6, n))))
    x = verts[combos, 0]
    y = verts[combos, 1]
    areas = 0.5 * np.sum(x * np.roll(y, -1, axis=1) - np.roll(x, -1, axis=1) * y, axis=1)
    return float(areas.max())


def edge_normal_angles(K: CSPolygon) -> np.ndarray:
    """Distinct outward edge-normal directions of K, reduced mod pi and sorted."""
    v = K.vertices
    e = np.roll(v, -1, axis=0) - v
    ang = np.mod(np.arctan2(-e[:, 0], e[:, 1]), math.pi)
    ang = np.sort(ang)
    keep = np.concatenate([[True], np.diff(ang) > kernels.MIN_GAP])
    ang = ang[keep]
    if len(ang) > 1 and ang[0] + math.pi - ang[-1] <= kernels.MIN_GAP:
        ang = ang[:-1]
    return ang


def circumscribed_min_cs_hexagon(K: CSPolygon, grid: int = DEFAULT_GRID,
                                 refinements: int = DEFAULT_REFINEMENTS) -> tuple[Hexagon, float]:
    hexagon, a, _ = _circumscribed(K, grid, refinements)
    return hexagon, a


def _circumscribed(K, grid=DEFAULT_GRID, refinements=DEFAULT_REFINEMENTS):
    K = _cs(K)
    if grid < 24:
        raise InvalidInputError("grid must be at least 24")
    if refinements < 1:
        raise InvalidInputError("refinements must be at least 1")
    verts = np.ascontiguousarray(K.vertices)

    normals = edge_normal_angles(K)
    if len(normals) >= 3:
        flush = np.array(list(itertools.combinations(normals, 3)))
        flush_areas = kernels.hexagon_areas_np(verts, flush)
    else:
        flush = np.empty((0, 3))
        flush_areas = np.empty(0)
    grid_areas, grid_angles = kernels.grid_areas(verts, grid)
    seeds = np.vstack([flush, grid_angles])
    seed_areas = np.concatenate([flush_areas, grid_areas])
    order = np.argsort(seed_areas, kind="stable")[:KEEP]

    best_t, best_f = seeds[order[0]].copy(), float(seed_areas[order[0]])
    for r in order:
        t, f, _ = kernels.coordinate_descent(verts, seeds[r].copy(), DESCENT_TOL, MAX_SWEEPS, SCAN)
        if f < best_f:
            best_t, best_f = t, f
    # later rounds restart from the incumbent with a denser scan per line
    for rnd in range(1, refinements):
        t, f, _ = kernels.coordinate_descent(verts, best_t.copy(), DESCENT_TOL, MAX_SWEEPS,
                                             SCAN * 2**rnd)
        if f < best_f:
            best_t, best_f = t, f

    best_t, best_f = _snap_to_normals(verts, best_t, best_f, normals)
    best_t = np.array(kernels.sorted_angles(*best_t))
    hexagon = hexagon_from_support_angles(K, best_t)
    return hexagon, area(hexagon), tuple(float(t) for t in best_t)


def _snap_to_normals(verts, t, f, normals, reach=1e-6):
    """Move lines that stopped next to an edge normal exactly onto it, if that helps.

    Optima often sit on a kink (a side flush with an edge of K); the line
    search only gets within its tolerance of such a kink.
    """
    t = np.array(t, dtype=float)
    for _ in range(3):
        changed = False
        for k in range(3):
            for nrm in normals:
                d = abs((t[k] - nrm + math.pi / 2) % math.pi - math.pi / 2)
                if 0 < d <= reach:
                    trial = t.copy()
                    trial[k] = nrm
                    g = kernels.unordered_area(verts, *trial)
                    if g <= f:
                        t, f, changed = trial, g, True
        if not changed:
            break
    return t, f


def _snap(ratio: float) -> float:
    # tiles give ratios of exactly 1 up to rounding; larger deviations are left visible
    return 1.0 if abs(ratio - 1.0) < 1e-12 else ratio


def lattice_densities(K: CSPolygon, grid: int = DEFAULT_GRID,
                      refinements: int = DEFAULT_REFINEMENTS) -> DowkerResult:
    K = _cs(K)
    a = area(K)
    inner, inner_area, triple = _inscribed(K)
    outer, outer_area, angles = _circumscribed(K, grid, refinements)
    return DowkerResult(
        area=a,
        inscribed=inner,
        circumscribed=outer,
        inscribed_area=inner_area,
        circumscribed_area=outer_area,
        densities=DensityPoint(_snap(a / outer_area), _snap(a / inner_area)),
        inscribed_triple=triple,
        support_angles=angles,
    )

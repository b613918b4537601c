"""Seeded random centrally symmetric polygons and the lattice-density scatter.

Each polygon index gets its own SplitMix64 substream, seeded with
``seed ^ (index * 0x9E3779B97F4A7C15)`` (mod 2**64), so any row can be
regenerated alone and the scatter is independent of evaluation order.
"""
from __future__ import annotations

import math
import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from typing import Callable

import numpy as np

from .dowker import lattice_densities
from .errors import GenerationFailure, InvalidInputError, OmegaError
from .geom import CSPolygon
from .regions import U_contains

MASK64 = (1 << 64) - 1
GOLDEN_GAMMA = 0x9E3779B97F4A7C15
MAX_ATTEMPTS = 100
RADIUS_RANGE = (0.3, 1.0)
U_TOL = 1e-7


class SplitMix64:
    def __init__(self, state: int):
        self.state = state & MASK64

    def next_u64(self) -> int:
        self.state = (self.state + GOLDEN_GAMMA) & MASK64
        z = self.state
        z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & MASK64
        z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & MASK64
        return z ^ (z >> 31)

    def uniform(self) -> float:
        """Uniform double in [0, 1) from the top 53 bits."""
        return (self.next_u64() >> 11) * 2.0**-53


def substream(seed: int, index: int) -> SplitMix64:
    return SplitMix64((seed & MASK64) ^ ((index * GOLDEN_GAMMA) & MASK64))


def _strictly_convex(full: np.ndarray) -> bool:
    e = np.roll(full, -1, axis=0) - full
    f = np.roll(e, -1, axis=0)
    turn = e[:, 0] * f[:, 1] - e[:, 1] * f[:, 0]
    scale = float(np.max(np.ptp(full, axis=0)))
    return bool(np.all(turn > 1e-12 * scale * scale))


def random_cs_polygon(seed: int, index: int, m: int) -> CSPolygon:
    """Random centrally symmetric 2m-gon, deterministic in (seed, index, m).

    Per attempt: m angles in [0, pi), sorted, rejected if any cyclic gap is
    below pi / (8m); then m radii in [0.3, 1].  The attempt is rejected if
    the 2m symmetric points are not all hull vertices.
    """
    if m < 2:
        raise InvalidInputError("m must be at least 2")
    rng = substream(seed, index)
    min_gap = math.pi / (8 * m)
    lo, hi = RADIUS_RANGE
    for _ in range(MAX_ATTEMPTS):
        phi = np.sort([math.pi * rng.uniform() for _ in range(m)])
        gaps = np.diff(np.append(phi, phi[0] + math.pi))
        if gaps.min() < min_gap:
            continue
        r = np.array([lo + (hi - lo) * rng.uniform() for _ in range(m)])
        half = np.column_stack([r * np.cos(phi), r * np.sin(phi)])
        if _strictly_convex(np.vstack([half, -half])):
            return CSPolygon(half)
    raise GenerationFailure(f"no valid polygon after {MAX_ATTEMPTS} attempts (seed={seed}, index={index})")


@dataclass(frozen=True)
class ScatterRow:
    index: int
    n_vertices: int
    delta_L: float
    theta_L: float
    in_U: bool

    def csv(self) -> str:
        return (f"{self.index},{self.n_vertices},{self.delta_L:.17g},{self.theta_L:.17g},"
                f"{'true' if self.in_U else 'false'}")


CSV_HEADER = "index,n,delta_L,theta_L,in_U"


class ScatterRowError(OmegaError):
    def __init__(self, index, cause):
        super().__init__(f"scatter row {index} failed: {cause}")
        self.index = index


def scatter_row(seed: int, index: int, m: int,
                polygon_factory: Callable[[int, int, int], CSPolygon] | None = None) -> ScatterRow:
    make = polygon_factory or random_cs_polygon
    try:
        K = make(seed, index, m)
        res = lattice_densities(K)
    except OmegaError as exc:
        raise ScatterRowError(index, exc) from exc
    x, y = res.densities
    return ScatterRow(index, 2 * K.m, x, y, U_contains((x, y), U_TOL))


def _rows_chunk(args):
    seed, m, indices, factory = args
    return [scatter_row(seed, i, m, factory) for i in indices]


def default_workers() -> int:
    env = os.environ.get("OMEGA_THREADS")
    if env:
        return max(1, int(env))
    return 1


def scatter(count: int, seed: int, m: int, workers: int | None = None,
            polygon_factory=None) -> list[ScatterRow]:
    """Lattice density pairs of ``count`` random cs 2m-gons, ordered by index.

    ``workers`` > 1 spreads contiguous index chunks over processes; rows are
    computed per index, so the output does not depend on the worker count.
    """
    if count < 1:
        raise InvalidInputError("count must be at least 1")
    workers = default_workers() if workers is None else max(1, int(workers))
    if workers == 1 or count < 2:
        return _rows_chunk((seed, m, range(count), polygon_factory))
    chunks = [range(i, min(count, i + math.ceil(count / workers)))
              for i in range(0, count, math.ceil(count / workers))]
    with ProcessPoolExecutor(max_workers=workers) as pool:
        parts = pool.map(_rows_chunk, [(seed, m, c, polygon_factory) for c in chunks])
        return [row for part in parts for row in part]


def write_scatter_csv(fh, rows) -> None:
    fh.write(CSV_HEADER + "\n")
    for row in rows:
        fh.write(row.csv() + "\n")

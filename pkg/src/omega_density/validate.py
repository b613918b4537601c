"""Invariant checks run by ``omega validate``.

Each check returns ``(passed, detail)``.  Checks are grouped by module so the
CLI can run one group with ``--only``.
"""
from __future__ import annotations

import math
import time
from dataclasses import dataclass
from typing import Callable

import numpy as np

from . import dowker, geom, leaf, regions, sampler

CHECKS: dict[str, list] = {}


@dataclass
class Options:
    printed_alpha: bool = False


@dataclass
class Outcome:
    name: str
    passed: bool
    detail: str
    seconds: float


def check(module: str):
    def register(fn: Callable):
        CHECKS.setdefault(module, []).append(fn)
        return fn
    return register


def _polygons(count: int, seed: int = 2024, ms=(2, 3, 4)):
    return [sampler.random_cs_polygon(seed, i, ms[i % len(ms)]) for i in range(count)]


def _alpha(u, opts):
    return leaf.alpha_point(u, printed=opts.printed_alpha)


# geom

@check("geom")
def area_scaling(opts):
    worst = 0.0
    for K in _polygons(20):
        a = geom.area(K)
        for c in (0.5, 2.0, 7.0):
            worst = max(worst, abs(geom.area(K.vertices * c + [0.3, -1.1]) / (c * c * a) - 1))
    return worst <= 1e-12, f"max relative error {worst:.2e}"


@check("geom")
def support_symmetry(opts):
    worst = 0.0
    for K in _polygons(20):
        for t in np.linspace(0, math.pi, 37):
            worst = max(worst, abs(geom.support_value(K, t) - geom.support_value(K, t + math.pi)))
    return worst <= 1e-15, f"max |h(t) - h(t + pi)| = {worst:.2e}"


@check("geom")
def support_hexagon_contains_polygon(opts):
    rng = np.random.default_rng(7)
    bad = 0
    for K in _polygons(20):
        for _ in range(20):
            t = np.sort(rng.uniform(0, math.pi, 3))
            if min(t[1] - t[0], t[2] - t[1], math.pi - (t[2] - t[0])) < 1e-3:
                continue
            hexagon = geom.hexagon_from_support_angles(K, t)
            tol = 1e-9 * K.scale
            if not all(geom.contains_point(hexagon, v, tol) for v in K.vertices):
                bad += 1
            if geom.area(hexagon) < geom.area(K) - tol:
                bad += 1
    return bad == 0, f"{bad} containment/area failures"


# leaf

@check("leaf")
def endpoints(opts):
    c = leaf.CIRCLE_POINT
    pts = [(_alpha(0.0, opts), c), (leaf.beta_point(0.0), c),
           (_alpha(1.0, opts), (1.0, 1.0)), (leaf.beta_point(1.0), (1.0, 1.0))]
    err = max(max(abs(p[0] - q[0]), abs(p[1] - q[1])) for p, q in pts)
    return err <= 1e-12, f"max endpoint error {err:.2e}"


@check("leaf")
def oracle_agreement(opts):
    n = 6 * 2**12
    err = 0.0
    for s in np.linspace(0, 1, 33):
        a = leaf.oracle_density(leaf.kt_disk(s), n)
        b = leaf.oracle_density(leaf.lt_disk(s), n)
        pa, pb = _alpha(s, opts), leaf.beta_point(s)
        err = max(err, abs(a[0] - pa[0]), abs(a[1] - pa[1]), abs(b[0] - pb[0]), abs(b[1] - pb[1]))
    return err <= 1e-6, f"max closed-form vs oracle error {err:.2e}"


@check("leaf")
def ratio_identity(opts):
    err = 0.0
    for s in np.linspace(0, 1, 1000):
        target = 3.0 / (4.0 - s * s)
        a, b = _alpha(s, opts), leaf.beta_point(s)
        err = max(err, abs(a[0] / a[1] - target), abs(b[0] / b[1] - target))
    return err <= 1e-12, f"max ratio error {err:.2e}"


@check("leaf")
def monotonicity(opts):
    s = np.linspace(0, 1, 1000)
    a = np.array([_alpha(t, opts) for t in s])
    b = np.array([leaf.beta_point(t) for t in s])
    ok = all(np.all(np.diff(arc[:, 0]) > 0) and np.all(np.diff(arc[:, 1]) < 0) for arc in (a, b))
    return ok, "delta strictly increasing, theta strictly decreasing in the parameter"


def slope_changes(arc: np.ndarray) -> np.ndarray:
    order = np.argsort(arc[:, 0])
    x, y = arc[order, 0], arc[order, 1]
    return np.diff(np.diff(y) / np.diff(x))


@check("leaf")
def arc_shape(opts):
    s = np.linspace(0, 1, 1000)
    a = slope_changes(np.array([_alpha(t, opts) for t in s]))
    b = slope_changes(np.array([leaf.beta_point(t) for t in s]))
    ok = a.max() <= 1e-9 and b.min() >= -1e-9
    return ok, f"alpha max slope change {a.max():.2e}, beta min slope change {b.min():.2e}"


@check("leaf")
def sandwich_containment(opts):
    bad = 0
    phi = np.linspace(0, 2 * math.pi, 600, endpoint=False)
    for s in np.linspace(0, 1, 33):
        for disk in (leaf.kt_disk(s), leaf.lt_disk(s)):
            bad += sum(not disk.contains(v) for v in disk.inner_tile())
            r = disk.boundary_radius(phi)
            outer = disk.outer_tile()
            bad += sum(not geom.contains_point(outer, (ri * math.cos(t), ri * math.sin(t)))
                       for ri, t in zip(r, phi))
    return bad == 0, f"{bad} containment failures"


@check("leaf")
def slant_inequality_on_leaf(opts):
    s = np.linspace(0, 1, 1000)
    worst = -math.inf
    strict = True
    for t in s:
        for p in (_alpha(t, opts), leaf.beta_point(t)):
            gap = 4 * p[0] - 3 * p[1]
            worst = max(worst, -gap)
            if t > 0 and gap <= 0:
                strict = False
    return worst <= 1e-9 and strict, f"max 3y - 4x = {worst:.2e}"


# dowker

@check("dowker")
def exact_values(opts):
    res = {n: dowker.lattice_densities(geom.CSPolygon.regular(n)).densities for n in (4, 6, 8)}
    apex_x = regions.U_bounds(regions.APEX_Y)[0]
    errs = [abs(res[6][0] - 1), abs(res[6][1] - 1)]
    ok = max(errs) <= 1e-9
    ok &= max(abs(res[4][0] - 1), abs(res[4][1] - 1)) <= 1e-6
    ok &= abs(res[8][1] - regions.APEX_Y) <= 1e-6 and abs(res[8][0] - apex_x) <= 1e-6
    return ok, f"octagon {tuple(round(v, 10) for v in res[8])}"


@check("dowker")
def symmetrization_oracle(opts):
    worst = 0.0
    for i in range(25):
        K = sampler.random_cs_polygon(42, i, 4)
        _, a = dowker.inscribed_max_cs_hexagon(K)
        worst = max(worst, abs(a - dowker.inscribed_bruteforce_oracle(K)))
    return worst <= 1e-12, f"max |symmetric - brute force| = {worst:.2e}"


@check("dowker")
def area_sandwich(opts):
    bad = 0
    for K in _polygons(20):
        r = dowker.lattice_densities(K)
        slack = 1e-12 * r.area  # hexagons make all three areas equal up to rounding
        bad += not (r.inscribed_area <= r.area + slack and r.area <= r.circumscribed_area + slack)
    return bad == 0, f"{bad} failures"


@check("dowker")
def affine_invariance(opts):
    worst = 0.0
    shear = [[1.0, 1.0 / 3.0], [0.0, 1.0]]
    for K in _polygons(6):
        base = np.array(dowker.lattice_densities(K).densities)
        for c in (0.5, 2.0, 7.0):
            worst = max(worst, np.max(np.abs(dowker.lattice_densities(K.scaled(c)).densities - base)))
        sheared = np.array(dowker.lattice_densities(K.transformed(shear)).densities)
        if np.max(np.abs(sheared - base)) > 1e-6:
            return False, "shear changed the densities"
    return worst <= 1e-9, f"max scaling change {worst:.2e}"


@check("dowker")
def inequality_suite(opts):
    bad = []
    for K in _polygons(30):
        p = dowker.lattice_densities(K).densities
        bad += regions.inequality_suite(p)
    return not bad, f"violations: {sorted(set(bad))}" if bad else "all bounds hold"


@check("dowker")
def grid_stability(opts):
    worst = 0.0
    for K in _polygons(20, seed=99):
        _, a = dowker.circumscribed_min_cs_hexagon(K, grid=48)
        _, b = dowker.circumscribed_min_cs_hexagon(K, grid=96)
        worst = max(worst, abs(a - b) / a)
    return worst < 1e-7, f"max relative change {worst:.2e}"


# regions

@check("regions")
def leaf_inside_P_and_P0(opts):
    pts = leaf.leaf_boundary(4096)
    bad = sum(not (regions.pentagon_P_contains(p) and regions.region_P0_contains(p)) for p in pts)
    return bad == 0, f"{bad} of {len(pts)} leaf vertices outside"


@check("regions")
def U_inside_P_and_P0(opts):
    rng = np.random.default_rng(11)
    ys = rng.uniform(1, regions.APEX_Y, 10_000)
    bad = 0
    for y in ys:
        lo, hi = regions.U_bounds(y)
        p = (rng.uniform(lo, hi), y)
        bad += not (regions.pentagon_P_contains(p) and regions.region_P0_contains(p))
    return bad == 0, f"{bad} of 10000 sampled U points outside"


@check("regions")
def U_pinch_points(opts):
    lo1, hi1 = regions.U_bounds(1.0)
    lo2, hi2 = regions.U_bounds(regions.APEX_Y)
    ys = np.linspace(1, regions.APEX_Y, 2001)
    b = np.array([regions.U_bounds(y) for y in ys])
    ordered = bool(np.all(b[:, 0] <= b[:, 1] + 1e-12))
    jumps = float(np.max(np.abs(np.diff(b, axis=0))))
    ok = max(abs(lo1 - 1), abs(hi1 - 1), abs(lo2 - hi2)) <= 1e-9 and ordered and jumps < 1e-2
    return ok, f"apex gap {abs(lo2 - hi2):.2e}, largest step {jumps:.2e}"


@check("regions")
def pentagon_vertices(opts):
    v = regions.pentagon_P_vertices()

    def tight(p):
        x, y = p
        vals = [x - regions.PACKING_FLOOR, 1 - x, y - 1, regions.COVERING_CEILING - y,
                regions.SLANT * x - y]
        return sum(abs(t) <= 1e-12 for t in vals)

    ok = all(tight(p) == 2 for p in v) and all(regions.pentagon_P_contains(p) for p in v)
    return ok, "each vertex is tight on exactly two constraints"


@check("regions")
def leaf_U_overlap(opts):
    frac = regions.leaf_U_overlap()
    return True, f"{100 * frac:.1f}% of the leaf lies in U (reported, not asserted)"


# sampler

@check("sampler")
def octagons_in_U(opts):
    rows = sampler.scatter(200, 42, 4)
    bad = [r.index for r in rows if not r.in_U or regions.inequality_suite((r.delta_L, r.theta_L), 1e-7)]
    return not bad, f"{len(bad)} of {len(rows)} rows fail"


@check("sampler")
def other_gons_satisfy_bounds(opts):
    bad = 0
    for m in (2, 3):
        rows = sampler.scatter(20, 5, m)
        bad += sum(bool(regions.inequality_suite((r.delta_L, r.theta_L))) for r in rows)
    return bad == 0, f"{bad} rows violate a bound"


@check("sampler")
def determinism(opts):
    a = sampler.scatter(50, 42, 4, workers=1)
    b = sampler.scatter(50, 42, 4, workers=2)
    c = sampler.scatter(50, 42, 4, workers=1)
    return a == b == c, "sequential and parallel runs identical" if a == b == c else "outputs differ"


def run(only: str | None = None, opts: Options | None = None):
    opts = opts or Options()
    modules = [only] if only else list(CHECKS)
    for mod in modules:
        if mod not in CHECKS:
            raise KeyError(f"unknown check group {mod!r}; choose from {sorted(CHECKS)}")
        for fn in CHECKS[mod]:
            t0 = time.perf_counter()
            try:
                passed, detail = fn(opts)
            except Exception as exc:  # a crashing check is a failed check
                passed, detail = False, f"{type(exc).__name__}: {exc}"
            yield Outcome(f"{mod}.{fn.__name__}", bool(passed), detail, time.perf_counter() - t0)

"""Acceptance criteria, one test each.

Each test records a PASS/FAIL line; they are printed at the end of the pytest
run, or directly when this file is executed as a script.
"""
import io
import math
import time

import numpy as np
import pytest

from omega_density import dowker, leaf, regions, sampler
from omega_density.geom import CSPolygon

RESULTS: dict[int, str] = {}


def record(n, ok, detail, seconds):
    RESULTS[n] = f"{'PASS' if ok else 'FAIL'} criterion {n}: {detail} ({seconds:.2f} s)"
    print(RESULTS[n])
    assert ok, RESULTS[n]


def test_criterion_1_leaf_endpoints():
    t = time.perf_counter()
    c = (math.pi / math.sqrt(12), 2 * math.pi / math.sqrt(27))
    pts = [(leaf.alpha_point(0), c), (leaf.beta_point(0), c),
           (leaf.alpha_point(1), (1, 1)), (leaf.beta_point(1), (1, 1))]
    err = max(abs(p[i] - q[i]) for p, q in pts for i in (0, 1))
    record(1, err <= 1e-12, f"leaf endpoints, max error {err:.1e} (tol 1e-12)", time.perf_counter() - t)


def test_criterion_2_oracle_agreement():
    t = time.perf_counter()
    err = 0.0
    for s in np.linspace(0, 1, 33):
        for h, p in ((leaf.kt_disk(s), leaf.alpha_point(s)), (leaf.lt_disk(s), leaf.beta_point(s))):
            o = leaf.oracle_density(h, 6 * 2**12)
            err = max(err, abs(o[0] - p[0]), abs(o[1] - p[1]))
    dt = time.perf_counter() - t
    record(2, err <= 1e-6 and dt < 5, f"closed form vs oracle, max error {err:.1e} (tol 1e-6)", dt)


def test_criterion_3_ratio_identity():
    t = time.perf_counter()
    s = np.linspace(0, 1, 1000)
    err = 0.0
    for arc in (leaf.alpha_point, leaf.beta_point):
        pts = np.array([arc(x) for x in s])
        err = max(err, float(np.max(np.abs(pts[:, 0] / pts[:, 1] - 3 / (4 - s * s)))))
    record(3, err <= 1e-12, f"ratio identity, max error {err:.1e} (tol 1e-12)", time.perf_counter() - t)


def test_criterion_4_shape():
    t = time.perf_counter()
    s = np.linspace(0, 1, 1000)
    a = np.array([leaf.alpha_point(x) for x in s])
    b = np.array([leaf.beta_point(x) for x in s])
    # both coordinates are strictly monotone along each arc (delta up, theta down)
    mono = all(np.all(np.diff(arc[:, 0]) > 0) and np.all(np.diff(arc[:, 1]) < 0) for arc in (a, b))

    def slope_change(arc):
        o = np.argsort(arc[:, 0])
        return np.diff(np.diff(arc[o, 1]) / np.diff(arc[o, 0]))

    ca, cb = slope_change(a).max(), slope_change(b).min()
    ok = mono and ca <= 1e-9 and cb >= -1e-9
    record(4, ok, f"monotone={mono}, alpha concave (max {ca:.1e}), beta convex (min {cb:.1e})",
           time.perf_counter() - t)


def test_criterion_5_dowker_exact_values():
    t = time.perf_counter()
    hx = dowker.lattice_densities(CSPolygon.regular(6)).densities
    sq = dowker.lattice_densities(CSPolygon.regular(4)).densities
    oc = dowker.lattice_densities(CSPolygon.regular(8)).densities
    apex_x = regions.U_bounds(4 - 2 * math.sqrt(2))[0]
    e = [max(abs(hx[0] - 1), abs(hx[1] - 1)), max(abs(sq[0] - 1), abs(sq[1] - 1)),
         abs(oc[1] - (4 - 2 * math.sqrt(2))), abs(oc[0] - apex_x)]
    dt = time.perf_counter() - t
    ok = e[0] <= 1e-9 and e[1] <= 1e-6 and e[2] <= 1e-6 and e[3] <= 1e-6 and dt < 5
    record(5, ok, "hexagon {:.1e}, square {:.1e}, octagon theta {:.1e}, octagon delta {:.1e}".format(*e), dt)


def test_criterion_6_symmetrization_oracle():
    t = time.perf_counter()
    err = 0.0
    for i in range(25):
        K = sampler.random_cs_polygon(42, i, 4)
        err = max(err, abs(dowker.inscribed_max_cs_hexagon(K)[1] - dowker.inscribed_bruteforce_oracle(K)))
    dt = time.perf_counter() - t
    record(6, err <= 1e-12 and dt < 10, f"25 octagons, max |symmetric - brute force| {err:.1e}", dt)


def test_criterion_7_scatter():
    t = time.perf_counter()
    rows = sampler.scatter(10_000, 42, 4, workers=1)
    bad_u = sum(not regions.U_contains((r.delta_L, r.theta_L), 1e-7) for r in rows)
    bad_ineq = 0
    for r in rows:
        x, y = r.delta_L, r.theta_L
        ok = (x + y >= 2 - 1e-7 and x * y >= 1 - 1e-7 and y <= 1 + 1.25 * math.sqrt(max(0, 1 - x)) + 1e-7
              and 3 * y <= 4 * x + 1e-7 and y <= 2 * math.pi / math.sqrt(27) + 1e-7)
        bad_ineq += not ok
    dt = time.perf_counter() - t
    record(7, bad_u == 0 and bad_ineq == 0 and dt < 300,
           f"{len(rows)} octagons, {bad_u} outside U, {bad_ineq} violating a bound", dt)


def test_criterion_8_region_consistency():
    t = time.perf_counter()
    u1 = regions.U_bounds(1.0)
    lo, hi = regions.U_bounds(regions.APEX_Y)
    b = leaf.leaf_boundary(4096)
    outside = sum(not (regions.pentagon_P_contains(p, 1e-9) and regions.region_P0_contains(p, 1e-9))
                  for p in b)
    expected = [(math.sqrt(3) / 2, 1.0), (1.0, 1.0), (1.0, 1.2281772),
                (0.75 * 1.2281772, 1.2281772), (math.sqrt(3) / 2, 2 / math.sqrt(3))]
    verr = max(abs(v[i] - e[i]) for v, e in zip(regions.pentagon_P_vertices(), expected) for i in (0, 1))
    ok = (max(abs(u1[0] - 1), abs(u1[1] - 1)) <= 1e-12 and abs(hi - lo) <= 1e-9 and outside == 0
          and verr <= 1e-9)
    record(8, ok, f"U(1)={u1}, apex gap {abs(hi - lo):.1e}, {outside} leaf vertices outside, "
                  f"pentagon vertex error {verr:.1e}", time.perf_counter() - t)


def _csv(rows):
    fh = io.StringIO()
    sampler.write_scatter_csv(fh, rows)
    return fh.getvalue().encode()


def test_criterion_9_determinism():
    t = time.perf_counter()
    a = _csv(sampler.scatter(1000, 42, 4, workers=1))
    b = _csv(sampler.scatter(1000, 42, 4, workers=1))
    c = _csv(sampler.scatter(1000, 42, 4, workers=4))
    d = _csv(sampler.scatter(1000, 42, 4, workers=3))
    record(9, a == b == c == d, "scatter(1000, 42, 4) CSV identical for workers 1, 1, 4, 3",
           time.perf_counter() - t)


if __name__ == "__main__":
    import sys

    failed = 0
    for name, fn in list(globals().items()):
        if name.startswith("test_criterion_"):
            try:
                fn()
            except AssertionError:
                failed += 1
    sys.exit(1 if failed else 0)

"""Inner loops of the Dowker optimisers.

Every scalar kernel is written so that it runs unchanged under ``numba.njit``
and as plain Python.  The bulk kernels (`grid_areas`, `inscribed_areas`) also
have vectorised numpy implementations, used when the numpy backend is active.
"""
import itertools
import math

import numpy as np

from ._accel import USE_NUMBA, jit

# smallest admissible angular gap between adjacent support lines
MIN_GAP = 1e-9
GOLDEN = (math.sqrt(5.0) - 1.0) / 2.0


@jit
def support(verts, angle):
    c = math.cos(angle)
    s = math.sin(angle)
    best = -math.inf
    for i in range(verts.shape[0]):
        d = verts[i, 0] * c + verts[i, 1] * s
        if d > best:
            best = d
    return best


@jit
def support_index(verts, c, s):
    best = -math.inf
    arg = 0
    for i in range(verts.shape[0]):
        d = verts[i, 0] * c + verts[i, 1] * s
        if d > best:
            best = d
            arg = i
    return arg


@jit
def _meet(px, py, ca, sa, qx, qy, cb, sb):
    # line through p with normal (ca, sa) meets line through q with normal (cb, sb);
    # anchoring at the touching vertices keeps nearly parallel lines well conditioned
    s = ((qx - px) * cb + (qy - py) * sb) / (ca * sb - sa * cb)
    return px - s * sa, py + s * ca


@jit
def hexagon_half(verts, a, b, c, out):
    """Write the first three vertices of the support hexagon into ``out``.

    Requires a < b < c < a + pi.  The remaining three vertices are the
    negatives of these; the return value is the hexagon area.
    """
    ca, sa = math.cos(a), math.sin(a)
    cb, sb = math.cos(b), math.sin(b)
    cc, sc = math.cos(c), math.sin(c)
    ia = support_index(verts, ca, sa)
    ib = support_index(verts, cb, sb)
    ic = support_index(verts, cc, sc)
    ax, ay = verts[ia, 0], verts[ia, 1]
    bx, by = verts[ib, 0], verts[ib, 1]
    cx, cy = verts[ic, 0], verts[ic, 1]
    x0, y0 = _meet(ax, ay, ca, sa, bx, by, cb, sb)
    x1, y1 = _meet(bx, by, cb, sb, cx, cy, cc, sc)
    x2, y2 = _meet(cx, cy, cc, sc, -ax, -ay, -ca, -sa)
    out[0, 0] = x0
    out[0, 1] = y0
    out[1, 0] = x1
    out[1, 1] = y1
    out[2, 0] = x2
    out[2, 1] = y2
    return (x0 * y1 - x1 * y0) + (x1 * y2 - x2 * y1) + (x0 * y2 - x2 * y0)


@jit
def hexagon_area(verts, a, b, c):
    ca, sa = math.cos(a), math.sin(a)
    cb, sb = math.cos(b), math.sin(b)
    cc, sc = math.cos(c), math.sin(c)
    ia = support_index(verts, ca, sa)
    ib = support_index(verts, cb, sb)
    ic = support_index(verts, cc, sc)
    ax, ay = verts[ia, 0], verts[ia, 1]
    bx, by = verts[ib, 0], verts[ib, 1]
    cx, cy = verts[ic, 0], verts[ic, 1]
    x0, y0 = _meet(ax, ay, ca, sa, bx, by, cb, sb)
    x1, y1 = _meet(bx, by, cb, sb, cx, cy, cc, sc)
    x2, y2 = _meet(cx, cy, cc, sc, -ax, -ay, -ca, -sa)
    return (x0 * y1 - x1 * y0) + (x1 * y2 - x2 * y1) + (x0 * y2 - x2 * y0)


@jit
def sorted_angles(a, b, c):
    a = a % math.pi
    b = b % math.pi
    c = c % math.pi
    if a > b:
        a, b = b, a
    if b > c:
        b, c = c, b
    if a > b:
        a, b = b, a
    return a, b, c


@jit
def unordered_area(verts, a, b, c):
    """Hexagon area for three support directions given in any order (mod pi).

    Configurations with two lines closer than MIN_GAP are rejected with +inf.
    """
    a, b, c = sorted_angles(a, b, c)
    if b - a < MIN_GAP or c - b < MIN_GAP or a + math.pi - c < MIN_GAP:
        return math.inf
    return hexagon_area(verts, a, b, c)


@jit
def _area_with(verts, t, k, x):
    if k == 0:
        return unordered_area(verts, x, t[1], t[2])
    if k == 1:
        return unordered_area(verts, t[0], x, t[2])
    return unordered_area(verts, t[0], t[1], x)


@jit
def coordinate_descent(verts, t0, tol, max_sweeps, scan):
    """Cyclic coordinate descent on the three support angles.

    Each coordinate is line-searched over the whole half-turn: a coarse scan of
    ``scan`` points brackets the best cell, golden-section search refines it
    to ``tol``.  Letting a line pass its neighbours is what frees a line that
    sits idle on a corner of a parallelogram.
    """
    t = t0.copy()
    f = unordered_area(verts, t[0], t[1], t[2])
    step = math.pi / scan
    sweeps = 0
    for _ in range(max_sweeps):
        sweeps += 1
        moved = 0.0
        for k in range(3):
            base = t[k]
            best_i = 0
            best_f = f
            for i in range(1, scan):
                fx = _area_with(verts, t, k, base + i * step)
                if fx < best_f:
                    best_f = fx
                    best_i = i
            lo = base + (best_i - 1) * step
            hi = base + (best_i + 1) * step
            x1 = hi - GOLDEN * (hi - lo)
            x2 = lo + GOLDEN * (hi - lo)
            f1 = _area_with(verts, t, k, x1)
            f2 = _area_with(verts, t, k, x2)
            while hi - lo > tol:
                if f1 < f2:
                    hi = x2
                    x2 = x1
                    f2 = f1
                    x1 = hi - GOLDEN * (hi - lo)
                    f1 = _area_with(verts, t, k, x1)
                else:
                    lo = x1
                    x1 = x2
                    f1 = f2
                    x2 = lo + GOLDEN * (hi - lo)
                    f2 = _area_with(verts, t, k, x2)
            if f1 < f2:
                xm, fm = x1, f1
            else:
                xm, fm = x2, f2
            if best_f < fm:
                xm, fm = base + best_i * step, best_f
            if fm < f:
                d = (xm - t[k]) % math.pi
                d = min(d, math.pi - d)
                if d > moved:
                    moved = d
                t[k] = xm % math.pi
                f = fm
        if moved < tol:
            break
    a, b, c = sorted_angles(t[0], t[1], t[2])
    t[0] = a
    t[1] = b
    t[2] = c
    return t, f, sweeps


@jit
def _grid_areas_loop(verts, n):
    count = n * (n - 1) * (n - 2) // 6
    areas = np.empty(count)
    angles = np.empty((count, 3))
    step = math.pi / n
    r = 0
    for i in range(n):
        for j in range(i + 1, n):
            for k in range(j + 1, n):
                a, b, c = i * step, j * step, k * step
                areas[r] = hexagon_area(verts, a, b, c)
                angles[r, 0] = a
                angles[r, 1] = b
                angles[r, 2] = c
                r += 1
    return areas, angles


def _grid_triples(n):
    return np.array(list(itertools.combinations(range(n), 3)), dtype=np.int64).reshape(-1, 3)


def hexagon_areas_np(verts, angles):
    """Vectorised `hexagon_area` over an (N, 3) array of ordered angle triples."""
    c = np.cos(angles)
    s = np.sin(angles)
    idx = np.argmax(c[:, :, None] * verts[None, None, :, 0] + s[:, :, None] * verts[None, None, :, 1],
                    axis=2)
    w = verts[idx]  # (N, 3, 2) touching vertices

    def meet(p, ca, sa, q, cb, sb):
        t = ((q[:, 0] - p[:, 0]) * cb + (q[:, 1] - p[:, 1]) * sb) / (ca * sb - sa * cb)
        return p[:, 0] - t * sa, p[:, 1] + t * ca

    x0, y0 = meet(w[:, 0], c[:, 0], s[:, 0], w[:, 1], c[:, 1], s[:, 1])
    x1, y1 = meet(w[:, 1], c[:, 1], s[:, 1], w[:, 2], c[:, 2], s[:, 2])
    x2, y2 = meet(w[:, 2], c[:, 2], s[:, 2], -w[:, 0], -c[:, 0], -s[:, 0])
    return (x0 * y1 - x1 * y0) + (x1 * y2 - x2 * y1) + (x0 * y2 - x2 * y0)


def _grid_areas_numpy(verts, n):
    angles = _grid_triples(n) * (math.pi / n)
    return hexagon_areas_np(verts, angles), angles


@jit
def _inscribed_areas_loop(verts):
    n = verts.shape[0]
    m = n // 2
    count = 0
    for i in range(m):
        for j in range(i, i + m + 1):
            count += i + m + 1 - j
    triples = np.empty((count, 3), dtype=np.int64)
    areas = np.empty(count)
    r = 0
    for i in range(m):
        for j in range(i, i + m + 1):
            for k in range(j, i + m + 1):
                px, py = verts[i % n, 0], verts[i % n, 1]
                qx, qy = verts[j % n, 0], verts[j % n, 1]
                rx, ry = verts[k % n, 0], verts[k % n, 1]
                areas[r] = (px * qy - py * qx) + (qx * ry - qy * rx) + (px * ry - py * rx)
                triples[r, 0] = i
                triples[r, 1] = j % n
                triples[r, 2] = k % n
                r += 1
    return triples, areas


def _inscribed_areas_numpy(verts):
    n = verts.shape[0]
    m = n // 2
    raw = np.array([(i, j, k) for i in range(m) for j in range(i, i + m + 1)
                    for k in range(j, i + m + 1)], dtype=np.int64)
    p, q, r = verts[raw[:, 0] % n], verts[raw[:, 1] % n], verts[raw[:, 2] % n]

    def cross(u, v):
        return u[:, 0] * v[:, 1] - u[:, 1] * v[:, 0]

    areas = cross(p, q) + cross(q, r) + cross(p, r)
    return raw % n, areas


if USE_NUMBA:
    grid_areas = _grid_areas_loop
    inscribed_areas = _inscribed_areas_loop
else:
    grid_areas = _grid_areas_numpy
    inscribed_areas = _inscribed_areas_numpy

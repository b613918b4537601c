"""Time the numba kernels against the pure-numpy fallback.

Each backend runs in its own interpreter because the choice is read from
OMEGA_BACKEND at import time.  Usage:

    python benchmarks/bench_kernels.py [--count 20]
"""
import argparse
import json
import os
import subprocess
import sys

WORKER = """
import json, sys, time
import numpy as np
from omega_density import _accel, dowker, kernels
from omega_density.sampler import random_cs_polygon

count = int(sys.argv[1])
polys = [random_cs_polygon(123, i, 4) for i in range(count)]
verts = np.ascontiguousarray(polys[0].vertices)
kernels.grid_areas(verts, 24)  # warm-up / compile
dowker.lattice_densities(polys[0])
timings = {}
t = time.perf_counter()
for K in polys:
    kernels.grid_areas(np.ascontiguousarray(K.vertices), 48)
timings["grid_areas"] = time.perf_counter() - t
t = time.perf_counter()
for K in polys:
    kernels.inscribed_areas(np.ascontiguousarray(K.vertices))
timings["inscribed_areas"] = time.perf_counter() - t
t = time.perf_counter()
dens = [list(dowker.lattice_densities(K).densities) for K in polys]
timings["lattice_densities"] = time.perf_counter() - t
print(json.dumps({"backend": _accel.BACKEND, "timings": timings, "densities": dens}))
"""


def run(backend, count):
    env = dict(os.environ, OMEGA_BACKEND=backend)
    out = subprocess.run([sys.executable, "-c", WORKER, str(count)], env=env,
                         capture_output=True, text=True, check=True)
    return json.loads(out.stdout)


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--count", type=int, default=20, help="random octagons per backend")
    args = ap.parse_args()
    fast = run("numba", args.count)
    slow = run("numpy", args.count)
    print(f"{'kernel':<20}{'numba s':>12}{'numpy s':>12}{'speedup':>10}")
    for name, tf in fast["timings"].items():
        ts = slow["timings"][name]
        print(f"{name:<20}{tf:>12.4f}{ts:>12.4f}{ts / tf:>10.1f}")
    import numpy as np
    diff = np.max(np.abs(np.array(fast["densities"]) - np.array(slow["densities"])))
    print(f"max density difference between backends: {diff:.2e}")


if __name__ == "__main__":
    main()

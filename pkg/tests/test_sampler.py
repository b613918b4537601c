import io
import math

import numpy as np
import pytest

from omega_density import sampler
from omega_density.errors import InvalidInputError
from omega_density.geom import CSPolygon


def test_splitmix_reference_vectors():
    # published outputs of SplitMix64 seeded with 0
    g = sampler.SplitMix64(0)
    assert [g.next_u64() for _ in range(3)] == [
        0xE220A8397B1DCDAF, 0x6E789E6AA1B965F4, 0x06C45D188009454F]


def test_uniform_range():
    g = sampler.SplitMix64(123)
    u = [g.uniform() for _ in range(2000)]
    assert min(u) >= 0.0 and max(u) < 1.0
    assert abs(np.mean(u) - 0.5) < 0.03


def test_substreams_are_independent_of_order():
    a = sampler.random_cs_polygon(42, 17, 4)
    sampler.random_cs_polygon(42, 3, 4)
    b = sampler.random_cs_polygon(42, 17, 4)
    assert np.array_equal(a.vertices, b.vertices)
    assert not np.array_equal(a.vertices, sampler.random_cs_polygon(42, 18, 4).vertices)


@pytest.mark.parametrize("m", [2, 3, 4])
def test_polygons_are_valid(m):
    for i in range(30):
        K = sampler.random_cs_polygon(1, i, m)
        assert K.m == m
        r = np.hypot(*K.half.T)
        assert np.all((r >= 0.3) & (r <= 1.0))


def test_bad_m():
    with pytest.raises(InvalidInputError):
        sampler.random_cs_polygon(0, 0, 1)
    with pytest.raises(InvalidInputError):
        sampler.scatter(0, 0, 4)


def test_scatter_rows_and_csv():
    rows = sampler.scatter(12, 42, 4)
    assert [r.index for r in rows] == list(range(12))
    assert all(r.n_vertices == 8 and r.in_U for r in rows)
    fh = io.StringIO()
    sampler.write_scatter_csv(fh, rows)
    lines = fh.getvalue().splitlines()
    assert lines[0] == "index,n,delta_L,theta_L,in_U"
    assert len(lines) == 13 and lines[1].endswith(",true")


def test_worker_count_does_not_change_rows():
    a = sampler.scatter(40, 9, 4, workers=1)
    b = sampler.scatter(40, 9, 4, workers=3)
    assert a == b


def _regular_octagon(seed, index, m):
    return CSPolygon.regular(8, 1.0 + index, phase=0.1 * index)


def test_polygon_factory_hook():
    rows = sampler.scatter(3, 0, 4, polygon_factory=_regular_octagon)
    for r in rows:
        assert r.theta_L == pytest.approx(4 - 2 * math.sqrt(2), abs=1e-9)


def test_default_workers_env(monkeypatch):
    monkeypatch.setenv("OMEGA_THREADS", "3")
    assert sampler.default_workers() == 3
    monkeypatch.delenv("OMEGA_THREADS")
    assert sampler.default_workers() == 1

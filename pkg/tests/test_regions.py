import math

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from omega_density import leaf, regions
from omega_density.errors import DomainError


def test_U_bounds_examples():
    assert regions.U_bounds(1.0) == pytest.approx((1.0, 1.0), abs=1e-15)
    # worked by hand: x_min = 0.85 / 0.92, x_max = 1.1 (5.1 + sqrt(0.41)) / 6.4
    assert regions.U_bounds(1.1) == pytest.approx(
        (0.85 / 0.92, 1.1 * (5.1 + math.sqrt(0.41)) / 6.4), abs=1e-14)


def test_U_apex_pinches():
    lo, hi = regions.U_bounds(regions.APEX_Y)
    assert abs(hi - lo) <= 1e-9
    with pytest.raises(DomainError):
        regions.U_bounds(regions.APEX_Y + 1e-6)
    with pytest.raises(DomainError):
        regions.U_bounds(0.99)


@given(st.floats(1.0, 4 - 2 * math.sqrt(2)))
def test_U_bounds_ordered(y):
    lo, hi = regions.U_bounds(y)
    assert lo <= hi + 1e-12


def test_U_membership_examples():
    assert regions.U_contains((0.92, 1.17))
    assert not regions.U_contains((0.90, 1.17))
    assert regions.U_violations((0.90, 1.17)) == ["U:lower"]
    assert regions.U_violations((0.95, 1.3)) == ["U:ceiling"]
    assert regions.U_violations((0.95, 0.9)) == ["U:floor"]


def test_pentagon_vertices_are_tight():
    verts = regions.pentagon_P_vertices()
    assert len(verts) == 5
    for v in verts:
        assert regions.pentagon_P_contains(v)
        x, y = v
        tight = [abs(x - math.sqrt(3) / 2) < 1e-12, abs(x - 1) < 1e-12, abs(y - 1) < 1e-12,
                 abs(y - regions.COVERING_CEILING) < 1e-12, abs(3 * y - 4 * x) < 1e-12]
        assert sum(tight) == 2


def test_named_violations():
    assert regions.pentagon_P_violations((0.8, 1.0)) == ["P:left"]
    assert "P0:product" in regions.region_P0_violations((0.9, 1.05))
    assert "P0:sum" in regions.region_P0_violations((0.9, 1.05))
    assert regions.region_P0_violations((0.95, 1.1)) == []
    assert "slant" in regions.inequality_suite((0.9, 1.21))


def test_leaf_inside_P_and_P0():
    b = leaf.leaf_boundary(4096)
    assert all(regions.pentagon_P_contains(p, 1e-9) and regions.region_P0_contains(p, 1e-9) for p in b)


def test_U_inside_P_and_P0():
    for p in regions.U_boundary(400):
        assert regions.pentagon_P_contains(p, 1e-9) and regions.region_P0_contains(p, 1e-9)


@pytest.mark.parametrize("name", ["P", "P0", "U", "leaf"])
def test_boundaries_closed_ccw_and_inside(name):
    r = regions.REGIONS[name]
    b = r.boundary(128)
    assert np.allclose(b[0], b[-1])
    x, y = b[:-1, 0], b[:-1, 1]
    assert 0.5 * np.sum(x * np.roll(y, -1) - np.roll(x, -1) * y) > 0
    # leaf membership uses a finer inscribed polygon, so allow its chord sagitta
    assert all(r.contains(p, 1e-7) for p in b[::7])


def test_classify_report():
    rep = regions.classify(leaf.CIRCLE_POINT)
    assert rep.in_P and rep.in_P0 and rep.in_leaf and not rep.in_U
    out = regions.classify((0.8, 1.5)).to_json()
    assert out["in_P"] is False and "P:left" in out["violated"]


def test_leaf_U_overlap_is_partial():
    f = regions.leaf_U_overlap(40, 256)
    assert 0.5 < f < 0.95

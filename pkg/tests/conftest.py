import math

import numpy as np
import pytest
from hypothesis import strategies as st

from omega_density.geom import CSPolygon
from omega_density.sampler import random_cs_polygon


@st.composite
def cs_polygons(draw, ms=(2, 3, 4)):
    """Seeded random cs polygons, scaled and rotated by hypothesis."""
    m = draw(st.sampled_from(ms))
    index = draw(st.integers(0, 10_000))
    K = random_cs_polygon(7, index, m)
    c = draw(st.floats(0.05, 20.0))
    phi = draw(st.floats(0.0, 2 * math.pi))
    rot = [[math.cos(phi), -math.sin(phi)], [math.sin(phi), math.cos(phi)]]
    return K.transformed(np.multiply(rot, c))


@pytest.fixture
def octagon():
    return CSPolygon.regular(8)


def pytest_terminal_summary(terminalreporter):
    import test_acceptance

    if test_acceptance.RESULTS:
        terminalreporter.section("acceptance criteria")
        for n in sorted(test_acceptance.RESULTS):
            terminalreporter.write_line(test_acceptance.RESULTS[n])

import json
import subprocess
import sys
import xml.etree.ElementTree as ET

import pytest

from omega_density import cli
from omega_density.plot import VIEWPORT, PlotSpec


def run(*args):
    return subprocess.run([sys.executable, "-m", "omega_density", *args],
                          capture_output=True, text=True)


def test_leaf_rows(tmp_path):
    out = tmp_path / "arcs.csv"
    assert cli.main(["leaf", "--samples", "16", "--out", str(out)]) == 0
    assert len(out.read_text().splitlines()) == 1 + 2 * 16 - 1


def test_leaf_bad_samples():
    assert cli.main(["leaf", "--samples", "1"]) == 2


def test_dowker_json(tmp_path, capsys):
    p = tmp_path / "oct.json"
    p.write_text(json.dumps({"vertices": [[1, 0], [0.7071067811865476, 0.7071067811865476],
                                          [0, 1], [-0.7071067811865476, 0.7071067811865476],
                                          [-1, 0], [-0.7071067811865476, -0.7071067811865476],
                                          [0, -1], [0.7071067811865476, -0.7071067811865476]]}))
    assert cli.main(["dowker", str(p), "--json"]) == 0
    out = capsys.readouterr().out
    assert out.count("\n") == 1
    d = json.loads(out)
    assert d["theta_L"] == pytest.approx(4 - 2 * 2**0.5, abs=1e-9)


def test_dowker_domain_and_io_errors(tmp_path):
    tri = tmp_path / "tri.json"
    tri.write_text(json.dumps({"vertices": [[0, 0], [1, 0], [0, 1]]}))
    bad = tmp_path / "bad.json"
    bad.write_text("{not json")
    assert cli.main(["dowker", str(tri)]) == 3
    assert cli.main(["dowker", str(bad)]) == 2
    assert cli.main(["dowker", str(tmp_path / "missing.json")]) == 2


def test_regions(capsys):
    assert cli.main(["regions", "0.92", "1.17"]) == 0
    d = json.loads(capsys.readouterr().out)
    assert d["in_U"] is True and d["in_P"] is True


def test_usage_error_exit_code():
    r = run("scatter")
    assert r.returncode == 2


def test_scatter_svg(tmp_path):
    svg = tmp_path / "s.svg"
    csv = tmp_path / "s.csv"
    assert cli.main(["scatter", "--count", "10", "--seed", "1", "--out", str(csv),
                     "--svg", str(svg)]) == 0
    assert len(csv.read_text().splitlines()) == 11
    root = ET.parse(svg).getroot()
    ns = "{http://www.w3.org/2000/svg}"
    circles = root.findall(f"{ns}circle")
    paths = root.findall(f"{ns}path")
    assert len(circles) == 10 and len(paths) == 4
    assert {p.get("id") for p in paths} == {"P", "P0", "U", "leaf"}
    spec = PlotSpec()
    lo = spec.to_pixels([VIEWPORT[0], VIEWPORT[3]])[0]
    hi = spec.to_pixels([VIEWPORT[1], VIEWPORT[2]])[0]
    for c in circles:
        assert lo[0] <= float(c.get("cx")) <= hi[0] and lo[1] <= float(c.get("cy")) <= hi[1]


def test_scatter_outputs_are_byte_identical(tmp_path):
    a, b = tmp_path / "a.csv", tmp_path / "b.csv"
    sa, sb = tmp_path / "a.svg", tmp_path / "b.svg"
    assert cli.main(["scatter", "--count", "20", "--out", str(a), "--svg", str(sa)]) == 0
    assert cli.main(["scatter", "--count", "20", "--out", str(b), "--svg", str(sb),
                     "--workers", "2"]) == 0
    assert a.read_bytes() == b.read_bytes()
    assert sa.read_bytes() == sb.read_bytes()


def test_validate_exit_codes():
    assert cli.main(["validate", "--only", "regions"]) == 0
    assert cli.main(["validate", "--only", "leaf", "--printed-alpha"]) == 1
    assert cli.main(["validate", "--only", "nope"]) == 2

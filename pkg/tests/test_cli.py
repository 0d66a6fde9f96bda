from __future__ import annotations

import io
import json
import subprocess
import sys

import pytest

from ordvis import cli
from ordvis.geometry_vis import FIGURE1_POLYGON, serialize_poly, visibility_graph
from ordvis.ordered_graph import serialize_og

H_MEMBER = "6 4\n0 2\n1 3\n3 5\n0 4\n"


def run(argv, stdin=""):
    out = io.StringIO()
    old_in, old_out = sys.stdin, sys.stdout
    sys.stdin, sys.stdout = io.StringIO(stdin), out
    try:
        code = cli.main(argv)
    finally:
        sys.stdin, sys.stdout = old_in, old_out
    return code, out.getvalue()


@pytest.fixture
def figure_og(tmp_path):
    path = tmp_path / "fig.og"
    path.write_text(serialize_og(visibility_graph(FIGURE1_POLYGON)))
    return str(path)


def test_pipeline_gen_visgraph_check():
    code, poly = run(["gen", "polygon", "--n", "12", "--seed", "7", "--span", "500"])
    assert code == 0
    code, og = run(["visgraph", "-"], poly)
    assert code == 0
    code, out = run(["check", "-"], og)
    report = json.loads(out)
    assert code == 0 and report["h_free"] and report["ordered_hole_free"]


def test_check_flags_h_member():
    code, out = run(["check", "-"], H_MEMBER)
    report = json.loads(out)
    assert code == 1 and report["h_free"] is False
    assert report["h_witness"]["u"] == 0 and report["h_witness"]["v"] == 3


def test_check_require_capped(figure_og):
    code, out = run(["check", figure_og, "--require", "capped"])
    assert code == 1 and json.loads(out)["capped_witness"] is not None


def test_color_hfree_certificate(figure_og):
    code, out = run(["color", figure_og])
    res = json.loads(out)
    assert code == 0 and res["proper"] and res["verified"]
    assert res["num_colours"] <= 3 * 4 ** (res["omega"] - 1) == res["bound"]
    assert res["class"] == "hfree_hole_free"


def test_color_capped_precondition_exit(figure_og):
    code, out = run(["color", "--mode", "capped", figure_og])
    res = json.loads(out)
    assert code == 3 and res["kind"] == "NotCappedError" and len(res["witness"]["quadruple"]) == 4


def test_partition_and_clique(figure_og):
    code, out = run(["partition", figure_og])
    res = json.loads(out)
    assert code == 0 and res["capped_certificates"] is True and len(res["parts"]) == 3
    code, out = run(["clique", figure_og])
    assert json.loads(out) == {"method": "decomposition", "omega": 5}
    code, out = run(["oracle", "clique", figure_og])
    assert json.loads(out)["omega"] == 5


def test_partition_not_h_free():
    code, out = run(["partition", "-"], H_MEMBER)
    assert code == 3 and json.loads(out)["witness"]["kind"] == "H"


def test_verify_command(tmp_path, figure_og):
    good = tmp_path / "good.json"
    code, out = run(["color", figure_og])
    good.write_text(out)
    assert run(["verify", figure_og, str(good)])[0] == 0
    bad = tmp_path / "bad.json"
    bad.write_text(json.dumps([0] * 12))
    code, out = run(["verify", figure_og, str(bad)])
    assert code == 1 and json.loads(out)["proper"] is False
    code, _ = run(["oracle", "verify", figure_og, "--colours", str(bad)])
    assert code == 1


def test_oracle_commands():
    assert json.loads(run(["oracle", "chromatic", "-"], H_MEMBER)[1]) == {"chi": 2}
    code, out = run(["oracle", "xseq", "-", "--u", "3", "--v", "0"], H_MEMBER)
    assert code == 0 and json.loads(out)["sequence"] == [[3, 5], [0, 4]]
    code, out = run(["oracle", "capped", "-"], H_MEMBER)
    assert code == 1 and json.loads(out)["quadruple"] == [0, 1, 2, 3]
    code, out = run(["oracle", "holes", "-"], "5 5\n0 1\n1 2\n2 3\n3 4\n0 4\n")
    assert code == 1 and json.loads(out)["hole"] == [0, 1, 2, 3, 4]


@pytest.mark.parametrize("stdin", ["", "3 1\n0 5\n", "2 2\n0 1\n"])
def test_malformed_input_exit_2(stdin):
    code, out = run(["check", "-"], stdin)
    assert code == 2 and "error" in json.loads(out)


def test_missing_file_and_bad_usage(tmp_path):
    code, out = run(["clique", str(tmp_path / "nope.og")])
    assert code == 2
    assert run(["frobnicate"])[0] == 2


def test_visgraph_rejects_clockwise():
    code, out = run(["visgraph", "-"], "4\n0 0\n0 1\n1 1\n1 0\n")
    assert code == 2


def test_output_is_deterministic(figure_og):
    assert run(["color", figure_og]) == run(["color", figure_og])
    assert run(["check", "-"], H_MEMBER) == run(["check", "-"], H_MEMBER)


def test_pretty_summary(figure_og):
    code, out = run(["clique", "--pretty", figure_og])
    assert code == 0 and "omega: 5" in out


def test_check_many_with_jobs(tmp_path, figure_og):
    other = tmp_path / "h.og"
    other.write_text(H_MEMBER)
    code, out = run(["check", "--jobs", "2", figure_og, str(other)])
    res = json.loads(out)["results"]
    assert code == 1 and [r["h_free"] for r in res] == [True, False]


def test_module_entry_point(tmp_path):
    poly = tmp_path / "f.poly"
    poly.write_text(serialize_poly(FIGURE1_POLYGON))
    proc = subprocess.run([sys.executable, "-m", "ordvis", "visgraph", str(poly)],
                          capture_output=True, text=True, check=True)
    assert proc.stdout == serialize_og(visibility_graph(FIGURE1_POLYGON))

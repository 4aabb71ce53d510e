"""End-to-end command-line checks via subprocess."""

import json
import subprocess
import sys

import pytest

from linkcolor.catalog import CODES
from linkcolor.intlattice import IntMatrix, smith_normal_form


def run(*argv, stdin=""):
    return subprocess.run(
        [sys.executable, "-m", "linkcolor", *argv],
        input=stdin, capture_output=True, text=True, timeout=120)


@pytest.fixture()
def trefoil_file(tmp_path):
    p = tmp_path / "trefoil.txt"
    p.write_text(CODES["trefoil"] + "\n")
    return str(p)


class TestRegions:
    def test_json_shape(self, trefoil_file):
        res = run("regions", trefoil_file)
        assert res.returncode == 0
        data = json.loads(res.stdout)
        assert data["crossings"] == "3"
        assert data["regions"] == "5"
        assert data["unbounded"] == "0"
        assert len(data["quadrants"]) == 3
        assert all(len(q) == 4 for q in data["quadrants"])
        assert data["circles"] == []

    def test_stdin_dash(self):
        res = run("regions", "-", stdin="O 2\n")
        assert res.returncode == 0
        data = json.loads(res.stdout)
        assert data["regions"] == "3"
        assert data["circles"] == ["1", "2"]

    def test_plain(self, trefoil_file):
        res = run("regions", "--plain", trefoil_file)
        lines = res.stdout.splitlines()
        assert lines[0] == "regions 5"
        assert lines[1] == "unbounded 0"


class TestShadeAndMatrix:
    def test_shade_keys(self, trefoil_file):
        res = run("shade", trefoil_file)
        data = json.loads(res.stdout)
        assert set(data) == {"shading", "shaded", "unshaded", "beta_s", "beta_u"}
        assert data["shading"] == "0"
        assert "0" in data["unshaded"]

    def test_matrix_plain_rows(self, trefoil_file):
        res = run("matrix", "--plain", "--shading", "1", trefoil_file)
        assert res.stdout.splitlines() == ["-3 3", "3 -3"]

    def test_adjusted_pads(self, tmp_path):
        p = tmp_path / "u2.txt"
        p.write_text("O 2\n")
        raw = json.loads(run("matrix", str(p)).stdout)
        adj = json.loads(run("matrix", "--adjusted", str(p)).stdout)
        assert raw["matrix"] == [["0"]]
        assert adj["matrix"] == [["0", "0"], ["0", "0"]]
        assert raw["beta_s"] == "2"


class TestSnf:
    def test_bare_array(self, tmp_path):
        p = tmp_path / "m.json"
        p.write_text("[[6, 4]]")
        data = json.loads(run("snf", str(p)).stdout)
        assert data["phi"] == ["0", "2"]
        assert data["rank"] == "1"

    def test_dict_with_string_entries(self, tmp_path):
        p = tmp_path / "m.json"
        p.write_text(json.dumps({"matrix": [["2", "0"], ["0", "3"]]}))
        data = json.loads(run("snf", str(p)).stdout)
        assert data["phi"] == ["6", "1"]

    def test_witness_shape(self, tmp_path):
        p = tmp_path / "m.json"
        p.write_text("[[2, 4], [6, 8]]")
        data = json.loads(run("snf", str(p)).stdout)
        u1 = [[int(v) for v in row] for row in data["u1"]]
        u2 = [[int(v) for v in row] for row in data["u2"]]
        nf = [[int(v) for v in row] for row in data["normal_form"]]
        prod = IntMatrix.from_rows(u1, 2) @ IntMatrix.from_rows([[2, 4], [6, 8]], 2) \
            @ IntMatrix.from_rows(u2, 2)
        assert prod.to_lists() == nf

    def test_ragged_rejected(self, tmp_path):
        p = tmp_path / "m.json"
        p.write_text("[[1, 2], [3]]")
        assert run("snf", str(p)).returncode == 2


class TestColoringsAndFox:
    def test_colorings_keys(self, trefoil_file):
        res = run("colorings", "--mod", "3", "--bruteforce", trefoil_file)
        data = json.loads(res.stdout)
        assert data["phi"] == ["0", "3", "1"]
        assert data["modulus"] == "3"
        assert data["dehn_order_mod_m"] == "27"
        assert data["fox_order_mod_m"] == "9"
        assert data["bruteforce"] == "27"

    def test_fox_keys(self, trefoil_file):
        res = run("fox", "--mod", "3", "--bruteforce", trefoil_file)
        data = json.loads(res.stdout)
        assert data["arc_count"] == "3"
        assert data["fox_order_mod_m"] == "9"
        assert data["bruteforce"] == "9"

    def test_shading_flag_changes_phi_layout(self, trefoil_file):
        d0 = json.loads(run("colorings", "--mod", "5", trefoil_file).stdout)
        d1 = json.loads(run("colorings", "--mod", "5", "--shading", "1",
                            trefoil_file).stdout)
        assert d0["phi"] == ["0", "3", "1"]
        assert d1["phi"] == ["0", "3"]
        assert d0["dehn_order_mod_m"] == d1["dehn_order_mod_m"]


class TestRealizeAndPipe:
    def test_default_spec_is_unknot(self):
        data = json.loads(run("realize").stdout)
        assert data["spec"] == []
        assert data["diagram"] == "O 1"
        assert data["matrix"] == [["0"]]

    def test_pipe_realize_into_snf(self):
        first = run("realize", "0,3,3,1")
        assert first.returncode == 0
        piped = run("snf", "-", stdin=first.stdout)
        assert piped.returncode == 0
        got = json.loads(piped.stdout)

        rows = [[int(v) for v in row]
                for row in json.loads(first.stdout)["matrix"]]
        res = smith_normal_form(IntMatrix.from_rows(rows, 5))
        assert got["phi"] == [str(f) for f in res.phi]
        assert got["u1"] == [[str(v) for v in row] for row in res.u1.to_lists()]


class TestCompare:
    def test_kinked_trefoil(self, tmp_path):
        a = tmp_path / "a.txt"
        b = tmp_path / "b.txt"
        a.write_text(CODES["trefoil"])
        b.write_text(CODES["trefoil_kink"])
        res = run("compare", str(a), str(b))
        assert res.returncode == 0
        assert json.loads(res.stdout) == {"shading0": True, "shading1": True}

    def test_distinct(self, tmp_path):
        a = tmp_path / "a.txt"
        b = tmp_path / "b.txt"
        a.write_text(CODES["trefoil"])
        b.write_text(CODES["figure_eight"])
        res = run("compare", "--plain", str(a), str(b))
        assert res.returncode == 0
        assert res.stdout.splitlines() == [
            "shading0: not equivalent", "shading1: not equivalent"]


class TestExitCodes:
    def test_label_used_once(self):
        res = run("regions", "-", stdin="X(1,2,3,4)")
        assert res.returncode == 2
        assert "error:" in res.stderr

    def test_missing_file(self):
        assert run("regions", "/nonexistent/diagram.txt").returncode == 2

    def test_bad_matrix_json(self):
        assert run("snf", "-", stdin="{nope").returncode == 2

    def test_bad_spec(self):
        assert run("realize", "3,x").returncode == 2
        assert run("realize", "3,-1").returncode == 2

    def test_nonplanar(self):
        res = run("regions", "-", stdin="X(1,2,1,2)")
        assert res.returncode == 3

    def test_enum_cap(self, tmp_path):
        p = tmp_path / "granny.txt"
        p.write_text(CODES["granny"])
        res = run("colorings", "--mod", "3", "--bruteforce",
                  "--enum-cap", "4", str(p))
        assert res.returncode == 4

    def test_usage_error(self):
        assert run("colorings", "-") .returncode == 2


class TestDeterminism:
    def test_plain_output_stable(self, trefoil_file):
        first = run("matrix", "--plain", trefoil_file).stdout
        second = run("matrix", "--plain", trefoil_file).stdout
        assert first == second

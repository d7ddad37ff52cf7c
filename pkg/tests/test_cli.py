import json
import shutil
import subprocess
import sys
from fractions import Fraction as F

import pytest

from tripmaps.cli import main
from tripmaps.render import DOMAIN_AREA, fixed, subdivision_figure, to_svg


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def run_json(capsys, *argv):
    code, out, err = run(capsys, *argv)
    assert code == 0, err
    data = json.loads(out)
    assert data["schemaVersion"] == 1
    return data


class TestSequence:
    def test_golden(self, capsys):
        d = run_json(capsys, "sequence", "--triple", "(e,e,e)", "--point", "alg(x^3-2;1,2)[1/a,1/a^2]", "--terms", "3")
        assert d["trip"]["digits"] == [0, 0, 2]
        assert d["tree"]["bits"][:5] == [0, 0, 1, 1, 0]
        assert d["point"][0]["decimal"].startswith("0.7937005259")

    def test_rational_boundary(self, capsys):
        d = run_json(capsys, "sequence", "--point", "5/7,3/7", "--orbit")
        assert d["trip"] == {"digits": [0, 1], "termination": "BoundaryHit"}
        assert d["orbit"][0] == [{"exact": "3/5", "decimal": "0.6"}, {"exact": "2/5", "decimal": "0.4"}]

    def test_outside_domain(self, capsys):
        code, _, err = run(capsys, "sequence", "--point", "2,3")
        assert code == 3 and "PointOutsideDomain" in err

    @pytest.mark.parametrize("point", ["2,,3", "alg(x^3-2;5,6)[a,1]", "1/0,1"])
    def test_parse_errors(self, capsys, point):
        code, _, err = run(capsys, "sequence", "--point", point)
        assert code == 2, err

    def test_bad_triple(self, capsys):
        assert run(capsys, "sequence", "--triple", "(e,e)", "--point", "1/2,1/3")[0] == 2

    def test_tree_verb(self, capsys):
        d = run_json(capsys, "tree", "--point", "5/7,3/7")
        assert d["tree"]["bits"] == [0, 1, 0]

    def test_max_steps(self, capsys):
        d = run_json(
            capsys,
            "--max-steps",
            "15",
            "tree",
            "--depth",
            "40",
            "--triple",
            "(e,e,(1 3))",
            "--point",
            "alg(x^2-3x+1;0,1)[(a+1)/2,a/2]",
        )
        assert d["tree"]["termination"] == "InfiniteOnesTail" and len(d["tree"]["bits"]) == 15

    def test_text_format(self, capsys):
        code, out, _ = run(capsys, "sequence", "--point", "5/7,3/7", "--format", "text")
        assert code == 0 and "BoundaryHit" in out

    def test_precision(self, capsys):
        d = run_json(capsys, "--precision", "3", "sequence", "--point", "2/3,1/3")
        assert d["point"][0]["decimal"] == "0.667"


class TestEnumerateClassify:
    def test_enumerate(self, capsys):
        d = run_json(capsys, "enumerate")
        assert d["count"] == 216 and len(d["rows"]) == 216
        rows = {r["triple"]: r for r in d["rows"]}
        assert rows["(e,e,e)"]["verdict"] == "Unique"
        for r in d["rows"]:
            assert rows[r["reduced"]]["verdict"] == r["verdict"]

    def test_classify_segment(self, capsys):
        d = run_json(capsys, "classify", "--triple", "(e,(12),e)", "--word", "0")
        assert d["verdict"] == "LineSegment" and d["catalog"] == "NonUnique"

    def test_classify_unique(self, capsys):
        d = run_json(capsys, "classify", "--triple", "(e,(23),e)", "--word", "0,1")
        assert d["verdict"] == "UniquePoint"
        assert max(len(p.split("x^")) for p in d["witnesses"][0]["minpolys"]) >= 2
        assert d["witnesses"][0]["minpolys"][0].startswith("x^3")

    def test_classify_trip_digits(self, capsys):
        d = run_json(capsys, "classify", "--triple", "((2 3),e,(2 3))", "--word", "1,2", "--trip")
        assert d["verdict"] == "UniquePoint"
        assert d["evidence"]["charPoly"]

    def test_bad_word(self, capsys):
        assert run(capsys, "classify", "--triple", "(e,e,e)", "--word", "2")[0] == 2


class TestVerify:
    def test_brun(self, capsys):
        d = run_json(capsys, "verify-classical", "--map", "brun", "--samples", "500")
        assert d["passed"] and d["reports"][0]["mismatches"] == 0

    def test_all(self, capsys):
        d = run_json(capsys, "verify-classical", "--samples", "50")
        assert [r["map"] for r in d["reports"]] == ["monkemeyer", "brun", "fully-subtractive", "guting"]

    def test_failure_exit(self, capsys, monkeypatch):
        import tripmaps.cli as cli
        from tripmaps.classical import EquivalenceReport

        def broken(mid, samples, seed):
            return EquivalenceReport(mid.value, samples, seed, [{"point": (F(1, 2), F(1, 3))}])

        monkeypatch.setattr(cli, "verify_equivalence", broken)
        code, out, _ = run(capsys, "verify-classical", "--map", "brun", "--samples", "5")
        assert code == 5 and json.loads(out)["passed"] is False


class TestRender:
    def test_depth_one_geometry(self):
        fig = subdivision_figure("(e,e,e)", 1)
        got = {t.word: set(t.vertices) for t in fig.triangles}
        assert got[(0,)] == {(1, 0), (1, 1), (F(1, 2), F(1, 2))}
        assert got[(1,)] == {(0, 0), (1, 0), (F(1, 2), F(1, 2))}

    def test_depth_zero(self):
        fig = subdivision_figure("(e,e,e)", 0)
        assert len(fig.triangles) == 1 and set(fig.triangles[0].vertices) == {(0, 0), (1, 0), (1, 1)}

    def test_monkemeyer_split_on_antidiagonal(self):
        fig = subdivision_figure("(e,(1 3 2),(2 3))", 1)
        shared = set(fig.triangles[0].vertices) & set(fig.triangles[1].vertices)
        assert shared == {(1, 0), (F(1, 2), F(1, 2))}

    @pytest.mark.parametrize("triple", ["(e,e,e)", "(e,(1 3 2),(2 3))", "((1 2 3),(1 2),e)"])
    @pytest.mark.parametrize("depth", [1, 3, 5])
    def test_areas_tile(self, triple, depth):
        assert subdivision_figure(triple, depth).total_area() == DOMAIN_AREA

    def test_svg_deterministic(self, capsys):
        a = run(capsys, "render", "--depth", "3")[1]
        b = run(capsys, "render", "--depth", "3")[1]
        assert a == b and a.count("<polygon") == 8 and 'viewBox="0 0 1000 1000"' in a

    def test_svg_flips_y(self):
        svg = to_svg(subdivision_figure("(e,e,e)", 0))
        assert 'points="0,1000 1000,1000 1000,0"' in svg

    def test_depth_cap(self, capsys, monkeypatch):
        monkeypatch.setenv("TRIP_MAX_DEPTH", "3")
        assert run(capsys, "render", "--depth", "4")[0] == 4

    def test_render_json(self, capsys):
        d = run_json(capsys, "render", "--depth", "2", "--format", "json")
        assert d["area"]["exact"] == "1/2" and len(d["triangles"]) == 4

    def test_out_file(self, capsys, tmp_path):
        target = tmp_path / "fig.svg"
        assert run(capsys, "render", "--depth", "2", "--out", str(target))[0] == 0
        assert target.read_text().startswith("<?xml")

    def test_fixed(self):
        assert fixed(F(2, 3), 9) == "0.666666667"
        assert fixed(F(1, 8), 2) == "0.13"
        assert fixed(F(5), 3) == "5"


class TestSimplexCount:
    def test_apply(self, capsys):
        d = run_json(capsys, "simplex", "apply", "--dim", "4", "--point", "1/2,1/3,1/5")
        assert [v["exact"] for v in d["image"]] == ["2/3", "2/5", "1/5"]

    def test_apply_checked_region(self, capsys):
        assert run(capsys, "simplex", "apply", "--dim", "4", "--point", "1/2,1/3,1/5", "--k", "0")[0] == 3

    def test_sequence(self, capsys):
        d = run_json(capsys, "simplex", "sequence", "--dim", "4", "--point", "1/2,1/3,1/5")
        assert d["digits"] == [2, 1, 2] and d["termination"] == "BoundaryHit"

    def test_count(self, capsys):
        assert run_json(capsys, "count", "--dim", "3")["bound"] == 216
        d = run_json(capsys, "simplex", "count", "--dim", "4", "--sweep")
        assert (d["bound"], d["classes"]) == (6912, 6912)

    def test_dim_too_small(self, capsys):
        assert run(capsys, "simplex", "apply", "--dim", "2", "--point", "1/2")[0] == 3


@pytest.mark.skipif(shutil.which("trip") is None, reason="console script not installed")
def test_console_script_exit_codes():
    ok = subprocess.run(["trip", "sequence", "--point", "5/7,3/7"], capture_output=True, text=True)
    assert ok.returncode == 0 and json.loads(ok.stdout)["trip"]["digits"] == [0, 1]
    assert subprocess.run(["trip", "sequence", "--point", "2,3"], capture_output=True).returncode == 3
    assert subprocess.run(["trip", "sequence", "--point", "x,,"], capture_output=True).returncode == 2
    assert subprocess.run(["trip", "bogus"], capture_output=True).returncode == 2


def test_module_entry():
    r = subprocess.run([sys.executable, "-m", "tripmaps.cli", "count", "--dim", "4"], capture_output=True, text=True)
    assert r.returncode == 0 and json.loads(r.stdout)["bound"] == 6912

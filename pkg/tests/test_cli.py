import json
import math

import pytest

from lunekit.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


class TestGen:
    def test_reuleaux_to_file(self, tmp_path, capsys):
        out = tmp_path / "r3.json"
        code, _, _ = run(capsys, "gen", "reuleaux", "--n", "3", "--w", "1.0", "--out", str(out))
        assert code == 0
        doc = json.loads(out.read_text())
        assert doc["kind"] == "disk_polygon"
        assert len(doc["data"]["edges"]) == 3
        assert all(e["kind"] == "arc" for e in doc["data"]["edges"])

    def test_quarter_disk_structure(self, tmp_path, capsys):
        out = tmp_path / "qd.json"
        code, _, _ = run(capsys, "gen", "quarter-disk", "--delta", "1.0", "--out", str(out))
        assert code == 0
        doc = json.loads(out.read_text())
        kinds = sorted(e["kind"] for e in doc["data"]["edges"])
        assert kinds == ["arc", "geodesic", "geodesic"]

    def test_even_ngon_rejected(self, capsys):
        code, _, err = run(capsys, "gen", "reduced-ngon", "--n", "4", "--delta", "0.8")
        assert code == 2
        assert "odd" in err

    def test_hull_of_points(self, tmp_path, capsys):
        pts = tmp_path / "pts.json"
        pts.write_text(json.dumps([[0.1, 0, 1], [0, 0.1, 1], [-0.1, 0, 1], [0, -0.1, 1]]))
        out = tmp_path / "hull.json"
        code, _, _ = run(capsys, "gen", "hull-of-points", "--points-file", str(pts), "--out", str(out))
        assert code == 0
        doc = json.loads(out.read_text())
        assert doc["kind"] == "polygon"
        assert len(doc["data"]["vertices"]) == 4

    def test_gen_stdout(self, capsys):
        code, out, _ = run(capsys, "gen", "cap", "--rho", "0.5")
        assert code == 0
        assert json.loads(out)["kind"] == "cap"

    def test_byte_stable(self, tmp_path, capsys):
        a, b = tmp_path / "a.json", tmp_path / "b.json"
        run(capsys, "gen", "reuleaux", "--n", "5", "--w", "1.2", "--out", str(a))
        run(capsys, "gen", "reuleaux", "--n", "5", "--w", "1.2", "--out", str(b))
        assert a.read_bytes() == b.read_bytes()


class TestMeasure:
    @pytest.fixture
    def reuleaux_file(self, tmp_path, capsys):
        out = tmp_path / "r3.json"
        run(capsys, "gen", "reuleaux", "--n", "3", "--w", "1.0", "--out", str(out))
        return str(out)

    def test_text_output(self, capsys, reuleaux_file):
        code, out, _ = run(capsys, "measure", reuleaux_file)
        assert code == 0
        assert "thickness" in out and "diameter" in out

    def test_json_values(self, capsys, reuleaux_file):
        code, out, _ = run(capsys, "measure", reuleaux_file, "--json")
        assert code == 0
        rep = json.loads(out)
        assert rep["thickness"] == pytest.approx(1.0, abs=1e-6)
        assert rep["diameter"] == pytest.approx(1.0, abs=1e-6)
        expected_cap = math.asin(2 / math.sqrt(3) * math.sin(0.5))
        assert rep["min_cap_radius"] == pytest.approx(expected_cap, abs=1e-6)
        assert rep["is_constant_width"] is True

    def test_cap_measure(self, tmp_path, capsys):
        f = tmp_path / "cap.json"
        run(capsys, "gen", "cap", "--rho", "0.5", "--out", str(f))
        code, out, _ = run(capsys, "measure", str(f), "--json")
        rep = json.loads(out)
        assert rep["thickness"] == pytest.approx(1.0, abs=1e-9)
        assert rep["diameter"] == pytest.approx(1.0, abs=1e-9)

    def test_quarter_disk_measure(self, tmp_path, capsys):
        f = tmp_path / "qd.json"
        run(capsys, "gen", "quarter-disk", "--delta", str(math.pi / 3), "--out", str(f))
        code, out, _ = run(capsys, "measure", str(f), "--json")
        rep = json.loads(out)
        assert rep["diameter"] == pytest.approx(math.acos(0.25), abs=1e-6)

    def test_schema_error_exit(self, tmp_path, capsys):
        f = tmp_path / "bad.json"
        f.write_text('{"schema_version": "1", "kind": "nope", "data": {}}')
        code, _, err = run(capsys, "measure", str(f))
        assert code == 3

    def test_missing_file_exit(self, capsys):
        code, _, _ = run(capsys, "measure", "/nonexistent/x.json")
        assert code == 3


class TestVerify:
    def test_single_suite(self, capsys):
        code, out, _ = run(capsys, "verify", "--suite", "T_V_cover", "--seed", "1", "--cases", "4")
        assert code == 0
        rep = json.loads(out.strip())
        assert rep["pass"] is True
        assert rep["cases_run"] == 4

    def test_unknown_suite_usage_error(self, capsys):
        code, _, err = run(capsys, "verify", "--suite", "bogus")
        assert code == 2

    def test_env_seed(self, capsys, monkeypatch):
        monkeypatch.setenv("LUNE_SEED", "5")
        code, out, _ = run(capsys, "verify", "--suite", "T_III_precise", "--cases", "4")
        assert code == 0
        assert json.loads(out.strip())["seed"] == 5


class TestPlot:
    @pytest.fixture
    def files(self, tmp_path, capsys):
        r3 = tmp_path / "r3.json"
        qd = tmp_path / "qd.json"
        run(capsys, "gen", "reuleaux", "--n", "3", "--w", "1.0", "--out", str(r3))
        run(capsys, "gen", "quarter-disk", "--delta", "0.8", "--out", str(qd))
        return tmp_path, str(r3), str(qd)

    def test_reuleaux_with_cap_structure(self, capsys, files):
        tmp, r3, _ = files
        out = tmp / "r3.svg"
        code, _, _ = run(capsys, "plot", r3, "--with-cap", "--out", str(out))
        assert code == 0
        svg = out.read_text()
        assert svg.count('class="edge-arc"') == 3
        assert svg.count("<circle") == 1

    def test_gnomonic_geodesics_are_segments(self, capsys, files):
        tmp, _, qd = files
        out = tmp / "qd.svg"
        code, _, _ = run(capsys, "plot", qd, "--projection", "gnomonic", "--out", str(out))
        assert code == 0
        svg = out.read_text()
        for line in svg.splitlines():
            if 'class="edge-geodesic"' in line:
                d = line.split('d="')[1].split('"')[0]
                assert d.count("L") == 1

    def test_lune_overlay_centers_on_boundary(self, capsys, files):
        tmp, _, qd = files
        out = tmp / "qdl.svg"
        code, _, _ = run(capsys, "plot", qd, "--with-lune", "auto", "--out", str(out))
        assert code == 0
        svg = out.read_text()
        assert svg.count('class="lune-center"') == 2
        assert svg.count('class="lune-semicircle"') == 2

    def test_deterministic_output(self, capsys, files):
        tmp, r3, _ = files
        a, b = tmp / "a.svg", tmp / "b.svg"
        run(capsys, "plot", r3, "--with-cap", "--out", str(a))
        run(capsys, "plot", r3, "--with-cap", "--out", str(b))
        assert a.read_bytes() == b.read_bytes()


def test_config_tolerances(tmp_path, capsys):
    cfg = tmp_path / "tol.cfg"
    cfg.write_text("eps_alg = 1e-10\neps_claim = 5e-6\n")
    f = tmp_path / "cap.json"
    run(capsys, "gen", "cap", "--rho", "0.5", "--out", str(f))
    code, _, _ = run(capsys, "--config", str(cfg), "measure", str(f))
    assert code == 0


def test_config_invalid(tmp_path, capsys):
    cfg = tmp_path / "tol.cfg"
    cfg.write_text("eps_alg = banana\n")
    code, _, _ = run(capsys, "--config", str(cfg), "verify", "--suite", "T_III_precise")
    assert code == 3

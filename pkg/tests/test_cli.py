import csv
import io
import json
import math
import re
import shlex
import subprocess
import sys

import numpy as np
import pytest

import numrad.bounds as bounds_module
from numrad import cli
from numrad.ensembles import EnsembleSpec
from numrad.fuzz import run
from numrad.matrixfile import write_matrix
from oracles import shift

R2 = 1 / math.sqrt(2)


@pytest.fixture
def files(tmp_path):
    mats = {
        "shift3": shift(3),
        "n2": shift(2),
        "a": np.diag([20.0, 30.0 + 30.0j]),
        "b": np.diag([1.0, -1.0]),
        "i2": np.eye(2),
        "i3": np.eye(3),
    }
    paths = {}
    for name, M in mats.items():
        paths[name] = str(tmp_path / f"{name}.json")
        write_matrix(paths[name], M)
    return paths


def run_cli(capsys, *args):
    code = cli.main([str(a) for a in args])
    out, err = capsys.readouterr()
    return code, out, err


class TestRadius:
    def test_human_and_json(self, capsys, files, tmp_path):
        out_json = tmp_path / "r.json"
        code, out, _ = run_cli(capsys, "radius", files["shift3"], "--json", out_json)
        assert code == 0
        assert "0.707106781" in out
        doc = json.loads(out_json.read_text())
        assert doc["w"] == pytest.approx(R2, abs=1e-12)

    def test_json_is_byte_identical(self, capsys, files, tmp_path):
        texts = []
        for k in range(2):
            p = tmp_path / f"b{k}.json"
            assert run_cli(capsys, "bounds", files["a"], "--json", p)[0] == 0
            texts.append(p.read_bytes())
        assert texts[0] == texts[1]


class TestBounds:
    def test_shift3(self, capsys, files, tmp_path):
        p = tmp_path / "b.json"
        code, out, _ = run_cli(capsys, "bounds", files["shift3"], "--json", p)
        assert code == 0
        assert re.search(r"\bw\b.*0\.707106781", out)
        doc = json.loads(p.read_text())
        assert doc["kittaneh_sq"] == pytest.approx(0.5, abs=1e-14)
        assert doc["w"] == pytest.approx(R2, abs=1e-12)
        assert doc["chain_ok"] is True
        # every report field is present
        for field in ("norm", "re_norm", "im_norm", "c_re", "c_im", "classical_lo", "b_gap", "b_sq_gap",
                      "b_bp", "b_crawford", "b4_first", "b4_second", "b4_bag5", "b4_bhunia"):
            assert field in doc

    def test_violation_exits_1(self, capsys, files, monkeypatch):
        monkeypatch.setattr(bounds_module, "holds", lambda lhs, rhs, slack=0: lhs < rhs - 0.1 * abs(rhs))
        code, out, _ = run_cli(capsys, "bounds", files["shift3"])
        assert code == 1
        assert "VIOLATION" in out


class TestDiagnose:
    def test_shift3(self, capsys, files, tmp_path):
        p = tmp_path / "d.json"
        code, out, _ = run_cli(capsys, "diagnose", files["shift3"], "--tol", "1e-7", "--json", p)
        assert code == 0
        assert "holds" in out
        doc = json.loads(p.read_text())
        assert doc["kittaneh"]["case_kittaneh"] is True and doc["kittaneh"]["witnesses_ok"] is True
        assert doc["half_norm"]["case_half_norm"] is False
        assert doc["disk"]["radius"] == pytest.approx(R2, abs=1e-6)
        assert doc["crawford"]["origin_inside"] is True and doc["violations"] == []

    def test_diagonal(self, capsys, files):
        code, out, _ = run_cli(capsys, "diagnose", files["a"])
        assert code == 0
        assert "does not hold" in out


class TestCommutator:
    def test_example_side_by_side(self, capsys, files, tmp_path):
        p = tmp_path / "c.json"
        code, out, _ = run_cli(capsys, "commutator", files["a"], files["b"], "--json", p)
        assert code == 0
        assert "105.830052" in out and "120" in out
        line = next(ln for ln in out.splitlines() if "105.830052" in ln)
        assert "84.8528137" in line  # the true radius printed next to the bound
        doc = json.loads(p.read_text())
        assert doc["b_hk"] == pytest.approx(120, rel=1e-12)

    def test_with_x_and_y(self, capsys, files):
        code, out, _ = run_cli(capsys, "commutator", files["a"], files["b"], "--x", files["i2"], "--y", files["i2"])
        assert code == 0
        assert "th2" in out

    def test_x_without_y(self, capsys, files):
        assert run_cli(capsys, "commutator", files["a"], files["b"], "--x", files["i2"])[0] == 2

    def test_dimension_mismatch(self, capsys, files):
        code, _, err = run_cli(capsys, "commutator", files["a"], files["shift3"])
        assert code == 2 and "error" in err


class TestRange:
    def test_csv(self, capsys, files):
        code, out, _ = run_cli(capsys, "range", files["shift3"], "--points", "40")
        assert code == 0
        rows = list(csv.reader(io.StringIO(out)))
        assert rows[0] == ["theta", "re", "im", "part_norm"]
        assert len(rows) == 41
        for theta, re_, im, pn in rows[1:]:
            assert abs(abs(complex(float(re_), float(im))) - R2) <= 1e-6
            assert float(pn) == pytest.approx(R2, abs=1e-12)
        assert float(rows[2][0]) == pytest.approx(2 * math.pi / 40, rel=1e-15)

    def test_output_file_and_default_points(self, capsys, files, tmp_path):
        p = tmp_path / "w.csv"
        code, out, _ = run_cli(capsys, "range", files["a"], "-o", p)
        assert code == 0 and "360" in out
        assert len(p.read_text().splitlines()) == 361

    def test_too_few_points(self, capsys, files):
        with pytest.raises(SystemExit) as info:
            cli.main(["range", files["a"], "--points", "8"])
        assert info.value.code == 2


class TestUsage:
    def test_missing_file(self, capsys, tmp_path):
        code, _, err = run_cli(capsys, "radius", tmp_path / "nope.json")
        assert code == 2 and "cannot read" in err

    def test_malformed_file(self, capsys, tmp_path):
        p = tmp_path / "bad.json"
        p.write_text('{"entries": [[1, 2, 3], [4, 5, 6]]}')
        code, _, err = run_cli(capsys, "radius", p)
        assert code == 2 and "non-square" in err

    @pytest.mark.parametrize("argv", [
        [], ["bogus"], ["radius"], ["fuzz", "--dims", "3..2"], ["fuzz", "--dims", "x"],
        ["fuzz", "--count", "-1"], ["fuzz", "--seed", "-1"], ["radius", "a.json", "--tol", "0"],
        ["radius", "a.json", "--grid", "4"],
    ])
    def test_argparse_errors(self, argv):
        with pytest.raises(SystemExit) as info:
            cli.main(argv)
        assert info.value.code == 2

    def test_unknown_kind(self, capsys):
        code, _, err = run_cli(capsys, "fuzz", "--kind", "wishart", "--count", "1")
        assert code == 2 and "unknown kind" in err

    def test_kind_aliases(self):
        assert cli.kinds(["nilpotent,normal", "skew", "normal"]) == [
            "nilpotent-jordan", "normal-random", "skew-hermitian"]
        assert len(cli.kinds(None)) == 6 and cli.kinds(["all"]) == cli.kinds(None)

    def test_dims(self):
        assert cli.parse_dims("2..8") == (2, 8)
        assert cli.parse_dims("5") == (5, 5)

    def test_formatting(self):
        assert cli.fmt(105.83005244258364) == "105.830052"
        assert cli.fmt(1 - 2j) == "1-2i"
        assert cli.jsonable({"z": 1j, "a": np.float64(0.5), "v": np.array([1.0])}) == {
            "z": [0.0, 1.0], "a": 0.5, "v": [1.0]}

    def test_module_entry_point(self, files):
        proc = subprocess.run([sys.executable, "-m", "numrad", "radius", files["n2"]],
                              capture_output=True, text=True)
        assert proc.returncode == 0 and "0.5" in proc.stdout


class TestFuzz:
    def test_small_sweep_with_shifts(self, capsys, tmp_path):
        p = tmp_path / "f.json"
        code, out, _ = run_cli(capsys, "fuzz", "--dims", "2..4", "--count", "3", "--seed", "7", "--json", p)
        assert code == 0
        assert out.strip().splitlines()[-1].startswith("ok: 54 matrices")
        doc = json.loads(p.read_text())
        assert doc["failures"] == [] and doc["matrices"] == 54
        assert len(doc["kinds"]) == 6

    def test_json_deterministic(self, capsys, tmp_path):
        texts = []
        for k in range(2):
            p = tmp_path / f"f{k}.json"
            run_cli(capsys, "fuzz", "--kind", "gaussian", "--dims", "2..3", "--count", "4", "--json", p)
            texts.append(p.read_bytes())
        assert texts[0] == texts[1]

    def test_worker_processes_give_same_result(self):
        specs = [EnsembleSpec("gaussian", (2, 3), 6, 5), EnsembleSpec("shift", (2, 3), 2, 5)]
        a, b = run(specs), run(specs, jobs=2)
        assert (a.matrices, a.checks, a.failures) == (b.matrices, b.checks, b.failures)
        assert a.ok

    def test_failure_artifact_replays(self, capsys, tmp_path, monkeypatch):
        # make every chain comparison fail, then replay the printed artifact
        monkeypatch.setattr(bounds_module, "holds", lambda lhs, rhs, slack=0: lhs < rhs - 0.1 * abs(rhs))
        code, out, _ = run_cli(capsys, "fuzz", "--kind", "gaussian", "--dims", "3", "--count", "1", "--seed", "3")
        assert code == 1
        assert "FAILED" in out
        lines = out.splitlines()
        files = {}
        for k, line in enumerate(lines):
            if line.startswith("--- "):
                files[line[4:]] = lines[k + 1]
        replay = next(line for line in lines if line.startswith("replay: numrad bounds"))
        for name, text in files.items():
            (tmp_path / name).write_text(text)
        argv = [str(tmp_path / a) if a in files else a for a in shlex.split(replay)[2:]]
        code, out, _ = run_cli(capsys, *argv)
        assert code == 1 and "VIOLATION" in out
        A = json.loads(files["gaussian-3-0-A.json"])
        assert A["dim"] == 3

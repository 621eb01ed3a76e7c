import csv
import io
import json
import subprocess
import sys

import pytest

from rcrnet.cli import EXIT_MISMATCH, EXIT_OK, EXIT_UNREACHABLE, EXIT_USAGE, main
from rcrnet.sweep import SweepSpec, parse_range, run_sweep
from rcrnet.topology import Variant


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


# -- sweep library -------------------------------------------------------------


@pytest.mark.parametrize("text, expected", [("3", range(3, 4)), ("1..5", range(1, 6)), ("0..0", range(0, 1))])
def test_parse_range(text, expected):
    assert parse_range(text) == expected


def test_parse_range_rejects_empty():
    with pytest.raises(ValueError):
        parse_range("4..2")


def test_sweep_spec_validation():
    with pytest.raises(ValueError):
        SweepSpec(k=range(0))
    with pytest.raises(ValueError):
        SweepSpec(variants=())


def test_sweep_cap_one_skips_everything():
    result = run_sweep(SweepSpec(variants=tuple(Variant), node_cap=1))
    assert result.skipped == len(result.rows) == 2 * 5 * 6 * 7
    assert result.violations == 0


def test_small_sweep_rows_in_grid_order():
    spec = SweepSpec(variants=tuple(Variant), k=range(1, 3), r=range(1, 4), j=range(0, 3),
                     exact_bisection=True, symmetry=True)
    result = run_sweep(spec)
    assert [row.params for row in result.rows] == spec.points()
    assert result.violations == 0 and result.skipped == 0
    parallel = run_sweep(spec, jobs=2)
    assert parallel.to_csv() == result.to_csv()


def test_sweep_csv_columns():
    result = run_sweep(SweepSpec(k=range(2, 3), r=range(2, 3), j=range(3, 4)))
    rows = list(csv.DictReader(io.StringIO(result.to_csv())))
    assert len(rows) == 1
    row = rows[0]
    assert (row["N"], row["conn_pred"], row["conn_obs"], row["min_num"]) == ("64", "0", "0", "0")
    assert row["diameter"] == row["diameter_bound"] == "infinite"
    assert row["status"] == "ok"


# -- command line -------------------------------------------------------------


def test_build_edges(capsys):
    code, out, _ = run(capsys, "build", "rcr", "1", "2", "1", "--format", "edges")
    assert code == EXIT_OK
    lines = out.splitlines()
    assert len(lines) == 8
    assert {int(x) for line in lines for x in line.split()[:2]} == set(range(8))


def test_build_json(capsys):
    code, out, _ = run(capsys, "build", "rcr", "2", "2", "3", "--format", "json")
    assert code == EXIT_OK
    assert json.loads(out)["nodes"] == 64


def test_build_dot_to_file(capsys, tmp_path):
    target = tmp_path / "g.dot"
    code, out, _ = run(capsys, "build", "rcr2", "2", "3", "1", "--format", "dot", "-o", str(target))
    assert code == EXIT_OK and out == ""
    assert target.read_text().startswith('graph "RCR-II(2,3,1)"')


def test_build_is_byte_identical(capsys):
    outputs = {run(capsys, "build", "rcr2", "3", "4", "2", "--format", fmt)[1] for fmt in ("json",) * 3}
    assert len(outputs) == 1


def test_build_invalid_params(capsys):
    code, _, err = run(capsys, "build", "rcr", "0", "3", "1")
    assert code == EXIT_USAGE
    assert "k must be >= 1" in err


def test_build_over_node_cap(capsys):
    code, _, err = run(capsys, "build", "rcr", "2", "5", "7", "--node-cap", "100")
    assert code == EXIT_USAGE and "error:" in err


def test_usage_error_exit_code(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["build", "hypercube", "1", "1", "1"])
    assert exc.value.code == EXIT_USAGE
    capsys.readouterr()


def test_analyze_example1(capsys):
    code, out, _ = run(capsys, "analyze", "rcr", "3", "3", "1")
    doc = json.loads(out)
    assert code == EXIT_OK
    assert doc["degree_histogram"] == {"4": 16, "5": 32}
    assert doc["connected"]["observed"] is True


def test_analyze_example6(capsys):
    code, out, _ = run(capsys, "analyze", "rcr", "2", "5", "7")
    doc = json.loads(out)
    assert code == EXIT_OK
    assert doc["diameter"] == {"observed": 14, "bound": 14}


def test_analyze_symmetry(capsys):
    code, out, _ = run(capsys, "analyze", "rcr2", "2", "3", "1", "--symmetry")
    sym = json.loads(out)["symmetry"]
    assert code == EXIT_OK
    assert sym["vertex_transitive"] is True and sym["theorem9_applicable"] is True


def test_analyze_caps_reported_in_document(capsys):
    code, out, _ = run(capsys, "analyze", "rcr", "2", "5", "7", "--exact-bisection", "--symmetry")
    doc = json.loads(out)
    assert code == EXIT_OK
    assert doc["bisection"]["exact"] == "skipped: size"
    assert doc["symmetry"]["vertex_transitive"] == "not determined (size cap)"


def test_paper_examples_gate(capsys):
    code, out, _ = run(capsys, "paper-examples")
    assert code == EXIT_OK
    assert out.splitlines()[-1] == "0 mismatches"
    assert "FAIL" not in out
    names = {line.split()[1] for line in out.splitlines()[:-1]}
    assert names == {f"Example{i}" for i in range(1, 9)} | {"Table1"}


def test_paper_examples_reports_mismatch(capsys, monkeypatch):
    import rcrnet.scenarios as sc

    monkeypatch.setitem(sc.SCENARIOS, "Example5", lambda: [sc.Check("Example5", "forced", 1, 2)])
    code, out, _ = run(capsys, "paper-examples", "--only", "Example5")
    assert code == EXIT_MISMATCH
    assert "expected=1 observed=2" in out
    assert out.splitlines()[-1] == "1 mismatches"


def test_sweep_cli_cap_one(capsys):
    code, out, _ = run(capsys, "sweep", "both", "--node-cap", "1", "--format", "csv")
    assert code == EXIT_OK
    assert out.splitlines()[-1].startswith("points: 420")
    assert "violations: 0" in out.splitlines()[-1]


def test_sweep_cli_small_grid(capsys):
    code, out, _ = run(capsys, "sweep", "rcr2", "-k", "1..2", "-r", "1..3", "-j", "0..2", "--symmetry")
    assert code == EXIT_OK
    header = out.splitlines()[0].split()
    assert header[:5] == ["variant", "k", "r", "j", "N"]
    assert "violations: 0" in out


def test_distance_example6(capsys):
    code, out, _ = run(capsys, "distance", "rcr", "2", "5", "7", "000000000;0", "111111111;2")
    lines = out.splitlines()
    assert code == EXIT_OK
    assert lines[0] == "14"
    assert lines[1] == "<000000000;0>"
    assert len(lines) == 16
    assert lines[-1].endswith("<111111111;2>")
    assert all("--ring-->" in l or "--cube-->" in l for l in lines[2:])


def test_distance_to_self(capsys):
    code, out, _ = run(capsys, "distance", "rcr", "1", "2", "1", "01;1", "01;1")
    assert code == EXIT_OK
    assert out.splitlines() == ["0", "<01;1>"]


def test_distance_unreachable(capsys):
    code, out, _ = run(capsys, "distance", "rcr", "2", "2", "3", "00000;0", "00100;0")
    assert code == EXIT_UNREACHABLE
    assert out.strip() == "unreachable"


def test_distance_bad_coordinate(capsys):
    code, _, err = run(capsys, "distance", "rcr", "2", "2", "3", "0000;0", "00100;0")
    assert code == EXIT_USAGE and "error:" in err


def test_bisect_exact(capsys):
    code, out, _ = run(capsys, "bisect", "exact", "rcr", "1", "2", "1")
    assert code == EXIT_OK
    assert json.loads(out) == {"params": {"variant": "rcr", "k": 1, "r": 2, "j": 1}, "exact": 2, "upper_bound": 2}


def test_bisect_exact_over_cap(capsys):
    code, _, err = run(capsys, "bisect", "exact", "rcr", "2", "5", "7")
    assert code == EXIT_USAGE and "error:" in err


def test_bisect_verify_cut_file(capsys, tmp_path):
    cut = tmp_path / "cut.txt"
    lines = ["# eight ring edges"]
    lines += [f"{c};{b} {c};{b + 1}" for c in ("00", "01", "10", "11") for b in (0, 5)]
    cut.write_text("\n".join(lines) + "\n")
    code, out, _ = run(capsys, "bisect", "verify-cut", "rcr", "1", "10", "1", "--cut", str(cut))
    doc = json.loads(out)
    assert code == EXIT_OK
    assert doc["bisects"] is True and doc["sides"] == [20, 20]
    assert doc["upper_bound"] == 10


def test_bisect_verify_cut_by_ids(capsys, tmp_path):
    cut = tmp_path / "cut.txt"
    cut.write_text("1 3\n5 7\n")
    code, out, _ = run(capsys, "bisect", "verify-cut", "rcr", "1", "2", "1", "--cut", str(cut))
    assert code == EXIT_OK
    assert json.loads(out)["bisects"] is True


def test_verify_cut_requires_file(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["bisect", "verify-cut", "rcr", "1", "2", "1"])
    assert exc.value.code == EXIT_USAGE
    capsys.readouterr()


def test_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "rcrnet", "paper-examples", "--only", "Table1"],
        capture_output=True, text=True, check=False,
    )
    assert proc.returncode == 0
    assert proc.stdout.splitlines()[-1] == "0 mismatches"

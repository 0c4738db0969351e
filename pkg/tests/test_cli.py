import json

import pytest

from rfsemi.cli import analyze_report, classify_lines, main
from rfsemi.configenum import enumerate_configs
from rfsemi.core import NumericalSemigroup
from rfsemi.rfmatrix import rf_matrices


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_analyze_text(capsys):
    code, out, _ = run(capsys, "analyze", "5,12,13")
    assert code == 0
    assert "F: 21" in out and "PF: {19,21}" in out and "almost symmetric: False" in out


def test_analyze_json_matches_library(capsys):
    code, out, _ = run(capsys, "analyze", "64, 67, 91, 138, 150", "--json")
    assert code == 0
    report = json.loads(out)
    assert report == analyze_report(NumericalSemigroup.from_generators([64, 67, 91, 138, 150]))
    assert report["pf"] == [209, 327, 445, 654]


def test_analyze_symmetric(capsys):
    _, out, _ = run(capsys, "analyze", "2,3")
    assert "F: 1" in out and "symmetric: True" in out


@pytest.mark.parametrize("argv", [["analyze", "4,6"], ["analyze", "a,b"], ["rf", "5,12,13", "20"], ["bogus"]])
def test_usage_errors(capsys, argv):
    code, _, _ = run(capsys, *argv)
    assert code == 2


def test_rf_output(capsys):
    code, out, _ = run(capsys, "rf", "5,12,13", "19")
    assert code == 0
    S = NumericalSemigroup.from_generators([5, 12, 13])
    assert out.strip() == "\n\n".join(A.format() for A in rf_matrices(S, 19))
    assert out.splitlines()[:3] == ["-1 2 0", "1 -1 2", "4 1 -1"]


def test_rf_cap(capsys):
    code, _, err = run(capsys, "rf", "10,11,12,13,14,15,16,17,18,19", "9", "--cap", "1")
    assert code == 2 and "cap" in err


def test_classify(capsys):
    code, out, _ = run(capsys, "classify", "64,67,91,138,150")
    assert code == 0
    assert out.splitlines() == ["209 good 3*91-64", "327 bad", "445 good 8*64-67", "654 frobenius"]
    _, out, _ = run(capsys, "classify", "64,67,91,138,150", "--json")
    assert json.loads(out) == classify_lines(NumericalSemigroup.from_generators([64, 67, 91, 138, 150]))
    code, _, _ = run(capsys, "classify", "5,12,13")
    assert code == 2


def test_configs(capsys):
    code, out, _ = run(capsys, "configs", "--order", "5", "--count-only")
    assert (code, out.strip()) == (0, "216")
    _, out, _ = run(capsys, "configs", "--order", "4")
    blocks = out.strip().split("\n\n")
    assert len(blocks) == 9
    first = enumerate_configs(4)[0]
    assert blocks[0] == f"{first.hex_id}\n{first.grid()}"
    code, _, _ = run(capsys, "configs", "--order", "12")
    assert code == 2


def test_census_and_resume(capsys, tmp_path):
    out_path = tmp_path / "c.jsonl"
    code, out, _ = run(capsys, "census", "--embdim", "5", "--max-gen", "14", "--out", str(out_path))
    assert code == 0
    summary = json.loads(out)
    assert summary["violations"] == [] and summary["records_emitted"] == len(out_path.read_text().splitlines())
    code, out2, _ = run(capsys, "resume", "--checkpoint", str(out_path) + ".ckpt")
    assert code == 0 and json.loads(out2)["records_emitted"] == summary["records_emitted"]


def test_census_all_flag(capsys, tmp_path):
    out_path = tmp_path / "c.jsonl"
    code, out, _ = run(capsys, "census", "--embdim", "3", "--max-gen", "12", "--all", "--out", str(out_path))
    assert code == 0
    assert any(not json.loads(l)["almost_symmetric"] for l in out_path.read_text().splitlines())


def test_census_guards(capsys, tmp_path):
    code, _, err = run(capsys, "census", "--embdim", "5", "--max-gen", "200", "--out", str(tmp_path / "x"))
    assert code == 2 and "--i-have-hours" in err
    code, _, _ = run(capsys, "census", "--embdim", "9", "--max-gen", "20")
    assert code == 2
    code, _, _ = run(capsys, "resume", "--checkpoint", str(tmp_path / "missing.ckpt"))
    assert code == 2


def test_verify_paper_lines(capsys):
    code, out, _ = run(capsys, "verify-paper")
    lines = [l for l in out.splitlines() if l.startswith(("PASS", "FAIL"))]
    assert len(lines) == 13
    # the only failing line is the published 327 matrix, which has a misprinted entry
    assert [l for l in lines if l.startswith("FAIL")] == [
        next(l for l in lines if "printed RF-matrix of 327" in l)
    ]
    assert code == 1


def test_verify_paper_catches_lambda_off_by_one(monkeypatch):
    import rfsemi.golden as golden
    from rfsemi.rfmatrix import LambdaTable, lambda_table

    def shifted(S):
        t = lambda_table(S)
        return LambdaTable(t.generators, tuple(tuple(k + 1 if k else 0 for k in row) for row in t.lam))

    monkeypatch.setattr(golden, "lambda_table", shifted)
    results = {name: ok for name, ok, _ in golden.run_all()}
    assert results["Lambda entry 209 = 3*91-64"] is False


def test_verify_paper_runtime():
    import time

    import rfsemi.golden as golden

    start = time.perf_counter()
    golden.run_all()
    assert time.perf_counter() - start < 60

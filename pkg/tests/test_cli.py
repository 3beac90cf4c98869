import json

import pytest

from hadamard_forge.cli import main
from hadamard_forge.hmat import render
from hadamard_forge.matrix import all_ones


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_build_and_verify(tmp_path, capsys):
    out = tmp_path / "h40.hmat"
    man = tmp_path / "h40.json"
    code, text, _ = run(capsys, "build", "--theorem", "3.1", "--q", "5", "--out", str(out), "--manifest", str(man))
    assert code == 0
    assert "PASS" in text
    assert out.read_text().startswith("HMAT 1\nn 40\nkind hadamard\n")
    code, text, _ = run(capsys, "verify", str(out))
    assert code == 0 and text.startswith("PASS order=40")

    again = tmp_path / "again.hmat"
    assert run(capsys, "reproduce", str(man), "--out", str(again))[0] == 0
    assert again.read_bytes() == out.read_bytes()


def test_bad_congruence(capsys):
    code, _, err = run(capsys, "build", "--theorem", "3.1", "--q", "7")
    assert code == 2
    assert err.strip() == "error: q ≢ 1 (mod 4) (q = 7)"


def test_failing_build_exits_1(tmp_path, capsys):
    out = tmp_path / "x.hmat"
    code, text, _ = run(capsys, "build", "--theorem", "3.4", "--q", "7", "--out", str(out))
    assert code == 1
    assert "witness=inner_product(0,15)=-8" in text
    assert not out.exists()


def test_build_variant_grid(capsys):
    code, text, _ = run(capsys, "build", "--theorem", "3.4", "--q", "7",
                        "--variant", "[[+P,-P],[+P,+P]]", "--m-variant", "[[+Q,+Q],[+Qt,-Qt]]")
    assert code == 0 and "PASS" in text
    code, text, _ = run(capsys, "build", "--theorem", "3.3", "--q", "11", "--variant", "search")
    assert code == 0 and "PASS" in text


def test_verify_j4(tmp_path, capsys):
    path = tmp_path / "j4.hmat"
    path.write_text(render(all_ones(4), "hadamard"))
    code, text, _ = run(capsys, "verify", str(path))
    assert code == 1
    assert "witness=inner_product(0,1)=4" in text


def test_conference_paley_double(tmp_path, capsys):
    code, text, _ = run(capsys, "conference", "--q", "3")
    assert code == 0 and text.splitlines()[3] == "0+-"
    p = tmp_path / "p.hmat"
    assert run(capsys, "paley", "--q", "7", "--out", str(p))[0] == 0
    d = tmp_path / "d.hmat"
    assert run(capsys, "double", "--in", str(p), "--out", str(d))[0] == 0
    code, text, _ = run(capsys, "verify", str(d))
    assert code == 0 and "order=16" in text
    code, _, err = run(capsys, "paley", "--q", "5")
    assert code == 2 and err.startswith("error:")
    code, _, err = run(capsys, "double", "--in", str(tmp_path / "missing"))
    assert code == 2


def test_parse_error_reports_line(tmp_path, capsys):
    path = tmp_path / "bad.hmat"
    path.write_text("HMAT 1\nn 2\n++\n+\n")
    code, _, err = run(capsys, "verify", str(path))
    assert code == 2 and "line 4" in err


def test_props(capsys):
    code, text, _ = run(capsys, "props", "--q", "9")
    assert code == 0 and "SKIPPED" in text and "FAIL" not in text


def test_variants(capsys):
    code, text, _ = run(capsys, "variants", "--theorem", "3.4", "--q", "7", "--budget", "512")
    assert code == 0
    lines = text.splitlines()
    assert len(lines) == 257
    assert lines[-1].endswith("evaluated 256 of 256 candidates (N family 16, M crossing on); 8 PASS")


def test_catalog(tmp_path, capsys):
    jl = tmp_path / "routes.jsonl"
    code, text, _ = run(capsys, "catalog", "--max-order", "60", "--jsonl", str(jl))
    assert code == 0
    assert "    40    10  double(Paley(q=19)), T3.1(q=5,s=3)" in text
    rows = [json.loads(x) for x in jl.read_text().splitlines()]
    assert {"order": 40, "route": "3.1"}.items() <= next(r for r in rows if r["route"] == "3.1").items()
    assert run(capsys, "catalog", "--max-order", "2")[0] == 2


@pytest.mark.parametrize("argv", [[], ["build"], ["build", "--theorem", "9.9", "--q", "5"],
                                  ["variants", "--theorem", "3.4", "--q", "7", "--budget", "0"]])
def test_usage_errors(capsys, argv):
    assert run(capsys, *argv)[0] == 2


def test_version(capsys):
    assert run(capsys, "--version")[0] == 0

import json
import subprocess
import sys

import pytest

from twocolored.cli import CACHE_ENV, CliConfig, load_or_build_ptable, main, run
from twocolored.partition_core import CountTable, p_table


def call(capsys, *argv):
    code = run(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_count_five(capsys):
    code, out, _ = call(capsys, "count", "--n", "5")
    assert code == 0
    assert out.strip() == "E=8, E0=4, E1=4, E2=4, E3=4, po=8"


def test_count_json_and_series_method(capsys):
    _, out, _ = call(capsys, "count", "--n", "5", "--format", "json")
    assert json.loads(out) == {"n": 5, "E": "8", "E0": "4", "E1": "4", "E2": "4", "E3": "4", "po": "8"}
    _, out2, _ = call(capsys, "--format", "json", "count", "--n", "5", "--method", "series")
    assert out2 == out
    _, out, _ = call(capsys, "count", "--n", "1000", "--format", "csv")
    header, row = out.strip().splitlines()
    assert header == "n,E,E0,E1,E2,E3,po"
    values = row.split(",")
    assert values[1] == values[-1]


def test_enumerate_E_emits_json_lines(capsys):
    code, out, _ = call(capsys, "enumerate", "E", "--n", "5")
    assert code == 0
    lines = [json.loads(line) for line in out.splitlines()]
    as_text = {"+".join(f"{p['value']}_{p['color']}" for p in obj["parts"]) for obj in lines}
    assert len(lines) == 8
    assert as_text == {"5_b", "5_g", "4_b+1_b", "4_b+1_g", "3_b+2_b", "3_g+2_b",
                       "3_b+1_b+1_g", "3_g+1_b+1_g"}


def test_enumerate_po(capsys):
    _, out, _ = call(capsys, "enumerate", "po", "--n", "5")
    lines = [json.loads(line) for line in out.splitlines()]
    assert len(lines) == 8
    assert {"parts": [5], "overlined": [5]} in lines


def test_series_formats(capsys):
    _, out, _ = call(capsys, "series", "po", "--max-n", "5", "--format", "csv")
    assert out.splitlines() == ["n,coeff", "0,1", "1,2", "2,2", "3,4", "4,6", "5,8"]
    _, out, _ = call(capsys, "series", "e2-e3", "--max-n", "9", "--format", "json")
    assert json.loads(out) == ["1", "-2", "0", "0", "2", "0", "0", "0", "0", "-2"]
    _, out, _ = call(capsys, "series", "E", "--max-n", "2")
    assert out.splitlines() == ["0 1", "1 2", "2 2"]


def test_franklin_command(capsys):
    _, out, _ = call(capsys, "franklin", "--even", "10,8,4,2")
    assert json.loads(out) == {"case": "case1", "image": [12, 8, 4]}
    _, out, _ = call(capsys, "franklin", "--even", "12,10,6")
    assert json.loads(out) == {"case": "case2", "image": [10, 8, 6, 4]}
    _, out, _ = call(capsys, "franklin", "--even", "8,6")
    assert json.loads(out) == {"case": "fixed", "fixed": {"m": 2, "sign": "plus"}}
    _, out, _ = call(capsys, "franklin", "--even", "10,8,4,2", "--orbit")
    assert json.loads(out)["orbit"] == [[10, 8, 4, 2], [12, 8, 4]]
    _, out, _ = call(capsys, "franklin", "--even", "8,6", "--orbit")
    assert json.loads(out) == {"case": "fixed", "fixed": {"m": 2, "sign": "plus"},
                               "staircase": [8, 6], "even_sum": 14}


def test_bipartition_command(capsys):
    code, out, _ = call(capsys, "bipartition", "--beta", "9,5,3,1", "--alpha", "7,1", "--format", "json")
    assert code == 0
    assert out == '{"c": 2, "d": 14, "t": 12, "rows": [1, 2, 6, 4, 1], "residual": [6, 4, 1]}\n'
    _, out, _ = call(capsys, "bipartition", "--invert", "2", "6,4,1", "--format", "json")
    data = json.loads(out)
    assert (data["L"], data["R"]) == ([9, 5, 3, 1], [7, 1])
    _, out, _ = call(capsys, "bipartition", "--invert", "3", "", "--format", "json")
    data = json.loads(out)
    assert (data["L"], data["R"]) == ([5, 3, 1], [])
    _, out, _ = call(capsys, "bipartition", "--beta", "1", "--alpha", "9,3")
    assert "orientation: swapped" in out


@pytest.mark.parametrize(
    "argv,code",
    [
        (["count", "--n", "5"], 0),
        (["enumerate", "E", "--n", "3"], 0),
        (["series", "e0-e1", "--max-n", "10"], 0),
        (["franklin", "--even", "4,2"], 0),
        (["bipartition", "--beta", "3,1", "--alpha", ""], 0),
        (["verify", "thmE", "--max-n", "12", "--method", "both"], 0),
        (["verify", "thmQ", "--max-n", "100", "--method", "series"], 0),
        (["verify", "franklin", "--max-n", "20"], 0),
        (["verify", "bijection", "--max-n", "10", "--max-c", "3"], 0),
        (["verify", "crosscheck", "--max-n", "10"], 0),
        (["verify", "euler", "--max-n", "80"], 0),
        ([], 2),
        (["frobnicate"], 2),
        (["count"], 2),
        (["count", "--n", "-1"], 2),
        (["count", "--n", "abc"], 2),
        (["enumerate", "E", "--n", "61"], 2),
        (["series", "po", "--max-n", "2001"], 2),
        (["franklin", "--even", "3,1"], 2),
        (["franklin", "--even", "2,4"], 2),
        (["franklin", "--even", "4,x"], 2),
        (["bipartition", "--beta", "4,1"], 2),
        (["bipartition"], 2),
        (["bipartition", "--invert", "-1", "1"], 2),
        (["bipartition", "--invert", "1", "1,2"], 2),
        (["verify", "thmE", "--max-n", "61", "--method", "enumeration"], 2),
        (["verify", "franklin", "--max-n", "100"], 2),
        (["verify", "bijection", "--max-c", "9"], 2),
        (["count", "--n", "5", "--jobs", "0"], 2),
    ],
)
def test_exit_code_matrix(capsys, argv, code):
    assert run(argv) == code
    out, err = capsys.readouterr()
    if code == 2:
        assert err.strip()


def test_verification_failure_exits_one(monkeypatch, capsys):
    from twocolored import verify

    monkeypatch.setattr(verify, "expected_differences", lambda n: (0, 0))
    assert run(["verify", "thmQ", "--max-n", "5", "--method", "series"]) == 1
    out, _ = capsys.readouterr()
    assert "FAIL" in out


def test_verify_json_is_byte_stable(capsys):
    argv = ["verify", "thmQ", "--max-n", "60", "--method", "series", "--format", "json"]
    _, a, _ = call(capsys, *argv)
    _, b, _ = call(capsys, *argv)
    assert a == b
    data = json.loads(a)
    assert "elapsed" not in data and data["status"] == "pass"


def test_ptable_cache_miss_writes_file(tmp_path):
    path = tmp_path / "sub" / "p.txt"
    table = load_or_build_ptable(CliConfig(max_n=10, cache_path=path))
    assert table[10] == 42
    assert CountTable.load(path) == table


def test_ptable_cache_superset_reuse(tmp_path, monkeypatch):
    path = tmp_path / "p.txt"
    p_table(2000).save(path)
    from twocolored import cli

    monkeypatch.setattr(cli, "p_table", lambda N: pytest.fail("cache should have been used"))
    table = load_or_build_ptable(CliConfig(max_n=500, cache_path=path))
    assert table.N == 2000


def test_ptable_cache_corruption_rebuilds(tmp_path, caplog):
    path = tmp_path / "p.txt"
    text = p_table(50).to_text()
    path.write_text(text[: len(text) // 2])
    table = load_or_build_ptable(CliConfig(max_n=50, cache_path=path))
    assert table == p_table(50)
    assert CountTable.load(path) == table
    assert "corrupt" in caplog.text


def test_ptable_cache_small_is_extended(tmp_path):
    path = tmp_path / "p.txt"
    p_table(5).save(path)
    assert load_or_build_ptable(CliConfig(max_n=30, cache_path=path)).N == 30
    assert CountTable.load(path).N == 30


def test_ptable_unwritable_cache_degrades(tmp_path, caplog):
    blocker = tmp_path / "file"
    blocker.write_text("x")
    table = load_or_build_ptable(CliConfig(max_n=10, cache_path=blocker / "p.txt"))
    assert table[10] == 42
    assert "in memory" in caplog.text


def test_cache_env_and_flag(tmp_path, monkeypatch, capsys):
    monkeypatch.setenv(CACHE_ENV, str(tmp_path / "envdir"))
    assert run(["verify", "euler", "--max-n", "30"]) == 0
    assert CountTable.load(tmp_path / "envdir" / "ptable.txt").N == 30
    flag = tmp_path / "flag.txt"
    assert run(["verify", "euler", "--max-n", "20", "--cache", str(flag)]) == 0
    assert flag.exists()


def test_corrupt_cache_still_exits_zero(tmp_path, capsys):
    path = tmp_path / "p.txt"
    path.write_text("ptable v1 N=10\n1\n1\n")
    assert run(["verify", "bijection", "--max-n", "10", "--max-c", "2", "--cache", str(path)]) == 0
    assert CountTable.load(path).N >= 10


def test_main_entry_and_module():
    assert main(["count", "--n", "0"]) == 0
    proc = subprocess.run(
        [sys.executable, "-m", "twocolored", "count", "--n", "5"], capture_output=True, text=True
    )
    assert proc.returncode == 0
    assert proc.stdout.strip() == "E=8, E0=4, E1=4, E2=4, E3=4, po=8"

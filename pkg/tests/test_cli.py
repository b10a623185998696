import json
import subprocess
import sys
from pathlib import Path

import pytest

from cycle_endo import cardinality, cli

GOLDEN = Path(__file__).parent / "golden"


def run_cli(capsys, *args):
    code = cli.main(list(args))
    out = capsys.readouterr().out
    return code, out


def run_json(capsys, *args):
    code, out = run_cli(capsys, *args)
    assert code == 0, out
    return json.loads(out)


def test_count(capsys):
    payload = run_json(capsys, "count", "--kind", "wend", "--n", "6")
    assert payload == {"schema": 1, "command": "count", "kind": "wend",
                       "n": 6, "cardinality": 858}


def test_count_check_flag(capsys):
    code, out = run_cli(capsys, "count", "--kind", "end", "--n", "8", "--check")
    assert code == 0
    payload = json.loads(out)
    assert payload["cardinality"] == 576
    assert payload["enumerated"] == 576


def test_member(capsys):
    payload = run_json(capsys, "member", "--kind", "end", "--n", "6",
                       "--map", "1 2 1 2 1 2")
    assert payload["results"] == [{"map": "1 2 1 2 1 2", "member": True}]
    payload = run_json(capsys, "member", "--kind", "send", "--n", "6",
                       "--map", "1 2 1 2 1 2")
    assert payload["results"][0]["member"] is False


def test_member_stdin(capsys, monkeypatch, tmp_path):
    maps = tmp_path / "maps.txt"
    maps.write_text("1 2 3 4 5\n1 2 1 2 1\n")
    payload = run_json(capsys, "member", "--kind", "wend", "--n", "5",
                       "--in", str(maps))
    assert [r["member"] for r in payload["results"]] == [True, True]


def test_member_bad_map_exits_2(capsys):
    code, _ = run_cli(capsys, "member", "--kind", "wend", "--n", "5",
                      "--map", "1 2 x")
    assert code == 2
    code, _ = run_cli(capsys, "member", "--kind", "wend", "--n", "5",
                      "--map", "1 2 3")
    assert code == 2


def test_usage_errors_exit_2(capsys):
    assert cli.main(["count", "--kind", "nope", "--n", "5"]) == 2
    assert cli.main(["count", "--kind", "wend"]) == 2
    assert cli.main(["frobnicate"]) == 2
    assert cli.main(["count", "--kind", "wend", "--n", "2"]) == 2


def test_regular_map(capsys):
    payload = run_json(capsys, "regular", "--kind", "wend", "--n", "6",
                       "--map", "1 2 2 3 2 2")
    assert payload["results"] == [
        {"map": "1 2 2 3 2 2", "member": True, "regular": False}]


def test_regular_summary(capsys):
    payload = run_json(capsys, "regular", "--kind", "wend", "--n", "6")
    assert payload["total"] == 858
    assert payload["regular"] == 822
    assert payload["nonregular"] == 36


def test_regular_list_nonregular(capsys):
    code, out = run_cli(capsys, "regular", "--kind", "end", "--n", "10",
                        "--list-nonregular")
    assert code == 0
    lines = out.splitlines()
    assert "1 2 3 2 3 4 3 2 3 2" in lines
    assert len(lines) == 100


def test_green_summaries(capsys):
    payload = run_json(capsys, "green", "--kind", "wend", "--n", "5",
                       "--relation", "r", "--summary")
    assert payload["class_count"] == 27
    assert payload["class_sizes"] == [10] * 26 + [5]
    payload = run_json(capsys, "green", "--kind", "wend", "--n", "5",
                       "--relation", "l", "--summary")
    assert payload["class_count"] == 16
    payload = run_json(capsys, "green", "--kind", "wend", "--n", "5",
                       "--relation", "d", "--summary")
    assert payload["class_sizes"] == [150, 100, 10, 5]


def test_green_pair_l(capsys):
    payload = run_json(capsys, "green", "--kind", "wend", "--n", "5",
                       "--relation", "l", "--a", "1 2 1 2 1", "--b", "2 1 2 1 2")
    assert payload["related"] is True
    assert payload["witness"] == {"arc": "[1,2]", "sigma": "g^1",
                                  "eps1": "2 2 3 2 3", "eps2": "1 2 1 2 2"}


def test_green_pair_r_and_d(capsys):
    payload = run_json(capsys, "green", "--kind", "end", "--n", "6",
                       "--relation", "r", "--a", "1 2 1 2 1 2", "--b", "2 1 2 1 2 1")
    assert payload["related"] is True
    payload = run_json(capsys, "green", "--kind", "end", "--n", "6",
                       "--relation", "d", "--a", "1 2 1 2 1 2", "--b", "3 4 3 4 3 4")
    assert payload["related"] is True
    payload = run_json(capsys, "green", "--kind", "wend", "--n", "5",
                       "--relation", "d", "--a", "1 1 1 1 1", "--b", "1 2 1 2 1")
    assert payload["related"] is False


def test_green_pair_needs_both_maps(capsys):
    code, _ = run_cli(capsys, "green", "--kind", "wend", "--n", "5",
                      "--relation", "l", "--a", "1 2 1 2 1")
    assert code == 2


def test_rank_output(capsys):
    payload = run_json(capsys, "rank", "--kind", "wend", "--n", "8")
    assert payload == {"schema": 1, "command": "rank", "kind": "wend", "n": 8,
                       "rank": 13, "generator_count_by_rank": [[3, 3], [4, 7], [5, 1]]}


def test_rank_emit_gens(capsys, tmp_path):
    out_file = tmp_path / "gens.txt"
    payload = run_json(capsys, "rank", "--kind", "wend", "--n", "6",
                       "--emit-gens", str(out_file))
    assert payload["rank"] == 6
    lines = out_file.read_text().splitlines()
    assert len(lines) == 6
    assert "2 3 4 5 6 1" in lines
    assert "6 5 4 3 2 1" in lines


def test_rank_verify_closure(capsys):
    payload = run_json(capsys, "rank", "--kind", "end", "--n", "6",
                       "--verify-closure")
    assert payload["verified_closure"] is True


def test_rank_cap_exit_3(capsys):
    code, _ = run_cli(capsys, "rank", "--kind", "wend", "--n", "6",
                      "--verify-closure", "--cap", "10")
    assert code == 3


def test_cap_env_variable(capsys, monkeypatch):
    monkeypatch.setenv("CYCLE_ENDO_CAP", "10")
    code, _ = run_cli(capsys, "green", "--kind", "wend", "--n", "6",
                      "--relation", "r", "--summary")
    assert code == 3


def test_rank_timing_flag(capsys):
    payload = run_json(capsys, "rank", "--kind", "end", "--n", "6", "--timing")
    assert "wall_time_ms" in payload
    payload = run_json(capsys, "rank", "--kind", "end", "--n", "6")
    assert "wall_time_ms" not in payload


def test_rank_deterministic_output(capsys):
    _, first = run_cli(capsys, "rank", "--kind", "wend", "--n", "8")
    _, second = run_cli(capsys, "rank", "--kind", "wend", "--n", "8")
    assert first == second


def test_gens_lines(capsys):
    code, out = run_cli(capsys, "gens", "--kind", "wend", "--n", "5")
    assert code == 0
    assert out.splitlines() == ["1 1 2 1 5", "1 1 2 3 2", "2 3 4 5 1", "5 4 3 2 1"]


def test_gens_out_file(capsys, tmp_path):
    target = tmp_path / "gens.txt"
    code, out = run_cli(capsys, "gens", "--kind", "end", "--n", "6",
                        "--out", str(target))
    assert code == 0
    assert target.read_text().splitlines()[0].count(" ") == 5


def test_enumerate_stream(capsys):
    code, out = run_cli(capsys, "enumerate", "--kind", "aut", "--n", "4")
    assert code == 0
    lines = out.splitlines()
    assert len(lines) == 8
    assert lines[0] == "1 2 3 4"


def test_enumerate_out_file(capsys, tmp_path):
    target = tmp_path / "maps.txt"
    code, _ = run_cli(capsys, "enumerate", "--kind", "wend", "--n", "5",
                      "--out", str(target))
    assert code == 0
    assert len(target.read_text().splitlines()) == cardinality(cli.MonoidKind.WEND, 5)


def test_enumerate_unwritable_path_exits_2(capsys):
    code, _ = run_cli(capsys, "enumerate", "--kind", "aut", "--n", "4",
                      "--out", "/nonexistent-dir/maps.txt")
    assert code == 2


def test_table_golden_json(capsys):
    _, out = run_cli(capsys, "table", "--max-n", "8", "--format", "json")
    assert out == (GOLDEN / "table_n8.json").read_text()


def test_table_golden_csv(capsys):
    _, out = run_cli(capsys, "table", "--max-n", "8", "--format", "csv")
    assert out == (GOLDEN / "table_n8.csv").read_text()


def test_table_golden_text(capsys):
    _, out = run_cli(capsys, "table", "--max-n", "8", "--format", "text")
    assert out == (GOLDEN / "table_n8.txt").read_text()


@pytest.mark.parametrize("kind", ["end", "wend"])
def test_rank_golden(capsys, kind):
    expected = (GOLDEN / f"rank_{kind}.jsonl").read_text().splitlines()
    for n, line in zip(range(3, 9), expected):
        _, out = run_cli(capsys, "rank", "--kind", kind, "--n", str(n))
        assert out.rstrip("\n") == line, (kind, n)


def test_verify_single_check(capsys):
    code, out = run_cli(capsys, "verify", "--level", "quick", "--max-n", "4",
                        "--check", "dihedral-formulas")
    assert code == 0
    lines = out.splitlines()
    assert lines[0].startswith("PASS dihedral-formulas:")
    assert lines[-1] == "OK"


def test_verify_unknown_check(capsys):
    code, _ = run_cli(capsys, "verify", "--check", "no-such-suite")
    assert code == 2


def test_entry_point_subprocess():
    """The installed console script produces the same bytes as the library."""
    result = subprocess.run(
        [sys.executable, "-m", "cycle_endo.cli", "table", "--max-n", "4",
         "--format", "csv"],
        capture_output=True, text=True, timeout=120)
    assert result.returncode == 0
    lines = result.stdout.splitlines()
    assert lines[0].startswith("n,aut_size")
    assert lines[1] == "3,6,2,6,2,6,2,27,3,27,3"
    assert lines[2] == "4,8,2,32,3,32,3,36,4,84,4"

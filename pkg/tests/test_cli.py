import io
import json
import subprocess
import sys

import boxball.verify
from boxball.cli import main
from boxball.separation import combine
from boxball.dynamics import BasicPath
from fixtures_data import COLOURED_ROWS, MONO_ROWS, S_TABLES, WORD


def run_cli(monkeypatch, capsys, argv, stdin_text=""):
    monkeypatch.setattr("sys.stdin", io.StringIO(stdin_text))
    code = main(argv)
    out, err = capsys.readouterr()
    return code, out, err


def test_evolve_monochrome_golden(monkeypatch, capsys):
    code, out, _ = run_cli(
        monkeypatch, capsys, ["evolve", "--steps", "3", "--operator", "T"], MONO_ROWS[0] + "\n"
    )
    assert code == 0
    assert out.splitlines() == [f"t={t:<4} {row}" for t, row in enumerate(MONO_ROWS)]


def test_evolve_coloured_golden(monkeypatch, capsys):
    code, out, _ = run_cli(
        monkeypatch, capsys, ["evolve", "--steps", "3"], COLOURED_ROWS[0] + "\n"
    )
    assert code == 0
    assert out.splitlines() == [f"t={t:<4} {row}" for t, row in enumerate(COLOURED_ROWS)]


def test_evolve_zero_steps_echoes_canonical_input(monkeypatch, capsys):
    code, out, _ = run_cli(monkeypatch, capsys, ["evolve", "--steps", "0"], ".22..\n")
    assert code == 0
    assert out.splitlines() == ["t=0    .22.."]


def test_evolve_reads_positional_file(tmp_path, monkeypatch, capsys):
    path = tmp_path / "state.txt"
    path.write_text(".22.\n", encoding="utf-8")
    code, out, _ = run_cli(
        monkeypatch, capsys, ["evolve", str(path), "--steps", "1", "--operator", "Tl:1"]
    )
    assert code == 0
    assert out.splitlines()[1] == "t=1    ..22"


def test_evolve_parse_error_names_character(monkeypatch, capsys):
    code, _, err = run_cli(monkeypatch, capsys, ["evolve"], "..x.\n")
    assert code == 2
    assert "'x'" in err and "position 3" in err


def test_evolve_bad_operator(monkeypatch, capsys):
    code, _, err = run_cli(monkeypatch, capsys, ["evolve", "--operator", "Tx"], "..2\n")
    assert code == 2
    assert "operator" in err


def test_evolve_decoding_operator(monkeypatch, capsys):
    code, out, _ = run_cli(
        monkeypatch, capsys, ["evolve", "--steps", "1", "--operator", "Tnat"], "55432..\n"
    )
    assert code == 0
    assert out.splitlines() == ["t=0    55432..", "t=1    .55422."]


def test_evolve_json_output(monkeypatch, capsys):
    code, out, _ = run_cli(
        monkeypatch, capsys, ["evolve", "--steps", "1", "--json"], MONO_ROWS[0] + "\n"
    )
    assert code == 0
    doc = json.loads(out)
    assert doc["rows"][0]["state"] == MONO_ROWS[0].rstrip(".")
    assert doc["rows"][1]["state"] == MONO_ROWS[1].rstrip(".")
    assert doc["rows"][0]["n"] == 2


def test_evolve_json_document_input(monkeypatch, capsys):
    doc = json.dumps({"n": 5, "mode": "basic", "state": COLOURED_ROWS[0]})
    code, out, _ = run_cli(monkeypatch, capsys, ["evolve", "--steps", "1"], doc)
    assert code == 0
    assert out.splitlines()[1].split()[1] == COLOURED_ROWS[1].rstrip(".")


def test_evolve_inhom_document(monkeypatch, capsys):
    doc = json.dumps(
        {
            "n": 3,
            "mode": "inhom",
            "tail_capacity": 1,
            "sites": [
                {"capacity": 2, "counts": [1, 0, 1]},
                {"capacity": 1, "counts": [1, 0, 0]},
            ],
        }
    )
    code, out, _ = run_cli(monkeypatch, capsys, ["evolve", "--steps", "1"], doc)
    assert code == 0
    assert out.splitlines() == ["t=0    [1,0,1]", "t=1    [2,0,0][0,0,1]"]


def test_evolve_inhom_capacity_mismatch(monkeypatch, capsys):
    doc = json.dumps(
        {"n": 3, "mode": "inhom", "sites": [{"capacity": 3, "counts": [1, 0, 1]}]}
    )
    code, _, err = run_cli(monkeypatch, capsys, ["evolve"], doc)
    assert code == 2
    assert "sum" in err


def test_separate_golden_table(monkeypatch, capsys):
    code, out, _ = run_cli(monkeypatch, capsys, ["separate"], COLOURED_ROWS[0] + "\n")
    assert code == 0
    rows, removals = S_TABLES[0]
    expected = [
        f"s={s:<4} {row}" + (f" {removals[s]}" if s < len(removals) else "")
        for s, row in enumerate(rows)
    ]
    expected.append("word  " + WORD)
    assert out.splitlines() == expected


def test_separate_monochrome_input(monkeypatch, capsys):
    code, out, _ = run_cli(monkeypatch, capsys, ["separate"], "..2\n")
    assert code == 0
    assert out.splitlines() == ["s=0    ..2", "word  "]


def test_separate_json_round_trip(monkeypatch, capsys):
    code, out, _ = run_cli(
        monkeypatch, capsys, ["separate", "--json"], COLOURED_ROWS[0] + "\n"
    )
    assert code == 0
    doc = json.loads(out)
    assert doc["word"] == WORD
    rebuilt = combine(
        BasicPath.from_string(doc["monochrome"], doc["n"]),
        tuple(int(c) for c in doc["word"]),
    )
    assert rebuilt == BasicPath.from_string(COLOURED_ROWS[0])
    assert doc["steps"][0]["removed"] == 2


def test_separate_trace_lists_case_tags(monkeypatch, capsys):
    code, out, _ = run_cli(monkeypatch, capsys, ["separate", "--trace"], "55432..\n")
    assert code == 0
    trace_lines = [line for line in out.splitlines() if line.startswith("trace")]
    assert trace_lines and "1:d" in trace_lines[0]


def test_verify_chains_cli(monkeypatch, capsys):
    code, out, _ = run_cli(monkeypatch, capsys, ["verify", "chains"])
    assert code == 0
    assert out.startswith("pass")


def test_verify_braid_cli(monkeypatch, capsys):
    code, out, _ = run_cli(
        monkeypatch, capsys, ["verify", "braid", "--n", "3", "--shapes", "3,1,c"]
    )
    assert code == 0
    assert "symmetric-group" in out


def test_verify_composition_cli(monkeypatch, capsys):
    code, out, _ = run_cli(
        monkeypatch,
        capsys,
        ["verify", "composition", "--l", "2", "--carriers", "1", "--boxes", "1", "--n", "3"],
    )
    assert code == 0


def test_verify_decomposition_cli(monkeypatch, capsys):
    code, out, _ = run_cli(monkeypatch, capsys, ["verify", "decomposition", "--json"])
    assert code == 0
    reports = [json.loads(line) for line in out.splitlines()]
    assert all(r["result"] == "pass" for r in reports)
    assert len(reports) == 6


def test_verify_theorem_cli(monkeypatch, capsys):
    code, out, _ = run_cli(
        monkeypatch,
        capsys,
        ["verify", "theorem", "--n", "4", "--count", "20", "--seed", "42", "--json"],
    )
    assert code == 0
    assert json.loads(out.splitlines()[0])["result"] == "pass"


def test_verify_conservation_cli_inhom(monkeypatch, capsys):
    code, out, _ = run_cli(
        monkeypatch,
        capsys,
        ["verify", "conservation", "--mode", "inhom", "--n", "4", "--count", "10",
         "--seed", "1", "--capacities", "1,inf"],
    )
    assert code == 0


def test_verify_failure_sets_exit_code(monkeypatch, capsys):
    stub = boxball.verify.RelationReport("stub", 1, "boom", 0.0)
    monkeypatch.setattr(boxball.verify, "check_highest_weight_chains", lambda: stub)
    code, out, _ = run_cli(monkeypatch, capsys, ["verify", "chains"])
    assert code == 1
    assert "fail" in out and "boom" in out


def test_domain_cap_env_is_respected(monkeypatch, capsys):
    monkeypatch.setenv("BBS_MAX_DOMAIN", "5")
    code, _, err = run_cli(
        monkeypatch, capsys, ["verify", "braid", "--n", "3", "--shapes", "3,1,c"]
    )
    assert code == 2
    assert "cap" in err


def test_bad_shapes_flag(monkeypatch, capsys):
    code, _, err = run_cli(
        monkeypatch, capsys, ["verify", "braid", "--shapes", "3,zz"]
    )
    assert code == 2
    assert "shape" in err


def test_empty_input_rejected(monkeypatch, capsys):
    code, _, err = run_cli(monkeypatch, capsys, ["evolve"], "\n")
    assert code == 2
    assert "empty" in err


def test_state_render_parse_round_trip():
    import random

    from boxball.cli import parse_state, state_to_json
    from boxball.verify import random_basic_path, random_inhom_path

    rng = random.Random(5)
    for _ in range(50):
        p = random_basic_path(rng, rng.randint(2, 5), 30, 10)
        assert parse_state(p.render() or ".", p.n) == p
        assert parse_state(json.dumps(state_to_json(p))) == p
        q = random_inhom_path(rng, rng.randint(2, 5))
        assert parse_state(json.dumps(state_to_json(q))) == q


def test_module_entry_point_subprocess():
    proc = subprocess.run(
        [sys.executable, "-m", "boxball", "evolve", "--steps", "1", "-"],
        input=".22.\n",
        capture_output=True,
        text=True,
    )
    assert proc.returncode == 0
    assert proc.stdout.splitlines()[1] == "t=1    ...22"

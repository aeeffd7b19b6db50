import json

from carefulsync.cli import main


def test_gen_to_stdout(capsys):
    assert main(["gen", "--family", "witness"]) == 0
    doc = json.loads(capsys.readouterr().out)
    assert doc["states"] == 4
    assert doc["metadata"] == "witness"


def test_gen_to_file_then_solve(tmp_path, capsys):
    path = tmp_path / "witness.json"
    assert main(["gen", "--family", "witness", "--out", str(path)]) == 0
    assert main(["solve", str(path)]) == 0
    out = capsys.readouterr().out
    assert "length: 10" in out
    assert "state: 1" in out


def test_solve_family_spec_directly(capsys):
    assert main(["solve", "grid:d=2,k=2"]) == 0
    out = capsys.readouterr().out
    assert "length: 5" in out
    assert "word: a b1 b2 b1 c2" in out


def test_solve_with_oracle(capsys):
    assert main(["solve", "witness", "--max-wordlen", "10"]) == 0
    assert "oracle: length 10 (agree)" in capsys.readouterr().out


def test_solve_not_synchronizing(capsys):
    assert main(["solve", "random:n=3,l=2,p=0.0,seed=5"]) == 3


def test_solve_cap_exceeded(capsys):
    assert main(["solve", "grid:d=2,k=3", "--max-subsets", "3"]) == 4


def test_bad_family_string(capsys):
    assert main(["solve", "nonsense:x=1"]) == 2


def test_missing_file(capsys):
    assert main(["solve", "no/such/file.json"]) == 2


def test_verify_good_word(capsys):
    assert main(["verify", "grid:d=2,k=2", "--word", "a b1 b2 b1 c2"]) == 0
    assert "synchronizes to state q0^1" in capsys.readouterr().out


def test_verify_word_with_exponents(capsys):
    assert main(["verify", "cerny:n=4", "--word", "c1 c2^3 c1 c2^3 c1"]) == 0


def test_verify_incomplete_word(capsys):
    assert main(["verify", "grid:d=2,k=2", "--word", "a"]) == 3
    assert "final set" in capsys.readouterr().out


def test_verify_undefined_word(capsys):
    assert main(["verify", "witness", "--word", "b"]) == 3
    assert "undefined at position 0" in capsys.readouterr().out


def test_verify_unknown_letter(capsys):
    assert main(["verify", "witness", "--word", "q"]) == 2


def test_check_grid(capsys):
    assert main(["check", "grid:d=3,k=2"]) == 0
    out = capsys.readouterr().out
    assert "grid-pattern: PASS" in out
    assert "forced-path: PASS" in out


def test_check_failure_exit_code(capsys):
    assert main(["check", "random:n=2,l=1,p=0.0,seed=0"]) == 1


def test_words_grid(capsys):
    assert main(["words", "--family", "grid:d=3,k=2"]) == 0
    out = capsys.readouterr().out
    assert "length: 10" in out
    assert "claimed-length: 11" in out


def test_words_cerny(capsys):
    assert main(["words", "--family", "cerny:n=4"]) == 0
    out = capsys.readouterr().out
    assert "classic-length: 9" in out
    assert "two-phase-minimal-r: 2" in out


def test_words_cerny_override(capsys):
    assert main(["words", "--family", "cerny:n=4", "--r-override", "1"]) == 0
    assert "two-phase-verifies: no" in capsys.readouterr().out


def test_words_no_builder(capsys):
    assert main(["words", "--family", "witness"]) == 2


def test_transform_document(capsys):
    assert main(["transform", "chain:k=2", "--d", "2"]) == 0
    doc = json.loads(capsys.readouterr().out)
    assert doc["letters"] == ["a", "b1", "b2", "c1"]
    assert doc["states"] == 4


def test_transform_lift(capsys):
    assert main(["transform", "chain:k=2", "--d", "2", "--word", "c2"]) == 0
    out = capsys.readouterr().out
    assert "lifted-word: a b1 b2 b1 c1" in out
    assert "verifies: yes" in out


def test_sweep_csv_output(tmp_path, capsys):
    out_file = tmp_path / "rows.csv"
    code = main([
        "sweep",
        "--family", "grid:d=2,k=2",
        "--family", "cerny:n=3",
        "--out", str(out_file),
    ])
    assert code == 0
    text = out_file.read_text()
    assert text.startswith("#")
    assert "grid:d=2,k=2" in text and "cerny:n=3" in text


def test_sweep_deterministic(capsys):
    args = ["sweep", "--family", "grid:d=2,k=2", "--family", "witness"]
    assert main(args) == 0
    first = capsys.readouterr().out
    assert main(args) == 0
    assert capsys.readouterr().out == first


def test_sweep_workers(capsys):
    args = ["sweep", "--family", "grid:d=2,k=2", "--family", "cerny:n=4"]
    assert main(args) == 0
    serial = capsys.readouterr().out
    assert main(args + ["--workers", "2"]) == 0
    assert capsys.readouterr().out == serial


def test_export_dot(capsys):
    assert main(["export-dot", "witness"]) == 0
    out = capsys.readouterr().out
    assert out.startswith("digraph")
    assert '"2" -> "3" [label="b,c"];' in out


def test_errata_command(capsys):
    assert main(["errata"]) == 0
    assert "undefined at position 7" in capsys.readouterr().out


def test_seed_override(capsys):
    assert main(["gen", "--family", "random:n=3,l=2,p=1.0,seed=1", "--seed", "9"]) == 0
    doc = json.loads(capsys.readouterr().out)
    assert doc["metadata"] == "random:n=3,l=2,p=1.0,seed=9"


def test_unknown_command(capsys):
    assert main(["frobnicate"]) == 2


def test_no_command_prints_help(capsys):
    assert main([]) == 2

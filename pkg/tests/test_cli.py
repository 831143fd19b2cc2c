"""CLI surface: flags, file wiring, exit codes, byte-deterministic output."""

import json

import pytest

from deckpoly.cli import main
from deckpoly.serialize import load_json

C3 = {"format_version": 1, "n": 3, "arcs": [[0, 1], [1, 2], [2, 0]]}
C4 = {"format_version": 1, "n": 4, "arcs": [[0, 1], [1, 2], [2, 3], [3, 0]]}
EMPTY3 = {"format_version": 1, "n": 3, "arcs": []}
SINGLE_ARC = {"format_version": 1, "n": 2, "arcs": [[0, 1]]}
STAR = {"format_version": 1, "n": 3, "arcs": [[0, 1], [1, 0], [0, 2], [2, 0]]}


def write(tmp_path, name, obj):
    path = tmp_path / name
    path.write_text(json.dumps(obj))
    return str(path)


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_compute_cycle_characteristic(tmp_path, capsys):
    path = write(tmp_path, "c3.json", C3)
    code, out, _ = run(capsys, "compute", "--kind", "f1", "--input", path)
    assert code == 0
    assert json.loads(out) == ["-1", "0", "0", "1"]


def test_compute_empty_digraph_permanental_laplacian(tmp_path, capsys):
    path = write(tmp_path, "e3.json", EMPTY3)
    code, out, _ = run(capsys, "compute", "--kind", "f5", "--input", path)
    assert code == 0
    assert json.loads(out) == ["0", "0", "0", "1"]


def test_compute_single_arc_laplacian(tmp_path, capsys):
    path = write(tmp_path, "one.json", SINGLE_ARC)
    code, out, _ = run(capsys, "compute", "--kind", "f2", "--input", path)
    assert code == 0
    assert json.loads(out) == ["0", "-1", "1"]


def test_compute_general_kind_matches_named(tmp_path, capsys):
    path = write(tmp_path, "c3.json", C3)
    _, named, _ = run(capsys, "compute", "--kind", "f3", "--input", path)
    _, general, _ = run(capsys, "compute", "--kind", "general:1,1,det", "--input", path)
    assert named == general


def test_compute_rejects_invalid_digraph(tmp_path, capsys):
    path = write(tmp_path, "loop.json", {"n": 1, "arcs": [[0, 0]]})
    code, out, err = run(capsys, "compute", "--kind", "f1", "--input", path)
    assert code == 2
    assert out == ""
    assert "loop" in err


def test_compute_rejects_unknown_kind_and_missing_file(tmp_path, capsys):
    path = write(tmp_path, "c3.json", C3)
    code, _, err = run(capsys, "compute", "--kind", "f9", "--input", path)
    assert code == 2 and "kind" in err
    code, _, err = run(capsys, "compute", "--kind", "f1", "--input",
                       str(tmp_path / "missing.json"))
    assert code == 2 and err


def test_deck_writes_canonical_file(tmp_path, capsys):
    path = write(tmp_path, "c4.json", C4)
    out_path = str(tmp_path / "deck.json")
    code, _, _ = run(capsys, "deck", "--kind", "f1", "--input", path,
                     "--output", out_path)
    assert code == 0
    obj = load_json(out_path)
    assert obj["format_version"] == 1
    assert obj["kind"] == "f1"
    assert obj["polys"] == [["0", "0", "0", "0", "1"]] * 4


def test_deck_of_digon(tmp_path, capsys):
    path = write(tmp_path, "digon.json",
                 {"format_version": 1, "n": 2, "arcs": [[0, 1], [1, 0]]})
    out_path = str(tmp_path / "deck.json")
    run(capsys, "deck", "--kind", "f1", "--input", path, "--output", out_path)
    assert load_json(out_path)["polys"] == [["0", "0", "1"]] * 2


def test_reconstruct_exit_codes(tmp_path, capsys):
    star = write(tmp_path, "star.json", STAR)
    c4 = write(tmp_path, "c4.json", C4)
    star_deck = str(tmp_path / "sd.json")
    c4_f1_deck = str(tmp_path / "cd1.json")
    c4_f2_deck = str(tmp_path / "cd2.json")
    run(capsys, "deck", "--kind", "f1", "--input", star, "--output", star_deck)
    run(capsys, "deck", "--kind", "f1", "--input", c4, "--output", c4_f1_deck)
    run(capsys, "deck", "--kind", "f2", "--input", c4, "--output", c4_f2_deck)

    code, out, _ = run(capsys, "reconstruct", "--deck", star_deck)
    assert code == 0
    assert json.loads(out) == {"result": "unique", "poly": ["0", "-2", "0", "1"]}

    code, out, _ = run(capsys, "reconstruct", "--deck", c4_f1_deck)
    assert code == 3
    assert json.loads(out) == {
        "result": "one_parameter_family",
        "base": ["0", "0", "0", "0", "1"],
        "free_exponent": 0,
    }

    code, out, _ = run(capsys, "reconstruct", "--deck", c4_f2_deck)
    assert code == 0
    assert json.loads(out)["result"] == "unique"


def test_reconstruct_inconsistent_deck(tmp_path, capsys):
    deck_path = write(tmp_path, "bad.json", {
        "format_version": 1, "n": 2, "kind": "f1", "polys": [["0", "1", "1"]],
    })
    code, out, _ = run(capsys, "reconstruct", "--deck", deck_path)
    assert code == 4
    assert json.loads(out)["result"] == "inconsistent"


def test_reconstruct_malformed_deck_exits_2(tmp_path, capsys):
    deck_path = write(tmp_path, "bad.json", {"format_version": 1, "n": 2,
                                             "kind": "f1", "polys": [["0", "1"]]})
    code, _, err = run(capsys, "reconstruct", "--deck", deck_path)
    assert code == 2 and "degree" in err


@pytest.mark.parametrize("theorem", ["2.1", "2.2", "2.3", "3.1", "1.7"])
def test_verify_holds_for_every_identity(theorem, capsys):
    code, out, _ = run(capsys, "verify", "--theorem", theorem, "--trials", "15",
                       "--max-n", "4", "--seed", "42")
    assert code == 0
    obj = json.loads(out)
    assert obj["verdict"] == "holds" and obj["violations"] == []


def test_verify_weighted_sweep(capsys):
    code, out, _ = run(capsys, "verify", "--theorem", "3.1", "--trials", "10",
                       "--max-n", "5", "--seed", "7", "--weighted")
    assert code == 0
    assert json.loads(out)["weighted"] is True


def test_verify_output_is_byte_identical_across_runs(capsys):
    args = ("verify", "--theorem", "1.7", "--trials", "12", "--max-n", "5",
            "--seed", "99")
    _, first, _ = run(capsys, *args)
    _, second, _ = run(capsys, *args)
    assert first == second


def test_verify_flag_validation(capsys):
    code, _, err = run(capsys, "verify", "--theorem", "2.1", "--trials", "0",
                       "--seed", "1")
    assert code == 2 and err
    code, _, _ = run(capsys, "verify", "--theorem", "9.9", "--trials", "5",
                     "--seed", "1")
    assert code == 2
    code, _, _ = run(capsys, "verify", "--theorem", "2.1", "--trials", "5")
    assert code == 2  # --seed is mandatory


def test_search_finds_the_canonical_collision(tmp_path, capsys):
    out_path = str(tmp_path / "groups.ndjson")
    code, out, _ = run(capsys, "search", "--vertices", "4", "--arcs", "4",
                       "--kind", "f1", "--output", out_path)
    assert code == 0
    assert json.loads(out)["digraphs"] == 495
    records = [json.loads(line) for line in open(out_path)]
    assert records
    polys = {tuple(member["poly"]) for rec in records for member in rec["members"]}
    assert ("-1", "0", "0", "0", "1") in polys
    assert ("0", "0", "0", "0", "1") in polys


def test_search_laplacian_finds_nothing(tmp_path, capsys):
    out_path = str(tmp_path / "groups.ndjson")
    code, out, _ = run(capsys, "search", "--vertices", "4", "--arcs", "4",
                       "--kind", "f2", "--output", out_path)
    assert code == 0
    assert json.loads(out)["groups"] == 0
    assert open(out_path).read() == ""


def test_search_budget_env_override(tmp_path, capsys, monkeypatch):
    monkeypatch.setenv("DECKPOLY_BUDGET", "10")
    code, _, err = run(capsys, "search", "--vertices", "4", "--arcs", "4",
                       "--kind", "f1", "--output", str(tmp_path / "g.ndjson"))
    assert code == 2 and "budget" in err
    monkeypatch.setenv("DECKPOLY_BUDGET", "not-a-number")
    code, _, err = run(capsys, "search", "--vertices", "3", "--arcs", "1",
                       "--kind", "f1", "--output", str(tmp_path / "g.ndjson"))
    assert code == 2 and "DECKPOLY_BUDGET" in err


def test_counterexample_output(capsys):
    code, out, _ = run(capsys, "counterexample", "--n", "5")
    assert code == 0
    obj = json.loads(out)
    assert obj["polynomials"]["f1"]["cycle"] == ["-1", "0", "0", "0", "0", "1"]
    assert obj["polynomials"]["f1"]["path_plus_arc"] == ["0", "0", "0", "0", "0", "1"]
    assert obj["polynomials"]["f4"]["cycle"] == ["-1", "0", "0", "0", "0", "1"]
    assert obj["decks"]["f1"]["cycle"] == obj["decks"]["f1"]["path_plus_arc"]
    assert obj["digraphs"]["cycle"]["arcs"] == [[0, 1], [1, 2], [2, 3], [3, 4], [4, 0]]


def test_counterexample_rejects_n2(capsys):
    code, _, err = run(capsys, "counterexample", "--n", "2")
    assert code == 2 and err


def test_no_command_is_usage_error(capsys):
    assert main([]) == 2

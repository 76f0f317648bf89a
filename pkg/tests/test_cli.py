import io
import json

import pytest

from latindist import format_grid_text, parse_grid_text, shift_by_k
from latindist.cli import main

from conftest import load_golden


def run_cli(capsys, argv, stdin: str | None = None, monkeypatch=None):
    if stdin is not None:
        monkeypatch.setattr("sys.stdin", io.StringIO(stdin))
    code = main(argv)
    captured = capsys.readouterr()
    return code, captured.out, captured.err


@pytest.mark.parametrize("argv, fixture", [
    (["gen", "--algo", "shiftk", "--n", "5", "--k", "-1"], "order5_back_circulant.txt"),
    (["gen", "--algo", "shiftk", "--n", "5", "--k", "2"], "order5_shift_by_2.txt"),
    (["gen", "--algo", "shift", "--n", "9", "--r", "5", "--c", "4",
      "--alpha", "9", "--beta", "9"], "order9_shift_r5_c4.txt"),
    (["gen", "--algo", "shift", "--n", "6", "--r", "4", "--c", "2",
      "--alpha", "-1", "--beta", "1"], "order6_shift_r4_c2.txt"),
    (["gen", "--algo", "pandiagonal", "--n", "11"], "order11_pandiagonal.txt"),
    (["gen", "--algo", "sudoku", "--a", "3", "--b", "3"], "order9_sudoku_3x3.txt"),
    (["gen", "--algo", "eveneven", "--x", "2", "--y", "2"], "order16_sudoku_4x4.txt"),
])
def test_gen_matches_goldens(capsys, argv, fixture):
    code, out, _ = run_cli(capsys, argv)
    assert code == 0
    assert out == format_grid_text(load_golden(fixture))


def test_gen_json_format(capsys):
    code, out, _ = run_cli(capsys, ["gen", "--algo", "sudoku", "--a", "2", "--b", "2",
                                    "--format", "json"])
    assert code == 0
    doc = json.loads(out)
    assert doc["order"] == 4 and doc["shape"] == {"a": 2, "b": 2}


def test_gen_exit_codes(capsys):
    code, _, err = run_cli(capsys, ["gen", "--algo", "pandiagonal", "--n", "6"])
    assert code == 3 and "exist" in err
    code, _, err = run_cli(capsys, ["gen", "--algo", "shiftk", "--n", "4", "--k", "2"])
    assert code == 2
    code, _, err = run_cli(capsys, ["gen", "--algo", "maxdist"])
    assert code == 2 and "--n" in err


def test_gen_is_deterministic(capsys):
    argv = ["gen", "--algo", "eveneven", "--x", "2", "--y", "3"]
    _, first, _ = run_cli(capsys, argv)
    _, second, _ = run_cli(capsys, argv)
    assert first == second


def test_check_kinds_and_exit_codes(capsys, monkeypatch):
    sudoku_text = format_grid_text(load_golden("order9_sudoku_3x3.txt"))
    code, out, _ = run_cli(capsys, ["check", "--kind", "sudoku", "--a", "3", "--b", "3"],
                           stdin=sudoku_text, monkeypatch=monkeypatch)
    assert code == 0 and json.loads(out)["verdict"] is True

    back_circulant = format_grid_text(load_golden("order5_back_circulant.txt"))
    code, out, _ = run_cli(capsys, ["check", "--kind", "pandiagonal"],
                           stdin=back_circulant, monkeypatch=monkeypatch)
    assert code == 1
    report = json.loads(out)
    assert report["verdict"] is False and report["violations"]

    code, _, _ = run_cli(capsys, ["check", "--kind", "latin"],
                         stdin="1 2 3 4\n2 1\n", monkeypatch=monkeypatch)
    assert code == 2


def test_check_reads_files_and_json(capsys, tmp_path, monkeypatch):
    path = tmp_path / "grid.txt"
    path.write_text(format_grid_text(shift_by_k(5, 2)))
    code, out, _ = run_cli(capsys, ["check", str(path), "--kind", "latin"])
    assert code == 0

    # shape taken from the JSON document itself; the circulant repeats a
    # symbol inside the top-left block, so the verdict is false
    jpath = tmp_path / "grid.json"
    jpath.write_text(json.dumps({"order": 4, "cells": shift_by_k(4, 1).rows(),
                                 "shape": {"a": 2, "b": 2}}))
    code, out, _ = run_cli(capsys, ["check", str(jpath), "--kind", "sudoku",
                                    "--format", "json"])
    assert code == 1 and json.loads(out)["verdict"] is False


def test_dist_outputs(capsys, monkeypatch):
    fig4 = format_grid_text(load_golden("order9_shift_r5_c4.txt"))
    code, out, _ = run_cli(capsys, ["dist", "--format", "json"], stdin=fig4,
                           monkeypatch=monkeypatch)
    assert code == 0 and json.loads(out)["inner_distance"] == 4

    fig3 = format_grid_text(load_golden("order6_shift_r4_c2.txt"))
    code, out, _ = run_cli(capsys, ["dist"], stdin=fig3, monkeypatch=monkeypatch)
    assert code == 0 and out.startswith("inner distance: 2")

    fig7 = format_grid_text(load_golden("order11_pandiagonal.txt"))
    code, out, _ = run_cli(capsys, ["dist", "--format", "json"], stdin=fig7,
                           monkeypatch=monkeypatch)
    assert json.loads(out)["inner_distance"] == 4

    code, _, err = run_cli(capsys, ["dist"], stdin="1\n", monkeypatch=monkeypatch)
    assert code == 2 and "inner distance" in err


def test_bounds_outputs(capsys):
    code, out, _ = run_cli(capsys, ["bounds", "--kind", "plain", "--n", "10"])
    doc = json.loads(out)
    assert code == 0 and (doc["lower"], doc["upper"], doc["exact"]) == (4, 4, True)

    code, out, _ = run_cli(capsys, ["bounds", "--kind", "sudoku", "--a", "5", "--b", "7"])
    doc = json.loads(out)
    assert (doc["lower"], doc["upper"], doc["exact"]) == (15, 15, True)

    code, out, _ = run_cli(capsys, ["bounds", "--kind", "sudoku", "--a", "2", "--b", "9"])
    doc = json.loads(out)
    assert (doc["lower"], doc["upper"], doc["exact"]) == (8, 8, True)

    code, out, _ = run_cli(capsys, ["bounds", "--kind", "pandiagonal", "--n", "6"])
    assert json.loads(out)["existence"] is False

    code, _, _ = run_cli(capsys, ["bounds", "--kind", "sudoku", "--a", "0", "--b", "3"])
    assert code == 2


def test_search_subcommand(capsys):
    code, out, _ = run_cli(capsys, ["search", "--n", "5", "--kind", "plain",
                                    "--min-dist", "2", "--mode", "count"])
    doc = json.loads(out)
    assert code == 0 and doc["count"] == 20 and doc["complete"] is True
    assert doc["query"]["min_distance"] == 2 and "elapsed_ms" in doc and "nodes" in doc

    code, out, _ = run_cli(capsys, ["search", "--a", "3", "--b", "3", "--kind", "sudoku",
                                    "--min-dist", "4", "--mode", "exists"])
    assert json.loads(out)["count"] == 0


def test_search_enumerate_and_witness_file(capsys, tmp_path):
    wpath = tmp_path / "witnesses.txt"
    code, out, _ = run_cli(capsys, ["search", "--n", "4", "--kind", "plain",
                                    "--min-dist", "1", "--mode", "enumerate",
                                    "--symmetry", "fix-first-cell",
                                    "--witnesses-out", str(wpath)])
    doc = json.loads(out)
    assert code == 0 and doc["count"] == 144 == len(doc["witnesses"])
    blocks = [b for b in wpath.read_text().split("\n\n") if b.strip()]
    assert len(blocks) == 144
    assert parse_grid_text(blocks[0]).at(1, 1) == 1


def test_canon_round_trip(capsys, monkeypatch):
    shifted = format_grid_text(shift_by_k(5, 3))
    code, out, _ = run_cli(capsys, ["canon", "--format", "json"], stdin=shifted,
                           monkeypatch=monkeypatch)
    assert code == 0
    doc = json.loads(out)
    assert doc["canonical"]["cells"] == shift_by_k(5, 1).rows()
    assert sorted(doc["permutation"]["rows"]) == [1, 2, 3, 4, 5]

    code, out, _ = run_cli(capsys, ["canon"], stdin=shifted, monkeypatch=monkeypatch)
    grid_part, perm_part = out.rsplit("\n\n", 1)
    assert parse_grid_text(grid_part) == shift_by_k(5, 1)
    assert json.loads(perm_part)["cols"]

    stubborn = "1 2 3 4\n2 1 4 3\n3 4 1 2\n4 3 2 1\n"
    code, _, err = run_cli(capsys, ["canon"], stdin=stubborn, monkeypatch=monkeypatch)
    assert code == 1 and "reduc" in err


def test_gen_check_round_trip(capsys, monkeypatch):
    cases = [
        (["gen", "--algo", "maxdist", "--n", "7"], ["check", "--kind", "latin"]),
        (["gen", "--algo", "pandiagonal", "--n", "7"], ["check", "--kind", "pandiagonal"]),
        (["gen", "--algo", "sudoku", "--a", "2", "--b", "3"],
         ["check", "--kind", "sudoku", "--a", "2", "--b", "3"]),
        (["gen", "--algo", "eveneven", "--x", "2", "--y", "3"],
         ["check", "--kind", "sudoku", "--a", "4", "--b", "6"]),
    ]
    for gen_argv, check_argv in cases:
        _, out, _ = run_cli(capsys, gen_argv)
        code, _, _ = run_cli(capsys, check_argv, stdin=out, monkeypatch=monkeypatch)
        assert code == 0, (gen_argv, check_argv)


def test_output_to_file(capsys, tmp_path):
    target = tmp_path / "grid.txt"
    code, out, _ = run_cli(capsys, ["gen", "--algo", "shiftk", "--n", "5", "--k", "1",
                                    "--out", str(target)])
    assert code == 0 and out == ""
    assert parse_grid_text(target.read_text()) == shift_by_k(5, 1)

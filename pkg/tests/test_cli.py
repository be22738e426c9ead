import json
import subprocess
import sys
from fractions import Fraction

import pytest

from liestruct import catalog, fixtures
from liestruct.cli import COMMANDS, AnalysisReport, execute, main, parse_elements
from liestruct.errors import InputError
from liestruct.fileformats import algebra_to_json, tower_to_json

ALGEBRAS = sorted(fixtures.facts())
FILES = fixtures.fixture_names()


def run(command, *argv):
    code, report, _ = execute(command, list(argv) + ["--format", "json"])
    return code, json.loads(report.to_json())["results"]


def argv_for(command, name):
    """Arguments that make each command meaningful on algebra fixtures (others fail cleanly)."""
    path = f"{name}.json"
    label = None
    if name in ALGEBRAS:
        label = fixtures_first_label(name)
    extra = {
        "weights": ["--subalgebra", label or "x"],
        "fitting": ["--element", label or "x"],
        "condition3": ["--generators", label or "x"],
        "aomega": ["--subalgebra", label or "x"],
        "tower-derivation": ["summand_derivation.json"],
    }.get(command, [])
    return [path] + extra


def fixtures_first_label(name):
    return json.loads(fixtures.fixture_path(name).read_text())["basis"][0]


# -- documented examples ---------------------------------------------------------------------


def test_solvable_r2():
    code, res = run("solvable", "r2.json")
    assert code == 0
    assert res["verdict"] == "solvable" and res["oracle_agreement"] is True


def test_semisimple_h3():
    code, res = run("semisimple", "h3.json")
    assert code == 1 and res["killing_det"] == "0"


def test_weights_on_so3_rotation_is_not_split():
    code, res = run("weights", "--subalgebra", "x", "so3.json")
    assert code == 2 and res["error"] == "NotSplit"


def test_negative_and_positive_verdicts_carry_their_certificates():
    code, res = run("solvable", "sl2.json")
    assert code == 1 and res["witness"] is not None and res["witness_trace_square"] != "0"
    code, res = run("semisimple", "sl2.json")
    assert code == 0 and res["killing_det"] == "-128"
    code, res = run("killing", "sl2.json")
    assert res["gram"] == [["0", "0", "4"], ["0", "8", "0"], ["4", "0", "0"]]


def test_decompose_and_tower_commands():
    code, res = run("decompose", "sl2_so3_sl2.json")
    assert code == 0 and [I["dim"] for I in res["ideals"]] == [3, 3, 3]
    code, res = run("decompose", "r2.json")
    assert code == 1 and res["error"] == "NotSemisimple"
    code, res = run("tower-verdicts", "sl2_sum_tower.json")
    assert code == 0 and res["limit"] == "semisimple"
    code, res = run("tower-verdicts", "strictly_upper_tower.json")
    assert code == 0 and res["limit"] == "locally_solvable"
    code, res = run("tower-decompose", "sl2_sum_tower.json")
    assert code == 0 and res["coherent"] and res["matching"][-1] == [0, 1, 2, 3]
    code, res = run("tower-derivation", "sl2_sum_tower.json", "summand_derivation.json")
    assert code == 0 and res["verdict"] == "inner" and res["witness_level"] == 0
    code, res = run("tower-derivation", "sl2_sum_tower.json", "fresh_derivation.json")
    assert code == 2 and res["verdict"] == "not_inner_within_horizon"
    code, res = run("tower-derivation", "strictly_upper_tower.json", "zero_derivation.json")
    assert code == 3 and res["status"] == "input_error"


def test_condition3_and_aomega():
    code, res = run("condition3", "--generators", "z", "h3.json")
    assert code == 0 and res["exponent"] == 1 and res["subalgebra"]["basis"] == [["0", "0", "1"]]
    code, res = run("condition3", "--generators", "h", "--dim-cap", "2", "sl2.json")
    assert code == 2 and res["error"] == "NoWitnessWithinCap"
    code, res = run("aomega", "--subalgebra", "x,y", "sl2_plus_r2.json")
    assert code == 0 and res["a_omega"]["basis"] == [["0", "0", "0", "0", "1"]] and res["ideal"]
    code, res = run("aomega", "--subalgebra", "e,f", "sl2.json")
    assert code == 3 and res["error"] == "NotSubalgebra"


def test_fitting_and_radical():
    code, res = run("fitting", "--element", "h", "sl2.json")
    assert code == 0
    assert res["null_component"]["dim"] == 1 and res["fitting_trace"] == res["trace"] == "0"
    code, res = run("radical", "sl2_plus_r2.json")
    assert code == 0 and res["radical"]["dim"] == 2 and res["solvable"] and res["ideal"]


def test_weights_with_representation_file():
    code, res = run("weights", "--subalgebra", "h", "--rep", "sl2_natural.json", "sl2.json")
    assert code == 0 and [w["values"] for w in res["weights"]] == [["-1"], ["1"]]
    code, res = run("weights", "--subalgebra", "h", "--rep", "n3_natural.json", "sl2.json")
    assert code == 3


# -- exit codes for input problems -----------------------------------------------------------


def test_input_errors_exit_3(tmp_path):
    assert execute("frobnicate", ["sl2.json"])[0] == 3
    assert execute("killing", ["--bogus", "sl2.json"])[0] == 3
    assert execute("killing", [str(tmp_path / "nope.json")])[0] == 3
    assert execute("weights", ["--subalgebra", "q", "sl2.json"])[0] == 3
    assert execute("decompose", ["--trial-budget", "0", "sl2.json"])[0] == 3
    bad = tmp_path / "bad.json"
    data = algebra_to_json(catalog.sl2())
    data["brackets"][0][2][0][1] = "1/0"
    bad.write_text(json.dumps(data))
    code, report, _ = execute("killing", [str(bad)])
    assert code == 3 and "brackets[0][2][0][1]" in report.results["message"]


def test_check_reports_invalid_inputs(tmp_path):
    data = tower_to_json(catalog.sl2_sum_tower(2))
    data["embeddings"][0] = [row + ["0"] for row in data["embeddings"][0]]
    path = tmp_path / "tower.json"
    path.write_text(json.dumps(data))
    code, report, _ = execute("check", [str(path)])
    assert code == 1 and report.results["kind"] == "tower" and not report.results["valid"]
    assert execute("check", ["sl2_natural.json"])[0] == 0


def test_parse_elements():
    L = catalog.sl2()
    assert parse_elements(L, "2*e+h-1/2*f, f") == [(2, 1, Fraction(-1, 2)), (0, 0, 1)]
    with pytest.raises(InputError):
        parse_elements(L, "e+")
    with pytest.raises(InputError):
        parse_elements(L, "e,,f")


# -- reports ---------------------------------------------------------------------------------


@pytest.mark.parametrize("command", COMMANDS)
def test_every_command_on_every_fixture_round_trips_and_reruns_identically(command):
    for name in FILES:
        argv = argv_for(command, name)
        code, report, _ = execute(command, argv)
        assert code in (0, 1, 2, 3)
        assert report.results["status"] in ("success", "negative", "undecided", "input_error")
        assert AnalysisReport.from_json(report.to_json()) == report
        again = execute(command, argv + ["--format", "json"])
        assert again[0] == code
        assert again[1].to_json() == report.to_json() and again[1].to_text() == report.to_text()


def test_seed_is_recorded_only_for_randomized_commands():
    assert execute("decompose", ["sl2.json", "--seed", "5"])[1].seed == 5
    assert execute("killing", ["sl2.json", "--seed", "5"])[1].seed is None


def test_inputs_are_recorded_with_digests():
    _, report, _ = execute("tower-derivation", ["sl2_sum_tower.json", "zero_derivation.json"])
    paths = [p for p, _ in report.inputs]
    assert paths == ["sl2_sum_tower.json", "zero_derivation.json"]
    assert all(len(d) == 64 for _, d in report.inputs)


def test_main_writes_report_to_stdout(capsys):
    assert main(["semisimple", "so3.json"]) == 0
    out = capsys.readouterr().out
    assert "verdict: semisimple" in out and "killing_det: -8" in out
    assert main(["semisimple", "so3.json", "--format", "json"]) == 0
    assert json.loads(capsys.readouterr().out)["results"]["killing_det"] == "-8"
    assert main([]) == 3


def test_module_entry_point_is_byte_identical_across_runs():
    cmd = [sys.executable, "-m", "liestruct", "decompose", "sl2_so3_sl2.json", "--format", "json", "--seed", "3"]
    first = subprocess.run(cmd, capture_output=True, check=False)
    second = subprocess.run(cmd, capture_output=True, check=False)
    assert first.returncode == 0
    assert first.stdout == second.stdout and first.stdout

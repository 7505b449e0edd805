import json
import subprocess
import sys

import pytest

from homcore.cli import EXIT_BUDGET, EXIT_FAIL, EXIT_OK, EXIT_USAGE, main


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def run_json(capsys, *argv):
    code, out, err = run(capsys, *argv)
    return code, json.loads(out)


def test_graph_report_for_cube(capsys):
    code, rep = run_json(capsys, "graph", "--named", "q3")
    assert code == EXIT_OK
    assert rep["degeneracy"] == 3 and rep["bipartite"] is True and rep["chi"] == 2
    assert rep["contains_h1"] is True and rep["fold_reduced_n"] == 8
    assert rep["k_core_sizes"] == {"0": 8, "1": 8, "2": 8, "3": 8}


def test_graph_report_complete_bipartite(capsys):
    code, rep = run_json(capsys, "graph", "--named", "kij:3,5")
    assert code == EXIT_OK and rep["degeneracy"] == 3


def test_graph_report_from_file(capsys, tmp_path):
    f = tmp_path / "g.txt"
    f.write_text("4 4\n0 1\n1 2\n2 3\n3 0\n")
    code, rep = run_json(capsys, "graph", "--input", str(f))
    assert code == EXIT_OK and rep["n"] == 4 and rep["fold_reduced_n"] == 2


def test_malformed_file_reports_line(capsys, tmp_path):
    f = tmp_path / "bad.txt"
    f.write_text("3 2\n0 1\n1 q\n")
    code, out, err = run(capsys, "graph", "--input", str(f))
    assert code == EXIT_USAGE and out == ""
    assert "line 3" in err


def test_missing_file_is_usage_error(capsys, tmp_path):
    code, _, err = run(capsys, "graph", "--input", str(tmp_path / "missing.txt"))
    assert code == EXIT_USAGE and err


def test_hom_components(capsys):
    code, rep = run_json(capsys, "hom", "--named", "c5", "--m", "3")
    assert code == EXIT_OK and rep["components"] == 2 and rep["maps"] == 30


def test_hom_components_cube_into_k4_has_isolated_maps(capsys):
    code, rep = run_json(capsys, "hom", "--named", "q3", "--m", "4", "--mode", "components")
    assert code == EXIT_OK and rep["components"] > 1 and rep["singletons"] >= 1


def test_hom_betti_edge_into_k4(capsys):
    code, rep = run_json(capsys, "hom", "--named", "k2", "--m", "4", "--mode", "betti")
    assert code == EXIT_OK and rep["betti_reduced_mod2"] == [0, 0, 1]


def test_betti_command(capsys):
    code, rep = run_json(capsys, "betti", "--named", "c6", "--m", "3")
    assert code == EXIT_OK and rep["betti_reduced_mod2"] == [6, 1, 0, 0] and rep["connectivity"] == -1
    code, rep = run_json(capsys, "betti", "--named", "c5", "--m", "4", "--max-dim", "1")
    assert rep["betti_reduced_mod2"] == [0, 1]


def test_hom_cells(capsys):
    code, rep = run_json(capsys, "hom", "--named", "k2", "--m", "3", "--mode", "cells")
    assert rep["cells_by_dim"] == [6, 6] and rep["total"] == 12


def test_budget_exit_code(capsys):
    code, out, err = run(capsys, "hom", "--named", "c8", "--m", "4", "--mode", "cells", "--budget", "100")
    assert code == EXIT_BUDGET and "budget" in err


def test_usage_errors(capsys):
    assert run(capsys, "hom", "--named", "c5")[0] == EXIT_USAGE
    assert run(capsys, "hom", "--named", "c5", "--input", "x", "--m", "3")[0] == EXIT_USAGE
    assert run(capsys, "graph", "--named", "nonsense")[0] == EXIT_USAGE
    assert run(capsys, "random", "m3", "--n", "100", "--c", "1.5")[0] == EXIT_USAGE
    with pytest.raises(SystemExit) as exc:
        main(["frobnicate"])
    assert exc.value.code == EXIT_USAGE
    capsys.readouterr()


@pytest.mark.parametrize("suite", ["thm4_1", "lem4_6", "thm2_8", "lem4_4", "lem3_3"])
def test_verify_suites_pass(capsys, suite):
    code, rep = run_json(capsys, "verify", suite)
    assert code == EXIT_OK and rep["passed"] and not rep["failures"]


def test_verify_scaled(capsys):
    code, rep = run_json(capsys, "verify", "lem4_6", "--max-n", "5")
    assert code == EXIT_OK and rep["checked"] == 3 * (6 + 18 + 30)


def test_verify_failure_exit_code(capsys):
    code, rep = run_json(capsys, "verify", "cycle_table", "--max-n", "6")
    assert code == EXIT_FAIL
    assert rep["failures"][0]["graph"] == "C6"


def test_random_core_with_trial_stream(capsys, tmp_path):
    out = tmp_path / "trials.jsonl"
    argv = ["random", "core", "--n", "2000", "--c", "3.7", "--k", "3", "--trials", "4", "--seed", "5",
            "--out", str(out)]
    code, first, _ = run(capsys, *argv)
    assert code == EXIT_OK
    rep = json.loads(first)
    assert rep["theory"]["c_k"] == 3.35 and rep["config"]["trials"] == 4
    lines = out.read_text().splitlines()
    assert len(lines) == 4 and json.loads(lines[0])["trial_index"] == 0
    code, second, _ = run(capsys, *argv)
    assert second == first
    assert out.read_text().splitlines() == lines


def test_random_m3_reports_theory(capsys):
    code, rep = run_json(capsys, "random", "m3", "--n", "1000", "--c", "0.5", "--trials", "20", "--seed", "1")
    assert code == EXIT_OK
    assert rep["theory"]["limit_p_connected"] == pytest.approx(0.97408, abs=5e-5)
    assert 0 <= rep["p_connected"] <= 1


def test_csv_format(capsys):
    code, out, _ = run(capsys, "hom", "--named", "c5", "--m", "3", "--format", "csv")
    rows = out.strip().splitlines()
    assert rows[0] == "key,value" and "components,2" in rows


def test_module_entry_point():
    res = subprocess.run([sys.executable, "-m", "homcore", "graph", "--named", "k4"],
                         capture_output=True, text=True, check=False)
    assert res.returncode == 0
    assert json.loads(res.stdout)["degeneracy"] == 3
    res = subprocess.run([sys.executable, "-m", "homcore", "graph", "--named", "zz"],
                         capture_output=True, text=True, check=False)
    assert res.returncode == EXIT_USAGE

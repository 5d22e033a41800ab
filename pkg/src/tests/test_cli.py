import json

import pytest
from click.testing import CliRunner

from main import cli


@pytest.fixture
def runner():
    return CliRunner()


def run_json(runner, *args):
    result = runner.invoke(cli, list(args))
    assert result.exit_code == 0, result.output
    return json.loads(result.stdout)


def test_roots_lists_almost_positive_roots(runner):
    data = run_json(runner, "roots", "--graph", "A2")
    assert data["dynkin"] == "A2"
    assert [r["label"] for r in data["almost_positive_roots"]][-2:] == ["-1", "-2"]
    assert len(data["almost_positive_roots"]) == 5
    assert data["exponents"]["A2"] == {"exponents": [1, 2], "coxeter_number": 3}


def test_roots_can_dump_representations(runner):
    data = run_json(runner, "roots", "--graph", "A2", "--dump-reps")
    assert len(data["representations"]) == 3


def test_compat_as_csv(runner):
    result = runner.invoke(cli, ["compat", "--graph", "A2", "--format", "csv"])
    assert result.exit_code == 0
    lines = result.stdout.strip().splitlines()
    assert lines[0].startswith("root,")
    assert len(lines) == 6


def test_clusters_count(runner):
    data = run_json(runner, "clusters", "--graph", "A3")
    assert data["count"] == 14
    assert data["positive"] == 5


def test_expand(runner):
    data = run_json(runner, "expand", "--graph", "A2", "--gamma", "1,2")
    assert {t["label"]: t["multiplicity"] for t in data["terms"]} == {"12": 1, "2": 1}


def test_expand_rejects_wrong_arity(runner):
    result = runner.invoke(cli, ["expand", "--graph", "A2", "--gamma", "1,2,3"])
    assert result.exit_code == 2


def test_sigma_word(runner):
    data = run_json(runner, "sigma", "--graph", "A3", "--gamma", "0,1,0", "--word", "2")
    assert data["result"] == [0, -1, 0]
    data = run_json(runner, "sigma", "--graph", "A3", "--gamma", "1,1,1", "--word", "+")
    assert data["result"] == [0, 1, 0]


def test_fan_check(runner):
    result = runner.invoke(cli, ["fan", "--graph", "A2", "--check", "--samples", "30", "--seed", "5"])
    assert result.exit_code == 0
    assert json.loads(result.stdout)["passed"]


def test_fan_written_to_file(runner, tmp_path):
    out = tmp_path / "fan.json"
    result = runner.invoke(cli, ["fan", "--graph", "A2", "--out", str(out)])
    assert result.exit_code == 0
    assert len(json.loads(out.read_text(encoding="utf-8"))["clusters"]) == 5


def test_groupoid_word_and_loops(runner):
    data = run_json(runner, "groupoid", "--graph", "A3", "--word", "S1,S1,D")
    assert data["normal_form"] == "D"
    result = runner.invoke(cli, ["groupoid", "--graph", "A2", "--max-len", "6"])
    assert result.exit_code == 0
    assert json.loads(result.stdout)["passed"]


def test_census(runner):
    data = run_json(runner, "census", "--graph", "A3")
    assert data["f_plus"] == [1, 6, 10, 5]
    assert data["f"] == [1, 9, 21, 14]
    result = runner.invoke(cli, ["census", "--graph", "A3", "--all-orientations"])
    assert result.exit_code == 0
    assert json.loads(result.stdout)["formula_value"] == 5


def test_verify_small_scope(runner):
    result = runner.invoke(cli, ["verify", "--graph", "A2", "--checks", "clusters,census", "--samples", "20"])
    assert result.exit_code == 0
    data = json.loads(result.stdout)
    assert data["passed"]
    assert all("seconds" not in c for c in data["checks"])


def test_verify_unknown_check_is_a_usage_error(runner):
    result = runner.invoke(cli, ["verify", "--graph", "A2", "--checks", "nope"])
    assert result.exit_code == 2


def test_rank_cap_exit_code(runner):
    result = runner.invoke(cli, ["clusters", "--graph", "E7"])
    assert result.exit_code == 3


def test_unknown_graph_is_a_usage_error(runner):
    result = runner.invoke(cli, ["roots", "--graph", "Q9"])
    assert result.exit_code == 2


def test_verify_exhaustive_rank_option(runner):
    data = run_json(runner, "verify", "--graph", "A3", "--checks", "purity", "--exhaustive-rank", "2")
    [check] = data["checks"]
    assert check["scope"].startswith("A3: Γ₀ = ")
    assert check["checked"] == 14
    data = run_json(runner, "verify", "--graph", "A3", "--checks", "purity")
    assert data["checks"][0]["scope"] == "A3: 4 orientaciones"


def test_help_lists_environment_settings(runner):
    result = runner.invoke(cli, ["--help"])
    assert result.exit_code == 0
    assert "QUIVER_SEED" in result.output
    assert "Solo para operadores" in result.output
    assert "QUIVER_RANK_CAP" not in result.output

import json

import pytest

from exceptions.quiver_exceptions import ConfigError, ResourceCapError
from verification import GROUPS, VerificationConfig, run_verify_suite
from verification.checks import REGISTRY, check_names
from verification.report import ERROR, PASS


def small_config(**overrides):
    values = dict(graphs=("A2",), seed=7, samples=20, random_sums=12, loop_len=6, lemma_len=5)
    values.update(overrides)
    return VerificationConfig(**values)


def test_registry_covers_every_group():
    assert tuple(REGISTRY) == GROUPS
    names = check_names()
    assert len(names) == len(set(names))
    assert {"euler", "sdim-reflection", "expansion", "loops", "formula"} <= set(names)


def test_small_suite_passes():
    report = run_verify_suite(small_config(graphs=("A1", "A2")))
    assert report.passed, [r.to_json() for r in report.failed]
    assert report.exit_code == 0
    assert {r.group for r in report.results} == set(GROUPS)


def test_report_is_deterministic_without_timings():
    cfg = small_config(checks=("clusters", "decorated"))
    first = json.dumps(run_verify_suite(cfg).to_json(), sort_keys=True)
    second = json.dumps(run_verify_suite(cfg).to_json(), sort_keys=True)
    assert first == second
    assert "seconds" not in first


def test_timings_only_when_requested():
    report = run_verify_suite(small_config(checks=("euler",)))
    assert all("seconds" in check for check in report.to_json(timings=True)["checks"])


def test_select_single_check():
    report = run_verify_suite(small_config(checks=("figure",), graphs=("A3",)))
    assert [r.name for r in report.results] == ["figure"]
    assert report.passed


def test_wrong_exponent_table_fails_the_formula():
    cfg = small_config(graphs=("A3",), checks=("formula",), exponent_overrides={"A3": (1, 2, 4)})
    report = run_verify_suite(cfg)
    assert not report.passed
    assert report.exit_code == 1
    [result] = report.results
    assert result.status == ERROR
    assert "InvariantViolation" in result.error


def test_correct_exponent_override_still_passes():
    cfg = small_config(graphs=("A3",), checks=("formula",), exponent_overrides={"A3": (1, 2, 3)})
    [result] = run_verify_suite(cfg).results
    assert result.status == PASS


def test_unknown_check_is_a_config_error():
    with pytest.raises(ConfigError):
        run_verify_suite(small_config(checks=("no-such-check",)))


def test_exhaustive_rank_must_be_positive():
    with pytest.raises(ConfigError):
        run_verify_suite(small_config(exhaustive_rank=0))


def test_negative_samples_are_rejected():
    with pytest.raises(ConfigError):
        run_verify_suite(small_config(samples=-1))


def test_rank_cap_aborts_the_run():
    with pytest.raises(ResourceCapError):
        run_verify_suite(small_config(graphs=("E7",), checks=("purity",)))


@pytest.mark.slow
def test_default_graphs_pass():
    report = run_verify_suite(VerificationConfig(samples=200, random_sums=60))
    assert report.passed, [r.to_json() for r in report.failed]


def test_sdim_reflection_check_skips_sums_outside_its_hypothesis():
    report = run_verify_suite(small_config(graphs=("A2", "A3"), checks=("sdim-reflection",), random_sums=200))
    assert report.passed, [r.to_json() for r in report.failed]
    assert all(r.checked > 0 for r in report.results)


@pytest.mark.slow
@pytest.mark.parametrize("name, total", [("A5", 16 * 429), ("D5", 16 * 182)])
def test_purity_on_every_rank_five_orientation(name, total):
    [result] = run_verify_suite(small_config(graphs=(name,), checks=("purity",))).results
    assert result.passed, result.to_json()
    assert result.scope == f"{name}: 16 orientaciones"
    assert result.checked == total

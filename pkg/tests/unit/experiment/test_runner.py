from datetime import datetime, timezone
from statistics import median

import pytest
from pydantic import ValidationError

import errors
from experiment import (
    Criterion,
    ExperimentConfig,
    ExperimentReport,
    Verdict,
    persistence,
    run_experiment,
)
from graph_core import generate_random_control
from tests.helpers.graph_helpers import experiment_config_dict

pytestmark = pytest.mark.unit


def fixed_clock() -> datetime:
    return datetime(2026, 1, 1, 12, 30, tzinfo=timezone.utc)


def config(**overrides) -> ExperimentConfig:
    return ExperimentConfig.model_validate(experiment_config_dict(**overrides))


def path_config(**overrides) -> ExperimentConfig:
    return config(graph_name="path",
                  similar={"layer_a": "one", "layer_b": "two", "classification": "similar"},
                  dissimilar={"layer_a": "one", "layer_b": "star", "classification": "dissimilar"},
                  **overrides)


@pytest.mark.parametrize("criterion", list(Criterion))
def test_extremal_graph_confirms(extremal_graph, criterion) -> None:
    report = run_experiment(extremal_graph, config(criterion=criterion.value), clock=fixed_clock)
    assert report.sim.r == pytest.approx(1.0)
    assert report.dis.r == pytest.approx(-1.0)
    assert report.delta_r == pytest.approx(2.0)
    assert report.p_verdict < 0.05
    assert report.verdict is Verdict.CONFIRMED
    assert report.sign_agreement
    assert report.timestamp_utc == "2026-01-01T12:30:00Z"


def test_identical_pairs_do_not_confirm(extremal_graph) -> None:
    twin = {"layer_a": "mirror", "layer_b": "base", "classification": "dissimilar"}
    legacy = run_experiment(extremal_graph, config(dissimilar=twin), clock=fixed_clock)
    assert legacy.delta_r == 0.0
    assert legacy.verdict is Verdict.DENIED
    v2 = run_experiment(extremal_graph, config(dissimilar=twin, criterion="thresholded_v2"), clock=fixed_clock)
    assert v2.verdict is Verdict.PARTIAL


def test_path_graph_is_partial_without_significance(small_path_graph) -> None:
    report = run_experiment(small_path_graph, path_config(mode="exhaustive", criterion="thresholded_v2"),
                            clock=fixed_clock)
    assert report.sim.r == pytest.approx(1.0)
    assert report.dis.r == pytest.approx(0.40824829, abs=1e-6)
    # 2! * 3! alignments reproduce the degree sequence
    assert report.sim.p_permutation == pytest.approx(0.1)
    assert report.sim.count_exceeding == 12
    assert report.verdict is Verdict.PARTIAL


def test_min_abs_r_is_reported_not_enforced(small_path_graph) -> None:
    met = run_experiment(small_path_graph, path_config(min_abs_r=0.9), clock=fixed_clock)
    assert met.min_abs_r_met is True
    report = run_experiment(small_path_graph, config(
        graph_name="path",
        similar={"layer_a": "one", "layer_b": "star", "classification": "similar"},
        dissimilar={"layer_a": "two", "layer_b": "star", "classification": "dissimilar"},
        min_abs_r=0.5), clock=fixed_clock)
    assert report.min_abs_r_met is False
    assert run_experiment(small_path_graph, path_config(), clock=fixed_clock).min_abs_r_met is None


def test_analytical_fallback(extremal_graph) -> None:
    report = run_experiment(extremal_graph, config(use_permutation=False), clock=fixed_clock)
    assert report.sim.p_permutation is None
    assert report.sim.count_exceeding is None
    assert report.sim.t_saturated
    assert report.sim.t is None
    assert report.p_verdict == report.sim.p_t_fallback == 0.0


def test_report_is_deterministic_apart_from_timestamp(extremal_graph) -> None:
    first = run_experiment(extremal_graph, config(), clock=fixed_clock)
    second = run_experiment(extremal_graph, config(), clock=fixed_clock, max_workers=3)
    assert first == second


def test_report_json_round_trip(extremal_graph) -> None:
    report = run_experiment(extremal_graph, config(tier="A"), clock=fixed_clock)
    assert ExperimentReport.model_validate_json(report.model_dump_json()) == report


def test_tampered_report_is_rejected(extremal_graph) -> None:
    payload = run_experiment(extremal_graph, config(), clock=fixed_clock).model_dump(mode="json")
    payload["verdict"] = "DENIED"
    with pytest.raises(ValidationError):
        ExperimentReport.model_validate(payload)
    payload = run_experiment(extremal_graph, config(), clock=fixed_clock).model_dump(mode="json")
    payload["delta_r"] = 1.5
    with pytest.raises(ValidationError):
        ExperimentReport.model_validate(payload)


def test_config_must_target_the_graph(extremal_graph) -> None:
    with pytest.raises(errors.ConfigMismatch):
        run_experiment(extremal_graph, config(graph_name="other"))
    missing = {"layer_a": "base", "layer_b": "ghost", "classification": "dissimilar"}
    with pytest.raises(errors.ConfigMismatch) as excinfo:
        run_experiment(extremal_graph, config(dissimilar=missing))
    assert excinfo.value.element == "ghost"


def test_persistence_reports_both_coefficients(small_path_graph) -> None:
    result = persistence(small_path_graph, "one", "star")
    assert result.n == 5
    assert result.rho == pytest.approx(0.40824829, abs=1e-6)
    assert result.t == pytest.approx(result.r * 3 ** 0.5 / (1 - result.r ** 2) ** 0.5)
    assert 0.0 <= result.p_permutation <= 1.0


def test_random_control_rarely_confirms() -> None:
    not_confirmed = 0
    for seed in range(100):
        graph = generate_random_control(12, 3, 0.25, seed=seed)
        cfg = config(graph_name=graph.name, criterion="thresholded_v2",
                     similar={"layer_a": "random_0", "layer_b": "random_1", "classification": "similar"},
                     dissimilar={"layer_a": "random_0", "layer_b": "random_2", "classification": "dissimilar"})
        try:
            report = run_experiment(graph, cfg, clock=fixed_clock)
        except errors.DegenerateVector:
            not_confirmed += 1
            continue
        if report.verdict is not Verdict.CONFIRMED:
            not_confirmed += 1
    assert not_confirmed >= 95


def test_random_control_pairs_look_null() -> None:
    passing = {("random_0", "random_1"): 0, ("random_0", "random_2"): 0, ("random_1", "random_2"): 0}
    abs_rs = []
    for seed in range(100):
        graph = generate_random_control(12, 3, 0.25, seed=seed)
        for pair in passing:
            try:
                result = persistence(graph, *pair, seed=seed)
            except errors.DegenerateVector:
                passing[pair] += 1
                continue
            abs_rs.append(abs(result.r))
            if result.p_permutation > 0.05:
                passing[pair] += 1
    assert all(count >= 85 for count in passing.values())
    assert median(abs_rs) < 0.35

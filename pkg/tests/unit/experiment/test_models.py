import pytest
from pydantic import ValidationError

from experiment import ExperimentConfig, LayerPair, PairClassification
from tests.helpers.graph_helpers import experiment_config_dict

pytestmark = pytest.mark.unit


def test_defaults() -> None:
    config = ExperimentConfig.model_validate(experiment_config_dict())
    assert config.n_permutations == 200
    assert config.seed == 42
    assert config.criterion.value == "legacy_directional"
    assert config.delta_r_floor == 0.20
    assert config.alpha == 0.05
    assert config.use_permutation
    assert config.tier is None


def test_pair_needs_two_layers() -> None:
    with pytest.raises(ValidationError):
        LayerPair(layer_a="x", layer_b="x", classification=PairClassification.SIMILAR)


def test_roles_must_match_slots() -> None:
    payload = experiment_config_dict(
        similar={"layer_a": "base", "layer_b": "mirror", "classification": "dissimilar"})
    with pytest.raises(ValidationError):
        ExperimentConfig.model_validate(payload)


@pytest.mark.parametrize("override", [
    {"n_permutations": 0},
    {"seed": -1},
    {"alpha": 1.5},
    {"min_abs_r": 1.2},
    {"prereg_digest": "abc"},
    {"criterion": "strict"},
    {"unexpected": True},
])
def test_rejected_fields(override) -> None:
    with pytest.raises(ValidationError):
        ExperimentConfig.model_validate(experiment_config_dict(**override))


def test_accepts_full_digest_and_tier() -> None:
    config = ExperimentConfig.model_validate(experiment_config_dict(prereg_digest="0" * 64, tier="B"))
    assert config.tier.value == "B"

import numpy as np
import pytest

import errors
from stats import CountingRule, PermutationMode, minimum_resolvable_p, permutation_test

pytestmark = pytest.mark.unit


def _non_degenerate(rng, n, high=6):
    while True:
        a, b = rng.integers(0, high, size=n), rng.integers(0, high, size=n)
        if len(set(a)) > 1 and len(set(b)) > 1:
            return a.astype(float), b.astype(float)


def test_exhaustive_small_example() -> None:
    result = permutation_test([1, 2, 3], [1, 2, 3], mode="exhaustive")
    assert result.n_permutations == 6
    assert result.count_exceeding == 2
    assert result.p_value == pytest.approx(1 / 3)
    assert result.r_obs == pytest.approx(1.0)
    assert result.mode is PermutationMode.EXHAUSTIVE


def test_strict_rule_excludes_ties() -> None:
    result = permutation_test([1, 2, 3], [1, 2, 3], mode="exhaustive", counting_rule="strict_greater")
    assert result.count_exceeding == 0
    assert result.counting_rule is CountingRule.STRICT_GREATER


def test_defaults_are_200_permutations_seed_42() -> None:
    result = permutation_test([1, 2, 3, 4, 5], [2, 1, 4, 3, 5])
    assert result.n_permutations == 200
    assert result.seed == 42
    assert result.mode is PermutationMode.SAMPLED
    assert result.counting_rule is CountingRule.GREATER_OR_EQUAL
    assert result.p_value == result.count_exceeding / 200


def test_sampled_runs_are_repeatable() -> None:
    a, b = [3, 1, 4, 1, 5, 9, 2, 6], [2, 7, 1, 8, 2, 8, 1, 8]
    assert permutation_test(a, b, 200, seed=42) == permutation_test(a, b, 200, seed=42)


def test_result_is_identical_for_any_worker_count_and_chunking() -> None:
    rng = np.random.default_rng(2024)
    for _ in range(100):
        a, b = _non_degenerate(rng, int(rng.integers(3, 15)))
        seed = int(rng.integers(0, 2 ** 62))
        single = permutation_test(a, b, 300, seed=seed, max_workers=1)
        threaded = permutation_test(a, b, 300, seed=seed, max_workers=4, chunk_size=37)
        assert single == threaded


def test_sampled_p_converges_to_exhaustive_p() -> None:
    rng = np.random.default_rng(77)
    for _ in range(50):
        a, b = _non_degenerate(rng, int(rng.integers(3, 7)))
        exact = permutation_test(a, b, mode="exhaustive").p_value
        sampled = permutation_test(a, b, 100000, seed=int(rng.integers(0, 2 ** 32))).p_value
        assert abs(sampled - exact) <= 0.02


def test_null_p_values_are_roughly_uniform() -> None:
    rng = np.random.default_rng(123)
    below = 0
    trials = 500
    for trial in range(trials):
        a, b = rng.normal(size=20), rng.normal(size=20)
        if permutation_test(a, b, 200, seed=trial).p_value < 0.05:
            below += 1
    assert 0.02 <= below / trials <= 0.09


def test_exhaustive_cap() -> None:
    with pytest.raises(errors.TooLargeForExhaustive):
        permutation_test(list(range(9)), list(range(9))[::-1], mode="exhaustive")


def test_degenerate_input() -> None:
    with pytest.raises(errors.DegenerateVector):
        permutation_test([1, 1, 1], [1, 2, 3])


@pytest.mark.parametrize("kwargs", [{"n_permutations": 0}, {"seed": -1}, {"max_workers": 0}])
def test_bad_parameters(kwargs) -> None:
    with pytest.raises(errors.BadParameter):
        permutation_test([1, 2, 3], [3, 1, 2], **kwargs)


def test_minimum_resolvable_p() -> None:
    assert minimum_resolvable_p(200) == 0.005

import numpy as np
import pytest

from prng import Pcg32Streams, splitmix64

pytestmark = pytest.mark.unit


def test_pcg32_reference_vector() -> None:
    stream = Pcg32Streams(42, 54)
    outputs = [int(stream.next_u32()[0]) for _ in range(6)]
    assert outputs == [0xa15c02b7, 0x7b47f409, 0xba1d3330, 0x83d2f293, 0xbfa4784b, 0xcbed606e]


def test_splitmix64_reference_vector() -> None:
    outputs = [int(v) for v in splitmix64(0, [0, 1, 2])]
    assert outputs == [0xe220a8397b1dcdaf, 0x6e789e6aa1b965f4, 0x06c45d188009454f]


@pytest.mark.parametrize("seed", [-1, 2 ** 64])
def test_splitmix64_rejects_out_of_range_seed(seed) -> None:
    with pytest.raises(ValueError):
        splitmix64(seed, 0)


def test_batched_streams_match_individual_streams() -> None:
    batch = Pcg32Streams.substreams(42, np.arange(6))
    draws = np.stack([batch.next_u32() for _ in range(4)], axis=1)
    for i in range(6):
        single = Pcg32Streams.single(42, i)
        assert [int(single.next_u32()[0]) for _ in range(4)] == [int(v) for v in draws[i]]


def test_bounded_stays_in_range() -> None:
    streams = Pcg32Streams.substreams(7, np.arange(1000))
    values = streams.bounded(5)
    assert values.min() >= 0 and values.max() < 5
    assert set(int(v) for v in values) == {0, 1, 2, 3, 4}


def test_bernoulli_extremes() -> None:
    streams = Pcg32Streams.substreams(3, np.arange(500))
    assert not streams.bernoulli(0.0).any()
    assert streams.bernoulli(1.0).all()


def test_shuffled_indices_are_permutations() -> None:
    perms = Pcg32Streams.substreams(42, np.arange(50)).shuffled_indices(9)
    assert perms.shape == (50, 9)
    for row in perms:
        assert sorted(row.tolist()) == list(range(9))


def test_shuffles_do_not_depend_on_batch_split() -> None:
    whole = Pcg32Streams.substreams(11, np.arange(10)).shuffled_indices(7)
    first = Pcg32Streams.substreams(11, np.arange(4)).shuffled_indices(7)
    second = Pcg32Streams.substreams(11, np.arange(4, 10)).shuffled_indices(7)
    np.testing.assert_array_equal(whole, np.vstack([first, second]))


def test_different_seeds_give_different_streams() -> None:
    a = Pcg32Streams.single(1).next_u32()
    b = Pcg32Streams.single(2).next_u32()
    assert int(a[0]) != int(b[0])

from redsize.rng import SplitMix64, derive_seeds


def test_reference_vector():
    gen = SplitMix64(1234567)
    assert [gen.next() for _ in range(3)] == [6457827717110365317, 3203168211198807973, 9817491932198370423]


def test_below_range_and_determinism():
    a, b = SplitMix64(5), SplitMix64(5)
    draws = [a.below(7) for _ in range(1000)]
    assert draws == [b.below(7) for _ in range(1000)]
    assert set(draws) == set(range(7))


def test_derive_seeds_prefix_stable():
    assert derive_seeds(9, 3) == derive_seeds(9, 5)[:3]

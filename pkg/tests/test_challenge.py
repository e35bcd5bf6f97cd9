import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from storaudit import SeededBeacon, bn254, draw_challenge, expand_challenge
from storaudit.challenge import (
    BEACON_BYTES,
    LeakDemoBeacon,
    XofStream,
    challenge_from_bytes,
    permuted_indices,
)
from storaudit.errors import BeaconUnavailable

suite = bn254()


class FixedBeacon:
    def __init__(self, word):
        self.word = word

    def next(self, round):
        return self.word


class TestBeacon:
    def test_seeded_beacon_deterministic(self):
        a = draw_challenge(suite, SeededBeacon(0), 0)
        b = draw_challenge(suite, SeededBeacon(0), 0)
        assert a == b

    def test_rounds_differ(self):
        a = draw_challenge(suite, SeededBeacon(0), 0)
        b = draw_challenge(suite, SeededBeacon(0), 1)
        assert (a.c1_seed, a.c2_seed, a.r_seed) != (b.c1_seed, b.c2_seed, b.r_seed)

    def test_all_zero_word_is_valid(self):
        ch = draw_challenge(suite, FixedBeacon(bytes(BEACON_BYTES)), 0)
        assert ch.r == suite.hash_to_scalar(b"chal-r", bytes(16))

    def test_wrong_width_word_rejected(self):
        with pytest.raises(BeaconUnavailable):
            draw_challenge(suite, FixedBeacon(bytes(47)), 0)

    def test_beacon_exception_wrapped(self):
        class Broken:
            def next(self, round):
                raise RuntimeError("offline")

        with pytest.raises(BeaconUnavailable):
            draw_challenge(suite, Broken(), 0)

    def test_negative_round_rejected(self):
        with pytest.raises(ValueError):
            draw_challenge(suite, SeededBeacon(0), -1)

    def test_round_trip_bytes(self):
        ch = draw_challenge(suite, SeededBeacon(3), 9)
        again = challenge_from_bytes(suite, ch.to_bytes(), 9)
        assert again == ch
        assert len(ch.to_bytes()) == 48

    def test_leak_demo_beacon_groups(self):
        b = LeakDemoBeacon(5, group_size=3)
        words = [b.next(i) for i in range(6)]
        assert all(w[:32] == words[0][:32] for w in words[:3])
        assert all(w[:32] == words[3][:32] for w in words[3:])
        assert words[0][:32] != words[3][:32]
        assert len({w[32:] for w in words}) == 6


class TestExpansion:
    def test_single_chunk(self):
        ch = draw_challenge(suite, SeededBeacon(1), 0)
        cs = expand_challenge(suite, ch, d=1, k=1)
        assert cs.indices == (0,)
        assert len(cs.coefficients) == 1

    def test_full_coverage_is_permutation(self):
        ch = draw_challenge(suite, SeededBeacon(2), 0)
        cs = expand_challenge(suite, ch, d=10, k=10)
        assert sorted(cs.indices) == list(range(10))

    def test_k_capped_at_d(self):
        ch = draw_challenge(suite, SeededBeacon(2), 0)
        cs = expand_challenge(suite, ch, d=5, k=300)
        assert cs.k == 5
        assert sorted(cs.indices) == list(range(5))

    def test_deterministic_and_matches_independent_shuffle(self):
        ch = draw_challenge(suite, SeededBeacon(4), 0)
        a = expand_challenge(suite, ch, d=1000, k=300)
        b = expand_challenge(suite, ch, d=1000, k=300)
        assert a == b

        # independent full-array Fisher-Yates over the same keyed stream
        stream = XofStream(b"storaudit-prp", ch.c1_seed)
        arr = list(range(1000))
        for j in range(300):
            l = j + stream.randbelow(1000 - j)
            arr[j], arr[l] = arr[l], arr[j]
        assert tuple(arr[:300]) == a.indices

    def test_stability_depends_only_on_seeds(self):
        ch = draw_challenge(suite, SeededBeacon(4), 0)
        other = challenge_from_bytes(suite, ch.to_bytes(), round=99)
        assert expand_challenge(suite, ch, 50, 10) == expand_challenge(suite, other, 50, 10)

    @given(st.integers(min_value=0, max_value=2**64), st.integers(min_value=1, max_value=200))
    @settings(max_examples=40)
    def test_distinctness_property(self, seed, d):
        k = min(d, 37)
        idx = permuted_indices(seed.to_bytes(16, "big"), d, k)
        assert len(set(idx)) == len(idx) == k
        assert all(0 <= i < d for i in idx)

    def test_uniformity_smoke(self):
        # 10,000 seeds, d=10, k=1: each index within 5 sigma of 1/10
        counts = [0] * 10
        for seed in range(10_000):
            idx = permuted_indices(seed.to_bytes(16, "big"), 10, 1)
            counts[idx[0]] += 1
        sigma = (10_000 * 0.1 * 0.9) ** 0.5
        for c in counts:
            assert abs(c - 1000) <= 5 * sigma

    def test_coefficients_keyed_by_c2(self):
        ch = draw_challenge(suite, SeededBeacon(6), 0)
        cs = expand_challenge(suite, ch, 20, 5)
        want = [
            suite.hash_to_scalar(b"chal-c", ch.c2_seed + j.to_bytes(8, "big"))
            for j in range(5)
        ]
        assert list(cs.coefficients) == want

    def test_rejects_degenerate_dims(self):
        ch = draw_challenge(suite, SeededBeacon(6), 0)
        with pytest.raises(ValueError):
            expand_challenge(suite, ch, 0, 1)
        with pytest.raises(ValueError):
            expand_challenge(suite, ch, 1, 0)


class TestXofStream:
    def test_deterministic(self):
        a = XofStream(b"d", b"seed")
        b = XofStream(b"d", b"seed")
        assert a.read(100) == b.read(100)

    def test_randbelow_range(self):
        s = XofStream(b"d", b"seed")
        for bound in (1, 2, 7, 255, 256, 1000, 2**40):
            for _ in range(20):
                assert 0 <= s.randbelow(bound) < bound

    def test_randbelow_unbiased_smoke(self):
        s = XofStream(b"d", b"x")
        counts = [0] * 3
        for _ in range(3000):
            counts[s.randbelow(3)] += 1
        assert all(abs(c - 1000) < 150 for c in counts)

import random

import pytest

from storaudit import (
    SeededBeacon,
    bn254,
    draw_challenge,
    encode_file,
    expand_challenge,
    generate_tags,
    keygen,
)
from storaudit.encoding import EncodingParams


@pytest.fixture(scope="session")
def suite():
    return bn254()


@pytest.fixture()
def rng():
    return random.Random("storaudit-tests")


@pytest.fixture(scope="session")
def audit_setup():
    """Factory for a complete (enc, keys, tags) instance; cached per shape."""
    cache = {}

    def make(s: int, size: int, seed: int = 0):
        key = (s, size, seed)
        if key not in cache:
            suite = bn254()
            r = random.Random(f"setup-{s}-{size}-{seed}")
            data = r.randbytes(size)
            name = r.randrange(suite.order)
            enc = encode_file(data, EncodingParams(s=s), name)
            sk, pk = keygen(suite, s, r)
            tags = generate_tags(sk, pk, enc)
            cache[key] = (data, enc, sk, pk, tags)
        return cache[key]

    return make


@pytest.fixture()
def challenge_for(suite):
    def make(d: int, k: int, round: int = 0, seed: int = 1):
        ch = draw_challenge(suite, SeededBeacon(seed), round)
        return ch, expand_challenge(suite, ch, d, k)

    return make

import random

import pytest

from storaudit import bn254, encode_file, generate_tags, keygen, verify_tags
from storaudit.algebra import G1Point
from storaudit.encoding import EncodingParams, FileEncoding
from storaudit.errors import InvalidEncoding, ParamMismatch, WrongLength
from storaudit.keys import (
    index_hash_message,
    public_key_from_bytes,
    public_key_to_bytes,
    secret_key_from_bytes,
    secret_key_to_bytes,
    tags_from_bytes,
    tags_to_bytes,
)

suite = bn254()
ORDER = suite.order


def fresh_setup(s, size, seed=0):
    r = random.Random(f"keys-{s}-{size}-{seed}")
    data = r.randbytes(size)
    name = r.randrange(ORDER)
    enc = encode_file(data, EncodingParams(s=s), name)
    sk, pk = keygen(suite, s, r)
    return data, enc, sk, pk


def with_chunks(enc, chunks):
    return FileEncoding(
        name=enc.name,
        n=enc.n,
        d=enc.d,
        s=enc.s,
        block_bytes=enc.block_bytes,
        chunks=tuple(tuple(c) for c in chunks),
        original_length=enc.original_length,
    )


class TestKeygen:
    def test_degenerate_s1(self):
        _, pk = keygen(suite, 1, random.Random(1))[0], keygen(suite, 1, random.Random(1))[1]
        assert len(pk.alpha_powers) == 1
        assert pk.alpha_powers[0] == suite.g1

    def test_power_count_and_base(self):
        sk, pk = keygen(suite, 8, random.Random(2))
        assert len(pk.alpha_powers) == 8
        assert pk.alpha_powers[0] == suite.g1
        assert pk.alpha_powers[1] == suite.g1.mul(sk.alpha)

    def test_chain_check_bilinearity_oracle(self):
        # e(powers[j+1], epsilon) == e(powers[j], delta) without alpha
        _, pk = keygen(suite, 8, random.Random(3))
        for j in range(7):
            lhs = suite.pairing(pk.alpha_powers[j + 1], pk.epsilon)
            rhs = suite.pairing(pk.alpha_powers[j], pk.delta)
            assert lhs == rhs

    def test_independent_keys_differ(self):
        _, pk1 = keygen(suite, 2, random.Random(4))
        _, pk2 = keygen(suite, 2, random.Random(5))
        assert pk1.epsilon != pk2.epsilon

    def test_pairing_base_precomputed(self):
        _, pk = keygen(suite, 2, random.Random(6))
        assert pk.pairing_base == suite.pairing(suite.g1, pk.epsilon)

    def test_s_must_be_positive(self):
        with pytest.raises(ValueError):
            keygen(suite, 0, random.Random(7))


class TestTags:
    def test_degenerate_s1_formula(self):
        data, enc, sk, pk = fresh_setup(1, 31)
        tags = generate_tags(sk, pk, enc)
        m = enc.chunks[0][0]
        h = suite.hash_to_g1(b"tag-index", index_hash_message(enc.name, 0))
        want = suite.g1.mul(m).add(h).mul(sk.x)
        assert tags.sigmas[0] == want

    @pytest.mark.parametrize("s", [1, 2, 17, 50])
    def test_honest_tags_verify(self, s):
        _, enc, sk, pk = fresh_setup(s, 97 * s)
        tags = generate_tags(sk, pk, enc)
        assert verify_tags(pk, enc, tags)
        assert verify_tags(pk, enc, tags, exhaustive=True)

    def test_deterministic(self):
        _, enc, sk, pk = fresh_setup(3, 500)
        assert generate_tags(sk, pk, enc) == generate_tags(sk, pk, enc)

    def test_flipped_block_fails(self):
        _, enc, sk, pk = fresh_setup(2, 400)
        tags = generate_tags(sk, pk, enc)
        chunks = [list(c) for c in enc.chunks]
        chunks[1][0] ^= 1
        bad = with_chunks(enc, chunks)
        assert not verify_tags(pk, bad, tags)
        assert not verify_tags(pk, bad, tags, exhaustive=True)

    def test_swapped_tags_fail_index_binding(self):
        _, enc, sk, pk = fresh_setup(2, 400)
        tags = generate_tags(sk, pk, enc)
        assert enc.chunks[0] != enc.chunks[1]
        swapped = type(tags)(
            name=tags.name,
            sigmas=(tags.sigmas[1], tags.sigmas[0]) + tags.sigmas[2:],
        )
        assert not verify_tags(pk, enc, swapped)

    def test_cross_key_tags_fail(self):
        _, enc, sk_a, pk_a = fresh_setup(2, 300, seed=1)
        _, _, _, pk_b = fresh_setup(2, 300, seed=2)
        tags = generate_tags(sk_a, pk_a, enc)
        assert not verify_tags(pk_b, enc, tags)

    def test_width_mismatch_rejected(self):
        _, enc, sk, pk = fresh_setup(2, 300)
        _, pk3 = keygen(suite, 3, random.Random(9))
        with pytest.raises(ParamMismatch):
            generate_tags(sk, pk3, enc)
        tags = generate_tags(sk, pk, enc)
        with pytest.raises(ParamMismatch):
            verify_tags(pk3, enc, tags)

    def test_tag_count_mismatch_rejected(self):
        _, enc, sk, pk = fresh_setup(2, 300)
        tags = generate_tags(sk, pk, enc)
        short = type(tags)(name=tags.name, sigmas=tags.sigmas[:-1])
        with pytest.raises(ParamMismatch):
            verify_tags(pk, enc, short)

    def test_name_mismatch_rejected(self):
        _, enc, sk, pk = fresh_setup(2, 300)
        tags = generate_tags(sk, pk, enc)
        renamed = type(tags)(name=(tags.name + 1) % ORDER, sigmas=tags.sigmas)
        with pytest.raises(ParamMismatch):
            verify_tags(pk, enc, renamed)


class TestPersistence:
    def test_public_key_round_trip(self):
        _, _, _, pk = fresh_setup(5, 200)
        buf = public_key_to_bytes(pk)
        assert len(buf) == 5 + 128 + 5 * 32 + 192
        back = public_key_from_bytes(buf)
        assert back.s == pk.s
        assert back.epsilon == pk.epsilon
        assert back.delta == pk.delta
        assert back.alpha_powers == pk.alpha_powers
        assert back.pairing_base == pk.pairing_base

    def test_public_key_wrong_length(self):
        _, _, _, pk = fresh_setup(2, 100)
        buf = public_key_to_bytes(pk)
        with pytest.raises(WrongLength):
            public_key_from_bytes(buf[:-1])

    def test_public_key_inconsistent_base_rejected(self):
        _, _, _, pk = fresh_setup(2, 100)
        buf = bytearray(public_key_to_bytes(pk))
        # replace pairing_base with a different valid GT encoding
        other = suite.gt_to_bytes(suite.pairing(suite.g1.mul(2), pk.epsilon))
        buf[-192:] = other
        with pytest.raises(InvalidEncoding):
            public_key_from_bytes(bytes(buf))

    def test_secret_key_round_trip(self):
        _, _, sk, _ = fresh_setup(2, 100)
        s2, back = secret_key_from_bytes(secret_key_to_bytes(suite, sk))
        assert s2 is suite and back == sk

    def test_tags_round_trip(self):
        _, enc, sk, pk = fresh_setup(3, 700)
        tags = generate_tags(sk, pk, enc)
        back = tags_from_bytes(tags_to_bytes(suite, tags))
        assert back.name == tags.name
        assert back.sigmas == tags.sigmas

    def test_tags_wrong_length(self):
        _, enc, sk, pk = fresh_setup(3, 700)
        buf = tags_to_bytes(suite, generate_tags(sk, pk, enc))
        with pytest.raises(WrongLength):
            tags_from_bytes(buf[:-1])


class TestHomomorphism:
    def test_tag_products_verify_combined_data(self):
        # prod sigma_i^{c_i} is the tag of the c-weighted data under the
        # combined index factor prod H(name||i)^{c_i}
        _, enc, sk, pk = fresh_setup(2, 200)
        tags = generate_tags(sk, pk, enc)
        c = [3, 5]
        agg = G1Point.msm(list(tags.sigmas[:2]), c)
        combined = [
            sum(ci * enc.chunks[i][j] for i, ci in enumerate(c)) % ORDER
            for j in range(2)
        ]
        hs = [
            suite.hash_to_g1(b"tag-index", index_hash_message(enc.name, i))
            for i in range(2)
        ]
        base = G1Point.msm(list(pk.alpha_powers), combined).add(G1Point.msm(hs, c))
        assert suite.pairing(agg, suite.g2) == suite.pairing(base, pk.epsilon)

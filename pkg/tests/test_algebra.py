"""Group arithmetic, encodings, and hash-oracle tests.

The hash-to-curve path is cross-checked against an independent pure-
Python implementation of expand_message_xmd and the Shallue-van de
Woestijne map, so the compiled backend and the reference construction
must agree exactly.
"""

import hashlib
import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from storaudit import bn254
from storaudit.algebra import G1Point, G2Point, GTElement
from storaudit.errors import InvalidEncoding, WrongLength
from storaudit.keys import index_hash_message
from storaudit import _backend

suite = bn254()
ORDER = suite.order
Q = suite.field_modulus

# pinned self-generated golden vectors (stable wire formats)
GOLDEN_INDEX_HASH = "06d5c5db4b80bf88b13ab57a7668c3ae572669fb1990bc876814c941fa30e5e7"
GOLDEN_ZETA_ONE = 2443068861051070484418565307126761510607483112486011653241690139583945701299
GOLDEN_G2_GEN = (
    "198e9393920d483a7260bfb731fb5d25f1aa493335a9e71297e485b7aef312c2"
    "1800deef121f1e76426a00665e5c4479674322d4f75edadd46debd5cd992f6ed"
)


def rand_scalar(r):
    return r.randrange(ORDER)


class TestSuiteShape:
    def test_reference_sizes(self):
        assert suite.enc_g1_bytes == 32
        assert suite.enc_g2_bytes == 64
        assert suite.enc_gt_bytes == 192
        assert suite.enc_scalar_bytes == 32
        assert suite.security_lambda == 128

    def test_order_is_254_bit_prime_field(self):
        assert ORDER.bit_length() == 254
        assert pow(2, ORDER, ORDER) == 2   # Fermat witness

    def test_pairing_nondegenerate(self):
        e = suite.pairing(suite.g1, suite.g2)
        assert not e.is_one()
        assert e.pow(ORDER).is_one()


class TestBilinearity:
    def test_bilinearity_100_random_pairs(self):
        r = random.Random(1)
        base = suite.pairing(suite.g1, suite.g2)
        for _ in range(100):
            a, b = rand_scalar(r), rand_scalar(r)
            lhs = suite.pairing(suite.g1.mul(a), suite.g2.mul(b))
            assert lhs == base.pow(a * b % ORDER)

    def test_pairing_identity_slots(self):
        assert suite.pairing(G1Point.identity(), suite.g2).is_one()
        assert suite.pairing(suite.g1, G2Point.identity()).is_one()

    @pytest.mark.parametrize("seed", range(5))
    def test_exponent_laws_each_group(self, seed):
        r = random.Random(seed)
        a, b = rand_scalar(r), rand_scalar(r)
        ab = a * b % ORDER
        assert suite.g1.mul(a).mul(b) == suite.g1.mul(ab)
        assert suite.g2.mul(a).mul(b) == suite.g2.mul(ab)
        gt = suite.pairing(suite.g1, suite.g2)
        assert gt.pow(a).pow(b) == gt.pow(ab)


class TestHashOracles:
    def test_hash_to_g1_deterministic(self):
        a = suite.hash_to_g1(b"tag", b"message")
        b = suite.hash_to_g1(b"tag", b"message")
        assert a == b

    def test_hash_to_g1_message_sensitivity(self):
        assert suite.hash_to_g1(b"tag", b"m1") != suite.hash_to_g1(b"tag", b"m2")

    def test_hash_to_g1_domain_separation(self):
        assert suite.hash_to_g1(b"tag-a", b"m") != suite.hash_to_g1(b"tag-b", b"m")

    def test_index_hash_golden(self):
        pt = suite.hash_to_g1(b"tag-index", index_hash_message(1, 0))
        assert suite.g1_to_bytes(pt).hex() == GOLDEN_INDEX_HASH

    def test_hash_batch_matches_single(self):
        msgs = [bytes([i]) * 5 for i in range(7)]
        batch = suite.hash_to_g1_many(b"tag", msgs)
        assert all(p == suite.hash_to_g1(b"tag", m) for p, m in zip(batch, msgs))

    def test_gt_to_scalar_deterministic(self):
        x = suite.pairing(suite.g1.mul(5), suite.g2)
        assert suite.hash_gt_to_scalar(x) == suite.hash_gt_to_scalar(x)

    def test_gt_to_scalar_distinct(self):
        x = suite.pairing(suite.g1.mul(5), suite.g2)
        y = suite.pairing(suite.g1.mul(6), suite.g2)
        assert suite.hash_gt_to_scalar(x) != suite.hash_gt_to_scalar(y)

    def test_gt_identity_scalar_golden(self):
        assert suite.hash_gt_to_scalar(suite.gt_one) == GOLDEN_ZETA_ONE

    def test_hash_to_scalar_in_range(self):
        for i in range(50):
            v = suite.hash_to_scalar(b"t", bytes([i]))
            assert 0 <= v < ORDER


# -- independent oracle for expand_message_xmd and the curve map -----------

def expand_message_xmd_py(msg: bytes, dst: bytes, n: int) -> bytes:
    dst_prime = dst + len(dst).to_bytes(1, "big")
    ell = -(-n // 32)
    b0 = hashlib.sha256(b"\0" * 64 + msg + n.to_bytes(2, "big") + b"\0" + dst_prime).digest()
    bs = [hashlib.sha256(b0 + b"\x01" + dst_prime).digest()]
    for i in range(2, ell + 1):
        x = bytes(u ^ v for u, v in zip(b0, bs[-1]))
        bs.append(hashlib.sha256(x + i.to_bytes(1, "big") + dst_prime).digest())
    return b"".join(bs)[:n]


def _sqrt_q(a):
    y = pow(a, (Q + 1) // 4, Q)
    return y if y * y % Q == a else None


def svdw_map_py(u: int):
    g = lambda x: (x * x * x + 3) % Q
    z = 1
    c1 = g(z)
    c2 = (-z * pow(2, -1, Q)) % Q
    c3 = _sqrt_q((-g(z) * 3 * z * z) % Q)
    if c3 % 2 == 1:
        c3 = Q - c3
    c4 = (-4 * g(z) * pow(3 * z * z, -1, Q)) % Q
    tv1 = u * u % Q * c1 % Q
    tv2 = (1 + tv1) % Q
    tv1 = (1 - tv1) % Q
    tv3 = tv1 * tv2 % Q
    tv3 = pow(tv3, -1, Q) if tv3 else 0
    tv4 = u * tv1 % Q * tv3 % Q * c3 % Q
    x1, x2 = (c2 - tv4) % Q, (c2 + tv4) % Q
    x3 = (pow(tv2 * tv2 % Q * tv3 % Q, 2, Q) * c4 + z) % Q
    for x in (x1, x2, x3):
        y = _sqrt_q(g(x))
        if y is not None:
            if (u % 2) != (y % 2):
                y = Q - y
            return x, y
    raise AssertionError("unreachable: one candidate is always square")


def ec_add_py(p, q):
    if p is None:
        return q
    if q is None:
        return p
    (x1, y1), (x2, y2) = p, q
    if x1 == x2 and (y1 + y2) % Q == 0:
        return None
    if p == q:
        lam = 3 * x1 * x1 * pow(2 * y1, -1, Q) % Q
    else:
        lam = (y2 - y1) * pow(x2 - x1, -1, Q) % Q
    x3 = (lam * lam - x1 - x2) % Q
    return x3, (lam * (x1 - x3) - y1) % Q


def hash_to_g1_py(dst: bytes, msg: bytes):
    uniform = expand_message_xmd_py(msg, dst, 96)
    u0 = int.from_bytes(uniform[:48], "big") % Q
    u1 = int.from_bytes(uniform[48:], "big") % Q
    return ec_add_py(svdw_map_py(u0), svdw_map_py(u1))


class TestHashToCurveOracle:
    def test_expand_message_matches_reference(self):
        for msg, dst, n in [
            (b"", b"QUUX-V01-CS02-with-expander-SHA256-128", 32),
            (b"abc", b"QUUX-V01-CS02-with-expander-SHA256-128", 32),
            (b"hello world", b"MYDST", 96),
            (b"x" * 257, b"tag", 64),
        ]:
            assert _backend.expand_message(msg, dst, n) == expand_message_xmd_py(msg, dst, n)

    def test_map_matches_python_oracle(self):
        r = random.Random(7)
        dst = b"STORAUDIT-V01-BN254G1_XMD:SHA-256_SVDW_RO_" + b"tag-index"
        for _ in range(25):
            msg = r.randbytes(r.randrange(1, 64))
            got = G1Point.hash_to_curve(dst, msg)
            want = hash_to_g1_py(dst, msg)
            assert got.to_affine() == want

    def test_points_on_curve_and_in_group(self):
        for i in range(10):
            p = suite.hash_to_g1(b"t", bytes([i]))
            x, y = p.to_affine()
            assert (y * y - x * x * x - 3) % Q == 0
            assert p.mul(ORDER).is_identity()


class TestScalarEncoding:
    def test_round_trip(self):
        r = random.Random(3)
        for _ in range(20):
            x = rand_scalar(r)
            assert suite.scalar_from_bytes(suite.scalar_to_bytes(x)) == x

    def test_wrong_length(self):
        with pytest.raises(WrongLength):
            suite.scalar_from_bytes(b"\0" * 31)

    def test_non_canonical_rejected(self):
        with pytest.raises(InvalidEncoding):
            suite.scalar_from_bytes(ORDER.to_bytes(32, "big"))

    def test_out_of_range_write_rejected(self):
        with pytest.raises(InvalidEncoding):
            suite.scalar_to_bytes(ORDER)

    @given(st.integers(min_value=0, max_value=ORDER - 1))
    @settings(max_examples=50)
    def test_round_trip_property(self, x):
        assert suite.scalar_from_bytes(suite.scalar_to_bytes(x)) == x


class TestPointEncodings:
    def test_g1_is_32_bytes(self):
        assert len(suite.g1_to_bytes(suite.g1)) == 32

    def test_g1_round_trip_random(self):
        r = random.Random(4)
        for _ in range(20):
            p = suite.g1.mul(rand_scalar(r))
            buf = suite.g1_to_bytes(p)
            assert suite.g1_from_bytes(buf) == p
            assert suite.g1_to_bytes(suite.g1_from_bytes(buf)) == buf

    def test_g1_identity_round_trip(self):
        buf = suite.g1_to_bytes(G1Point.identity())
        assert buf == bytes([0x80]) + bytes(31)
        assert suite.g1_from_bytes(buf).is_identity()

    def test_g1_wrong_length(self):
        with pytest.raises(WrongLength):
            suite.g1_from_bytes(b"\0" * 31)

    def test_g1_off_curve_rejected(self):
        with pytest.raises(InvalidEncoding):
            suite.g1_from_bytes((4).to_bytes(32, "big"))

    def test_g1_malformed_infinity_rejected(self):
        with pytest.raises(InvalidEncoding):
            suite.g1_from_bytes(bytes([0x80]) + bytes(30) + b"\x01")
        with pytest.raises(InvalidEncoding):
            suite.g1_from_bytes(bytes([0xC0]) + bytes(31))

    def test_g1_non_canonical_x_rejected(self):
        x = Q  # == field modulus, top bits still clear
        with pytest.raises(InvalidEncoding):
            suite.g1_from_bytes(x.to_bytes(32, "big"))

    def test_g2_round_trip_and_golden(self):
        assert suite.g2_to_bytes(suite.g2).hex() == GOLDEN_G2_GEN
        r = random.Random(5)
        for _ in range(10):
            p = suite.g2.mul(rand_scalar(r))
            buf = suite.g2_to_bytes(p)
            assert len(buf) == 64
            assert suite.g2_from_bytes(buf) == p
            assert suite.g2_to_bytes(suite.g2_from_bytes(buf)) == buf

    def test_g2_identity_round_trip(self):
        buf = suite.g2_to_bytes(G2Point.identity())
        assert suite.g2_from_bytes(buf).is_identity()

    def test_gt_round_trip(self):
        r = random.Random(6)
        for _ in range(8):
            x = suite.pairing(suite.g1.mul(rand_scalar(r)), suite.g2)
            buf = suite.gt_to_bytes(x)
            assert len(buf) == 192
            assert suite.gt_from_bytes(buf) == x
            assert suite.gt_to_bytes(suite.gt_from_bytes(buf)) == buf

    def test_gt_identity_round_trip(self):
        buf = suite.gt_to_bytes(suite.gt_one)
        assert buf == bytes(192)
        assert suite.gt_from_bytes(buf).is_one()

    def test_gt_wrong_length(self):
        with pytest.raises(WrongLength):
            suite.gt_from_bytes(bytes(191))

    def test_gt_reserved_flag_rejected(self):
        buf = bytearray(suite.gt_to_bytes(suite.pairing(suite.g1, suite.g2)))
        buf[0] |= 0x40
        with pytest.raises(InvalidEncoding):
            suite.gt_from_bytes(bytes(buf))

    def test_gt_non_subgroup_rejected(self):
        # c1 = 0 with the "larger" flag decodes to -1: unitary but of
        # order 2, which the prime-order subgroup check must reject.
        buf = bytearray(192)
        buf[0] |= 0x80
        with pytest.raises(InvalidEncoding):
            suite.gt_from_bytes(bytes(buf))

    def test_gt_garbage_rejected(self):
        r = random.Random(8)
        rejected = 0
        for _ in range(10):
            buf = bytes([r.randrange(256) for _ in range(192)])
            try:
                suite.gt_from_bytes(buf)
            except (InvalidEncoding, WrongLength):
                rejected += 1
        assert rejected == 10

    def test_cross_type_eq_is_false(self):
        assert not (suite.g1 == suite.g2)
        assert not (suite.g2 == suite.gt_one)
        assert not (suite.gt_one == 17)

"""Key generation and per-chunk homomorphic authenticators (tags).

The owner's secret is (alpha, x); the public key carries epsilon = g2^x,
delta = g2^(alpha*x), the powers g1^(alpha^j) for j in [0, s), and the
precomputed pairing e(g1, epsilon). A chunk's tag is

    sigma_i = (g1^(M_i(alpha)) * H(name || i))^x

which the storage provider validates against public data before
acknowledging the contract.
"""

from __future__ import annotations

import hashlib
import random
from dataclasses import dataclass
from functools import lru_cache

from . import _backend
from .algebra import BilinearSuite, G1Point, G2Point, GTElement, suite_by_id
from .challenge import XofStream
from .encoding import FileEncoding, chunk_polynomial_eval
from .errors import InvalidEncoding, ParamMismatch, WrongLength

TAG_INDEX_DOMAIN = b"tag-index"


@dataclass(frozen=True)
class SecretKey:
    alpha: int
    x: int


@dataclass(frozen=True, eq=False)
class PublicKey:
    suite: BilinearSuite
    s: int
    epsilon: G2Point              # g2^x
    delta: G2Point                # g2^(alpha*x)
    alpha_powers: tuple[G1Point, ...]
    pairing_base: GTElement       # e(g1, epsilon)

    @property
    def p(self) -> int:
        return self.suite.order

    @property
    def g2(self) -> G2Point:
        return self.suite.g2


@dataclass(frozen=True)
class TagSet:
    name: int
    sigmas: tuple[G1Point, ...]


def keygen(suite: BilinearSuite, s: int, rng: random.Random) -> tuple[SecretKey, PublicKey]:
    """Sample (alpha, x) and derive the public parameters for chunk width s."""
    if s < 1:
        raise ValueError("s must be >= 1")
    order = suite.order
    alpha = rng.randrange(1, order)
    x = rng.randrange(1, order)
    epsilon = suite.g2.mul(x)
    delta = suite.g2.mul(alpha * x % order)
    exps, a = [], 1
    for _ in range(s):
        exps.append(a)
        a = a * alpha % order
    alpha_powers = tuple(G1Point.fixed_base_mul_batch(suite.g1, exps))
    return (
        SecretKey(alpha=alpha, x=x),
        PublicKey(
            suite=suite,
            s=s,
            epsilon=epsilon,
            delta=delta,
            alpha_powers=alpha_powers,
            pairing_base=suite.pairing(suite.g1, epsilon),
        ),
    )


def index_hash_message(name: int, i: int) -> bytes:
    """Injective encoding of (name, chunk index) fed to the G1 oracle."""
    return name.to_bytes(32, "big") + i.to_bytes(8, "big")


@lru_cache(maxsize=2)
def _full_index_hash_vector(suite: BilinearSuite, name: int, d: int) -> tuple[G1Point, ...]:
    msgs = [index_hash_message(name, i) for i in range(d)]
    return tuple(suite.hash_to_g1_many(TAG_INDEX_DOMAIN, msgs))


def index_hashes(
    suite: BilinearSuite, name: int, indices, d: int | None = None
) -> list[G1Point]:
    """H(name || i) for each index; memoizes full vectors for reuse."""
    if d is not None:
        full = _full_index_hash_vector(suite, name, d)
        return [full[i] for i in indices]
    msgs = [index_hash_message(name, i) for i in indices]
    return suite.hash_to_g1_many(TAG_INDEX_DOMAIN, msgs)


def generate_tags(sk: SecretKey, pk: PublicKey, enc: FileEncoding) -> TagSet:
    """Owner-side tag generation, using alpha directly on the scalars."""
    if enc.s != pk.s:
        raise ParamMismatch(f"encoding width {enc.s} != key width {pk.s}")
    order = pk.suite.order
    exps = [
        chunk_polynomial_eval(chunk, sk.alpha, order) * sk.x % order
        for chunk in enc.chunks
    ]
    committed = G1Point.fixed_base_mul_batch(pk.suite.g1, exps)
    hashes = index_hashes(pk.suite, enc.name, range(enc.d), d=enc.d)
    blinded = G1Point.mul_each(hashes, sk.x)
    return TagSet(name=enc.name, sigmas=tuple(G1Point.add_batch(committed, blinded)))


def _batch_weights(pk: PublicKey, enc: FileEncoding, tags: TagSet) -> list[int]:
    sigma_digest = hashlib.sha256()
    for sig in tags.sigmas:
        sigma_digest.update(pk.suite.g1_to_bytes(sig))
    seed = hashlib.sha256(
        b"storaudit-tagcheck"
        + bytes([pk.suite.suite_id])
        + tags.name.to_bytes(32, "big")
        + enc.d.to_bytes(8, "big")
        + sigma_digest.digest()
    ).digest()
    stream = XofStream(b"storaudit-tagcheck", seed)
    return [int.from_bytes(stream.read(16), "big") for _ in range(enc.d)]


def verify_tags(
    pk: PublicKey, enc: FileEncoding, tags: TagSet, exhaustive: bool = False
) -> bool:
    """Provider-side acceptance gate: every tag satisfies its pairing equation.

    The default mode checks all chunks at once through a deterministic
    random linear combination (any single bad tag escapes detection with
    probability ~2^-128); `exhaustive=True` runs the literal per-chunk
    pairing check instead.
    """
    if enc.s != pk.s:
        raise ParamMismatch(f"encoding width {enc.s} != key width {pk.s}")
    if len(tags.sigmas) != enc.d:
        raise ParamMismatch(f"{len(tags.sigmas)} tags for {enc.d} chunks")
    if tags.name != enc.name:
        raise ParamMismatch("tag set names a different file")
    suite = pk.suite
    order = suite.order
    hashes = index_hashes(suite, enc.name, range(enc.d), d=enc.d)
    if exhaustive:
        for chunk, sig, h in zip(enc.chunks, tags.sigmas, hashes):
            base = G1Point.msm(list(pk.alpha_powers), list(chunk)).add(h)
            if suite.pairing(sig, suite.g2) != suite.pairing(base, pk.epsilon):
                return False
        return True
    rho = _batch_weights(pk, enc, tags)
    lhs = suite.pairing(G1Point.msm(list(tags.sigmas), rho), suite.g2)
    combined = [0] * enc.s
    for w, chunk in zip(rho, enc.chunks):
        for j, m in enumerate(chunk):
            if m:
                combined[j] = (combined[j] + w * m) % order
    base = G1Point.msm(list(pk.alpha_powers), combined).add(G1Point.msm(hashes, rho))
    return lhs == suite.pairing(base, pk.epsilon)


# -- persistence ----------------------------------------------------------

def public_key_to_bytes(pk: PublicKey) -> bytes:
    suite = pk.suite
    out = bytearray([suite.suite_id])
    out += pk.s.to_bytes(4, "big")
    out += suite.g2_to_bytes(pk.epsilon)
    out += suite.g2_to_bytes(pk.delta)
    for pt in pk.alpha_powers:
        out += suite.g1_to_bytes(pt)
    out += suite.gt_to_bytes(pk.pairing_base)
    return bytes(out)


def public_key_from_bytes(buf: bytes) -> PublicKey:
    if len(buf) < 5:
        raise WrongLength("public key file too short")
    suite = suite_by_id(buf[0])
    s = int.from_bytes(buf[1:5], "big")
    expected = 5 + 2 * suite.enc_g2_bytes + s * suite.enc_g1_bytes + suite.enc_gt_bytes
    if len(buf) != expected:
        raise WrongLength(f"public key file must be {expected} bytes for s={s}")
    off = 5
    epsilon = suite.g2_from_bytes(buf[off : off + 64]); off += 64
    delta = suite.g2_from_bytes(buf[off : off + 64]); off += 64
    powers = []
    for _ in range(s):
        powers.append(suite.g1_from_bytes(buf[off : off + 32])); off += 32
    pairing_base = suite.gt_from_bytes(buf[off : off + 192])
    pk = PublicKey(
        suite=suite,
        s=s,
        epsilon=epsilon,
        delta=delta,
        alpha_powers=tuple(powers),
        pairing_base=pairing_base,
    )
    if pairing_base != suite.pairing(suite.g1, epsilon):
        raise InvalidEncoding("pairing_base does not match epsilon")
    return pk


def secret_key_to_bytes(suite: BilinearSuite, sk: SecretKey) -> bytes:
    return bytes([suite.suite_id]) + suite.scalar_to_bytes(sk.alpha) + suite.scalar_to_bytes(sk.x)


def secret_key_from_bytes(buf: bytes) -> tuple[BilinearSuite, SecretKey]:
    if len(buf) != 65:
        raise WrongLength("secret key file must be 65 bytes")
    suite = suite_by_id(buf[0])
    return suite, SecretKey(
        alpha=suite.scalar_from_bytes(buf[1:33]),
        x=suite.scalar_from_bytes(buf[33:]),
    )


def tags_to_bytes(suite: BilinearSuite, tags: TagSet) -> bytes:
    out = bytearray([suite.suite_id])
    out += tags.name.to_bytes(32, "big")
    out += len(tags.sigmas).to_bytes(8, "big")
    parts = G1Point.to_affine_batch(list(tags.sigmas))
    for pt, parts_i in zip(tags.sigmas, parts):
        if parts_i is None:
            out += suite.g1_to_bytes(pt)
        else:
            x, y = parts_i
            flag = 0x40 if y > suite.field_modulus - y else 0
            buf = bytearray(x.to_bytes(32, "big"))
            buf[0] |= flag
            out += buf
    return bytes(out)


def tags_from_bytes(buf: bytes) -> TagSet:
    if len(buf) < 41:
        raise WrongLength("tag file too short")
    suite = suite_by_id(buf[0])
    name = int.from_bytes(buf[1:33], "big")
    d = int.from_bytes(buf[33:41], "big")
    body = buf[41:]
    if len(body) != d * suite.enc_g1_bytes:
        raise WrongLength(f"tag file must carry {d} G1 points")
    xs, flags = [], []
    for i in range(d):
        rec = body[32 * i : 32 * (i + 1)]
        if rec[0] & 0x80:
            raise InvalidEncoding("tags cannot be the identity")
        xs.append(int.from_bytes(bytes([rec[0] & 0x3F]) + rec[1:], "big"))
        flags.append(bool(rec[0] & 0x40))
    try:
        sigmas = tuple(G1Point.from_compressed_batch(xs, flags))
    except ValueError as exc:
        raise InvalidEncoding(str(exc)) from None
    return TagSet(name=name, sigmas=sigmas)

"""Storage-provider proof generation.

A proof aggregates the challenged tags (sigma), evaluates the
challenge-weighted chunk polynomial at r, and commits to the quotient
(P(x) - P(r)) / (x - r) using only the public powers of alpha. The
private variant never reveals the evaluation itself: the provider sends
y' = zeta * P(r) + z with commitment R = e(g1, epsilon)^z and
zeta = H'(R), a three-move proof collapsed into one message.
"""

from __future__ import annotations

import random
import secrets
from dataclasses import dataclass

from .algebra import BilinearSuite, G1Point, GTElement, bn254
from .challenge import Challenge, ChallengeSet
from .encoding import FileEncoding, chunk_polynomial_eval
from .errors import IndexOutOfRange, ParamMismatch, WrongLength
from .keys import PublicKey, TagSet

PROOF_BYTES = 288
NONPRIVATE_PROOF_BYTES = 96


@dataclass(frozen=True)
class CombinedPolynomial:
    """Coefficient-wise challenge combination of the challenged chunks."""

    coefficients: tuple[int, ...]

    def eval(self, x: int, order: int) -> int:
        return chunk_polynomial_eval(self.coefficients, x, order)


@dataclass(frozen=True, eq=False)
class NonPrivateProof:
    """Insecure-demo proof (sigma, y = P(r), psi); leaks the evaluation."""

    sigma: G1Point
    y: int
    psi: G1Point


@dataclass(frozen=True, eq=False)
class AuditProof:
    """The on-chain audit trail entry: (sigma, y', psi, R), 288 bytes."""

    sigma: G1Point
    y_prime: int
    psi: G1Point
    R: GTElement


def combine_chunks(enc: FileEncoding, cs: ChallengeSet) -> CombinedPolynomial:
    """Sum of c_i * chunk_i over the challenged indices, per coefficient."""
    order_ = bn254().order
    out = [0] * enc.s
    for idx, c in zip(cs.indices, cs.coefficients):
        if not 0 <= idx < enc.d:
            raise IndexOutOfRange(f"challenged index {idx} outside [0, {enc.d})")
        chunk = enc.chunks[idx]
        for j, m in enumerate(chunk):
            if m:
                out[j] = (out[j] + c * m) % order_
    return CombinedPolynomial(coefficients=tuple(out))


def poly_quotient(
    p_coeffs, r: int, order: int
) -> tuple[tuple[int, ...], int]:
    """Synthetic division of P(x) by (x - r) over Z_p.

    Returns (Q coefficients, remainder) with P(x) = Q(x)(x - r) + remainder
    and remainder = P(r). Q has one coefficient fewer than P.
    """
    s = len(p_coeffs)
    if s == 0:
        return (), 0
    q = [0] * (s - 1)
    acc = p_coeffs[s - 1] % order
    for j in range(s - 2, -1, -1):
        q[j] = acc
        acc = (p_coeffs[j] + r * acc) % order
    return tuple(q), acc


def _check_dimensions(pk: PublicKey, enc: FileEncoding, tags: TagSet, cs: ChallengeSet):
    if enc.s != pk.s:
        raise ParamMismatch(f"encoding width {enc.s} != key width {pk.s}")
    if len(tags.sigmas) != enc.d:
        raise ParamMismatch(f"{len(tags.sigmas)} tags for {enc.d} chunks")
    if tags.name != enc.name:
        raise ParamMismatch("tag set names a different file")
    if len(cs.indices) != len(cs.coefficients):
        raise ParamMismatch("challenge set indices/coefficients mismatch")


def _aggregate(pk: PublicKey, enc: FileEncoding, tags: TagSet, ch: Challenge, cs: ChallengeSet):
    """Shared part of both proofs: (sigma, P, y, psi)."""
    order = pk.suite.order
    combined = combine_chunks(enc, cs)
    y = combined.eval(ch.r, order)
    quotient, remainder = poly_quotient(combined.coefficients, ch.r, order)
    assert remainder == y
    sigma = G1Point.msm([tags.sigmas[i] for i in cs.indices], list(cs.coefficients))
    psi = G1Point.msm(list(pk.alpha_powers[: len(quotient)]), list(quotient))
    return combined, y, sigma, psi


def prove_nonprivate(
    pk: PublicKey,
    enc: FileEncoding,
    tags: TagSet,
    ch: Challenge,
    cs: ChallengeSet,
) -> NonPrivateProof:
    """Insecure-demo proof revealing y = P(r) in the clear."""
    _check_dimensions(pk, enc, tags, cs)
    _, y, sigma, psi = _aggregate(pk, enc, tags, ch, cs)
    return NonPrivateProof(sigma=sigma, y=y, psi=psi)


def prove_private(
    pk: PublicKey,
    enc: FileEncoding,
    tags: TagSet,
    ch: Challenge,
    cs: ChallengeSet,
    rng: random.Random | None = None,
    z_override: int | None = None,
) -> AuditProof:
    """Blinded proof; samples a fresh hiding scalar z per invocation.

    `z_override` exists for white-box tests of the blinding relation and
    must never be set in production use.
    """
    _check_dimensions(pk, enc, tags, cs)
    order = pk.suite.order
    if z_override is not None:
        z = z_override % order
    elif rng is not None:
        z = rng.randrange(order)
    else:
        z = secrets.randbelow(order)
    _, y, sigma, psi = _aggregate(pk, enc, tags, ch, cs)
    R = pk.pairing_base.pow(z)
    zeta = pk.suite.hash_gt_to_scalar(R)
    y_prime = (zeta * y + z) % order
    return AuditProof(sigma=sigma, y_prime=y_prime, psi=psi, R=R)


# -- wire formats ----------------------------------------------------------

def proof_to_bytes(suite: BilinearSuite, prf: AuditProof) -> bytes:
    """sigma(32) || y'(32) || psi(32) || R(192) = 288 bytes."""
    out = (
        suite.g1_to_bytes(prf.sigma)
        + suite.scalar_to_bytes(prf.y_prime)
        + suite.g1_to_bytes(prf.psi)
        + suite.gt_to_bytes(prf.R)
    )
    assert len(out) == PROOF_BYTES
    return out


def proof_from_bytes(suite: BilinearSuite, buf: bytes) -> AuditProof:
    if len(buf) != PROOF_BYTES:
        raise WrongLength(f"audit proof must be {PROOF_BYTES} bytes")
    return AuditProof(
        sigma=suite.g1_from_bytes(buf[:32]),
        y_prime=suite.scalar_from_bytes(buf[32:64]),
        psi=suite.g1_from_bytes(buf[64:96]),
        R=suite.gt_from_bytes(buf[96:]),
    )


def nonprivate_proof_to_bytes(suite: BilinearSuite, prf: NonPrivateProof) -> bytes:
    """sigma(32) || y(32) || psi(32) = 96 bytes (insecure-demo mode)."""
    out = (
        suite.g1_to_bytes(prf.sigma)
        + suite.scalar_to_bytes(prf.y)
        + suite.g1_to_bytes(prf.psi)
    )
    assert len(out) == NONPRIVATE_PROOF_BYTES
    return out


def nonprivate_proof_from_bytes(suite: BilinearSuite, buf: bytes) -> NonPrivateProof:
    if len(buf) != NONPRIVATE_PROOF_BYTES:
        raise WrongLength(f"non-private proof must be {NONPRIVATE_PROOF_BYTES} bytes")
    return NonPrivateProof(
        sigma=suite.g1_from_bytes(buf[:32]),
        y=suite.scalar_from_bytes(buf[32:64]),
        psi=suite.g1_from_bytes(buf[64:]),
    )

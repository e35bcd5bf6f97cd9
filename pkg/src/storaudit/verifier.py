"""Contract-side verification of audit proofs.

Checks run against public data only (public key, file name, challenge,
proof) and cost a fixed number of pairings regardless of file size: four
pairings plus group work bounded by the challenge size k. The private
equation re-derives the blinding challenge zeta = H'(R) from the
submitted commitment R, so a prover cannot pick zeta.

The insecure-demo (non-private) equation is retained solely to feed the
leakage demonstration.
"""

from __future__ import annotations

from dataclasses import dataclass

from .algebra import G1Point
from .challenge import Challenge, ChallengeSet
from .errors import IndexOutOfRange, ParamMismatch
from .keys import PublicKey, index_hashes
from .prover import AuditProof, NonPrivateProof


@dataclass(frozen=True, eq=False)
class VerificationContext:
    """The contract's recorded audit metadata."""

    pk: PublicKey
    name: int
    d: int
    k: int


@dataclass
class OpCounter:
    """Tally of group operations, for cost instrumentation."""

    pairings: int = 0
    group_exponentiations: int = 0
    gt_exponentiations: int = 0


def _validate_indices(ctx: VerificationContext, cs: ChallengeSet):
    if len(cs.indices) != len(cs.coefficients):
        raise ParamMismatch("challenge set indices/coefficients mismatch")
    for idx in cs.indices:
        if not 0 <= idx < ctx.d:
            raise IndexOutOfRange(f"challenged index {idx} outside [0, {ctx.d})")


def compute_chi(
    ctx: VerificationContext, cs: ChallengeSet, counter: OpCounter | None = None
) -> G1Point:
    """chi = prod_i H(name || i)^(c_i), from public data only."""
    _validate_indices(ctx, cs)
    cached_d = ctx.d if len(cs.indices) == ctx.d else None
    t_bases = index_hashes(ctx.pk.suite, ctx.name, cs.indices, d=cached_d)
    if counter is not None:
        counter.group_exponentiations += len(cs.indices)
    return G1Point.msm(t_bases, list(cs.coefficients))


def verify_nonprivate(
    ctx: VerificationContext,
    ch: Challenge,
    cs: ChallengeSet,
    prf: NonPrivateProof,
    counter: OpCounter | None = None,
) -> bool:
    """Insecure-demo check: e(sigma, g2) e(g1^-y, eps) = e(chi, eps) e(psi, delta eps^-r)."""
    suite = ctx.pk.suite
    order = suite.order
    chi = compute_chi(ctx, cs, counter)
    g1_neg_y = suite.g1.mul((order - prf.y) % order)
    eps_neg_r = ctx.pk.epsilon.mul((order - ch.r) % order)
    if counter is not None:
        counter.pairings += 4
        counter.group_exponentiations += 2
    lhs = suite.pairing(prf.sigma, suite.g2).mul(suite.pairing(g1_neg_y, ctx.pk.epsilon))
    rhs = suite.pairing(chi, ctx.pk.epsilon).mul(
        suite.pairing(prf.psi, ctx.pk.delta.add(eps_neg_r))
    )
    return lhs == rhs


def verify_private(
    ctx: VerificationContext,
    ch: Challenge,
    cs: ChallengeSet,
    prf: AuditProof,
    counter: OpCounter | None = None,
) -> bool:
    """Main check: R e(sigma^zeta, g2) e(g1^-y', eps) = e(chi^zeta, eps) e(psi^zeta, delta eps^-r).

    zeta is recomputed from the submitted R; the pairing count is four for
    any file size.
    """
    suite = ctx.pk.suite
    order = suite.order
    zeta = suite.hash_gt_to_scalar(prf.R)
    chi = compute_chi(ctx, cs, counter)
    sigma_z = prf.sigma.mul(zeta)
    chi_z = chi.mul(zeta)
    psi_z = prf.psi.mul(zeta)
    g1_neg_y = suite.g1.mul((order - prf.y_prime) % order)
    eps_neg_r = ctx.pk.epsilon.mul((order - ch.r) % order)
    if counter is not None:
        counter.pairings += 4
        counter.group_exponentiations += 5
    lhs = prf.R.mul(suite.pairing(sigma_z, suite.g2)).mul(
        suite.pairing(g1_neg_y, ctx.pk.epsilon)
    )
    rhs = suite.pairing(chi_z, ctx.pk.epsilon).mul(
        suite.pairing(psi_z, ctx.pk.delta.add(eps_neg_r))
    )
    return lhs == rhs

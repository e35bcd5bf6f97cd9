"""Privacy-assured proof-of-storage audits for decentralized storage.

Per-chunk homomorphic authenticators aggregate into constant-size audit
proofs (three G1 points and one GT element, 288 bytes on the reference
suite) verified with four pairings, independent of file size. A sigma-
protocol blinding keeps the on-chain audit trail from leaking file
contents, and a deterministic contract simulator handles deposits,
scheduling, micro-payments, and settlement.
"""

from .algebra import BilinearSuite, G1Point, G2Point, GTElement, bn254, suite_by_id
from .challenge import (
    Challenge,
    ChallengeSet,
    LeakDemoBeacon,
    RandomnessBeacon,
    SeededBeacon,
    challenge_from_bytes,
    draw_challenge,
    expand_challenge,
)
from .contract import Agreements, AuditRecord, ContractState, Metadata, Status
from .costs import FeeParams, annual_cost, per_audit_cost
from .encoding import (
    EncodingParams,
    FileEncoding,
    chunk_polynomial_eval,
    decode_file,
    encode_file,
)
from .keys import (
    PublicKey,
    SecretKey,
    TagSet,
    generate_tags,
    keygen,
    public_key_from_bytes,
    public_key_to_bytes,
    secret_key_from_bytes,
    secret_key_to_bytes,
    tags_from_bytes,
    tags_to_bytes,
    verify_tags,
)
from .prover import (
    AuditProof,
    CombinedPolynomial,
    NonPrivateProof,
    combine_chunks,
    poly_quotient,
    proof_from_bytes,
    proof_to_bytes,
    prove_nonprivate,
    prove_private,
)
from .simulation import (
    RunConfig,
    SimulationResult,
    detection_probability,
    recover_file_from_ledger,
    replay_ledger,
    run_simulation,
)
from .verifier import (
    OpCounter,
    VerificationContext,
    compute_chi,
    verify_nonprivate,
    verify_private,
)
from .attack import (
    LeakReport,
    TranscriptSet,
    attack_private_transcripts,
    interpolate_combined,
    recover_blocks,
)

__version__ = "0.1.0"

__all__ = [
    "Agreements",
    "AuditProof",
    "AuditRecord",
    "BilinearSuite",
    "Challenge",
    "ChallengeSet",
    "CombinedPolynomial",
    "ContractState",
    "EncodingParams",
    "FeeParams",
    "FileEncoding",
    "G1Point",
    "G2Point",
    "GTElement",
    "LeakDemoBeacon",
    "LeakReport",
    "Metadata",
    "NonPrivateProof",
    "OpCounter",
    "PublicKey",
    "RandomnessBeacon",
    "RunConfig",
    "SecretKey",
    "SeededBeacon",
    "SimulationResult",
    "Status",
    "TagSet",
    "TranscriptSet",
    "VerificationContext",
    "annual_cost",
    "attack_private_transcripts",
    "bn254",
    "challenge_from_bytes",
    "chunk_polynomial_eval",
    "combine_chunks",
    "compute_chi",
    "decode_file",
    "detection_probability",
    "draw_challenge",
    "encode_file",
    "expand_challenge",
    "generate_tags",
    "interpolate_combined",
    "keygen",
    "per_audit_cost",
    "poly_quotient",
    "proof_from_bytes",
    "proof_to_bytes",
    "prove_nonprivate",
    "prove_private",
    "public_key_from_bytes",
    "public_key_to_bytes",
    "recover_blocks",
    "recover_file_from_ledger",
    "replay_ledger",
    "run_simulation",
    "secret_key_from_bytes",
    "secret_key_to_bytes",
    "suite_by_id",
    "tags_from_bytes",
    "tags_to_bytes",
    "verify_nonprivate",
    "verify_private",
    "verify_tags",
]

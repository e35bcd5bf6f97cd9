"""Deterministic simulation of the auditing smart contract.

The contract is a state machine: UNINIT -> ACK -> FREEZE -> AUDIT ->
PROVE -> AUDIT -> ... with CLOSED terminal. Any out-of-order message
raises WrongState. Time is a discrete round counter advanced by a
single-threaded event queue; per-audit micro-payments split the locked
deposits evenly across the agreed number of audits, and funds are
conserved exactly at every step (integer accounting).

A missing proof is treated as a failed audit once the round's deadline
passes (the liveness rule); checking the proof itself is delegated to an
injected verifier so the machine can be exercised without cryptography.
"""

from __future__ import annotations

import heapq
from dataclasses import dataclass, field
from enum import Enum
from typing import Callable, Optional

from .challenge import Challenge, RandomnessBeacon, draw_challenge
from .errors import (
    AuditsExhausted,
    InsufficientDeposit,
    InvalidAgreement,
    NoProofPending,
    WrongLength,
    WrongState,
)
from .keys import PublicKey
from .prover import NONPRIVATE_PROOF_BYTES, PROOF_BYTES


class Status(Enum):
    UNINIT = "uninit"
    ACK = "ack"
    FREEZE = "freeze"
    AUDIT = "audit"
    PROVE = "prove"
    CLOSED = "closed"


@dataclass(frozen=True)
class Agreements:
    """The negotiated contract terms (the paper's agrmts)."""

    duration_rounds: int
    num: int                 # total audits
    k: int                   # challenged chunks per audit
    audit_interval: int = 1  # rounds between challenge and deadline
    private: bool = True     # False = insecure-demo mode (leaks P(r))

    def __post_init__(self):
        if self.num < 1:
            raise InvalidAgreement("contracts without audits are meaningless")
        if self.k < 1:
            raise InvalidAgreement("k must be >= 1")
        if self.audit_interval < 1:
            raise InvalidAgreement("audit_interval must be >= 1")
        if self.duration_rounds < self.num * self.audit_interval:
            raise InvalidAgreement("duration too short for the audit schedule")

    @property
    def proof_bytes(self) -> int:
        return PROOF_BYTES if self.private else NONPRIVATE_PROOF_BYTES


@dataclass(frozen=True)
class Metadata:
    """Public file facts recorded on-chain at negotiation time."""

    name: int
    d: int
    original_length: int


@dataclass(frozen=True)
class AuditRecord:
    round: int               # audit sequence number (0-based)
    challenge: bytes         # the 48 raw beacon bytes
    challenge_round: int     # beacon round consumed
    proof: bytes             # b"" when the provider timed out
    verdict: bool
    payout_recipient: str    # "provider" | "owner"
    payout_amount: int
    timestamp: int


class EventQueue:
    """Deterministic scheduler: (time, insertion order) heap."""

    def __init__(self):
        self.now = 0
        self._heap: list[tuple[int, int, str, int]] = []
        self._seq = 0

    def schedule(self, at: int, kind: str, tag: int = 0):
        heapq.heappush(self._heap, (at, self._seq, kind, tag))
        self._seq += 1

    def pop(self) -> tuple[int, str, int]:
        at, _, kind, tag = heapq.heappop(self._heap)
        self.now = max(self.now, at)
        return at, kind, tag

    def __bool__(self):
        return bool(self._heap)


VerifyFn = Callable[[Challenge, bytes], bool]


class ContractState:
    """The audit contract: state, deposits, ledger, and event queue."""

    def __init__(self, verify_fn: VerifyFn, storage_fee: int = 0):
        self.status = Status.UNINIT
        self.agrmts: Optional[Agreements] = None
        self.params: Optional[PublicKey] = None
        self.metadata: Optional[Metadata] = None
        self.cnt = 0
        self.deposits = {"owner_locked": 0, "provider_locked": 0}
        self.balances = {"owner": 0, "provider": 0}
        self.initial_deposits = {"owner": 0, "provider": 0}
        self.ledger: list[AuditRecord] = []
        self.event_log: list[dict] = []
        self.events = EventQueue()
        self.storage_fee = storage_fee
        self._verify_fn = verify_fn
        self._challenge: Optional[Challenge] = None
        self._pending_proof: Optional[bytes] = None
        self._challenge_time = 0

    @property
    def current_challenge(self) -> Optional[Challenge]:
        return self._challenge

    # -- invariants --------------------------------------------------------

    def total_value(self) -> int:
        return (
            self.deposits["owner_locked"]
            + self.deposits["provider_locked"]
            + self.balances["owner"]
            + self.balances["provider"]
        )

    def _check_conservation(self):
        expected = self.initial_deposits["owner"] + self.initial_deposits["provider"]
        assert self.total_value() == expected, "deposit conservation violated"

    def _broadcast(self, event: str, **payload):
        self.event_log.append({"event": event, "time": self.events.now, **payload})

    def _require(self, status: Status):
        if self.status is not status:
            raise WrongState(f"message not accepted in state {self.status.value}")

    # -- initialization phase -----------------------------------------------

    def negotiate(self, agrmts: Agreements, params: PublicKey, metadata: Metadata):
        self._require(Status.UNINIT)
        self.agrmts = agrmts
        self.params = params
        self.metadata = metadata
        self.cnt = 0
        self.status = Status.ACK
        from .keys import public_key_to_bytes

        self._broadcast(
            "negotiated",
            suite=params.suite.suite_id,
            agrmts={
                "duration_rounds": agrmts.duration_rounds,
                "num": agrmts.num,
                "k": agrmts.k,
                "audit_interval": agrmts.audit_interval,
                "private": agrmts.private,
            },
            metadata={
                "name": format(metadata.name, "x"),
                "d": metadata.d,
                "original_length": metadata.original_length,
            },
            params=public_key_to_bytes(params).hex(),
        )
        return self

    def acknowledge(self):
        self._require(Status.ACK)
        self.status = Status.FREEZE
        self._broadcast("acked")
        return self

    def reject(self):
        self._require(Status.ACK)
        self.status = Status.CLOSED
        # The rejected owner bears the on-chain storage fee already spent.
        self._broadcast("rejected", storage_fee_bearer="owner", storage_fee=self.storage_fee)
        return self

    def freeze_deposits(self, owner_amt: int, provider_amt: int):
        self._require(Status.FREEZE)
        if owner_amt <= 0 or provider_amt <= 0:
            raise InsufficientDeposit("both parties must lock a positive deposit")
        self.deposits["owner_locked"] = owner_amt
        self.deposits["provider_locked"] = provider_amt
        self.initial_deposits = {"owner": owner_amt, "provider": provider_amt}
        self.status = Status.AUDIT
        self._broadcast("inited", owner_locked=owner_amt, provider_locked=provider_amt)
        self.events.schedule(self.events.now + self.agrmts.audit_interval, "chal")
        self._check_conservation()
        return self

    # -- audit phase ---------------------------------------------------------

    def fire_challenge(self, beacon: RandomnessBeacon) -> Challenge:
        self._require(Status.AUDIT)
        if self.cnt >= self.agrmts.num:
            self._settle()
            raise AuditsExhausted("all agreed audits have run; contract settled")
        ch = draw_challenge(self.params.suite, beacon, self.cnt)
        self._challenge = ch
        self._challenge_time = self.events.now
        self._pending_proof = None
        self.status = Status.PROVE
        self._broadcast(
            "challenged",
            audit_index=self.cnt,
            challenge_round=ch.round,
            challenge=ch.to_bytes().hex(),
        )
        self.events.schedule(
            self.events.now + self.agrmts.audit_interval, "deadline", tag=self.cnt
        )
        return ch

    def submit_proof(self, prf_bytes: bytes):
        self._require(Status.PROVE)
        if self._pending_proof is not None:
            raise WrongState("a proof for this round is already pending")
        if len(prf_bytes) != self.agrmts.proof_bytes:
            raise WrongLength(
                f"proof must be {self.agrmts.proof_bytes} bytes, got {len(prf_bytes)}"
            )
        self._pending_proof = bytes(prf_bytes)
        self._broadcast("proofposted", audit_index=self.cnt)
        self.events.schedule(self.events.now, "verify", tag=self.cnt)
        return self

    def fire_verify(self) -> tuple[bool, tuple[str, int]]:
        self._require(Status.PROVE)
        if self._pending_proof is not None:
            verdict = bool(self._verify_fn(self._challenge, self._pending_proof))
            proof = self._pending_proof
        elif self.events.now >= self._challenge_time + self.agrmts.audit_interval:
            verdict = False   # provider silence counts as a failed audit
            proof = b""
        else:
            raise NoProofPending("no proof submitted and the deadline has not passed")

        if verdict:
            tranche = self.initial_deposits["owner"] // self.agrmts.num
            tranche = min(tranche, self.deposits["owner_locked"])
            self.deposits["owner_locked"] -= tranche
            self.balances["provider"] += tranche
            payout = ("provider", tranche)
        else:
            tranche = self.initial_deposits["provider"] // self.agrmts.num
            tranche = min(tranche, self.deposits["provider_locked"])
            self.deposits["provider_locked"] -= tranche
            self.balances["owner"] += tranche
            payout = ("owner", tranche)

        record = AuditRecord(
            round=self.cnt,
            challenge=self._challenge.to_bytes(),
            challenge_round=self._challenge.round,
            proof=proof,
            verdict=verdict,
            payout_recipient=payout[0],
            payout_amount=payout[1],
            timestamp=self.events.now,
        )
        self.ledger.append(record)
        self._broadcast(
            "pass" if verdict else "fail",
            audit_index=self.cnt,
            challenge_round=record.challenge_round,
            challenge=record.challenge.hex(),
            proof=record.proof.hex(),
            payout_recipient=payout[0],
            payout_amount=payout[1],
            owner_locked=self.deposits["owner_locked"],
            provider_locked=self.deposits["provider_locked"],
            owner_balance=self.balances["owner"],
            provider_balance=self.balances["provider"],
        )
        self.cnt += 1
        self._challenge = None
        self._pending_proof = None
        self.status = Status.AUDIT
        if self.cnt >= self.agrmts.num:
            self._settle()
        else:
            self.events.schedule(self.events.now + self.agrmts.audit_interval, "chal")
        self._check_conservation()
        return verdict, payout

    def _settle(self):
        self.balances["owner"] += self.deposits["owner_locked"]
        self.balances["provider"] += self.deposits["provider_locked"]
        self.deposits["owner_locked"] = 0
        self.deposits["provider_locked"] = 0
        self.status = Status.CLOSED
        self._broadcast(
            "settled",
            owner_balance=self.balances["owner"],
            provider_balance=self.balances["provider"],
        )
        self._check_conservation()

    # -- event loop ---------------------------------------------------------

    def process_next(self, beacon: RandomnessBeacon) -> tuple[int, str, int] | None:
        """Pop and dispatch one scheduled event; returns it, or None at close."""
        while self.events:
            at, kind, tag = self.events.pop()
            if self.status is Status.CLOSED:
                continue
            if kind == "chal":
                try:
                    self.fire_challenge(beacon)
                except AuditsExhausted:
                    pass
                return at, kind, tag
            if kind == "verify":
                if self.status is Status.PROVE and self._pending_proof is not None:
                    self.fire_verify()
                    return at, kind, tag
                continue   # stale
            if kind == "deadline":
                if (
                    self.status is Status.PROVE
                    and self._pending_proof is None
                    and self.cnt == tag
                ):
                    self.fire_verify()
                    return at, kind, tag
                continue   # proof already handled
        return None

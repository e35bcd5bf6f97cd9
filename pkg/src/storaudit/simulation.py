"""End-to-end audit simulation and ledger tooling.

Wires an in-process storage provider to the contract state machine,
drives the event loop for the agreed number of rounds, and persists the
event log as line-delimited JSON (hex-encoded byte fields). The ledger
file is self-contained: it can be re-verified record by record and is
the transcript source for the leakage demonstration.
"""

from __future__ import annotations

import json
import math
import random
from dataclasses import dataclass, field

from .algebra import BilinearSuite, bn254, suite_by_id
from .attack import TranscriptSet, interpolate_combined, recover_blocks
from .challenge import (
    Challenge,
    LeakDemoBeacon,
    RandomnessBeacon,
    SeededBeacon,
    challenge_from_bytes,
    expand_challenge,
)
from .contract import Agreements, AuditRecord, ContractState, Metadata, Status
from .encoding import DEFAULT_BLOCK_BYTES, EncodingParams, FileEncoding, encode_file
from .errors import InvalidEncoding, StorauditError, WrongLength
from .keys import PublicKey, TagSet, generate_tags, keygen, public_key_from_bytes, verify_tags
from .prover import (
    nonprivate_proof_from_bytes,
    nonprivate_proof_to_bytes,
    proof_from_bytes,
    proof_to_bytes,
    prove_nonprivate,
    prove_private,
)
from .verifier import VerificationContext, verify_nonprivate, verify_private


@dataclass
class RunConfig:
    """Validated parameters of one simulated contract."""

    s: int
    k: int
    num: int
    audit_interval: int = 1
    seed: int = 0
    suite_id: int = 1
    owner_deposit: int = 1000
    provider_deposit: int = 1000
    corrupt_fraction: float = 0.0
    corrupt_at_round: int = 0
    private: bool = True
    leak_demo: bool = False
    silent_rounds: tuple[int, ...] = ()

    def __post_init__(self):
        if self.s < 1 or self.k < 1 or self.num < 1 or self.audit_interval < 1:
            raise ValueError("s, k, num and audit_interval must all be >= 1")
        if not 0.0 <= self.corrupt_fraction <= 1.0:
            raise ValueError("corrupt_fraction must lie in [0, 1]")
        if self.owner_deposit <= 0 or self.provider_deposit <= 0:
            raise ValueError("deposits must be positive")
        if self.leak_demo and self.private:
            raise ValueError("leak_demo requires private=False")


class SimulatedProvider:
    """Storage provider actor: stores the encoding, answers challenges."""

    def __init__(self, pk: PublicKey, enc: FileEncoding, tags: TagSet, rng: random.Random):
        self.pk = pk
        self.enc = enc
        self.tags = tags
        self.rng = rng

    def accept_contract(self) -> bool:
        return verify_tags(self.pk, self.enc, self.tags)

    def corrupt(self, fraction: float):
        """Overwrite a fraction of chunks with fresh random scalars."""
        if fraction <= 0:
            return
        d = self.enc.d
        count = min(d, max(1, round(fraction * d)))
        order = self.pk.suite.order
        victims = self.rng.sample(range(d), count)
        chunks = list(self.enc.chunks)
        for i in victims:
            chunks[i] = tuple(self.rng.randrange(order) for _ in range(self.enc.s))
        self.enc = FileEncoding(
            name=self.enc.name,
            n=self.enc.n,
            d=self.enc.d,
            s=self.enc.s,
            block_bytes=self.enc.block_bytes,
            chunks=tuple(chunks),
            original_length=self.enc.original_length,
        )

    def respond(self, ch: Challenge, k: int, private: bool) -> bytes:
        suite = self.pk.suite
        cs = expand_challenge(suite, ch, self.enc.d, k)
        if private:
            prf = prove_private(self.pk, self.enc, self.tags, ch, cs, rng=self.rng)
            return proof_to_bytes(suite, prf)
        prf = prove_nonprivate(self.pk, self.enc, self.tags, ch, cs)
        return nonprivate_proof_to_bytes(suite, prf)


def contract_verifier(pk: PublicKey, metadata: Metadata, agrmts: Agreements):
    """The verification hook the contract runs on submitted proof bytes."""
    ctx = VerificationContext(pk=pk, name=metadata.name, d=metadata.d, k=agrmts.k)
    suite = pk.suite

    def check(ch: Challenge, prf_bytes: bytes) -> bool:
        cs = expand_challenge(suite, ch, metadata.d, agrmts.k)
        try:
            if agrmts.private:
                return verify_private(ctx, ch, cs, proof_from_bytes(suite, prf_bytes))
            return verify_nonprivate(
                ctx, ch, cs, nonprivate_proof_from_bytes(suite, prf_bytes)
            )
        except (InvalidEncoding, WrongLength):
            return False

    return check


@dataclass
class SimulationResult:
    config: RunConfig
    passes: int
    fails: int
    records: list[AuditRecord]
    balances: dict[str, int]
    event_log: list[dict]
    ledger_lines: list[str] = field(default_factory=list)

    def summary(self) -> str:
        return (
            f"audits={self.passes + self.fails} passes={self.passes} "
            f"fails={self.fails} owner_balance={self.balances['owner']} "
            f"provider_balance={self.balances['provider']}"
        )


def run_simulation(config: RunConfig, data: bytes) -> SimulationResult:
    """Run one full contract lifecycle; deterministic given (config, data)."""
    suite = suite_by_id(config.suite_id)
    rng = random.Random(f"storaudit-sim-{config.seed}")
    name = rng.randrange(suite.order)
    enc = encode_file(data, EncodingParams(s=config.s), name)
    sk, pk = keygen(suite, config.s, rng)
    tags = generate_tags(sk, pk, enc)

    provider = SimulatedProvider(pk, enc, tags, rng)
    if not provider.accept_contract():
        raise StorauditError("provider rejected owner-supplied tags")

    agrmts = Agreements(
        duration_rounds=config.num * config.audit_interval + 1,
        num=config.num,
        k=config.k,
        audit_interval=config.audit_interval,
        private=config.private,
    )
    metadata = Metadata(name=name, d=enc.d, original_length=len(data))
    contract = ContractState(verify_fn=contract_verifier(pk, metadata, agrmts))
    contract.negotiate(agrmts, pk, metadata)
    contract.acknowledge()
    contract.freeze_deposits(config.owner_deposit, config.provider_deposit)

    if config.leak_demo:
        beacon: RandomnessBeacon = LeakDemoBeacon(config.seed, group_size=config.s)
    else:
        beacon = SeededBeacon(config.seed)

    audit_index = 0
    while contract.status is not Status.CLOSED:
        evt = contract.process_next(beacon)
        if evt is None:
            break
        _, kind, _ = evt
        if kind == "chal" and contract.status is Status.PROVE:
            if config.corrupt_fraction and audit_index == config.corrupt_at_round:
                provider.corrupt(config.corrupt_fraction)
            if audit_index not in config.silent_rounds:
                proof = provider.respond(
                    contract.current_challenge, config.k, config.private
                )
                contract.submit_proof(proof)
            audit_index += 1

    passes = sum(1 for r in contract.ledger if r.verdict)
    fails = len(contract.ledger) - passes
    lines = [
        json.dumps(rec, sort_keys=True, separators=(",", ":"))
        for rec in contract.event_log
    ]
    return SimulationResult(
        config=config,
        passes=passes,
        fails=fails,
        records=contract.ledger,
        balances=dict(contract.balances),
        event_log=contract.event_log,
        ledger_lines=lines,
    )


def detection_probability(f: float, k: int, d: int | None = None) -> float:
    """Chance a k-chunk challenge hits at least one corrupted chunk.

    Without d: the with-replacement bound 1 - (1 - f)^k. With d: the exact
    hypergeometric form for round(f * d) corrupted chunks out of d, drawn
    k times without replacement.
    """
    if not 0.0 <= f <= 1.0:
        raise ValueError("f must lie in [0, 1]")
    if k < 1:
        raise ValueError("k must be >= 1")
    if d is None:
        return 1.0 - (1.0 - f) ** k
    corrupted = round(f * d)
    k = min(k, d)
    if corrupted == 0:
        return 0.0
    if k > d - corrupted:
        return 1.0
    log_miss = sum(
        math.log((d - corrupted - t) / (d - t)) for t in range(k)
    )
    return 1.0 - math.exp(log_miss)


# -- ledger consumption -----------------------------------------------------

def parse_ledger(lines) -> tuple[dict, list[dict]]:
    """Split a ledger into its negotiation header and the event records."""
    events = [json.loads(line) for line in lines if line.strip()]
    header = next((e for e in events if e["event"] == "negotiated"), None)
    if header is None:
        raise ValueError("ledger has no negotiation record")
    return header, events


def replay_ledger(lines) -> list[tuple[int, bool, bool]]:
    """Re-verify every stored (challenge, proof) pair.

    Returns (audit_index, recorded verdict, recomputed verdict) triples;
    a faithful ledger reproduces every verdict exactly.
    """
    header, events = parse_ledger(lines)
    pk = public_key_from_bytes(bytes.fromhex(header["params"]))
    agrmts = Agreements(**header["agrmts"])
    meta = header["metadata"]
    metadata = Metadata(
        name=int(meta["name"], 16), d=meta["d"], original_length=meta["original_length"]
    )
    check = contract_verifier(pk, metadata, agrmts)
    out = []
    for e in events:
        if e["event"] not in ("pass", "fail"):
            continue
        recorded = e["event"] == "pass"
        proof = bytes.fromhex(e["proof"])
        if not proof:
            recomputed = False   # timeout rounds carry no proof
        else:
            ch = challenge_from_bytes(
                pk.suite, bytes.fromhex(e["challenge"]), e["challenge_round"]
            )
            recomputed = check(ch, proof)
        out.append((e["audit_index"], recorded, recomputed))
    return out


def transcript_sets_from_ledger(lines) -> tuple[dict, list[tuple[TranscriptSet, Challenge]]]:
    """Group ledger audit records into interpolation-ready transcript sets.

    Records sharing (C1, C2) seeds form one set; each contributes its
    (r, y) pair, where y is read from the proof wire (y' in private mode).
    Returns the parsed header plus (set, representative challenge) pairs
    in first-seen order.
    """
    header, events = parse_ledger(lines)
    suite = suite_by_id(header["suite"])
    private = header["agrmts"]["private"]
    groups: dict[tuple[bytes, bytes], list] = {}
    order_seen: list[tuple[bytes, bytes]] = []
    reps: dict[tuple[bytes, bytes], Challenge] = {}
    for e in events:
        if e["event"] not in ("pass", "fail") or not e["proof"]:
            continue
        ch = challenge_from_bytes(
            suite, bytes.fromhex(e["challenge"]), e["challenge_round"]
        )
        proof = bytes.fromhex(e["proof"])
        y = (
            proof_from_bytes(suite, proof).y_prime
            if private
            else nonprivate_proof_from_bytes(suite, proof).y
        )
        key = (ch.c1_seed, ch.c2_seed)
        if key not in groups:
            groups[key] = []
            order_seen.append(key)
            reps[key] = ch
        groups[key].append((ch.r, y))
    sets = [
        (
            TranscriptSet(c1_seed=k[0], c2_seed=k[1], points=tuple(groups[k])),
            reps[k],
        )
        for k in order_seen
    ]
    return header, sets


def recover_file_from_ledger(lines) -> bytes:
    """Full recovery pipeline: interpolate each transcript set, solve for
    the chunks, and reassemble file bytes using the recorded metadata.

    Against non-private transcripts this returns the original file; against
    blinded ones it returns garbage of the same length.
    """
    header, sets = transcript_sets_from_ledger(lines)
    suite = suite_by_id(header["suite"])
    meta = header["metadata"]
    d = meta["d"]
    k = header["agrmts"]["k"]
    s = len(public_key_from_bytes(bytes.fromhex(header["params"])).alpha_powers)
    if len(sets) < d:
        raise ValueError(f"need {d} transcript sets to solve for {d} chunks, have {len(sets)}")
    systems = []
    for ts, rep in sets[:d]:
        cs = expand_challenge(suite, rep, d, k)
        weights = [0] * d
        for pos, idx in enumerate(cs.indices):
            weights[idx] = cs.coefficients[pos]
        systems.append((weights, interpolate_combined(ts, s, suite.order)))
    chunks = recover_blocks(systems, suite.order)
    block_bytes = DEFAULT_BLOCK_BYTES
    n = -(-meta["original_length"] // block_bytes)
    flat = [b for chunk in chunks for b in chunk][:n]
    raw = b"".join(int(b).to_bytes(block_bytes, "big") for b in flat)
    return raw[: meta["original_length"]]

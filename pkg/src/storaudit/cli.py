"""Command-line surface.

Subcommands: keygen, tag, challenge, prove, verify, simulate,
attack-demo, estimate-cost. All randomness flows from --seed for
reproducibility; `verify` exits 0 on pass, 1 on fail, 2 on malformed
input, and every other command exits 0 on success and 2 on bad input.
"""

from __future__ import annotations

import argparse
import json
import random
import secrets
import sys
import time
from pathlib import Path

from .algebra import bn254, suite_by_id
from .challenge import SeededBeacon, challenge_from_bytes, draw_challenge, expand_challenge
from .costs import FeeParams, cost_table
from .encoding import EncodingParams, encode_file
from .errors import StorauditError
from .keys import (
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
    nonprivate_proof_from_bytes,
    nonprivate_proof_to_bytes,
    proof_from_bytes,
    proof_to_bytes,
    prove_nonprivate,
    prove_private,
)
from .simulation import (
    RunConfig,
    detection_probability,
    recover_file_from_ledger,
    run_simulation,
)
from .verifier import VerificationContext, verify_nonprivate, verify_private


def _rng(seed: int | None) -> random.Random:
    if seed is None:
        return random.Random(secrets.randbits(128))
    return random.Random(f"storaudit-cli-{seed}")


def _read(path: str) -> bytes:
    return Path(path).read_bytes()


def _write(path: str, data: bytes):
    Path(path).write_bytes(data)


def cmd_keygen(args) -> int:
    suite = suite_by_id(args.suite)
    sk, pk = keygen(suite, args.s, _rng(args.seed))
    _write(args.public, public_key_to_bytes(pk))
    _write(args.secret, secret_key_to_bytes(suite, sk))
    print(f"wrote public key ({args.s} powers) to {args.public}, secret key to {args.secret}")
    return 0


def cmd_tag(args) -> int:
    suite, sk = secret_key_from_bytes(_read(args.secret))
    pk = public_key_from_bytes(_read(args.public))
    if args.s is not None and args.s != pk.s:
        raise StorauditError(f"requested s={args.s} but key has s={pk.s}")
    data = _read(args.file)
    rng = _rng(args.seed)
    name = args.name if args.name is not None else rng.randrange(suite.order)
    enc = encode_file(data, EncodingParams(s=pk.s), name)
    tags = generate_tags(sk, pk, enc)
    _write(args.out, tags_to_bytes(suite, tags))
    meta = {
        "suite": suite.suite_id,
        "name": format(name, "x"),
        "n": enc.n,
        "d": enc.d,
        "s": pk.s,
        "original_length": len(data),
    }
    Path(args.meta).write_text(json.dumps(meta, sort_keys=True, indent=2) + "\n")
    print(f"tagged {len(data)} bytes into {enc.d} chunks; tags in {args.out}, metadata in {args.meta}")
    return 0


def cmd_challenge(args) -> int:
    suite = bn254()
    beacon = SeededBeacon(args.beacon_seed)
    ch = draw_challenge(suite, beacon, args.round)
    _write(args.out, args.round.to_bytes(8, "big") + ch.to_bytes())
    print(f"challenge for round {args.round} written to {args.out}")
    return 0


def _load_challenge(suite, path: str):
    raw = _read(path)
    if len(raw) != 56:
        raise StorauditError("challenge file must be 8 + 48 bytes")
    return challenge_from_bytes(suite, raw[8:], int.from_bytes(raw[:8], "big"))


def cmd_prove(args) -> int:
    pk = public_key_from_bytes(_read(args.public))
    suite = pk.suite
    tags = tags_from_bytes(_read(args.tags))
    data = _read(args.file)
    enc = encode_file(data, EncodingParams(s=pk.s), tags.name)
    ch = _load_challenge(suite, args.challenge)
    cs = expand_challenge(suite, ch, enc.d, args.k)
    t0 = time.perf_counter()
    if args.non_private:
        body = nonprivate_proof_to_bytes(suite, prove_nonprivate(pk, enc, tags, ch, cs))
    else:
        body = proof_to_bytes(suite, prove_private(pk, enc, tags, ch, cs, rng=_rng(args.seed)))
    _write(args.out, body)
    print(f"proof ({len(body)} bytes) written to {args.out} in {time.perf_counter() - t0:.3f}s")
    return 0


def cmd_verify(args) -> int:
    pk = public_key_from_bytes(_read(args.public))
    suite = pk.suite
    meta = json.loads(Path(args.meta).read_text())
    ctx = VerificationContext(
        pk=pk, name=int(meta["name"], 16), d=meta["d"], k=args.k
    )
    ch = _load_challenge(suite, args.challenge)
    cs = expand_challenge(suite, ch, meta["d"], args.k)
    body = _read(args.proof)
    if args.non_private:
        ok = verify_nonprivate(ctx, ch, cs, nonprivate_proof_from_bytes(suite, body))
    else:
        ok = verify_private(ctx, ch, cs, proof_from_bytes(suite, body))
    print("PASS" if ok else "FAIL")
    return 0 if ok else 1


def cmd_verify_tags(args) -> int:
    pk = public_key_from_bytes(_read(args.public))
    tags = tags_from_bytes(_read(args.tags))
    data = _read(args.file)
    enc = encode_file(data, EncodingParams(s=pk.s), tags.name)
    ok = verify_tags(pk, enc, tags)
    print("PASS" if ok else "FAIL")
    return 0 if ok else 1


def cmd_simulate(args) -> int:
    if args.config:
        cfg = RunConfig(**json.loads(Path(args.config).read_text()))
    else:
        cfg = RunConfig(
            s=args.s,
            k=args.k,
            num=args.num,
            audit_interval=args.audit_interval,
            seed=args.seed if args.seed is not None else 0,
            owner_deposit=args.owner_deposit,
            provider_deposit=args.provider_deposit,
            corrupt_fraction=args.corrupt_fraction,
            corrupt_at_round=args.corrupt_at_round,
            private=not args.non_private,
            leak_demo=args.leak_demo,
        )
    if args.file:
        data = _read(args.file)
    else:
        data = random.Random(f"storaudit-simfile-{cfg.seed}").randbytes(args.size)
    result = run_simulation(cfg, data)
    Path(args.ledger).write_text("\n".join(result.ledger_lines) + "\n")
    print(result.summary())
    print(f"ledger ({len(result.ledger_lines)} events) written to {args.ledger}")
    return 0


def cmd_attack_demo(args) -> int:
    lines = Path(args.ledger).read_text().splitlines()
    recovered = recover_file_from_ledger(lines)
    if args.out:
        _write(args.out, recovered)
        print(f"recovered {len(recovered)} bytes into {args.out}")
    if args.original_file:
        original = _read(args.original_file)
        if recovered == original:
            print("LEAKED: recovered bytes match the original file exactly")
        else:
            diff = sum(a != b for a, b in zip(recovered, original))
            diff += abs(len(recovered) - len(original))
            print(
                "PRIVATE: recovery failed "
                f"({diff} of {max(len(original), len(recovered))} bytes differ)"
            )
    elif not args.out:
        print(f"recovered {len(recovered)} candidate bytes (no original to compare)")
    return 0


def cmd_estimate_cost(args) -> int:
    fp = FeeParams(
        gas_per_audit=args.gas_per_audit,
        gas_price=args.gas_price_gwei * 1e-9,
        token_price=args.token_price,
        onetime_storage_gas=args.onetime_storage_gas,
        beacon_cost_per_round=args.beacon_cost,
        audits_per_year=args.audits_per_year,
        redundancy_factor=args.redundancy,
        duration_years=args.duration_years,
    )
    for label, value in cost_table(fp):
        print(f"{label:>26}: {value:12.6f} USD")
    if args.detection_k:
        p = detection_probability(args.detection_fraction, args.detection_k)
        print(f"{'detection @ k,f':>26}: {p:12.6f}")
    return 0


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="storaudit",
        description="Privacy-assured storage audits with constant-size on-chain proofs",
    )
    sub = p.add_subparsers(dest="command", required=True)

    sp = sub.add_parser("keygen", help="generate a key pair for chunk width s")
    sp.add_argument("--s", type=int, required=True)
    sp.add_argument("--suite", type=int, default=1)
    sp.add_argument("--seed", type=int, default=None)
    sp.add_argument("--public", required=True)
    sp.add_argument("--secret", required=True)
    sp.set_defaults(fn=cmd_keygen)

    sp = sub.add_parser("tag", help="generate per-chunk authenticators for a file")
    sp.add_argument("--file", required=True)
    sp.add_argument("--public", required=True)
    sp.add_argument("--secret", required=True)
    sp.add_argument("--s", type=int, default=None, help="must match the key if given")
    sp.add_argument("--name", type=int, default=None)
    sp.add_argument("--seed", type=int, default=None)
    sp.add_argument("--out", required=True)
    sp.add_argument("--meta", required=True)
    sp.set_defaults(fn=cmd_tag)

    sp = sub.add_parser("challenge", help="draw one beacon challenge")
    sp.add_argument("--round", type=int, required=True)
    sp.add_argument("--beacon-seed", type=int, default=0)
    sp.add_argument("--out", required=True)
    sp.set_defaults(fn=cmd_challenge)

    sp = sub.add_parser("prove", help="answer a challenge with an audit proof")
    sp.add_argument("--file", required=True)
    sp.add_argument("--public", required=True)
    sp.add_argument("--tags", required=True)
    sp.add_argument("--challenge", required=True)
    sp.add_argument("--k", type=int, required=True)
    sp.add_argument("--seed", type=int, default=None)
    sp.add_argument("--non-private", action="store_true")
    sp.add_argument("--out", required=True)
    sp.set_defaults(fn=cmd_prove)

    sp = sub.add_parser("verify", help="check an audit proof against public data")
    sp.add_argument("--public", required=True)
    sp.add_argument("--meta", required=True)
    sp.add_argument("--challenge", required=True)
    sp.add_argument("--proof", required=True)
    sp.add_argument("--k", type=int, required=True)
    sp.add_argument("--non-private", action="store_true")
    sp.set_defaults(fn=cmd_verify)

    sp = sub.add_parser("verify-tags", help="provider-side tag acceptance gate")
    sp.add_argument("--file", required=True)
    sp.add_argument("--public", required=True)
    sp.add_argument("--tags", required=True)
    sp.set_defaults(fn=cmd_verify_tags)

    sp = sub.add_parser("simulate", help="run a full simulated audit contract")
    sp.add_argument("--config", default=None, help="JSON file of RunConfig fields")
    sp.add_argument("--file", default=None)
    sp.add_argument("--size", type=int, default=4096, help="random file size if no --file")
    sp.add_argument("--s", type=int, default=2)
    sp.add_argument("--k", type=int, default=300)
    sp.add_argument("--num", type=int, default=10)
    sp.add_argument("--audit-interval", type=int, default=1)
    sp.add_argument("--seed", type=int, default=0)
    sp.add_argument("--owner-deposit", type=int, default=1000)
    sp.add_argument("--provider-deposit", type=int, default=1000)
    sp.add_argument("--corrupt-fraction", type=float, default=0.0)
    sp.add_argument("--corrupt-at-round", type=int, default=0)
    sp.add_argument("--non-private", action="store_true")
    sp.add_argument("--leak-demo", action="store_true")
    sp.add_argument("--ledger", required=True)
    sp.set_defaults(fn=cmd_simulate)

    sp = sub.add_parser("attack-demo", help="run the transcript-recovery attack on a ledger")
    sp.add_argument("--ledger", required=True)
    sp.add_argument("--original-file", default=None)
    sp.add_argument("--out", default=None)
    sp.set_defaults(fn=cmd_attack_demo)

    sp = sub.add_parser("estimate-cost", help="fee estimation from price inputs")
    sp.add_argument("--gas-per-audit", type=float, default=589_000)
    sp.add_argument("--gas-price-gwei", type=float, default=5.0)
    sp.add_argument("--token-price", type=float, default=143.0)
    sp.add_argument("--onetime-storage-gas", type=float, default=0.0)
    sp.add_argument("--beacon-cost", type=float, default=0.0)
    sp.add_argument("--audits-per-year", type=float, default=365.0)
    sp.add_argument("--redundancy", type=float, default=1.0)
    sp.add_argument("--duration-years", type=float, default=1.0)
    sp.add_argument("--detection-k", type=int, default=None)
    sp.add_argument("--detection-fraction", type=float, default=0.01)
    sp.set_defaults(fn=cmd_estimate_cost)

    return p


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.fn(args)
    except (StorauditError, OSError, ValueError, KeyError, json.JSONDecodeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())

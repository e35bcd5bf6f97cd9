"""Beacon abstraction and deterministic challenge expansion.

Each audit round consumes one 48-byte beacon word, split into two 16-byte
seeds (C1, C2) and a 16-byte word that wide-reduces to the evaluation
point r. C1 keys a pseudorandom permutation of the chunk index space
(seeded Fisher-Yates over a counter-mode XOF stream, taking the first k
positions); C2 keys the coefficient PRF.
"""

from __future__ import annotations

import hashlib
from dataclasses import dataclass
from typing import Protocol

from .algebra import BilinearSuite
from .errors import BeaconUnavailable

BEACON_BYTES = 48
SEED_BYTES = 16


@dataclass(frozen=True)
class Challenge:
    c1_seed: bytes
    c2_seed: bytes
    r_seed: bytes
    r: int
    round: int

    def to_bytes(self) -> bytes:
        """The 48 raw beacon bytes, as persisted in audit records."""
        return self.c1_seed + self.c2_seed + self.r_seed


@dataclass(frozen=True)
class ChallengeSet:
    indices: tuple[int, ...]
    coefficients: tuple[int, ...]
    k: int


class RandomnessBeacon(Protocol):
    def next(self, round: int) -> bytes:
        """48 unpredictable bytes for the given round, fixed once emitted."""
        ...


class SeededBeacon:
    """Deterministic beacon for tests and simulation."""

    def __init__(self, seed: bytes | int):
        if isinstance(seed, int):
            seed = seed.to_bytes(16, "big", signed=False)
        self._seed = bytes(seed)

    def next(self, round: int) -> bytes:
        h = hashlib.shake_128(b"storaudit-beacon" + self._seed + round.to_bytes(8, "big"))
        return h.digest(BEACON_BYTES)


class LeakDemoBeacon:
    """Adversarial beacon for the leakage demonstration.

    Rounds are grouped into windows of `group_size`; within one window the
    (C1, C2) seeds are frozen while the r word stays fresh, which is
    exactly the transcript shape an eclipse attacker can force and the
    shape polynomial interpolation needs.
    """

    def __init__(self, seed: bytes | int, group_size: int):
        if isinstance(seed, int):
            seed = seed.to_bytes(16, "big", signed=False)
        if group_size < 1:
            raise ValueError("group_size must be >= 1")
        self._seed = bytes(seed)
        self.group_size = group_size

    def next(self, round: int) -> bytes:
        group = round // self.group_size
        fixed = hashlib.shake_128(
            b"storaudit-leak-cc" + self._seed + group.to_bytes(8, "big")
        ).digest(2 * SEED_BYTES)
        fresh = hashlib.shake_128(
            b"storaudit-leak-r" + self._seed + round.to_bytes(8, "big")
        ).digest(SEED_BYTES)
        return fixed + fresh


def draw_challenge(suite: BilinearSuite, beacon: RandomnessBeacon, round: int) -> Challenge:
    """Split one beacon word into (C1, C2, r) for the given round."""
    if round < 0:
        raise ValueError("round must be >= 0")
    try:
        word = beacon.next(round)
    except Exception as exc:  # noqa: BLE001 - beacon failures are opaque
        raise BeaconUnavailable(str(exc)) from exc
    if not isinstance(word, (bytes, bytearray)) or len(word) != BEACON_BYTES:
        raise BeaconUnavailable(f"beacon word must be {BEACON_BYTES} bytes")
    word = bytes(word)
    c1, c2, r_seed = word[:16], word[16:32], word[32:]
    return Challenge(
        c1_seed=c1,
        c2_seed=c2,
        r_seed=r_seed,
        r=suite.hash_to_scalar(b"chal-r", r_seed),
        round=round,
    )


def challenge_from_bytes(suite: BilinearSuite, word: bytes, round: int) -> Challenge:
    """Rebuild a Challenge from its 48 persisted bytes."""
    if len(word) != BEACON_BYTES:
        raise BeaconUnavailable(f"challenge word must be {BEACON_BYTES} bytes")
    return Challenge(
        c1_seed=word[:16],
        c2_seed=word[16:32],
        r_seed=word[32:],
        r=suite.hash_to_scalar(b"chal-r", word[32:]),
        round=round,
    )


class XofStream:
    """Counter-mode SHAKE-128 byte stream (the PRP/PRF key stream)."""

    def __init__(self, domain: bytes, seed: bytes):
        self._prefix = domain + seed
        self._block = 0
        self._buf = b""

    def read(self, n: int) -> bytes:
        while len(self._buf) < n:
            h = hashlib.shake_128(self._prefix + self._block.to_bytes(8, "big"))
            self._buf += h.digest(4096)
            self._block += 1
        out, self._buf = self._buf[:n], self._buf[n:]
        return out

    def randbelow(self, bound: int) -> int:
        """Uniform integer in [0, bound) via rejection sampling."""
        if bound <= 0:
            raise ValueError("bound must be positive")
        nbytes = (bound - 1).bit_length() // 8 + 1
        space = 1 << (8 * nbytes)
        limit = space - space % bound
        while True:
            v = int.from_bytes(self.read(nbytes), "big")
            if v < limit:
                return v % bound


def permuted_indices(c1_seed: bytes, d: int, k: int) -> tuple[int, ...]:
    """First k entries of the keyed pseudorandom permutation of [0, d).

    Sparse Fisher-Yates: only the first k swap positions are materialized,
    so memory is O(k) even for very large d.
    """
    stream = XofStream(b"storaudit-prp", c1_seed)
    taken: dict[int, int] = {}
    out = []
    for j in range(k):
        l = j + stream.randbelow(d - j)
        out.append(taken.get(l, l))
        taken[l] = taken.get(j, j)
    return tuple(out)


def expand_challenge(suite: BilinearSuite, ch: Challenge, d: int, k: int) -> ChallengeSet:
    """Expand (C1, C2) into min(k, d) distinct indices and k coefficients."""
    if d < 1 or k < 1:
        raise ValueError("d and k must be >= 1")
    kk = min(k, d)
    indices = permuted_indices(ch.c1_seed, d, kk)
    coefficients = tuple(
        suite.hash_to_scalar(b"chal-c", ch.c2_seed + j.to_bytes(8, "big"))
        for j in range(kk)
    )
    return ChallengeSet(indices=indices, coefficients=coefficients, k=kk)

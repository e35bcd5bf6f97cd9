"""Deterministic mapping between file bytes and field-element chunks.

A block is one scalar built from `block_bytes` consecutive file bytes
(big-endian); `s` consecutive blocks form a chunk, which doubles as the
coefficient vector of that chunk's degree-(s-1) polynomial. 31-byte
blocks keep every value strictly below the 254-bit group order without
rejection sampling.
"""

from __future__ import annotations

from dataclasses import dataclass

from .algebra import bn254
from .errors import EmptyFile, InconsistentLength

DEFAULT_BLOCK_BYTES = 31


@dataclass(frozen=True)
class EncodingParams:
    s: int
    block_bytes: int = DEFAULT_BLOCK_BYTES

    def __post_init__(self):
        if self.s < 1:
            raise ValueError("s must be >= 1")
        if not 0 < self.block_bytes * 8 < bn254().order.bit_length():
            raise ValueError("block_bytes must keep blocks below the group order")


@dataclass(frozen=True)
class FileEncoding:
    """A file as d chunks of s blocks each (zero-padded at the tail)."""

    name: int                      # public file identifier in Z_p
    n: int                         # total (unpadded) block count
    d: int                         # chunk count, ceil(n / s)
    s: int
    block_bytes: int
    chunks: tuple[tuple[int, ...], ...]
    original_length: int


def block_and_chunk_counts(length: int, params: EncodingParams) -> tuple[int, int]:
    """(n, d) for a file of `length` bytes: n = ceil(length / block_bytes),
    d = ceil(n / s)."""
    if length < 1:
        raise EmptyFile("cannot encode an empty file")
    n = -(-length // params.block_bytes)
    return n, -(-n // params.s)


def encode_file(data: bytes, params: EncodingParams, name: int) -> FileEncoding:
    """Split bytes into chunks of s blocks of block_bytes bytes each."""
    if not data:
        raise EmptyFile("cannot encode an empty file")
    bb = params.block_bytes
    n, d = block_and_chunk_counts(len(data), params)
    blocks = [
        int.from_bytes(data[i * bb : (i + 1) * bb].ljust(bb, b"\0"), "big")
        for i in range(n)
    ]
    blocks.extend([0] * (d * params.s - n))
    chunks = tuple(
        tuple(blocks[i * params.s : (i + 1) * params.s]) for i in range(d)
    )
    return FileEncoding(
        name=name,
        n=n,
        d=d,
        s=params.s,
        block_bytes=bb,
        chunks=chunks,
        original_length=len(data),
    )


def decode_file(enc: FileEncoding, params: EncodingParams) -> bytes:
    """Exact inverse of encode_file for a consistent encoding."""
    bb = params.block_bytes
    if enc.original_length > enc.n * bb:
        raise InconsistentLength(
            f"original_length {enc.original_length} exceeds {enc.n} blocks"
        )
    flat = [b for chunk in enc.chunks for b in chunk][: enc.n]
    raw = b"".join(b.to_bytes(bb, "big") for b in flat)
    return raw[: enc.original_length]


def chunk_polynomial_eval(chunk, x: int, order: int | None = None) -> int:
    """Evaluate the chunk polynomial m_0 + m_1 x + ... + m_{s-1} x^{s-1}."""
    p = order if order is not None else bn254().order
    acc = 0
    for c in reversed(chunk):
        acc = (acc * x + c) % p
    return acc

"""Bilinear-group context: pairing suite, canonical encodings, hash oracles.

The reference suite is the 254-bit BN curve shipped by Ethereum and by the
Go "bn256" libraries (a.k.a. alt_bn128 / BN254). Group arithmetic is done
by the compiled `storaudit._backend` extension; this module owns every
byte-level encoding and all domain separation, so the wire formats are
fully specified in Python.

Encodings (reference suite):
  scalar   32 bytes, big-endian, value < group order.
  G1       32 bytes: compressed x with two flag bits in the top byte
           (0x80 = point at infinity, 0x40 = y is the lexicographically
           larger root).
  G2       64 bytes: x.c1 (with the same flag bits) || x.c0.
  GT       192 bytes: the six base-field coefficients of the quadratic
           tower's w-part, 0x80 flag on the first byte selecting the
           other half's square root. Only unitary (pairing-subgroup)
           elements are encodable, which halves the naive 384-byte size.

All hash oracles are built from expand_message_xmd (SHA-256) with
protocol-wide domain-separation prefixes; scalars use wide (512-bit)
reduction to avoid modulo bias.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cache

from . import _backend
from .errors import InvalidEncoding, WrongLength

G1Point = _backend.G1
G2Point = _backend.G2
GTElement = _backend.GT

SUITE_BN254 = 0x01

_INF_FLAG = 0x80
_SIGN_FLAG = 0x40

_DST_PREFIX_G1 = b"STORAUDIT-V01-BN254G1_XMD:SHA-256_SVDW_RO_"
_DST_PREFIX_FR = b"STORAUDIT-V01-FR_XMD:SHA-256_"


@dataclass(frozen=True, eq=False)
class BilinearSuite:
    """Pairing-group context shared by every protocol operation."""

    suite_id: int
    name: str
    order: int                # prime order p of G1/G2/GT (the scalar field)
    field_modulus: int        # base-field modulus (coordinate values)
    g1: G1Point
    g2: G2Point
    security_lambda: int = 128
    enc_scalar_bytes: int = 32
    enc_g1_bytes: int = 32
    enc_g2_bytes: int = 64
    enc_gt_bytes: int = 192
    gt_one: GTElement = field(default_factory=GTElement.one)

    # -- pairing ---------------------------------------------------------

    def pairing(self, a: G1Point, b: G2Point) -> GTElement:
        return _backend.pairing(a, b)

    # -- hash oracles ----------------------------------------------------

    def hash_to_g1(self, domain_tag: bytes, message: bytes) -> G1Point:
        """Random oracle into G1 (hash_to_curve, random-oracle variant)."""
        return _backend.G1.hash_to_curve(self._g1_dst(domain_tag), message)

    def hash_to_g1_many(self, domain_tag: bytes, messages: list[bytes]) -> list[G1Point]:
        return _backend.G1.hash_to_curve_batch(self._g1_dst(domain_tag), messages)

    def hash_to_scalar(self, domain_tag: bytes, message: bytes) -> int:
        """Random oracle into Z_p with wide (2x) reduction."""
        dst = _DST_PREFIX_FR + domain_tag
        wide = _backend.expand_message(message, dst, 64)
        return int.from_bytes(wide, "big") % self.order

    def hash_gt_to_scalar(self, x: GTElement) -> int:
        """The oracle mapping GT to Z_p: hash of the canonical encoding."""
        return self.hash_to_scalar(b"gt-to-fr", self.gt_to_bytes(x))

    def _g1_dst(self, domain_tag: bytes) -> bytes:
        dst = _DST_PREFIX_G1 + domain_tag
        if len(dst) > 255:
            raise ValueError("domain tag too long")
        return dst

    # -- scalar encoding -------------------------------------------------

    def scalar_to_bytes(self, x: int) -> bytes:
        if not 0 <= x < self.order:
            raise InvalidEncoding("scalar out of range")
        return x.to_bytes(self.enc_scalar_bytes, "big")

    def scalar_from_bytes(self, buf: bytes) -> int:
        if len(buf) != self.enc_scalar_bytes:
            raise WrongLength(f"scalar must be {self.enc_scalar_bytes} bytes")
        x = int.from_bytes(buf, "big")
        if x >= self.order:
            raise InvalidEncoding("non-canonical scalar (>= group order)")
        return x

    # -- G1 encoding -----------------------------------------------------

    def g1_to_bytes(self, p: G1Point) -> bytes:
        parts = p.compressed_parts()
        if parts is None:
            return bytes([_INF_FLAG]) + bytes(self.enc_g1_bytes - 1)
        x, y_larger = parts
        buf = bytearray(x.to_bytes(self.enc_g1_bytes, "big"))
        if y_larger:
            buf[0] |= _SIGN_FLAG
        return bytes(buf)

    def g1_from_bytes(self, buf: bytes) -> G1Point:
        if len(buf) != self.enc_g1_bytes:
            raise WrongLength(f"G1 must be {self.enc_g1_bytes} bytes")
        if buf[0] & _INF_FLAG:
            if buf[0] != _INF_FLAG or any(buf[1:]):
                raise InvalidEncoding("malformed point-at-infinity encoding")
            return G1Point.identity()
        x = int.from_bytes(bytes([buf[0] & 0x3F]) + buf[1:], "big")
        try:
            return G1Point.from_compressed(x, bool(buf[0] & _SIGN_FLAG))
        except ValueError as exc:
            raise InvalidEncoding(str(exc)) from None

    # -- G2 encoding -----------------------------------------------------

    def g2_to_bytes(self, p: G2Point) -> bytes:
        parts = p.compressed_parts()
        if parts is None:
            return bytes([_INF_FLAG]) + bytes(self.enc_g2_bytes - 1)
        x0, x1, y_larger = parts
        buf = bytearray(x1.to_bytes(32, "big") + x0.to_bytes(32, "big"))
        if y_larger:
            buf[0] |= _SIGN_FLAG
        return bytes(buf)

    def g2_from_bytes(self, buf: bytes) -> G2Point:
        if len(buf) != self.enc_g2_bytes:
            raise WrongLength(f"G2 must be {self.enc_g2_bytes} bytes")
        if buf[0] & _INF_FLAG:
            if buf[0] != _INF_FLAG or any(buf[1:]):
                raise InvalidEncoding("malformed point-at-infinity encoding")
            return G2Point.identity()
        x1 = int.from_bytes(bytes([buf[0] & 0x3F]) + buf[1:32], "big")
        x0 = int.from_bytes(buf[32:], "big")
        try:
            return G2Point.from_compressed(x0, x1, bool(buf[0] & _SIGN_FLAG))
        except ValueError as exc:
            raise InvalidEncoding(str(exc)) from None

    # -- GT encoding -----------------------------------------------------

    def gt_to_bytes(self, x: GTElement) -> bytes:
        try:
            coeffs, c0_larger = x.compress()
        except ValueError as exc:
            raise InvalidEncoding(str(exc)) from None
        buf = bytearray(b"".join(int(c).to_bytes(32, "big") for c in coeffs))
        if c0_larger:
            buf[0] |= _INF_FLAG
        return bytes(buf)

    def gt_from_bytes(self, buf: bytes) -> GTElement:
        if len(buf) != self.enc_gt_bytes:
            raise WrongLength(f"GT must be {self.enc_gt_bytes} bytes")
        if buf[0] & _SIGN_FLAG:
            raise InvalidEncoding("reserved GT flag bit set")
        c0_larger = bool(buf[0] & _INF_FLAG)
        head = bytes([buf[0] & 0x3F]) + buf[1:32]
        coeffs = [int.from_bytes(head, "big")]
        coeffs += [int.from_bytes(buf[32 * i : 32 * (i + 1)], "big") for i in range(1, 6)]
        try:
            return GTElement.decompress(coeffs, c0_larger)
        except ValueError as exc:
            raise InvalidEncoding(str(exc)) from None


@cache
def bn254() -> BilinearSuite:
    """The reference suite (shared singleton)."""
    return BilinearSuite(
        suite_id=SUITE_BN254,
        name="bn254",
        order=_backend.fr_modulus(),
        field_modulus=_backend.fq_modulus(),
        g1=G1Point.generator(),
        g2=G2Point.generator(),
    )


def suite_by_id(suite_id: int) -> BilinearSuite:
    if suite_id == SUITE_BN254:
        return bn254()
    raise InvalidEncoding(f"unknown suite id {suite_id:#x}")

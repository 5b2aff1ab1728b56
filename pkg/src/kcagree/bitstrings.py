"""Bit strings, the self-delimiting pair encoding, and pair padding.

Bit strings are plain Python ``str`` over the characters '0' and '1'
(the empty string is a valid bit string).  Using ``str`` keeps every
value hashable and immutable, and string comparison already gives the
lexicographic order that, at equal length, agrees with numeric value.

A pair (pi, x) is encoded self-delimitingly as

    0 pi[0] 0 pi[1] ... 0 pi[-1] 1 x

so the encoded length is exactly 2*len(pi) + 1 + len(x).  The first
'1' at an even offset terminates pi, which makes decoding unique.
"""

from __future__ import annotations

import struct
from dataclasses import dataclass

from .errors import MalformedPairCode, PadTooSmall

Bits = str

_BITSET = frozenset("01")


def check_bits(s: Bits, what: str = "bit string") -> Bits:
    """Validate that ``s`` contains only '0'/'1'; returns ``s``."""
    if not _BITSET.issuperset(s):
        raise ValueError(f"{what} must contain only '0'/'1', got {s!r}")
    return s


def pair_length(pi: Bits, x: Bits) -> int:
    """Encoded length of the pair: 2|pi| + 1 + |x|."""
    return 2 * len(pi) + 1 + len(x)


def cat_length(pi: Bits, x: Bits) -> int:
    """Length of the plain concatenation |pi x| (used in log terms)."""
    return len(pi) + len(x)


@dataclass(frozen=True)
class PairCode:
    """A pair of bit strings together with its canonical encoding."""

    pi: Bits
    x: Bits
    encoded: Bits

    def __post_init__(self) -> None:
        if len(self.encoded) != pair_length(self.pi, self.x):
            raise ValueError("encoded length violates 2|pi|+1+|x|")


def encode_pair(pi: Bits, x: Bits) -> PairCode:
    """Encode (pi, x) self-delimitingly; len(encoded) == 2|pi|+1+|x|."""
    check_bits(pi, "pi")
    check_bits(x, "x")
    encoded = "".join("0" + b for b in pi) + "1" + x
    return PairCode(pi=pi, x=x, encoded=encoded)


def decode_pair(code: Bits) -> tuple[Bits, Bits]:
    """Inverse of ``encode_pair``.

    Scans marker bits at even offsets; the first '1' marker ends pi and
    everything after it is x.  Raises MalformedPairCode when no
    terminating marker exists (including the empty string and encodings
    that stop in the middle of a (marker, bit) group).
    """
    check_bits(code, "pair code")
    pi_bits = []
    i = 0
    while i < len(code):
        if code[i] == "1":
            return "".join(pi_bits), code[i + 1:]
        if i + 1 >= len(code):
            raise MalformedPairCode(f"truncated group at offset {i}")
        pi_bits.append(code[i + 1])
        i += 2
    raise MalformedPairCode("no terminating 1-marker at an even offset")


def pad_pair(pi: Bits, z: Bits, ell: int) -> PairCode:
    """Pad (pi, z) to a pair of encoded length exactly ``ell``.

    The padded pair is (pi', z') with pi' = pi + '1' + '0'*k and z'
    either z or z plus one extension bit.  The encoded length is

        2*(len(pi) + 1 + k) + 1 + len(z')

    so for a given ell exactly one of the two z' lengths matches the
    parity, and k is then forced.  When parity admits the unextended z
    we use it (minimal mutation); the extension bit, when needed, is
    '0' (its value is never read downstream).
    """
    check_bits(pi, "pi")
    check_bits(z, "z")
    base = pair_length(pi, z)
    slack = ell - base - 2  # 2 covers the mandatory '1' marker in pi'
    if slack < 0:
        raise PadTooSmall(f"need length >= {base + 2}, got {ell}")
    if slack % 2 == 0:
        k = slack // 2
        z_padded = z
    else:
        if slack < 1:
            raise PadTooSmall(f"no (k, extension) solves length {ell}")
        k = (slack - 1) // 2
        z_padded = z + "0"
    pi_padded = pi + "1" + "0" * k
    out = encode_pair(pi_padded, z_padded)
    assert len(out.encoded) == ell
    return out


def bits_to_packed(s: Bits) -> bytes:
    """Canonical byte form: u32 little-endian bit count, then the bits
    packed MSB-first into ceil(len/8) bytes (zero-filled tail)."""
    check_bits(s)
    header = struct.pack("<I", len(s))
    padded = s + "0" * (-len(s) % 8)
    body = bytes(int(padded[i:i + 8], 2) for i in range(0, len(padded), 8))
    return header + body


def packed_to_bits(raw: bytes) -> Bits:
    """Inverse of ``bits_to_packed``."""
    if len(raw) < 4:
        raise ValueError("packed form shorter than its length header")
    (nbits,) = struct.unpack("<I", raw[:4])
    body = raw[4:]
    if len(body) != (nbits + 7) // 8:
        raise ValueError("packed body length disagrees with header")
    all_bits = "".join(format(byte, "08b") for byte in body)
    tail = all_bits[nbits:]
    if tail.strip("0"):
        raise ValueError("nonzero padding bits in packed form")
    return all_bits[:nbits]


def bits_from_int(value: int, width: int) -> Bits:
    """Fixed-width MSB-first rendering of ``value``."""
    if width == 0:
        if value != 0:
            raise ValueError("nonzero value needs width > 0")
        return ""
    if value < 0 or value >= 1 << width:
        raise ValueError(f"value {value} does not fit in {width} bits")
    return format(value, f"0{width}b")


def int_from_bits(s: Bits) -> int:
    """Numeric value of an MSB-first bit string; empty string is 0."""
    return int(s, 2) if s else 0


def all_bitstrings(length: int):
    """All bit strings of exactly ``length`` bits, in numeric order."""
    for v in range(1 << length):
        yield bits_from_int(v, length)


def all_bitstrings_upto(max_length: int):
    """All bit strings of length 0..max_length, shortest first."""
    for n in range(max_length + 1):
        yield from all_bitstrings(n)

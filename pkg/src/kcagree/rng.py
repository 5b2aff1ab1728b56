"""Seed derivation and bit-level randomness.

All experiment randomness flows from a single user-supplied 64-bit
master seed.  Sub-streams (per trial, per role) are derived by hashing
the master seed together with a label path through SHA-256 and taking
the first 8 bytes; the derivation is order-sensitive and documented
here so runs are reproducible independent of thread schedule.
"""

from __future__ import annotations

import hashlib
import random

from .bitstrings import Bits

MASK64 = (1 << 64) - 1


def derive_seed(master: int, *path: int | str) -> int:
    """Derive a 64-bit sub-seed from ``master`` and a label path."""
    h = hashlib.sha256()
    h.update((master & MASK64).to_bytes(8, "little"))
    for part in path:
        if isinstance(part, int):
            h.update(b"i" + part.to_bytes(8, "little", signed=True))
        else:
            h.update(b"s" + part.encode("utf-8") + b"\x00")
    return int.from_bytes(h.digest()[:8], "little")


def make_rng(seed: int) -> random.Random:
    return random.Random(seed & MASK64)


def rand_bits(rng: random.Random, k: int) -> Bits:
    """Draw exactly k uniform bits as a '0'/'1' string."""
    if k == 0:
        return ""
    return format(rng.getrandbits(k), f"0{k}b")

"""Keyed seed derivation so every random draw is reproducible in isolation."""

from __future__ import annotations

import hashlib
import random


def derive_seed(seed: int, *keys) -> int:
    h = hashlib.blake2b(digest_size=8)
    h.update(str(int(seed)).encode())
    for k in keys:
        h.update(b"\x1f")
        h.update(str(k).encode("utf-8"))
    return int.from_bytes(h.digest(), "little")


def rng_for(seed: int, *keys) -> random.Random:
    return random.Random(derive_seed(seed, *keys))

"""
Seeded randomness.

Every randomized operation takes an explicit integer seed. Nested streams get
child seeds from a hash of (parent seed, stream indices), so trials run in any
order or thread produce the same numbers.
"""
import hashlib
import struct
from typing import Union

import numpy as np

SeedLike = Union[int, np.random.Generator]

_MASK64 = (1 << 64) - 1


def derive_seed(parent: int, *stream: int) -> int:
    """Child seed for the given stream indices; a 64-bit unsigned integer."""
    h = hashlib.blake2b(digest_size=8, person=b"lvc-seed")
    h.update(struct.pack("<Q", parent & _MASK64))
    for index in stream:
        h.update(struct.pack("<q", int(index)))
    return int.from_bytes(h.digest(), "little")


def make_rng(seed: SeedLike) -> np.random.Generator:
    if isinstance(seed, np.random.Generator):
        return seed
    return np.random.default_rng(int(seed) & _MASK64)

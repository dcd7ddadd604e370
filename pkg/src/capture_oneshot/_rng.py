"""Derivation of independent, reproducible random streams.

Every stochastic component draws from a `numpy.random.Generator` spawned
from the run seed plus a purpose key, so any sample can be regenerated
bit-exactly from (seed, key...) alone, independent of execution order or
worker scheduling.
"""

from __future__ import annotations

import zlib

import numpy as np

MAX_SEED = 2**63  # seeds are stored as non-negative int64


def _key_to_int(key: int | str) -> int:
    if isinstance(key, str):
        return zlib.crc32(key.encode("utf-8"))
    return int(key) & (2**64 - 1)


def spawn_rng(seed: int, *keys: int | str) -> np.random.Generator:
    """Return a generator for stream (seed, *keys).

    String keys are hashed with crc32, which is stable across platforms
    and Python processes (unlike the builtin `hash`).
    """
    entropy = [int(seed) & (2**64 - 1)] + [_key_to_int(k) for k in keys]
    return np.random.Generator(np.random.PCG64(np.random.SeedSequence(entropy)))


def draw_seed(rng: np.random.Generator) -> int:
    """Draw a fresh 63-bit seed suitable for storing in JSON records."""
    return int(rng.integers(0, MAX_SEED))

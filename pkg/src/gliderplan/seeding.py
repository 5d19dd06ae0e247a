"""Deterministic RNG stream derivation.

Every stochastic component derives its generator from integer keys via
``rng_from``, so identical seeds reproduce identical runs regardless of
execution order or thread count. Keys may be negative; each is folded to
an unsigned 64-bit word before feeding numpy's SeedSequence.
"""

from __future__ import annotations

import hashlib

import numpy as np

_MASK64 = 0xFFFFFFFFFFFFFFFF

# Stream tags keep independent consumers of the same base seed apart.
STREAM_TREE = 0x7E11
STREAM_TRIAL = 0x731A
STREAM_WORLD_BIAS = 0xB1A5
STREAM_WORLD_DIVE = 0xD1FE
STREAM_PLAN = 0x91A2
STREAM_CALIB = 0xCA11
STREAM_SPLIT = 0x5911
STREAM_CEM = 0xCE31
STREAM_SCENARIO = 0x5CE2


def fold64(key: int) -> int:
    """Map a (possibly negative) int to an unsigned 64-bit word."""
    return key & _MASK64


def seed_sequence(*keys: int) -> np.random.SeedSequence:
    return np.random.SeedSequence([fold64(k) for k in keys])


def rng_from(*keys: int) -> np.random.Generator:
    """Generator derived deterministically from integer keys."""
    return np.random.default_rng(seed_sequence(*keys))


def stable_id(text: str) -> int:
    """Stable 64-bit integer for a string (independent of PYTHONHASHSEED)."""
    digest = hashlib.sha256(text.encode("utf-8")).digest()
    return int.from_bytes(digest[:8], "little")

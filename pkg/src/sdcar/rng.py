"""Deterministic random streams.

All randomness in the package flows from a single 64-bit seed.  Consumers
request a named stream; the (seed, label) pair keys a counter-based Philox
generator, so streams are mutually independent and reproducible no matter
in which order they are drawn from.
"""

from __future__ import annotations

import zlib

import numpy as np


def stream(seed: int, label: str) -> np.random.Generator:
    """Return the generator for ``label`` under the run-wide ``seed``.

    The key is (seed, crc32(label)); identical arguments always produce an
    identical stream.
    """
    seed = int(seed)
    if not 0 <= seed < 2**64:
        raise ValueError("seed must fit in an unsigned 64-bit integer")
    key = np.array([seed, zlib.crc32(label.encode("utf-8"))], dtype=np.uint64)
    return np.random.Generator(np.random.Philox(key=key))

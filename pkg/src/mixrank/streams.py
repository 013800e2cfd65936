"""Deterministic, splittable random streams for parallel Monte Carlo.

Every simulation replication owns a Philox counter-based stream whose 128-bit
key is a hash of ``(master seed, cell key, replication index)``.  Streams are
therefore independent by construction, any replication can be regenerated in
isolation, and results cannot depend on worker count or scheduling order.
"""

import hashlib
import struct

import numpy as np


def stream_key(*parts) -> int:
    """Hash a tuple of ints/floats/strings into a 128-bit stream key.

    Floats are keyed by their IEEE-754 bit pattern, integers by their decimal
    digits (so arbitrary-precision seeds are fine).  The encoding is
    platform-independent.
    """
    h = hashlib.blake2b(digest_size=16)
    for part in parts:
        if isinstance(part, (bool, np.bool_)):
            raise TypeError("booleans are ambiguous stream-key parts")
        if isinstance(part, (int, np.integer)):
            h.update(b"i%d;" % int(part))
        elif isinstance(part, (float, np.floating)):
            h.update(b"f" + struct.pack("<d", float(part)))
        elif isinstance(part, str):
            h.update(b"s" + part.encode("utf-8") + b";")
        else:
            raise TypeError(f"unsupported stream-key part: {part!r}")
    return int.from_bytes(h.digest(), "little")


def replication_rng(master_seed: int, cell_key: int, replication: int) -> np.random.Generator:
    """Generator for one replication of one simulation cell."""
    key = stream_key(master_seed, cell_key, replication)
    return np.random.Generator(np.random.Philox(key=key))


def seeded_rng(master_seed: int, *labels) -> np.random.Generator:
    """Standalone generator for a named, single-stream computation."""
    return np.random.Generator(np.random.Philox(key=stream_key(master_seed, *labels)))

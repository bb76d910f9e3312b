"""Seeded, portable random streams.

Every stochastic stage in the pipeline draws from its own named stream so
that adding or reordering stages never perturbs the draws of another stage.
Streams are backed by counter-based Philox generators keyed by
(seed, blake2b(stage name)), which makes them reproducible bit-for-bit
across platforms and independent of each other by construction.

Stage names currently in use:

    scene:   "static.count", "static.loc", "static.marks", "static.repulsion",
             "dynamic.count", "dynamic.loc", "dynamic.marks",
             "dynamic.repulsion", "dynamic.dest"
    assets:  "asset.<category>"
    camera:  "camera"

The render kernels do not use these streams; they use stateless splitmix64
sequences keyed per (seed, pixel, sample) so that results are independent
of tiling and thread count (see render.kernels).
"""

import hashlib

import numpy as np

MASK64 = (1 << 64) - 1


def stage_id(name: str) -> int:
    """Stable 64-bit id for a stage name (process-independent, unlike hash())."""
    digest = hashlib.blake2b(name.encode("utf-8"), digest_size=8).digest()
    return int.from_bytes(digest, "little")


def stream(seed: int, stage: str) -> np.random.Generator:
    """Independent generator for one sampling stage of one scene seed."""
    key = np.array([seed & MASK64, stage_id(stage)], dtype=np.uint64)
    return np.random.Generator(np.random.Philox(key=key))


def splitmix64(x: int) -> int:
    """Reference splitmix64 finalizer; the numba kernels implement the same mix.

    Kept in pure Python so tests can cross-check the compiled version.
    """
    x = (x + 0x9E3779B97F4A7C15) & MASK64
    x = ((x ^ (x >> 30)) * 0xBF58476D1CE4E5B9) & MASK64
    x = ((x ^ (x >> 27)) * 0x94D049BB133111EB) & MASK64
    return (x ^ (x >> 31)) & MASK64

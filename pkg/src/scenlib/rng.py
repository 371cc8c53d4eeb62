"""Deterministic random-stream construction.

All randomness in the toolkit flows through Philox (a counter-based bit
generator) keyed by a structured entropy tuple, so every draw sequence is a
pure function of (base seed, purpose tag, identifying integers) and is stable
across processes, thread counts, and evaluation order.

Stream tags (first element after the base seed):
    STREAM_NDD    - synthetic naturalistic-sample generation
    STREAM_SIM    - per-scenario simulation noise; keyed (seed, tag, cell, replication)
    STREAM_SAMPLE - scenario draws from a sampling policy
    STREAM_TEST   - per-draw outcome seeds during evaluation
"""

from __future__ import annotations

import numpy as np

STREAM_NDD = 1
STREAM_SIM = 2
STREAM_SAMPLE = 3
STREAM_TEST = 4


def make_rng(seed: int, *key: int) -> np.random.Generator:
    """Generator for the stream identified by (seed, *key)."""
    return np.random.Generator(np.random.Philox(np.random.SeedSequence((int(seed),) + tuple(int(k) for k in key))))


def simulation_rng(seed: int, cell: int, replication: int) -> np.random.Generator:
    """Noise stream for one replication of one scenario cell.

    The (cell, replication) keying makes exhaustive sweeps independent of
    evaluation order and lets batched and per-cell code paths draw identical
    noise sequences.
    """
    return make_rng(seed, STREAM_SIM, cell, replication)

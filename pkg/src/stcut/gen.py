"""Seeded instance generators for tests and benchmarks.

All randomness comes from numpy's Philox generator (a counter-based,
splittable 64-bit PRNG), never the platform default, so the same GenSpec
yields the same graph everywhere. Sources and sinks are fixed at 0 and n-1;
random families stitch a guaranteed s-t path unless the ``unreachable``
toggle asks for a NoPath instance.

Families:

random_digraph   uniform random edges plus a stitched s-t path.
layered_dag      nodes in contiguous layers, edges only between consecutive
                 layers, stitched through one representative per layer.
planted_chain    ``planted`` + 1 blocks in series, joined by single connector
                 edges. Each block carries a two-route skeleton between its
                 entry and exit plus random inner edges, so the connectors
                 are exactly the s-t bridges, in series order.
parallel_braid   two short node-disjoint s-t routes plus random edges: no
                 bridges and no articulation points, by construction.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

import numpy as np

from .graph import DirectedGraph, build_graph

__all__ = ["GenSpec", "generate", "BadSpec", "FAMILIES"]

FAMILIES = ("random_digraph", "layered_dag", "planted_chain", "parallel_braid")


class BadSpec(ValueError):
    pass


@dataclass(frozen=True)
class GenSpec:
    family: str
    n: int
    density: float = 1.0
    seed: int = 0
    planted: Optional[int] = None
    unreachable: bool = False


def _rng(seed: int) -> np.random.Generator:
    return np.random.Generator(np.random.Philox(seed))


def _validate(spec: GenSpec) -> None:
    if spec.family not in FAMILIES:
        raise BadSpec(f"unknown family {spec.family!r}, expected one of {FAMILIES}")
    if spec.n < 2:
        raise BadSpec(f"need at least 2 nodes, got {spec.n}")
    if spec.density < 0:
        raise BadSpec(f"density must be non-negative, got {spec.density}")
    if spec.planted is not None and spec.planted < 0:
        raise BadSpec(f"planted count must be non-negative, got {spec.planted}")
    if spec.unreachable and spec.family in ("planted_chain", "parallel_braid"):
        raise BadSpec(f"unreachable toggle is not supported for {spec.family}")


def _random_digraph(spec: GenSpec, rng: np.random.Generator) -> np.ndarray:
    n = spec.n
    cnt = int(round(spec.density * n))
    tails = rng.integers(0, n, size=cnt)
    if spec.unreachable:
        # Excluding t = n-1 as a head leaves it with no incoming edge at all.
        heads = rng.integers(0, n - 1, size=cnt)
        return np.stack([tails, heads], axis=1)
    heads = rng.integers(0, n, size=cnt)
    pairs = [np.stack([tails, heads], axis=1)]
    hop_budget = min(n - 2, 4)
    hops = int(rng.integers(0, hop_budget + 1)) if hop_budget > 0 else 0
    mids = rng.choice(np.arange(1, n - 1), size=hops, replace=False) if hops else np.empty(0, dtype=np.int64)
    chain = np.concatenate([[0], mids, [n - 1]])
    pairs.append(np.stack([chain[:-1], chain[1:]], axis=1))
    return np.concatenate(pairs)


def _chunk_starts(n: int, k: int) -> np.ndarray:
    """Boundaries of k contiguous chunks covering [0, n), balanced sizes."""
    sizes = np.full(k, n // k, dtype=np.int64)
    sizes[: n % k] += 1
    starts = np.zeros(k + 1, dtype=np.int64)
    np.cumsum(sizes, out=starts[1:])
    return starts


def _layered_dag(spec: GenSpec, rng: np.random.Generator) -> np.ndarray:
    n = spec.n
    layers = max(2, int(round(n ** 0.5)))
    layers = min(layers, n)
    starts = _chunk_starts(n, layers)
    cnt = int(round(spec.density * n))
    u = rng.integers(0, starts[-2], size=cnt)
    lay = np.searchsorted(starts, u, side="right") - 1
    span = starts[lay + 2] - starts[lay + 1]
    v = starts[lay + 1] + rng.integers(0, span)
    pairs = np.stack([u, v], axis=1)
    if spec.unreachable:
        return pairs[v != n - 1]
    # One representative per layer: s, the first node of each middle layer, t.
    reps = np.concatenate([[0], starts[1:layers - 1], [n - 1]])
    stitch = np.stack([reps[:-1], reps[1:]], axis=1)
    return np.concatenate([pairs, stitch])


def _block_skeleton(lo: int, hi: int) -> list[tuple[int, int]]:
    """Strongly connected, bridge-free scaffolding of one block.

    Two edge- and node-disjoint routes between the entry (lo) and the exit
    (hi - 1) guarantee no inner edge can be an s-t bridge; a directed cycle
    through all block nodes keeps the block strongly connected.
    """
    b = hi - lo
    entry, exit_ = lo, hi - 1
    if b == 1:
        return []
    if b == 2:
        routes = [(entry, exit_), (entry, exit_)]
    elif b == 3:
        routes = [(entry, lo + 1), (lo + 1, exit_), (entry, exit_)]
    else:
        routes = [(entry, lo + 1), (lo + 1, exit_), (entry, lo + 2), (lo + 2, exit_)]
    cycle = [(v, v + 1) for v in range(lo, hi - 1)] + [(exit_, entry)]
    return routes + cycle


def _planted_chain(spec: GenSpec, rng: np.random.Generator) -> tuple[np.ndarray, list[int]]:
    k = (1 if spec.planted is None else spec.planted) + 1
    if k > spec.n:
        raise BadSpec(f"{k} blocks need at least {k} nodes, got {spec.n}")
    starts = _chunk_starts(spec.n, k)
    chunks = []
    for j in range(k):
        lo, hi = int(starts[j]), int(starts[j + 1])
        skel = np.asarray(_block_skeleton(lo, hi), dtype=np.int64).reshape(-1, 2)
        extra = rng.integers(lo, hi, size=(int(spec.density * (hi - lo)), 2))
        chunks.append(np.concatenate([skel, extra]))
    inner = np.concatenate(chunks)
    exits = starts[1:-1] - 1
    entries = starts[1:-1]
    connectors = np.stack([exits, entries], axis=1)
    planted = list(range(inner.shape[0], inner.shape[0] + connectors.shape[0]))
    return np.concatenate([inner, connectors]), planted


def _parallel_braid(spec: GenSpec, rng: np.random.Generator) -> np.ndarray:
    n = spec.n
    if n == 2:
        skel = [(0, 1), (0, 1)]
    elif n == 3:
        skel = [(0, 1), (1, 2), (0, 2)]
    else:
        skel = [(0, 1), (1, n - 1), (0, 2), (2, n - 1)]
    extra = rng.integers(0, n, size=(int(spec.density * n), 2))
    return np.concatenate([np.asarray(skel, dtype=np.int64), extra])


def generate(spec: GenSpec) -> tuple[DirectedGraph, int, int, Optional[list[int]]]:
    """Build the instance for ``spec``: (graph, s, t, planted_truth).

    ``planted_truth`` is the known bridge sequence for planted_chain, the
    empty list for parallel_braid (no bridges, no articulation points), and
    None for the random families.
    """
    _validate(spec)
    rng = _rng(spec.seed)
    planted_truth: Optional[list[int]] = None
    if spec.family == "random_digraph":
        pairs = _random_digraph(spec, rng)
    elif spec.family == "layered_dag":
        pairs = _layered_dag(spec, rng)
    elif spec.family == "planted_chain":
        pairs, planted_truth = _planted_chain(spec, rng)
    else:
        pairs = _parallel_braid(spec, rng)
        planted_truth = []
    return build_graph(spec.n, pairs), 0, spec.n - 1, planted_truth

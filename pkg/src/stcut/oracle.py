"""Brute-force ground truth by deletion testing and path enumeration.

Everything here is definitional: an edge is a cut iff removing it kills
reachability, a node likewise, components come from repeated reachability
sweeps, and order claims are checked against every enumerated s-t path.
Quadratic cost is accepted; independence from the traversal machinery is the
point.
"""
from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from typing import Iterable, Iterator, Optional, Sequence

import numpy as np

from .graph import DirectedGraph
from .paths import find_st_path, reachable_set

__all__ = [
    "OracleReport",
    "oracle_st_bridges",
    "oracle_st_articulation",
    "oracle_components",
    "enumerate_st_paths",
    "oracle_order",
    "full_oracle_report",
    "PreconditionUnreachable",
    "OrderViolation",
]

DEFAULT_PATH_LIMIT = 10_000


class PreconditionUnreachable(ValueError):
    def __init__(self, s: int, t: int):
        super().__init__(f"sink {t} is not reachable from source {s}")
        self.s = s
        self.t = t


class OrderViolation(AssertionError):
    """Two s-t paths met the cuts in different orders (would falsify the order claim)."""

    def __init__(self, path: list[int], expected: list[int], found: list[int]):
        super().__init__(f"path {path} visits cuts as {found}, expected {expected}")
        self.path = path
        self.expected = expected
        self.found = found


@dataclass(frozen=True, eq=False)
class OracleReport:
    bridges: set[int]
    articulation: set[int]
    bridge_order: list[int]
    articulation_order: list[int]
    comp_bridge: np.ndarray
    comp_artic: np.ndarray


def _require_reachable(g: DirectedGraph, s: int, t: int) -> None:
    if t not in reachable_set(g, s):
        raise PreconditionUnreachable(s, t)


def _map_maybe_parallel(fn, items, max_workers):
    if max_workers and max_workers > 1:
        with ThreadPoolExecutor(max_workers=max_workers) as ex:
            return list(ex.map(fn, items))
    return [fn(x) for x in items]


def oracle_st_bridges(g: DirectedGraph, s: int, t: int, max_workers: Optional[int] = None) -> set[int]:
    """Every edge whose single deletion makes t unreachable from s."""
    _require_reachable(g, s, t)
    cut = _map_maybe_parallel(lambda e: t not in reachable_set(g, s, banned_edges=(e,)), range(g.m), max_workers)
    return {e for e in range(g.m) if cut[e]}


def oracle_st_articulation(g: DirectedGraph, s: int, t: int, max_workers: Optional[int] = None) -> set[int]:
    """Every node other than s and t whose removal makes t unreachable from s."""
    _require_reachable(g, s, t)
    candidates = [v for v in range(g.n) if v != s and v != t]
    cut = _map_maybe_parallel(lambda v: t not in reachable_set(g, s, banned_nodes=(v,)), candidates, max_workers)
    return {v for v, c in zip(candidates, cut) if c}


def oracle_components(
    g: DirectedGraph,
    s: int,
    t: int,
    ordered_cuts: Sequence[int],
    kind: str = "bridge",
) -> np.ndarray:
    """Component index per node from reachability sweeps.

    Component i holds the nodes first reachable from s once cut i is the one
    removed; the final sweep (nothing removed) closes the last component.
    For articulation cuts, cut i itself is assigned component i: it is the
    exit of that component, and its entry-side membership is recoverable from
    the sequence.
    """
    comp = np.zeros(g.n, dtype=np.int64)
    for i, cut in enumerate(ordered_cuts, start=1):
        if kind == "bridge":
            reach = reachable_set(g, s, banned_edges=(cut,))
        else:
            reach = reachable_set(g, s, banned_nodes=(cut,))
        for v in reach:
            if comp[v] == 0:
                comp[v] = i
    for v in reachable_set(g, s):
        if comp[v] == 0:
            comp[v] = len(ordered_cuts) + 1
    if kind != "bridge":
        for i, cut in enumerate(ordered_cuts, start=1):
            comp[cut] = i
    return comp


def _iter_simple_paths(g: DirectedGraph, s: int, t: int) -> Iterator[tuple[list[int], list[int]]]:
    """Yield (node_seq, edge_seq) of every simple s-t path, lexicographic by edge id."""
    if s == t:
        yield [s], []
        return
    heads = g.heads
    on_stack = np.zeros(g.n, dtype=bool)
    on_stack[s] = True
    node_seq = [s]
    edge_seq: list[int] = []
    # Each frame is an iterator over the out-edge ids of the node under it.
    iters = [iter(g.out_edge_ids(s).tolist())]
    while iters:
        e = next(iters[-1], None)
        if e is None:
            iters.pop()
            if edge_seq:
                edge_seq.pop()
                on_stack[node_seq.pop()] = False
            continue
        v = int(heads[e])
        if on_stack[v]:
            continue
        if v == t:
            yield node_seq + [v], edge_seq + [e]
            continue
        on_stack[v] = True
        node_seq.append(v)
        edge_seq.append(e)
        iters.append(iter(g.out_edge_ids(v).tolist()))


def enumerate_st_paths(
    g: DirectedGraph, s: int, t: int, limit: int = DEFAULT_PATH_LIMIT
) -> tuple[list[list[int]], bool]:
    """Up to ``limit`` simple s-t paths as node sequences, plus a truncation flag."""
    paths = []
    truncated = False
    for nodes, _ in _iter_simple_paths(g, s, t):
        if len(paths) == limit:
            truncated = True
            break
        paths.append(nodes)
    return paths, truncated


def oracle_order(
    g: DirectedGraph,
    s: int,
    t: int,
    cuts: Iterable[int],
    kind: str = "bridge",
    limit: int = DEFAULT_PATH_LIMIT,
) -> list[int]:
    """Order of ``cuts`` along the found s-t path, checked on every enumerated path.

    Raises OrderViolation if any enumerated path (up to ``limit``) misses a
    cut or meets the cuts in a different order.
    """
    cut_set = {int(c) for c in cuts}
    p = find_st_path(g, s, t)
    if p is None:
        raise PreconditionUnreachable(s, t)
    ref_items = p.edge_seq if kind == "bridge" else p.node_seq
    expected = [int(x) for x in ref_items if int(x) in cut_set]
    if len(expected) != len(cut_set):
        raise OrderViolation(p.node_seq.tolist(), sorted(cut_set), expected)
    count = 0
    for nodes, edges in _iter_simple_paths(g, s, t):
        if count == limit:
            break
        count += 1
        items = edges if kind == "bridge" else nodes
        found = [x for x in items if x in cut_set]
        if found != expected:
            raise OrderViolation(nodes, expected, found)
    return expected


def full_oracle_report(
    g: DirectedGraph,
    s: int,
    t: int,
    limit: int = DEFAULT_PATH_LIMIT,
    max_workers: Optional[int] = None,
) -> OracleReport:
    """Assemble every ground-truth artefact in one pass; used by verification."""
    bridges = oracle_st_bridges(g, s, t, max_workers=max_workers)
    artic = oracle_st_articulation(g, s, t, max_workers=max_workers)
    bridge_order = oracle_order(g, s, t, bridges, kind="bridge", limit=limit)
    artic_order = oracle_order(g, s, t, artic, kind="articulation", limit=limit)
    return OracleReport(
        bridges=bridges,
        articulation=artic,
        bridge_order=bridge_order,
        articulation_order=artic_order,
        comp_bridge=oracle_components(g, s, t, bridge_order, kind="bridge"),
        comp_artic=oracle_components(g, s, t, artic_order, kind="articulation"),
    )

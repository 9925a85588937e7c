"""Finding an s-t path and answering reachability queries under deletions.

``find_st_path`` supplies the path that the transforms reverse;
``reachable_set`` is the primitive the deletion oracle is built on. The two
deliberately do not share traversal code: the path search is a layered BFS
over the CSR arrays, reachability a plain stack DFS.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Optional

import numpy as np

from .graph import DirectedGraph, _gather_csr

__all__ = ["StPath", "find_st_path", "reachable_set", "SourceBanned"]


class SourceBanned(ValueError):
    def __init__(self, src: int):
        super().__init__(f"source node {src} is in the banned set")
        self.src = src


@dataclass(frozen=True, eq=False)
class StPath:
    """A simple s-t path.

    ``node_seq`` has one more entry than ``edge_seq`` and starts at s, ends
    at t; ``pos_on_path[v]`` is v's index in ``node_seq``, or -1 for nodes
    off the path. For s = t the path is the single node [s] with no edges.
    """

    node_seq: np.ndarray
    edge_seq: np.ndarray
    pos_on_path: np.ndarray

    @property
    def source(self) -> int:
        return int(self.node_seq[0])

    @property
    def sink(self) -> int:
        return int(self.node_seq[-1])

    def __len__(self) -> int:
        return int(self.edge_seq.shape[0])


def _make_path(n: int, node_seq: np.ndarray, edge_seq: np.ndarray) -> StPath:
    pos = np.full(n, -1, dtype=np.int64)
    pos[node_seq] = np.arange(node_seq.shape[0], dtype=np.int64)
    for a in (node_seq, edge_seq, pos):
        a.setflags(write=False)
    return StPath(node_seq, edge_seq, pos)


def _check_node(g: DirectedGraph, v: int, what: str) -> None:
    if not 0 <= v < g.n:
        raise ValueError(f"{what} {v} is not a node of {g!r}")


def find_st_path(g: DirectedGraph, s: int, t: int) -> Optional[StPath]:
    """Lexicographically-first shortest s-t path, or None when t is unreachable.

    Breadth-first parent search expanding each layer in discovery order and
    each node's out-edges in ascending edge id; a node's parent is the first
    (layer-position, edge-id) pair that reaches it, which pins the result
    regardless of how ties could otherwise break.
    """
    _check_node(g, s, "source")
    _check_node(g, t, "sink")
    if s == t:
        return _make_path(g.n, np.array([s], dtype=np.int64), np.empty(0, dtype=np.int64))

    parent_edge = np.full(g.n, -1, dtype=np.int64)
    visited = np.zeros(g.n, dtype=bool)
    visited[s] = True
    frontier = np.array([s], dtype=np.int64)
    while frontier.size and not visited[t]:
        eids = _gather_csr(g.out_indptr, g.out_eids, frontier)
        targets = g.heads[eids]
        fresh = ~visited[targets]
        eids, targets = eids[fresh], targets[fresh]
        if targets.size == 0:
            break
        # np.unique reports the first occurrence of each value; re-sorting the
        # occurrence indices restores discovery order for the next layer.
        _, first = np.unique(targets, return_index=True)
        first.sort()
        frontier = targets[first]
        visited[frontier] = True
        parent_edge[frontier] = eids[first]
    if not visited[t]:
        return None

    rev_edges = []
    v = t
    while v != s:
        e = int(parent_edge[v])
        rev_edges.append(e)
        v = int(g.tails[e])
    edge_seq = np.array(rev_edges[::-1], dtype=np.int64)
    node_seq = np.empty(edge_seq.shape[0] + 1, dtype=np.int64)
    node_seq[0] = s
    node_seq[1:] = g.heads[edge_seq]
    return _make_path(g.n, node_seq, edge_seq)


def reachable_set(
    g: DirectedGraph,
    src: int,
    banned_edges: Iterable[int] = (),
    banned_nodes: Iterable[int] = (),
) -> set[int]:
    """Nodes reachable from ``src`` without using banned edges or nodes.

    Always contains ``src``. Iterative DFS; kept independent of the frontier
    machinery on purpose so oracle results never share a code path with the
    algorithm they check.
    """
    _check_node(g, src, "source")
    banned_e = frozenset(int(e) for e in banned_edges)
    banned_n = frozenset(int(v) for v in banned_nodes)
    if src in banned_n:
        raise SourceBanned(src)
    seen = {int(src)}
    stack = [int(src)]
    heads = g.heads
    while stack:
        u = stack.pop()
        for e in g.out_edge_ids(u):
            e = int(e)
            if e in banned_e:
                continue
            v = int(heads[e])
            if v in seen or v in banned_n:
                continue
            seen.add(v)
            stack.append(v)
    return seen

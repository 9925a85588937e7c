"""The two graph rewrites the traversal runs on.

reverse-path rewrite (for edge cuts)
    Replace every edge of the chosen s-t path P with its reversal and leave
    the rest of the graph alone. A forward search over the result can only
    be stopped by an edge whose deletion separates s from t, so the search
    halts exactly at those edges, in order.

node-split rewrite (for vertex cuts)
    Split each path node x into x0 (keeps x's incoming edges) and x1 (keeps
    the outgoing ones), joined by an internal edge x0 -> x1. The path becomes
    s0 -> s1 -> ... -> t0 -> t1, alternating internal and original edges.
    Reversing that path turns the internal edge of every unavoidable node
    into a stoppable edge; the non-internal path edges are also re-added
    forward so plain edge cuts of the original graph do not interrupt the
    search. Both directions of the non-internal path edges are retained.

Node ids in the split graph: an off-path node and every x0 keep the original
id; x1 of the node at path position j is ``n + j``. Edge labels on the
transformed path live in the pre-reversal id space: original path edges keep
their ids and the internal edge of position j is ``m + j``. Searches treat
path edge entries purely as labels, so the two id spaces never mix.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .graph import DirectedGraph, remove_edges_add_edges
from .paths import StPath, _make_path

__all__ = ["BridgeTransform", "SplitTransform", "bridge_transform", "split_transform", "PathNotInGraph"]


class PathNotInGraph(ValueError):
    """The supplied path does not name a chained sequence of edges of the graph."""


@dataclass(frozen=True, eq=False)
class BridgeTransform:
    """Reverse-path rewrite output.

    ``graph`` holds the surviving edges (ascending original id, renumbered
    densely) followed by one reverse edge per path edge, in path order.
    ``reversed_of`` maps each added reverse edge to the original it flips.
    """

    graph: DirectedGraph
    path: StPath
    reversed_of: dict[int, int]


@dataclass(frozen=True, eq=False)
class SplitTransform:
    """Node-split rewrite output, plus the bookkeeping to map results back.

    ``graph`` is the final, search-ready graph. ``path`` is the transformed
    path with internal edges, labelled in the pre-reversal id space.
    """

    graph: DirectedGraph
    split_in: dict[int, int]
    split_out: dict[int, int]
    internal_edge_of: dict[int, int]
    node_of_internal: dict[int, int]
    path: StPath


def _check_path(g: DirectedGraph, p: StPath) -> None:
    k = len(p)
    if p.node_seq.shape[0] != k + 1:
        raise PathNotInGraph("node_seq must be one longer than edge_seq")
    if k == 0:
        return
    e = p.edge_seq
    if ((e < 0) | (e >= g.m)).any():
        raise PathNotInGraph(f"path edge id outside [0, {g.m})")
    if not np.array_equal(g.tails[e], p.node_seq[:-1]) or not np.array_equal(g.heads[e], p.node_seq[1:]):
        raise PathNotInGraph("path edges do not chain through node_seq")


def bridge_transform(g: DirectedGraph, p: StPath) -> BridgeTransform:
    """Reverse the path: result has the same edge count, (G without P) plus P reversed."""
    _check_path(g, p)
    pe = p.edge_seq
    reversed_pairs = np.stack([g.heads[pe], g.tails[pe]], axis=1) if len(p) else np.empty((0, 2), dtype=np.int64)
    new_g, back = remove_edges_add_edges(g, pe.tolist(), reversed_pairs)
    first_added = g.m - len(p)
    reversed_of = {first_added + j: int(pe[j]) for j in range(len(p))}
    return BridgeTransform(new_g, p, reversed_of)


def split_transform(g: DirectedGraph, p: StPath, s: int, t: int) -> SplitTransform:
    """Split every path node and rewire, returning the search-ready graph.

    The final graph has n + |node_seq| nodes and m + |edge_seq| + |node_seq|
    edges: every original edge rewired once (path edges thereby re-added
    forward), one reverse copy per path edge, and one reversed internal edge
    per path node.
    """
    _check_path(g, p)
    if p.source != s or p.sink != t:
        raise PathNotInGraph(f"path runs {p.source}->{p.sink}, expected {s}->{t}")
    n, m = g.n, g.m
    nodes = p.node_seq
    L = nodes.shape[0]
    k = len(p)
    pos = p.pos_on_path

    on_path = pos >= 0
    x1_of = np.where(on_path, n + pos, np.arange(n, dtype=np.int64))

    # Rewired originals: tails move to the x1 image, heads stay (x0 == original id).
    tails = x1_of[g.tails]
    heads = g.heads.copy()
    # Reverse copies of path edges: rewired forward is (u1, v0), so flip that.
    pe = p.edge_seq
    rev_tails = g.heads[pe]
    rev_heads = x1_of[g.tails[pe]]
    # Internal edges exist only reversed: x1 -> x0.
    int_tails = n + np.arange(L, dtype=np.int64)
    int_heads = nodes

    final = DirectedGraph(
        n + L,
        np.concatenate([tails, rev_tails, int_tails]),
        np.concatenate([heads, rev_heads, int_heads]),
    )

    # Transformed path in pre-reversal labels: internal edge of position j is
    # m + j, original path edges keep their ids, nodes alternate x0, x1.
    node_seq2 = np.empty(2 * L, dtype=np.int64)
    node_seq2[0::2] = nodes
    node_seq2[1::2] = n + np.arange(L, dtype=np.int64)
    edge_seq2 = np.empty(2 * k + 1, dtype=np.int64)
    edge_seq2[0::2] = m + np.arange(L, dtype=np.int64)
    edge_seq2[1::2] = pe
    path2 = _make_path(n + L, node_seq2, edge_seq2)

    split_in = {int(nodes[j]): int(nodes[j]) for j in range(L)}
    split_out = {int(nodes[j]): n + j for j in range(L)}
    internal_edge_of = {int(nodes[j]): m + j for j in range(L)}
    node_of_internal = {m + j: int(nodes[j]) for j in range(L)}
    return SplitTransform(final, split_in, split_out, internal_edge_of, node_of_internal, path2)

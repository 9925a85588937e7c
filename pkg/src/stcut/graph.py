"""Directed multigraph with stable edge identities, plus the edge-list text format.

Nodes are dense integers in [0, n). Edges are numbered in insertion order and
that number *is* the edge's identity: parallel edges keep distinct ids, and
every adjacency list is ordered by ascending edge id, which makes everything
built on top of a graph deterministic.

Storage is CSR-style numpy arrays (``tails``/``heads`` indexed by edge id,
``out_indptr``/``out_eids`` grouping outgoing edge ids per node, mirrored for
incoming edges), so large graphs stay cheap to build and to sweep.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

import numpy as np

__all__ = [
    "Edge",
    "DirectedGraph",
    "build_graph",
    "remove_edges_add_edges",
    "parse_edge_list",
    "serialize_edge_list",
    "EndpointOutOfRange",
    "UnknownEdgeId",
    "ParseError",
    "MissingHeader",
]


class EndpointOutOfRange(ValueError):
    """An edge endpoint does not name a node in [0, n)."""

    def __init__(self, edge_index: int, endpoint: int, n: int):
        super().__init__(f"edge {edge_index}: endpoint {endpoint} outside [0, {n})")
        self.edge_index = edge_index
        self.endpoint = endpoint
        self.n = n


class UnknownEdgeId(ValueError):
    """An edge id does not name an edge in [0, m)."""

    def __init__(self, edge_id: int, m: int):
        super().__init__(f"edge id {edge_id} outside [0, {m})")
        self.edge_id = edge_id
        self.m = m


class ParseError(ValueError):
    """A malformed line in edge-list input. Line numbers are 1-based and physical."""

    def __init__(self, line: int, reason: str):
        super().__init__(f"line {line}: {reason}")
        self.line = line
        self.reason = reason


class MissingHeader(ValueError):
    def __init__(self):
        super().__init__("no header line found (expected 'n m s t')")


@dataclass(frozen=True)
class Edge:
    id: int
    tail: int
    head: int


def _check_endpoints(arr: np.ndarray, n: int) -> None:
    bad = (arr < 0) | (arr >= n)
    if bad.any():
        i = int(np.flatnonzero(bad)[0])
        raise EndpointOutOfRange(i, int(arr[i]), n)


def _csr_by(keys: np.ndarray, n: int) -> tuple[np.ndarray, np.ndarray]:
    """Group edge ids by ``keys`` (node per edge); ids ascend within each group."""
    eids = np.argsort(keys, kind="stable").astype(np.int64)
    counts = np.bincount(keys, minlength=n) if keys.size else np.zeros(n, dtype=np.int64)
    indptr = np.zeros(n + 1, dtype=np.int64)
    np.cumsum(counts, out=indptr[1:])
    return indptr, eids


class DirectedGraph:
    """Immutable directed multigraph over dense integer nodes.

    Self-loops are permitted. Mutating operations return new graphs; the
    arrays of a built graph are marked read-only.
    """

    __slots__ = ("n", "m", "tails", "heads", "out_indptr", "out_eids", "in_indptr", "in_eids")

    def __init__(self, n: int, tails, heads):
        if n < 0:
            raise ValueError(f"node count must be non-negative, got {n}")
        tails = np.ascontiguousarray(tails, dtype=np.int64)
        heads = np.ascontiguousarray(heads, dtype=np.int64)
        if tails.ndim != 1 or tails.shape != heads.shape:
            raise ValueError("tails and heads must be 1-d arrays of equal length")
        _check_endpoints(tails, n)
        _check_endpoints(heads, n)
        self.n = int(n)
        self.m = int(tails.shape[0])
        self.tails = tails
        self.heads = heads
        self.out_indptr, self.out_eids = _csr_by(tails, n)
        self.in_indptr, self.in_eids = _csr_by(heads, n)
        for a in (self.tails, self.heads, self.out_indptr, self.out_eids, self.in_indptr, self.in_eids):
            a.setflags(write=False)

    def edge(self, e: int) -> Edge:
        if not 0 <= e < self.m:
            raise UnknownEdgeId(int(e), self.m)
        return Edge(int(e), int(self.tails[e]), int(self.heads[e]))

    def edges(self) -> Iterator[Edge]:
        """All edges in ascending edge-id order."""
        for i in range(self.m):
            yield Edge(i, int(self.tails[i]), int(self.heads[i]))

    def out_edge_ids(self, u: int) -> np.ndarray:
        """Outgoing edge ids of ``u``, ascending."""
        return self.out_eids[self.out_indptr[u]:self.out_indptr[u + 1]]

    def in_edge_ids(self, u: int) -> np.ndarray:
        return self.in_eids[self.in_indptr[u]:self.in_indptr[u + 1]]

    def out_degree(self, u: int) -> int:
        return int(self.out_indptr[u + 1] - self.out_indptr[u])

    def in_degree(self, u: int) -> int:
        return int(self.in_indptr[u + 1] - self.in_indptr[u])

    def __repr__(self) -> str:
        return f"DirectedGraph(n={self.n}, m={self.m})"


def _gather_csr(indptr: np.ndarray, data: np.ndarray, nodes: np.ndarray) -> np.ndarray:
    """Concatenate ``data`` slices for ``nodes``, preserving node order.

    The result lists, for each node in turn, its CSR entries in stored order;
    used by the frontier engines to expand a whole layer in one shot.
    """
    starts = indptr[nodes]
    counts = indptr[nodes + 1] - starts
    total = int(counts.sum())
    if total == 0:
        return np.empty(0, dtype=data.dtype)
    cum = np.cumsum(counts)
    idx = np.arange(total, dtype=np.int64) + np.repeat(starts - (cum - counts), counts)
    return data[idx]


def build_graph(n: int, edge_pairs) -> DirectedGraph:
    """Build a graph from (tail, head) pairs; pair i becomes edge id i."""
    pairs = np.asarray(edge_pairs, dtype=np.int64)
    if pairs.size == 0:
        pairs = pairs.reshape(0, 2)
    if pairs.ndim != 2 or pairs.shape[1] != 2:
        raise ValueError("edge_pairs must be a sequence of (tail, head) pairs")
    return DirectedGraph(n, pairs[:, 0], pairs[:, 1])


def remove_edges_add_edges(
    g: DirectedGraph,
    remove: Iterable[int],
    add: Sequence[tuple[int, int]],
) -> tuple[DirectedGraph, np.ndarray]:
    """Delete the edges in ``remove`` and append ``add``, renumbering densely.

    Surviving edges keep their relative order (ascending old id) and are
    followed by the added edges in input order. Returns the new graph and a
    back-mapping ``orig`` with ``orig[new_id] = old edge id`` for survivors
    and ``-1`` for added edges.
    """
    remove_ids = sorted({int(e) for e in remove})
    for e in remove_ids:
        if not 0 <= e < g.m:
            raise UnknownEdgeId(e, g.m)
    keep = np.ones(g.m, dtype=bool)
    if remove_ids:
        keep[remove_ids] = False
    surv = np.flatnonzero(keep)

    added = np.asarray(add, dtype=np.int64)
    if added.size == 0:
        added = added.reshape(0, 2)
    if added.ndim != 2 or added.shape[1] != 2:
        raise ValueError("add must be a sequence of (tail, head) pairs")

    new_tails = np.concatenate([g.tails[surv], added[:, 0]])
    new_heads = np.concatenate([g.heads[surv], added[:, 1]])
    back = np.concatenate([surv, np.full(added.shape[0], -1, dtype=np.int64)])
    try:
        new_g = DirectedGraph(g.n, new_tails, new_heads)
    except EndpointOutOfRange as exc:
        # Surviving endpoints were valid already, so the offender is an added pair.
        raise EndpointOutOfRange(exc.edge_index - surv.size, exc.endpoint, g.n) from None
    return new_g, back


def parse_edge_list(text: str | bytes) -> tuple[DirectedGraph, int, int]:
    """Parse the edge-list format: header ``n m s t`` then m lines ``u v``.

    ``#``-prefixed lines are comments and skipped anywhere; blank lines are
    ignored. Accepts LF or CRLF input.
    """
    if isinstance(text, bytes):
        text = text.decode("utf-8")
    n = m = s = t = -1
    have_header = False
    pairs: list[tuple[int, int]] = []
    lineno = 0
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        fields = line.split()
        if not have_header:
            if len(fields) != 4:
                raise ParseError(lineno, "header must be four integers 'n m s t'")
            try:
                n, m, s, t = (int(f) for f in fields)
            except ValueError:
                raise ParseError(lineno, "header must be four integers 'n m s t'") from None
            if n < 0 or m < 0:
                raise ParseError(lineno, "n and m must be non-negative")
            if not (0 <= s < n) or not (0 <= t < n):
                raise ParseError(lineno, f"s and t must lie in [0, {n})")
            have_header = True
            continue
        if len(pairs) >= m:
            raise ParseError(lineno, "edge count mismatch")
        if len(fields) != 2:
            raise ParseError(lineno, "edge line must be two integers 'u v'")
        try:
            u, v = int(fields[0]), int(fields[1])
        except ValueError:
            raise ParseError(lineno, "edge line must be two integers 'u v'") from None
        if not (0 <= u < n):
            raise EndpointOutOfRange(len(pairs), u, n)
        if not (0 <= v < n):
            raise EndpointOutOfRange(len(pairs), v, n)
        pairs.append((u, v))
    if not have_header:
        raise MissingHeader()
    if len(pairs) != m:
        raise ParseError(lineno + 1, "edge count mismatch")
    return build_graph(n, pairs), s, t


def serialize_edge_list(g: DirectedGraph, s: int, t: int) -> str:
    """Emit the edge-list format exactly: single spaces, LF line endings."""
    lines = [f"{g.n} {g.m} {int(s)} {int(t)}"]
    lines.extend(f"{int(u)} {int(v)}" for u, v in zip(g.tails, g.heads))
    return "\n".join(lines) + "\n"

"""Interrupted forward search: the whole cut sequence in one traversal.

After the reverse-path rewrite, a forward search from s can spill backwards
along the reversed path but can only cross into the part of the graph beyond
an s-t bridge through the bridge itself, which is gone. So the search drains,
we read off the deepest path position it touched, report the path edge
leaving that node as the next bridge, and reseed the search at the far side.
Every node gets labelled with the phase that discovered it, which is exactly
its component index; the label array doubles as the visited marker.

The deepest-position bookkeeping is a high-water mark updated as nodes are
labelled, so the path is effectively scanned once over the whole run and the
total cost stays linear in edges plus nodes.

Two engines produce identical reports: a vectorised frontier expansion (the
default, breadth-first by construction) and a serial queue honouring an
explicit FIFO or LIFO discipline. Per-phase visited sets are determined by
the graph alone, so the discipline cannot change the report; tests assert
that rather than assume it.
"""
from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Optional

import numpy as np

from .graph import DirectedGraph, _gather_csr
from .paths import StPath, find_st_path
from .transform import bridge_transform

__all__ = [
    "KIND_BRIDGE",
    "KIND_ARTICULATION",
    "SearchStats",
    "CutReport",
    "st_bridges",
    "interrupted_search",
    "SearchStalled",
]

KIND_BRIDGE = "bridge"
KIND_ARTICULATION = "articulation"


class SearchStalled(RuntimeError):
    """The search drained without t and without a usable path edge to cross.

    The sink was reachable when the path was chosen, so this state is
    impossible unless an invariant broke; it is surfaced loudly rather than
    swallowed.
    """


@dataclass(frozen=True)
class SearchStats:
    phases: int
    visited: int
    edge_scans: int
    queue_pushes: int
    path_len: int


@dataclass(frozen=True, eq=False)
class CutReport:
    """Ordered cut sequence plus the component structure around it.

    ``sequence`` holds edge ids for kind "bridge" and node ids for kind
    "articulation", in the order every s-t path meets them. ``comp[v]`` is
    the 1-based component index of v, 0 if the search never reached v;
    ``components[i-1]`` lists the members of component i in ascending order.
    """

    kind: str
    sequence: list[int]
    comp: np.ndarray
    components: list[list[int]]
    path_used: list[int]
    stats: SearchStats


def _group_components(comp: np.ndarray, phases: int) -> list[list[int]]:
    order = np.argsort(comp, kind="stable")
    counts = np.bincount(comp, minlength=phases + 1)
    bounds = np.cumsum(counts)
    out = []
    for i in range(1, phases + 1):
        out.append(order[bounds[i - 1]:bounds[i]].tolist())
    return out


def _single_node_report(kind: str, n: int, s: int) -> CutReport:
    comp = np.zeros(n, dtype=np.int64)
    comp[s] = 1
    return CutReport(kind, [], comp, [[int(s)]], [int(s)], SearchStats(1, 1, 0, 1, 0))


class _Counters:
    __slots__ = ("scans", "pushes", "hwm")

    def __init__(self, hwm: int):
        self.scans = 0
        self.pushes = 0
        self.hwm = hwm


def _phase_frontier(g: DirectedGraph, comp, pos, label: int, seed: int, c: _Counters) -> None:
    heads = g.heads
    frontier = np.array([seed], dtype=np.int64)
    while frontier.size:
        eids = _gather_csr(g.out_indptr, g.out_eids, frontier)
        c.scans += int(eids.size)
        targets = heads[eids]
        targets = targets[comp[targets] == 0]
        if targets.size == 0:
            break
        new = np.unique(targets)
        comp[new] = label
        c.pushes += int(new.size)
        pmax = int(pos[new].max())
        if pmax > c.hwm:
            c.hwm = pmax
        frontier = new


def _phase_serial(g: DirectedGraph, comp, pos, label: int, seed: int, c: _Counters, lifo: bool) -> None:
    heads = g.heads
    q = deque([seed])
    pop = q.pop if lifo else q.popleft
    while q:
        u = pop()
        for e in g.out_edge_ids(u):
            c.scans += 1
            v = int(heads[e])
            if comp[v] == 0:
                comp[v] = label
                c.pushes += 1
                p = int(pos[v])
                if p > c.hwm:
                    c.hwm = p
                q.append(v)


def interrupted_search(tg, s: int, t: int, queue: str = "fifo", engine: str = "auto") -> CutReport:
    """Run the phased search over a transform's graph and path.

    ``tg`` is a BridgeTransform or SplitTransform: anything with a ``graph``
    to traverse and a ``path`` whose positions drive the interrupts. Reported
    sequence entries are the path's edge labels (original ids for the
    reverse-path rewrite). ``queue`` selects the serial discipline; the
    default engine expands whole frontiers at once, which is FIFO order.
    """
    if queue not in ("fifo", "lifo"):
        raise ValueError(f"queue must be 'fifo' or 'lifo', got {queue!r}")
    if engine == "auto":
        engine = "frontier" if queue == "fifo" else "serial"
    if engine == "frontier" and queue != "fifo":
        raise ValueError("the frontier engine is inherently FIFO")

    g: DirectedGraph = tg.graph
    p: StPath = tg.path
    node_seq = p.node_seq
    edge_seq = p.edge_seq
    pos = p.pos_on_path
    k = edge_seq.shape[0]
    if int(node_seq[0]) != s:
        raise ValueError("path does not start at the search source")

    comp = np.zeros(g.n, dtype=np.int64)
    sequence: list[int] = []
    c = _Counters(hwm=0)
    comp[s] = 1
    c.pushes += 1
    label = 1
    seed = s
    while True:
        if engine == "frontier":
            _phase_frontier(g, comp, pos, label, seed, c)
        else:
            _phase_serial(g, comp, pos, label, seed, c, lifo=(queue == "lifo"))
        if comp[t] != 0:
            break
        if c.hwm >= k:
            raise SearchStalled(f"drained at path position {c.hwm} with no forward path edge left")
        y_pos = c.hwm
        sequence.append(int(edge_seq[y_pos]))
        seed = int(node_seq[y_pos + 1])
        if comp[seed] != 0:
            raise SearchStalled(f"reseed target {seed} already labelled {int(comp[seed])}")
        label += 1
        comp[seed] = label
        c.pushes += 1
        c.hwm = y_pos + 1

    stats = SearchStats(
        phases=label,
        visited=int(np.count_nonzero(comp)),
        edge_scans=c.scans,
        queue_pushes=c.pushes,
        path_len=int(k),
    )
    return CutReport(KIND_BRIDGE, sequence, comp, _group_components(comp, label), node_seq.tolist(), stats)


def st_bridges(g: DirectedGraph, s: int, t: int, queue: str = "fifo") -> Optional[CutReport]:
    """All s-t bridges of g in visit order, with their components.

    Returns None when t is unreachable from s. For s = t the report has an
    empty sequence and the single component {s}. Reported edge ids are the
    original graph's; nodes the search never reached keep component 0.
    """
    if not 0 <= s < g.n or not 0 <= t < g.n:
        raise ValueError(f"s and t must lie in [0, {g.n})")
    if s == t:
        return _single_node_report(KIND_BRIDGE, g.n, s)
    p = find_st_path(g, s, t)
    if p is None:
        return None
    tg = bridge_transform(g, p)
    return interrupted_search(tg, s, t, queue=queue)

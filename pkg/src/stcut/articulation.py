"""s-t articulation points via the bridge machinery on the split graph.

The node-split rewrite turns every unavoidable node's internal edge into a
stoppable edge, so running the interrupted search over the split graph from
s0 to t1 reports internal edges in visit order. The internal edges of s and
t themselves are always reported first and last (s0 has no other way out,
t1 no other way in); they are structural, not articulation points, and are
stripped while mapping back. Component indices collapse accordingly, so an
articulation point lands in the component it is the exit of (its x0 side),
and every other original node inherits the label of its x0 image.
"""
from __future__ import annotations

from typing import Optional

import numpy as np

from .bridges import (
    KIND_ARTICULATION,
    CutReport,
    SearchStalled,
    SearchStats,
    _group_components,
    _single_node_report,
    interrupted_search,
)
from .graph import DirectedGraph
from .paths import find_st_path
from .transform import SplitTransform, split_transform

__all__ = ["st_articulation_points", "map_back", "NonInternalBridge"]


class NonInternalBridge(RuntimeError):
    """A bridge of the split graph was not an internal edge.

    The re-added forward path edges make every non-internal edge avoidable,
    so this indicates the rewrite itself is broken; it is never recoverable.
    """

    def __init__(self, edge_id: int):
        super().__init__(f"split-graph bridge {edge_id} is not an internal edge")
        self.edge_id = edge_id


def map_back(split_report: CutReport, st: SplitTransform, g: DirectedGraph) -> CutReport:
    """Translate a split-graph bridge report into an articulation report.

    Every reported bridge must be an internal edge; the boundary internals of
    s and t are dropped and the phase labels renumbered so that components on
    either side of a dropped boundary merge.
    """
    m = g.m
    for e in split_report.sequence:
        if e not in st.node_of_internal:
            raise NonInternalBridge(int(e))
    cut_nodes = [st.node_of_internal[e] for e in split_report.sequence]
    orig_nodes = st.path.node_seq[0::2]
    s, t = int(orig_nodes[0]), int(orig_nodes[-1])
    if len(cut_nodes) < 2 or cut_nodes[0] != s or cut_nodes[-1] != t:
        raise SearchStalled(
            f"split-graph bridges {cut_nodes} do not start at {s} and end at {t}"
        )

    sequence = cut_nodes[1:-1]

    # Phase j of the raw search renumbers to (articulation bridges before it) + 1.
    phases_raw = len(split_report.sequence) + 1
    new_of_phase = np.zeros(phases_raw + 1, dtype=np.int64)
    idx = 1
    new_of_phase[1] = 1
    for j in range(2, phases_raw + 1):
        if 0 < j - 2 < len(split_report.sequence) - 1:
            idx += 1
        new_of_phase[j] = idx
    comp_raw = split_report.comp[:g.n]
    comp = np.where(comp_raw > 0, new_of_phase[comp_raw], 0)

    phases = len(sequence) + 1
    stats = SearchStats(
        phases=phases,
        visited=split_report.stats.visited,
        edge_scans=split_report.stats.edge_scans,
        queue_pushes=split_report.stats.queue_pushes,
        path_len=(st.path.edge_seq.shape[0] - 1) // 2,
    )
    return CutReport(
        KIND_ARTICULATION,
        sequence,
        comp,
        _group_components(comp, phases),
        orig_nodes.tolist(),
        stats,
    )


def st_articulation_points(g: DirectedGraph, s: int, t: int, queue: str = "fifo") -> Optional[CutReport]:
    """All s-t articulation points of g in visit order, s and t excluded.

    Returns None when t is unreachable from s; for s = t the report is the
    single component {s} with no cut nodes.
    """
    if not 0 <= s < g.n or not 0 <= t < g.n:
        raise ValueError(f"s and t must lie in [0, {g.n})")
    if s == t:
        return _single_node_report(KIND_ARTICULATION, g.n, s)
    p = find_st_path(g, s, t)
    if p is None:
        return None
    st = split_transform(g, p, s, t)
    raw = interrupted_search(st, st.split_in[s], st.split_out[t], queue=queue)
    return map_back(raw, st, g)

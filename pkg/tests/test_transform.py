import numpy as np
import pytest

from stcut import (
    PathNotInGraph,
    bridge_transform,
    build_graph,
    find_st_path,
    split_transform,
)
from stcut.paths import _make_path
from tests.conftest import corpus_instances


def edge_pairs(g):
    return list(zip(g.tails.tolist(), g.heads.tolist()))


def test_bridge_transform_full_chain():
    g = build_graph(3, [(0, 1), (1, 2)])
    tg = bridge_transform(g, find_st_path(g, 0, 2))
    assert sorted(edge_pairs(tg.graph)) == [(1, 0), (2, 1)]
    assert tg.graph.m == g.m


def test_bridge_transform_diamond_matches_reversal_rule():
    g = build_graph(4, [(0, 1), (1, 3), (0, 2), (2, 3)])
    p = find_st_path(g, 0, 3)
    assert p.node_seq.tolist() == [0, 1, 3]
    tg = bridge_transform(g, p)
    # survivors ascending id, then reverse edges in path order
    assert edge_pairs(tg.graph) == [(0, 2), (2, 3), (1, 0), (3, 1)]
    assert tg.reversed_of == {2: 0, 3: 1}


def test_bridge_transform_empty_path_is_identity():
    g = build_graph(3, [(0, 1), (1, 2), (2, 0)])
    p = find_st_path(g, 1, 1)
    tg = bridge_transform(g, p)
    assert edge_pairs(tg.graph) == edge_pairs(g)


def test_bridge_transform_keeps_parallel_twin_forward():
    g = build_graph(2, [(0, 1), (0, 1)])
    p = find_st_path(g, 0, 1)
    tg = bridge_transform(g, p)
    assert p.edge_seq.tolist() == [0]
    assert edge_pairs(tg.graph) == [(0, 1), (1, 0)]


def test_bridge_transform_rejects_foreign_path():
    g = build_graph(3, [(0, 1), (1, 2)])
    fake = _make_path(3, np.array([0, 2], dtype=np.int64), np.array([7], dtype=np.int64))
    with pytest.raises(PathNotInGraph):
        bridge_transform(g, fake)
    mismatched = _make_path(3, np.array([0, 2], dtype=np.int64), np.array([0], dtype=np.int64))
    with pytest.raises(PathNotInGraph):
        bridge_transform(g, mismatched)


def test_bridge_transform_roundtrip_on_corpus(small_corpus):
    for _, g, s, t in small_corpus:
        p = find_st_path(g, s, t)
        if p is None:
            continue
        tg = bridge_transform(g, p)
        assert tg.graph.m == g.m
        # reconstruct: survivors got ids 0.. in ascending original order
        surv = sorted(set(range(g.m)) - set(p.edge_seq.tolist()))
        rebuilt = {}
        for new_id, old_id in enumerate(surv):
            rebuilt[old_id] = (int(tg.graph.tails[new_id]), int(tg.graph.heads[new_id]))
        for new_id, old_id in tg.reversed_of.items():
            v, u = int(tg.graph.tails[new_id]), int(tg.graph.heads[new_id])
            rebuilt[old_id] = (u, v)
        assert [rebuilt[e] for e in range(g.m)] == edge_pairs(g)


def split_names(st, g):
    """Readable (tail, head) pairs of the split graph in x0/x1 notation."""
    n = g.n

    def name(v):
        return f"{v}" if v < n else f"{int(st.path.node_seq[2 * (v - n)])}'"

    return sorted((name(int(u)), name(int(v))) for u, v in zip(st.graph.tails, st.graph.heads))


def test_split_transform_chain_shape():
    g = build_graph(3, [(0, 1), (1, 2)])
    p = find_st_path(g, 0, 2)
    st = split_transform(g, p, 0, 2)
    assert st.graph.n == g.n + 3
    assert st.graph.m == g.m + 2 + 3
    # x0 keeps the original id, x1 is written with a tick
    assert split_names(st, g) == sorted(
        [("0'", "1"), ("1", "0'"), ("1'", "2"), ("2", "1'"), ("0'", "0"), ("1'", "1"), ("2'", "2")]
    )
    assert st.internal_edge_of == {0: 2, 1: 3, 2: 4}
    assert st.node_of_internal == {2: 0, 3: 1, 4: 2}
    assert st.path.node_seq.tolist() == [0, 3, 1, 4, 2, 5]
    assert st.path.edge_seq.tolist() == [2, 0, 3, 1, 4]


def test_split_transform_single_edge():
    g = build_graph(2, [(0, 1)])
    p = find_st_path(g, 0, 1)
    st = split_transform(g, p, 0, 1)
    assert st.graph.n == 4 and st.graph.m == 1 + 1 + 2
    assert split_names(st, g) == sorted([("0'", "1"), ("1", "0'"), ("0'", "0"), ("1'", "1")])


def test_split_transform_offpath_edge_enters_x0():
    # off-path node 3 points into path node 1: the rewired edge must enter 1's x0
    g = build_graph(4, [(0, 1), (1, 2), (3, 1)])
    p = find_st_path(g, 0, 2)
    st = split_transform(g, p, 0, 2)
    x0 = st.split_in[1]
    rewired = [(int(u), int(v)) for u, v in zip(st.graph.tails, st.graph.heads)]
    assert (3, x0) in rewired


def test_split_transform_wrong_endpoints():
    g = build_graph(3, [(0, 1), (1, 2)])
    p = find_st_path(g, 0, 2)
    with pytest.raises(PathNotInGraph):
        split_transform(g, p, 0, 1)


def test_split_adjacency_rules_on_corpus(small_corpus):
    for _, g, s, t in small_corpus:
        p = find_st_path(g, s, t)
        if p is None or len(p) == 0:
            continue
        st = split_transform(g, p, s, t)
        F = st.graph
        assert F.n == g.n + p.node_seq.shape[0]
        assert F.m == g.m + len(p) + p.node_seq.shape[0]

        nodes = p.node_seq.tolist()
        path_edges = p.edge_seq.tolist()
        for j, x in enumerate(nodes):
            x0, x1 = st.split_in[x], st.split_out[x]
            out0 = [(int(F.tails[e]), int(F.heads[e])) for e in F.out_edge_ids(x0)]
            in1 = [(int(F.tails[e]), int(F.heads[e])) for e in F.in_edge_ids(x1)]
            # x0's only way out is the reverse copy toward its path predecessor
            if j == 0:
                assert out0 == []
            else:
                pred1 = st.split_out[nodes[j - 1]]
                assert out0 == [(x0, pred1)]
            # x1 is entered only by the reverse copy from its path successor
            if j == len(nodes) - 1:
                assert in1 == []
            else:
                succ0 = st.split_in[nodes[j + 1]]
                assert in1 == [(succ0, x1)]
        # every original edge appears rewired exactly once, in id order
        for e in range(g.m):
            u, v = int(g.tails[e]), int(g.heads[e])
            eu = st.split_out.get(u, u)
            assert (int(F.tails[e]), int(F.heads[e])) == (eu, v)
        # reconstruct the original graph from the first m rewired edges
        rebuilt = []
        for e in range(g.m):
            u2 = int(F.tails[e])
            orig_u = int(st.path.node_seq[2 * (u2 - g.n)]) if u2 >= g.n else u2
            rebuilt.append((orig_u, int(F.heads[e])))
        assert rebuilt == edge_pairs(g)

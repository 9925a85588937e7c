from collections import deque

import pytest

from stcut import SourceBanned, build_graph, find_st_path, reachable_set
from tests.conftest import corpus_instances


def reference_bfs_path(g, s, t):
    """Plain serial FIFO BFS with ascending-edge-id scan; parent at first discovery."""
    if s == t:
        return [s]
    parent = {s: None}
    q = deque([s])
    while q:
        u = q.popleft()
        for e in g.out_edge_ids(u).tolist():
            v = int(g.heads[e])
            if v not in parent:
                parent[v] = e
                q.append(v)
    if t not in parent:
        return None
    nodes = [t]
    while parent[nodes[-1]] is not None:
        nodes.append(int(g.tails[parent[nodes[-1]]]))
    return nodes[::-1]


def test_chain_path():
    g = build_graph(3, [(0, 1), (1, 2)])
    p = find_st_path(g, 0, 2)
    assert p.node_seq.tolist() == [0, 1, 2]
    assert p.edge_seq.tolist() == [0, 1]
    assert p.pos_on_path.tolist() == [0, 1, 2]


def test_diamond_tie_break_by_edge_id():
    g = build_graph(4, [(0, 1), (1, 3), (0, 2), (2, 3)])
    p = find_st_path(g, 0, 3)
    assert p.node_seq.tolist() == [0, 1, 3]
    assert p.node_seq.tolist() == reference_bfs_path(g, 0, 3)


def test_no_path_between_isolated_nodes():
    g = build_graph(2, [])
    assert find_st_path(g, 0, 1) is None


def test_s_equals_t():
    g = build_graph(3, [(0, 1)])
    p = find_st_path(g, 0, 0)
    assert p.node_seq.tolist() == [0]
    assert p.edge_seq.tolist() == []


def test_path_matches_reference_on_corpus(small_corpus):
    for _, g, s, t in small_corpus:
        p = find_st_path(g, s, t)
        ref = reference_bfs_path(g, s, t)
        if p is None:
            assert ref is None
            continue
        assert p.node_seq.tolist() == ref
        # path invariants: chaining and simplicity
        nodes = p.node_seq.tolist()
        assert len(set(nodes)) == len(nodes)
        for i, e in enumerate(p.edge_seq.tolist()):
            assert int(g.tails[e]) == nodes[i]
            assert int(g.heads[e]) == nodes[i + 1]
        for i, v in enumerate(nodes):
            assert int(p.pos_on_path[v]) == i


def test_reachable_chain_with_banned_edge():
    g = build_graph(3, [(0, 1), (1, 2)])
    assert reachable_set(g, 0, banned_edges={1}) == {0, 1}


def test_reachable_contains_source():
    g = build_graph(4, [(1, 2)])
    assert reachable_set(g, 3) == {3}


def test_reachable_banned_node_diamond():
    g = build_graph(4, [(0, 1), (1, 3), (0, 2), (2, 3)])
    assert reachable_set(g, 0, banned_nodes={1}) == {0, 2, 3}


def test_source_banned_raises():
    g = build_graph(2, [(0, 1)])
    with pytest.raises(SourceBanned):
        reachable_set(g, 0, banned_nodes={0})


def test_no_path_iff_unreachable_and_monotone():
    import random

    rng = random.Random(11)
    for i, g, s, t in corpus_instances(120):
        assert (find_st_path(g, s, t) is None) == (t not in reachable_set(g, s))
        base = reachable_set(g, s)
        edges = list(range(g.m))
        rng.shuffle(edges)
        banned_e = set(edges[: g.m // 3])
        banned_n = {v for v in range(g.n) if v != s and rng.random() < 0.2}
        smaller = reachable_set(g, s, banned_e, banned_n)
        assert smaller <= base
        assert reachable_set(g, s, banned_e) <= base

import numpy as np
import pytest

from stcut import (
    DirectedGraph,
    EndpointOutOfRange,
    MissingHeader,
    ParseError,
    UnknownEdgeId,
    build_graph,
    parse_edge_list,
    reachable_set,
    remove_edges_add_edges,
    serialize_edge_list,
)
from stcut.gen import GenSpec, generate


def test_single_edge_adjacency():
    g = build_graph(2, [(0, 1)])
    assert g.out_edge_ids(0).tolist() == [0]
    assert g.in_edge_ids(1).tolist() == [0]
    assert g.out_edge_ids(1).tolist() == []
    assert g.edge(0).tail == 0 and g.edge(0).head == 1


def test_parallel_edges_have_distinct_ids():
    g = build_graph(3, [(0, 1), (0, 1)])
    assert g.m == 2
    assert [e.id for e in g.edges()] == [0, 1]
    assert [(e.tail, e.head) for e in g.edges()] == [(0, 1), (0, 1)]
    assert g.out_edge_ids(0).tolist() == [0, 1]


def test_endpoint_out_of_range_carries_edge_index():
    with pytest.raises(EndpointOutOfRange) as exc:
        build_graph(1, [(0, 5)])
    assert exc.value.edge_index == 0
    with pytest.raises(EndpointOutOfRange) as exc:
        build_graph(2, [(0, 1), (3, 0)])
    assert exc.value.edge_index == 1


def test_self_loops_allowed():
    g = build_graph(2, [(0, 0), (0, 1)])
    assert g.out_edge_ids(0).tolist() == [0, 1]
    assert g.in_edge_ids(0).tolist() == [0]


def test_edges_reproduce_input_order():
    pairs = [(0, 1), (2, 0), (1, 1), (2, 1), (0, 1)]
    g = build_graph(3, pairs)
    assert [(e.tail, e.head) for e in g.edges()] == pairs
    assert list(zip(g.tails.tolist(), g.heads.tolist())) == pairs


def test_adjacency_counts_match_input():
    rng = np.random.default_rng(3)
    for _ in range(25):
        n = int(rng.integers(1, 10))
        k = int(rng.integers(0, 30))
        pairs = [(int(rng.integers(0, n)), int(rng.integers(0, n))) for _ in range(k)]
        g = build_graph(n, pairs)
        for u in range(n):
            assert g.out_degree(u) == sum(1 for a, _ in pairs if a == u)
            assert g.in_degree(u) == sum(1 for _, b in pairs if b == u)
            # ascending edge id inside each adjacency list
            assert g.out_edge_ids(u).tolist() == sorted(g.out_edge_ids(u).tolist())


def test_surgery_basic():
    g = build_graph(3, [(0, 1), (1, 2)])
    h, back = remove_edges_add_edges(g, {0}, [(1, 0)])
    assert [(e.tail, e.head) for e in h.edges()] == [(1, 2), (1, 0)]
    assert back.tolist() == [1, -1]


def test_surgery_identity():
    g = build_graph(4, [(0, 1), (1, 2), (2, 3), (0, 3)])
    h, back = remove_edges_add_edges(g, set(), [])
    assert [(e.tail, e.head) for e in h.edges()] == [(e.tail, e.head) for e in g.edges()]
    assert back.tolist() == [0, 1, 2, 3]


def test_surgery_keeps_alternate_route():
    # diamond, drop one inner edge: sink stays reachable via the other route
    g = build_graph(4, [(0, 1), (1, 3), (0, 2), (2, 3)])
    h, _ = remove_edges_add_edges(g, {1}, [])
    assert 3 in reachable_set(h, 0)


def test_surgery_errors():
    g = build_graph(2, [(0, 1)])
    with pytest.raises(UnknownEdgeId):
        remove_edges_add_edges(g, {5}, [])
    with pytest.raises(EndpointOutOfRange) as exc:
        remove_edges_add_edges(g, set(), [(0, 7)])
    assert exc.value.edge_index == 0


def test_parse_chain():
    g, s, t = parse_edge_list("3 2 0 2\n0 1\n1 2\n")
    assert (g.n, g.m, s, t) == (3, 2, 0, 2)
    assert [(e.tail, e.head) for e in g.edges()] == [(0, 1), (1, 2)]


def test_parse_edge_count_mismatch_too_many():
    with pytest.raises(ParseError) as exc:
        parse_edge_list("2 1 0 1\n0 1\n0 1\n")
    assert exc.value.line == 3
    assert "mismatch" in exc.value.reason


def test_parse_edge_count_mismatch_too_few():
    with pytest.raises(ParseError) as exc:
        parse_edge_list("3 2 0 2\n0 1\n")
    assert "mismatch" in exc.value.reason


def test_parse_comments_blank_lines_crlf():
    text = "# a comment\r\n\r\n3 2 0 2\r\n0 1\r\n# inline\r\n1 2\r\n"
    g, s, t = parse_edge_list(text)
    assert (g.n, g.m, s, t) == (3, 2, 0, 2)


def test_parse_bytes_input():
    g, s, t = parse_edge_list(b"2 1 0 1\n0 1\n")
    assert (g.n, g.m, s, t) == (2, 1, 0, 1)


def test_parse_missing_header():
    with pytest.raises(MissingHeader):
        parse_edge_list("# only comments\n")


def test_parse_bad_header_and_lines():
    with pytest.raises(ParseError):
        parse_edge_list("3 2 0\n0 1\n1 2\n")
    with pytest.raises(ParseError):
        parse_edge_list("3 2 0 2\n0 1 9\n1 2\n")
    with pytest.raises(ParseError):
        parse_edge_list("3 2 0 9\n0 1\n1 2\n")
    with pytest.raises(EndpointOutOfRange):
        parse_edge_list("2 1 0 1\n0 7\n")


def test_roundtrip_identity():
    for seed in range(15):
        g, s, t, _ = generate(GenSpec("random_digraph", n=2 + seed % 9, density=1.7, seed=seed))
        text = serialize_edge_list(g, s, t)
        g2, s2, t2 = parse_edge_list(text)
        assert (s, t) == (s2, t2)
        assert g2.n == g.n
        assert list(zip(g.tails.tolist(), g.heads.tolist())) == list(zip(g2.tails.tolist(), g2.heads.tolist()))
        assert serialize_edge_list(g2, s2, t2) == text


def test_graph_arrays_are_read_only():
    g = build_graph(2, [(0, 1)])
    with pytest.raises(ValueError):
        g.tails[0] = 1

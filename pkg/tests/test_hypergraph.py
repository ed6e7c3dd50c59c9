import math

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

import datasets
from prism.hypergraph import (
    LabeledHypergraph,
    connected_components,
    diameter,
    majority_subhypergraph,
    to_weighted_graph,
)
from prism.relational import build_hypergraph, parse_database


def make(edges, n_nodes, n_labels=1):
    return LabeledHypergraph.build(
        tuple(f"v{i}" for i in range(n_nodes)),
        tuple(f"l{i}" for i in range(n_labels)),
        edges,
    )


def test_diameter_single_hyperedge():
    h = make([(0, (0, 1, 2))], 3)
    assert diameter(h) == 1


def test_diameter_chain():
    h = datasets.graph(datasets.chain_db(3))
    assert diameter(h) == 3


def test_diameter_two_departments(two_departments):
    # the joined departments span 8 hops (book to book across the bridge)
    assert diameter(two_departments) == 8


def test_diameter_department(physics):
    assert diameter(physics) == 4


def test_clique_expansion_pair():
    g = to_weighted_graph(make([(0, (0, 1))], 2))
    assert g.adjacency_dict() == {(0, 1): 1.0}


def test_clique_expansion_triangle_edge():
    g = to_weighted_graph(make([(0, (0, 1, 2))], 3))
    assert g.adjacency_dict() == {(0, 1): 0.5, (0, 2): 0.5, (1, 2): 0.5}


def test_clique_expansion_accumulates():
    g = to_weighted_graph(make([(0, (0, 1, 2)), (0, (0, 1))], 3))
    adj = g.adjacency_dict()
    assert adj[(0, 1)] == pytest.approx(1.5)
    assert adj[(0, 2)] == adj[(1, 2)] == pytest.approx(0.5)


def test_cardinality_one_edge_adds_no_pairs():
    g = to_weighted_graph(make([(0, (0,)), (0, (0, 1))], 2))
    assert g.adjacency_dict() == {(0, 1): 1.0}


@settings(max_examples=50, deadline=None)
@given(
    st.lists(
        st.lists(st.integers(0, 7), min_size=1, max_size=5, unique=True),
        min_size=1,
        max_size=10,
    )
)
def test_clique_expansion_weight_conservation(edge_sets):
    h = make([(0, tuple(e)) for e in edge_sets], 8)
    g = to_weighted_graph(h)
    total = sum(g.adjacency_dict().values())
    expected = sum(
        math.comb(len(m), 2) / (len(m) - 1) for _, m in h.edges if len(m) >= 2
    )
    assert total == pytest.approx(expected)


def test_majority_strict():
    h = make([(0, (0, 1, 2))], 3)
    subs = majority_subhypergraph(h, [{0, 1}, {2}])
    assert subs[0].n_edges == 1
    assert subs[1].n_edges == 0
    assert set(subs[0].node_names) == {"v0", "v1", "v2"}
    assert set(subs[1].node_names) == {"v2"}


def test_majority_tie_break_lowest_node_id():
    h = make([(0, (0, 1))], 2)
    subs = majority_subhypergraph(h, [{0}, {1}])
    assert [s.n_edges for s in subs] == [1, 0]


def test_majority_identity():
    h = make([(0, (0, 1)), (0, (1, 2))], 3)
    subs = majority_subhypergraph(h, [{0, 1, 2}])
    assert len(subs) == 1
    assert subs[0].n_edges == h.n_edges


def test_majority_rejects_non_partition():
    h = make([(0, (0, 1))], 2)
    with pytest.raises(ValueError):
        majority_subhypergraph(h, [{0}])
    with pytest.raises(ValueError):
        majority_subhypergraph(h, [{0, 1}, {1}])


def test_majority_preserves_spurious_edge_once(two_departments):
    physics = {f"P{i}" for i in range(1, 9)} | {"B1", "B2"}
    history = {n for n in two_departments.node_names if n not in physics}
    parts = [
        {two_departments.node_names.index(n) for n in physics},
        {two_departments.node_names.index(n) for n in history},
    ]
    subs = majority_subhypergraph(two_departments, parts)
    assert sum(s.n_edges for s in subs) == two_departments.n_edges
    spurious = [
        s
        for s in subs
        for lbl, members in s.edges
        if {s.node_names[v] for v in members} == {"P8", "B4"}
    ]
    assert len(spurious) == 1


@settings(max_examples=50, deadline=None)
@given(
    st.lists(
        st.lists(st.integers(0, 7), min_size=1, max_size=4, unique=True),
        min_size=1,
        max_size=10,
    ),
    st.lists(st.integers(0, 2), min_size=8, max_size=8),
)
def test_majority_is_lossless(edge_sets, owner):
    h = make([(0, tuple(e)) for e in edge_sets], 8)
    parts = [set() for _ in range(3)]
    for v, p in enumerate(owner):
        parts[p].add(v)
    parts = [p for p in parts if p]
    subs = majority_subhypergraph(h, parts)
    assert sum(s.n_edges for s in subs) == h.n_edges


def test_components_connected(physics):
    comps = connected_components(physics)
    assert len(comps) == 1
    assert comps[0].n_edges == physics.n_edges


def test_components_two_disjoint_edges():
    h = make([(0, (0, 1)), (0, (2, 3))], 4)
    comps = connected_components(h)
    assert len(comps) == 2
    assert {tuple(c.node_names) for c in comps} == {("v0", "v1"), ("v2", "v3")}


def test_components_empty():
    h = LabeledHypergraph.build((), (), [])
    assert connected_components(h) == []


def test_subhypergraph_diameter_never_exceeds_parent(two_departments):
    physics = {f"P{i}" for i in range(1, 9)} | {"B1", "B2"}
    parts = majority_subhypergraph(
        two_departments,
        [
            {two_departments.node_names.index(n) for n in names}
            for names in (physics, set(two_departments.node_names) - physics)
        ],
    )
    full = diameter(two_departments)
    for sub in parts:
        assert diameter(sub) <= full


def test_edge_member_order_is_preserved():
    h = build_hypergraph(parse_database("R(b,a)"))
    assert h.edges[0][1] == (0, 1)
    assert h.node_names == ("b", "a")

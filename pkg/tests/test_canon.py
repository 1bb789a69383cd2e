import networkx as nx
from hypothesis import given, settings, strategies as st

from conftest import graphs
from domipoly import catalog
from domipoly.canon import are_isomorphic, canonical_form, canonical_key, labeled_key
from domipoly.families import tree_pair
from domipoly.graph import Graph, cycle_graph, disjoint_union, path_graph, relabel


def to_nx(G):
    h = nx.Graph()
    h.add_nodes_from(range(G.n))
    h.add_edges_from(G.edges())
    return h


def test_keys_are_namespaced():
    G = path_graph(3)
    assert canonical_key(G).startswith(b"c:")
    assert labeled_key(G).startswith(b"l:")


def test_regular_graphs():
    # 6-cycle vs two triangles: same valencies, refinement alone cannot separate them
    c6 = cycle_graph(6)
    tt = disjoint_union(cycle_graph(3), cycle_graph(3))
    assert canonical_key(c6) != canonical_key(tt)


def test_tree_pair_not_isomorphic():
    t1, t2 = tree_pair()
    assert not are_isomorphic(t1, t2)
    assert not nx.is_isomorphic(to_nx(t1), to_nx(t2))


def test_catalog_keys_distinct():
    conn = catalog.connected_graphs(7)
    assert len({canonical_key(g) for g in conn}) == len(conn)


@settings(max_examples=80)
@given(graphs(max_n=9), st.randoms(use_true_random=False))
def test_invariant_under_relabelling(G, rnd):
    perm = list(range(G.n))
    rnd.shuffle(perm)
    assert canonical_form(relabel(G, perm)) == canonical_form(G)


@settings(max_examples=80)
@given(graphs(max_n=7), graphs(max_n=7))
def test_agrees_with_networkx(G, H):
    if G.n == H.n:
        assert are_isomorphic(G, H) == nx.is_isomorphic(to_nx(G), to_nx(H))


@given(graphs(max_n=9))
def test_canonical_form_is_a_labelling_of_g(G):
    from domipoly.graph6 import parse_graph6

    C = parse_graph6(canonical_form(G))
    assert nx.is_isomorphic(to_nx(C), to_nx(G))

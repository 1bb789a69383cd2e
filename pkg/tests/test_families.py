import itertools

import pytest

from domipoly import catalog, engine, oracle
from domipoly.canon import are_isomorphic, canonical_key
from domipoly.errors import PreconditionFailed, VerticesAdjacent
from domipoly.families import (
    L1_ATTACH,
    L2_ATTACH,
    AttachmentSpec,
    build_gadgets,
    build_L1,
    build_L2,
    build_L_pair,
    build_M_pair,
    check_gadget_cut_identities,
    check_substitution_identities,
    gadget_cut_identities,
    m_pair_condition,
    substitution_identities,
    tree_pair,
)
from domipoly.graph import Graph, complete_graph, cut_vertices, is_connected, path_graph
from domipoly.identities import FAMILY_BASES

SPECS = [
    AttachmentSpec(base, S)
    for base in FAMILY_BASES.values()
    for r in range(base.n + 1)
    for S in itertools.combinations(range(base.n), r)
]


def spec_id(spec):
    return f"n{spec.base.n}e{len(spec.base.edges())}S{''.join(map(str, sorted(spec.anchors)))}"


def test_tree_pair():
    t1, t2 = tree_pair()
    assert t1.n == t2.n == 12
    assert t1.num_edges() == t2.num_edges() == 11
    assert is_connected(t1) and is_connected(t2)
    assert oracle.j(t1) == oracle.j(t2)
    assert sorted(t1.valencies()) == sorted(t2.valencies())
    assert canonical_key(t1) != canonical_key(t2)


def test_single_vertex_base_gives_tree_pair():
    t1, t2 = tree_pair()
    L1, L2 = build_L_pair(AttachmentSpec(Graph(1), [0]))
    assert are_isomorphic(L1, t1)
    assert are_isomorphic(L2, t2)


def test_orders():
    spec = AttachmentSpec(complete_graph(2), [0, 1])
    L1, L2 = build_L_pair(spec)
    assert L1.n == L2.n == 16
    assert len(L1_ATTACH) == len(L2_ATTACH) == 4


def test_anchor_validation():
    with pytest.raises(ValueError):
        AttachmentSpec(complete_graph(2), [2])


@pytest.mark.parametrize("spec", SPECS, ids=spec_id)
def test_L_pair_equal_polynomials(spec):
    L1, L2 = build_L_pair(spec)
    cfg = engine.EngineConfig.only("cut_vertex", "pendant", "disconnected", oracle_threshold=6)
    assert engine.j_engine(L1, cfg) == engine.j_engine(L2, cfg)
    if spec.anchors:
        assert canonical_key(L1) != canonical_key(L2)
    else:
        assert are_isomorphic(L1, L2)


@pytest.mark.parametrize("spec", [s for s in SPECS if build_L1(s).n <= 16], ids=spec_id)
def test_L_pair_oracle_spot_check(spec):
    assert oracle.j(build_L1(spec)) == oracle.j(build_L2(spec))


@pytest.mark.parametrize("spec", SPECS, ids=spec_id)
def test_gadget_identities(spec):
    assert all(gadget_cut_identities(spec).values())
    assert all(substitution_identities(spec).values())
    assert check_gadget_cut_identities(spec) and check_substitution_identities(spec)


def test_gadget_shapes():
    g = build_gadgets(AttachmentSpec(path_graph(3), [0, 2]))
    assert g.G1.graph.n == 4 and g.G2.graph.n == 5 and g.G3.graph.n == 6
    assert g.H.graph.n == 8 and g.H1.graph.n == 9
    # G2 and G3 are G1 with a pendant path of length one and two at v
    assert g.G2.graph.valency(g.G2.mark) == 1
    assert g.G3.graph.valency(g.G3.mark) == 1


def test_substitution_labels_matter():
    # with G2's plain and marked polynomials swapped the first identity is false
    from domipoly.poly import X, Y

    g = build_gadgets(AttachmentSpec(Graph(1), [0]))
    jg, g1p = g.j_base(), g.G1.plus()
    assert g.G2.plus() == X * g1p + X * Y * jg
    assert g.G2.j() != X * g1p + X * Y * jg


def test_M_pair_shapes_and_errors():
    M1, M2 = build_M_pair(path_graph(4), 0, 3)
    assert M1.n == M2.n == 6
    assert M1.num_edges() == M2.num_edges() == 3 + 4
    with pytest.raises(VerticesAdjacent):
        build_M_pair(path_graph(4), 0, 1)
    with pytest.raises(PreconditionFailed):
        build_M_pair(path_graph(4), 2, 2)
    with pytest.raises(PreconditionFailed):
        build_M_pair(path_graph(4), 0, 9)


def test_M_pair_condition_examples():
    assert m_pair_condition(path_graph(4), 0, 3)
    assert m_pair_condition(Graph(2), 0, 1)
    # common neighbour 1 of 0 and 2 misses vertex 3
    assert not m_pair_condition(Graph(4, [(0, 1), (1, 2), (2, 3)]), 0, 2)


def test_M_pair_sweep():
    checked = 0
    for M in catalog.all_graphs(6):
        for a in range(M.n):
            for b in range(a + 1, M.n):
                if M.has_edge(a, b) or not m_pair_condition(M, a, b):
                    continue
                M1, M2 = build_M_pair(M, a, b)
                assert oracle.j(M1) == oracle.j(M2), (M, a, b)
                if M.adj[a] and M.adj[b]:
                    assert not are_isomorphic(M1, M2), (M, a, b)
                checked += 1
    assert checked == 492

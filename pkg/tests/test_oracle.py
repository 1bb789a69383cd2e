import pytest
from hypothesis import given, settings, strategies as st

from conftest import graphs
from domipoly import oracle
from domipoly.errors import GraphTooLarge
from domipoly.graph import Graph, complete_graph, disjoint_union, empty_graph, path_graph, star_graph
from domipoly.poly import ONE, X, Y, eval_rational, parse_polynomial


def brute(G, keep=lambda w: True):
    """Independent reference: explicit sets, no bit tricks."""
    terms = {}
    for w in range(1 << G.n):
        if not keep(w):
            continue
        W = {v for v in range(G.n) if w >> v & 1}
        N = {u for v in W for u in G.neighbors(v)} - W
        key = (len(W), len(N))
        terms[key] = terms.get(key, 0) + 1
    return terms


@pytest.mark.parametrize("n", range(1, 9))
def test_complete_graph_closed_form(n):
    assert oracle.j(complete_graph(n)) == (X + Y) ** n - Y**n + ONE


@pytest.mark.parametrize("n", range(0, 8))
def test_edgeless_graph(n):
    assert oracle.j(empty_graph(n)) == (ONE + X) ** n


def test_small_values():
    assert oracle.j(Graph(1)) == ONE + X
    assert oracle.j(path_graph(3)) == parse_polynomial("1 + 2*x*y + x*y^2 + 3*x^2*y + x^3")
    # star with 3 leaves: centre in W gives x(x+y)^3; otherwise any nonempty
    # set of leaves has the centre as its only outside neighbour
    expect = X * (X + Y) ** 3 + ((ONE + X) ** 3 - ONE) * Y + ONE
    assert oracle.j(star_graph(3)) == expect


@settings(max_examples=60)
@given(graphs(max_n=10))
def test_numpy_and_python_paths_agree_with_reference(G):
    assert oracle.j(G).terms == brute(G)
    assert oracle.j_where(G, lambda w: True) == oracle.j(G)


@settings(max_examples=60)
@given(graphs(min_n=2, max_n=10), st.data())
def test_constrained_matches_reference(G, data):
    verts = list(range(G.n))
    fin = data.draw(st.sets(st.sampled_from(verts), max_size=3))
    fout = data.draw(st.sets(st.sampled_from([v for v in verts if v not in fin] or [None]), max_size=3))
    fout.discard(None)
    mi = sum(1 << v for v in fin)
    mo = sum(1 << v for v in fout)
    got = oracle.constrained(G, fin, fout)
    assert got.terms == brute(G, lambda w: w & mi == mi and not w & mo)


@given(graphs(max_n=10))
def test_evaluations(G):
    p = oracle.j(G)
    assert eval_rational(p, 1, 1) == 2**G.n
    assert p.coeff(G.n, 0) == 1
    assert p.coeff(0, 0) == 1


@given(graphs(max_n=6), graphs(max_n=6))
def test_multiplicative_over_components(G, H):
    assert oracle.j(disjoint_union(G, H)) == oracle.j(G) * oracle.j(H)


@given(graphs(max_n=9))
def test_split_on_membership(G):
    for v in range(G.n):
        assert oracle.constrained(G, [v]) + oracle.constrained(G, [], [v]) == oracle.j(G)


def test_dominating_set_count():
    assert oracle.count_dominating_sets(path_graph(3)) == 5
    assert oracle.dominating_set_sizes(path_graph(3)) == {1: 1, 2: 3, 3: 1}
    assert oracle.count_dominating_sets(complete_graph(3)) == 7


def test_constraints_validated():
    with pytest.raises(ValueError):
        oracle.ConstraintSet({1}, {1})
    with pytest.raises(ValueError):
        oracle.constrained(path_graph(3), [5])


def test_size_cap(monkeypatch):
    with pytest.raises(GraphTooLarge):
        oracle.j(path_graph(6), cap=5)
    monkeypatch.setenv("DOMIPOLY_ORACLE_CAP", "4")
    assert oracle.oracle_cap() == 4
    with pytest.raises(GraphTooLarge):
        oracle.j(path_graph(5))
    monkeypatch.delenv("DOMIPOLY_ORACLE_CAP")
    assert oracle.oracle_cap() == oracle.DEFAULT_ORACLE_CAP


def test_larger_graph_uses_blocks():
    # 20 vertices exercises the blocked numpy path
    G = path_graph(20)
    p = oracle.j(G)
    assert eval_rational(p, 1, 1) == 2**20
    from domipoly.specializations import j_path

    assert p == j_path(20)

import itertools

from hypothesis import strategies as st

from domipoly.graph import Graph
from domipoly.poly import BivariatePolynomial


@st.composite
def graphs(draw, min_n=1, max_n=9):
    n = draw(st.integers(min_n, max_n))
    pairs = list(itertools.combinations(range(n), 2))
    chosen = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    return Graph(n, [e for e, keep in zip(pairs, chosen) if keep])


@st.composite
def connected_graphs(draw, min_n=1, max_n=9):
    """A random spanning tree plus extra edges."""
    n = draw(st.integers(min_n, max_n))
    edges = [(draw(st.integers(0, v - 1)), v) for v in range(1, n)]
    pairs = list(itertools.combinations(range(n), 2))
    extra = draw(st.lists(st.sampled_from(pairs), max_size=2 * n)) if pairs else []
    return Graph(n, edges + extra)


@st.composite
def polys(draw, max_deg=4, max_terms=6, coeffs=st.integers(-20, 20)):
    exps = st.tuples(st.integers(0, max_deg), st.integers(0, max_deg))
    terms = draw(st.dictionaries(exps, coeffs, max_size=max_terms))
    return BivariatePolynomial(terms)

"""Constructions of non-isomorphic graphs sharing a polynomial, and their checks.

Three families are covered:

* a pair of 12-vertex trees with equal J;
* the L1/L2 pair: two 8-vertex skeleton trees with four copies of a base graph
  G, each copy's anchor set S joined to one skeleton vertex;
* the M1/M2 pair: two new vertices c, d added to a graph M along a 4-cycle in
  two different ways.

The gadget graphs G1, G2, G3, H, H1 are the pieces left when the L1/L2 pair is
cut at its two marked edges; their identities are checked here against the
constrained oracle.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

from . import oracle
from .errors import PreconditionFailed, VerticesAdjacent
from .graph import Graph, bits
from .poly import ONE, X, Y, BivariatePolynomial

# 1-based edge lists of the tree pair
_T1_EDGES = [(1, 2), (2, 3), (3, 4), (4, 5), (5, 6), (7, 3), (8, 5), (9, 1), (10, 4), (11, 5), (12, 6)]
_T2_EDGES = [(1, 2), (2, 3), (3, 4), (3, 5), (4, 6), (6, 7), (6, 8), (9, 2), (10, 3), (11, 5), (12, 7)]

# skeletons on 0-based vertices 0..7 and their four attachment points
L1_SKELETON = [(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (6, 2), (7, 4)]
L1_ATTACH = (0, 3, 4, 5)
L2_SKELETON = [(0, 1), (1, 2), (2, 3), (2, 4), (3, 5), (5, 6), (5, 7)]
L2_ATTACH = (1, 2, 4, 6)


def tree_pair() -> tuple[Graph, Graph]:
    t1 = Graph(12, [(u - 1, v - 1) for u, v in _T1_EDGES])
    t2 = Graph(12, [(u - 1, v - 1) for u, v in _T2_EDGES])
    return t1, t2


@dataclass(frozen=True)
class AttachmentSpec:
    base: Graph
    anchors: frozenset[int]

    def __init__(self, base: Graph, anchors: Iterable[int] = ()):
        anchors = frozenset(anchors)
        if any(not 0 <= a < base.n for a in anchors):
            raise ValueError(f"anchors {sorted(anchors)} not within the base graph")
        object.__setattr__(self, "base", base)
        object.__setattr__(self, "anchors", anchors)


@dataclass(frozen=True)
class MarkedGraph:
    graph: Graph
    mark: int

    def __post_init__(self):
        if not 0 <= self.mark < self.graph.n:
            raise ValueError("mark outside the graph")

    def plus(self) -> BivariatePolynomial:
        """J(graph | mark in W)."""
        return oracle.constrained(self.graph, [self.mark])

    def minus(self) -> BivariatePolynomial:
        """J(graph | mark not in W)."""
        return oracle.constrained(self.graph, [], [self.mark])

    def j(self) -> BivariatePolynomial:
        return oracle.j(self.graph)


def _with_copies(skeleton: list[tuple[int, int]], attach: Iterable[int], spec: AttachmentSpec) -> Graph:
    base = spec.base
    edges = list(skeleton)
    offset = 8
    for point in attach:
        edges.extend((u + offset, v + offset) for u, v in base.edges())
        edges.extend((point, a + offset) for a in sorted(spec.anchors))
        offset += base.n
    return Graph(offset, edges)


def build_L1(spec: AttachmentSpec) -> Graph:
    """Skeleton path p1..p6 with leaves on p3 and p5; copies of the base on p1, p4, p5, p6."""
    return _with_copies(L1_SKELETON, L1_ATTACH, spec)


def build_L2(spec: AttachmentSpec) -> Graph:
    return _with_copies(L2_SKELETON, L2_ATTACH, spec)


def build_L_pair(spec: AttachmentSpec) -> tuple[Graph, Graph]:
    return build_L1(spec), build_L2(spec)


@dataclass(frozen=True)
class Gadgets:
    spec: AttachmentSpec
    G1: MarkedGraph
    G2: MarkedGraph
    G3: MarkedGraph
    H: MarkedGraph
    H1: MarkedGraph

    def j_base(self) -> BivariatePolynomial:
        return oracle.j(self.spec.base)

    def j_base_avoiding_anchors(self) -> BivariatePolynomial:
        """J(G'): the base graph with no anchor vertex in W."""
        return oracle.constrained(self.spec.base, [], self.spec.anchors)


def build_gadgets(spec: AttachmentSpec) -> Gadgets:
    """Base graph vertices come first in every gadget; v is the attachment vertex."""
    base, anchors = spec.base, sorted(spec.anchors)
    nb = base.n
    v = nb
    g1_edges = base.edges() + [(a, v) for a in anchors]
    G1 = Graph(nb + 1, g1_edges)
    G2 = Graph(nb + 2, g1_edges + [(v, nb + 1)])
    G3 = Graph(nb + 3, g1_edges + [(v, nb + 1), (nb + 1, nb + 2)])
    second = [(a + nb + 1, b + nb + 1) for a, b in g1_edges]
    v2 = 2 * nb + 1
    h_edges = g1_edges + second + [(v, v2)]
    H = Graph(2 * nb + 2, h_edges)
    H1 = Graph(2 * nb + 3, h_edges + [(v, 2 * nb + 2)])
    return Gadgets(
        spec,
        G1=MarkedGraph(G1, v),
        G2=MarkedGraph(G2, nb + 1),
        G3=MarkedGraph(G3, nb + 2),
        H=MarkedGraph(H, v),
        H1=MarkedGraph(H1, 2 * nb + 2),
    )


def gadget_cut_identities(spec: AttachmentSpec) -> dict[str, bool]:
    """The three gadget identities obtained by cutting the edge joining H's attachment vertices."""
    g = build_gadgets(spec)
    jg1, g1p, g1m = g.G1.j(), g.G1.plus(), g.G1.minus()
    jgp = g.j_base_avoiding_anchors()
    return {
        "H1": g.H1.j() == g.G2.j() * jg1 + (Y - ONE) * (X + Y + ONE) * jgp * g1p,
        "H1+": g.H1.plus() == g.G2.plus() * jg1 + X * (Y - ONE) * jgp * g1p,
        "H-": g.H.minus() == g1m * jg1 + (Y - ONE) * jgp * g1p,
    }


def check_gadget_cut_identities(spec: AttachmentSpec) -> bool:
    return all(gadget_cut_identities(spec).values())


def substitution_identities(spec: AttachmentSpec) -> dict[str, bool]:
    """Express the pendant-path gadgets through G1 and the base graph.

    J(G2+) = x J(G1+) + xy J(G)
    J(G2)  = (x+y) J(G1+) + J(G1-) + xy J(G)
    J(G3)  = (x^2+2xy+y) J(G1+) + (xy+1) J(G1-) + xy(x+y) J(G)

    The superscripted G2 term is the one with G2's far leaf forced into W.
    """
    g = build_gadgets(spec)
    jg = g.j_base()
    g1p, g1m = g.G1.plus(), g.G1.minus()
    return {
        "G2+": g.G2.plus() == X * g1p + X * Y * jg,
        "G2": g.G2.j() == (X + Y) * g1p + g1m + X * Y * jg,
        "G3": g.G3.j()
        == (X * X + 2 * X * Y + Y) * g1p + (X * Y + ONE) * g1m + X * Y * (X + Y) * jg,
    }


def check_substitution_identities(spec: AttachmentSpec) -> bool:
    return all(substitution_identities(spec).values())


def _check_nonadjacent(M: Graph, a: int, b: int) -> None:
    if a == b:
        raise PreconditionFailed("a and b must be distinct")
    if not (0 <= a < M.n and 0 <= b < M.n):
        raise PreconditionFailed(f"a={a}, b={b} outside the graph")
    if M.has_edge(a, b):
        raise VerticesAdjacent(f"vertices {a} and {b} are adjacent")


def build_M1(M: Graph, a: int, b: int) -> Graph:
    """M plus new vertices c = n, d = n+1 and edges ab, bc, cd, ad."""
    _check_nonadjacent(M, a, b)
    c, d = M.n, M.n + 1
    return M.add_vertices(2, [(a, b), (b, c), (c, d), (a, d)])


def build_M2(M: Graph, a: int, b: int) -> Graph:
    """M plus new vertices c = n, d = n+1 and edges ac, bc, ad, bd."""
    _check_nonadjacent(M, a, b)
    c, d = M.n, M.n + 1
    return M.add_vertices(2, [(a, c), (b, c), (a, d), (b, d)])


def build_M_pair(M: Graph, a: int, b: int) -> tuple[Graph, Graph]:
    return build_M1(M, a, b), build_M2(M, a, b)


def m_pair_condition(M: Graph, a: int, b: int) -> bool:
    """Sufficient condition for J(M1) = J(M2).

    Every common neighbour of a and b is adjacent to all other vertices of M,
    and either every vertex of N(a) - N(b) is adjacent to every vertex of N(b),
    or every vertex of N(b) - N(a) is adjacent to every vertex of N(a).
    """
    _check_nonadjacent(M, a, b)
    na, nb_ = M.adj[a], M.adj[b]
    full = M.all_mask
    for w in bits(na & nb_):
        if M.adj[w] | (1 << w) != full:
            return False

    def covers(side: int, other: int) -> bool:
        return all(other & ~M.adj[w] == 0 for w in bits(side))

    return covers(na & ~nb_, nb_) or covers(nb_ & ~na, na)

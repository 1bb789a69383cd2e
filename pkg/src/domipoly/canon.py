"""Isomorphism-invariant graph keys by colour refinement and backtracking.

The key is the lexicographically smallest graph6 string over all leaves of an
individualisation-refinement search tree. Refinement orders colour classes by
invariant signatures only, so the set of leaves, and hence the minimum, does
not depend on the input labelling. Branches on vertices that are twins of an
already explored vertex of the same cell are skipped: swapping two twins is an
automorphism fixing the current colouring, so both subtrees yield the same leaves
up to that swap. Intended for the small graphs met during memoisation (n <= 16).
"""

from __future__ import annotations

from .graph import Graph, bits, relabel
from .graph6 import emit_graph6

CANONICAL_LIMIT = 16


def _rank(signatures: list) -> list[int]:
    order = {s: i for i, s in enumerate(sorted(set(signatures)))}
    return [order[s] for s in signatures]


def refine(G: Graph, colors: list[int]) -> list[int]:
    """Coarsest equitable refinement of ``colors`` (1-dimensional Weisfeiler-Leman)."""
    adj = G.adj
    k = len(set(colors))
    while True:
        sigs = [
            (colors[v], tuple(sorted(colors[w] for w in bits(adj[v]))))
            for v in range(G.n)
        ]
        new = _rank(sigs)
        k_new = max(new, default=-1) + 1
        if k_new == k:
            return new
        colors, k = new, k_new


def _twins(G: Graph, v: int, w: int) -> bool:
    return G.adj[v] & ~(1 << w) == G.adj[w] & ~(1 << v)


def _search(G: Graph, colors: list[int]) -> str:
    colors = refine(G, colors)
    n = G.n
    if len(set(colors)) == n:
        return emit_graph6(relabel(G, colors))
    sizes: dict[int, int] = {}
    for c in colors:
        sizes[c] = sizes.get(c, 0) + 1
    target = min(c for c, s in sizes.items() if s > 1)
    cell = [v for v in range(n) if colors[v] == target]
    best = None
    tried: list[int] = []
    for v in cell:
        if any(_twins(G, v, w) for w in tried):
            continue
        tried.append(v)
        split = _rank([(colors[u], u != v) for u in range(n)])
        cert = _search(G, split)
        if best is None or cert < best:
            best = cert
    return best


def canonical_form(G: Graph) -> str:
    """graph6 string of the canonical relabelling of G."""
    if G.n == 0:
        return emit_graph6(G)
    return _search(G, [0] * G.n)


def canonical_key(G: Graph) -> bytes:
    """Equal for two graphs exactly when they are isomorphic."""
    return b"c:" + canonical_form(G).encode("ascii")


def labeled_key(G: Graph) -> bytes:
    """Exact-labelled key: equal only for identical adjacency."""
    return b"l:" + emit_graph6(G).encode("ascii")


def are_isomorphic(G: Graph, H: Graph) -> bool:
    if G.n != H.n or G.num_edges() != H.num_edges():
        return False
    if sorted(G.valencies()) != sorted(H.valencies()):
        return False
    return canonical_key(G) == canonical_key(H)

"""Small-graph catalogs: bundled graph6 files and the generator that made them.

``connected.g6`` holds every connected graph on 1..8 vertices up to isomorphism
(1, 1, 2, 6, 21, 112, 853, 11117 graphs) and ``graphs_le6.g6`` every graph on
1..6 vertices (1, 2, 4, 11, 34, 156). Both were produced by
``scripts/make_catalogs.py`` through vertex augmentation with canonical-key
deduplication.
"""

from __future__ import annotations

import random
from importlib import resources
from typing import Iterator

from .canon import canonical_key
from .graph import Graph, disjoint_union, is_connected
from .graph6 import iter_graph6_lines

CONNECTED_FILE = "connected.g6"
ALL_FILE = "graphs_le6.g6"


def _bundled(name: str) -> Iterator[Graph]:
    text = resources.files("domipoly.data").joinpath(name).read_text()
    for _, g in iter_graph6_lines(text.splitlines()):
        yield g


def connected_graphs(max_n: int = 8, min_n: int = 1) -> list[Graph]:
    """Connected graphs with min_n <= n <= max_n (max_n <= 8), by order then file order."""
    if max_n > 8:
        raise ValueError("bundled connected catalog stops at 8 vertices")
    return [g for g in _bundled(CONNECTED_FILE) if min_n <= g.n <= max_n]


def all_graphs(max_n: int = 6, min_n: int = 1) -> list[Graph]:
    if max_n > 6:
        raise ValueError("bundled catalog of all graphs stops at 6 vertices")
    return [g for g in _bundled(ALL_FILE) if min_n <= g.n <= max_n]


def graphs_by_components(max_n: int = 8) -> list[Graph]:
    """Every graph on 1..max_n vertices, built as multisets of connected catalog graphs.

    Each graph is determined up to isomorphism by the multiset of its
    components, so this enumerates each isomorphism class exactly once.
    Graphs are ordered by order, then by their component choice.
    """
    conn = connected_graphs(max_n)
    out: list[Graph] = []

    def rec(remaining: int, start: int, parts: list[Graph]):
        if remaining == 0:
            out.append(disjoint_union(*parts))
            return
        for i in range(start, len(conn)):
            g = conn[i]
            if g.n > remaining:
                continue
            parts.append(g)
            rec(remaining - g.n, i, parts)
            parts.pop()

    for n in range(1, max_n + 1):
        rec(n, 0, [])
    return out


def extend_by_vertex(graphs: list[Graph], connected: bool) -> list[Graph]:
    """All graphs obtained by adding one vertex to a member of ``graphs``, up to isomorphism.

    With ``connected`` the new vertex gets at least one neighbour and only
    connected results are kept. Every connected graph has a vertex whose removal
    leaves it connected, so extending all connected graphs of order n-1 reaches
    all connected graphs of order n.
    """
    seen: dict[bytes, Graph] = {}
    for g in graphs:
        n = g.n
        for nb in range(1 if connected else 0, 1 << n):
            masks = [m | ((nb >> v & 1) << n) for v, m in enumerate(g.adj)]
            masks.append(nb)
            h = Graph.from_masks(masks)
            if connected and not is_connected(h):
                continue
            key = canonical_key(h)
            if key not in seen:
                seen[key] = h
    return [seen[k] for k in sorted(seen)]


def generate(max_n: int, connected: bool) -> dict[int, list[Graph]]:
    levels = {1: [Graph(1)]}
    for n in range(2, max_n + 1):
        levels[n] = extend_by_vertex(levels[n - 1], connected)
    return levels


def random_graph(n: int, p: float, rng: random.Random) -> Graph:
    return Graph(n, [(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < p])


def random_graphs(count: int, n_range: tuple[int, int], seed: int = 0) -> list[Graph]:
    """Seeded G(n, p) sample with n uniform in n_range and p uniform in [0.15, 0.85]."""
    rng = random.Random(seed)
    out = []
    for _ in range(count):
        n = rng.randint(*n_range)
        out.append(random_graph(n, rng.uniform(0.15, 0.85), rng))
    return out


"""Simple undirected graphs on dense vertex indices 0..n-1.

Adjacency is held as one integer bitmask per vertex; vertex sets crossing the
public API are ``frozenset``s of indices. Graphs are immutable once built.
Operations that remove vertices relabel the survivors densely, preserving
their relative order, and report an ``{old: new}`` index map.
"""

from __future__ import annotations

from typing import Iterable, Iterator, Sequence

from .errors import GraphTooLarge, MalformedEdgeList, NotACutVertex

MAX_ORDER = 62


def mask_of(vertices: Iterable[int]) -> int:
    m = 0
    for v in vertices:
        m |= 1 << v
    return m


def bits(mask: int) -> Iterator[int]:
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def popcount(mask: int) -> int:
    return bin(mask).count("1")


class Graph:
    __slots__ = ("n", "adj", "_hash")

    def __init__(self, n: int, edges: Iterable[tuple[int, int]] = ()):
        if n < 0:
            raise ValueError("negative order")
        if n > MAX_ORDER:
            raise GraphTooLarge(f"order {n} exceeds the supported maximum {MAX_ORDER}")
        adj = [0] * n
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u}, {v}) out of range for order {n}")
            if u == v:
                raise ValueError(f"self-loop at {u}")
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        self.n = n
        self.adj = tuple(adj)
        self._hash = None

    @classmethod
    def from_masks(cls, masks: Sequence[int]) -> "Graph":
        n = len(masks)
        if n > MAX_ORDER:
            raise GraphTooLarge(f"order {n} exceeds the supported maximum {MAX_ORDER}")
        g = cls.__new__(cls)
        g.n = n
        g.adj = tuple(masks)
        g._hash = None
        return g

    # -- basic queries ----------------------------------------------------

    @property
    def order(self) -> int:
        return self.n

    @property
    def all_mask(self) -> int:
        return (1 << self.n) - 1

    def vertices(self) -> range:
        return range(self.n)

    def neighbors(self, v: int) -> frozenset[int]:
        return frozenset(bits(self.adj[v]))

    def valency(self, v: int) -> int:
        return popcount(self.adj[v])

    def valencies(self) -> list[int]:
        return [popcount(m) for m in self.adj]

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def edges(self) -> list[tuple[int, int]]:
        return [(u, v) for u in range(self.n) for v in bits(self.adj[u] >> (u + 1) << (u + 1))]

    def num_edges(self) -> int:
        return sum(popcount(m) for m in self.adj) // 2

    def closed_mask(self, v: int) -> int:
        return self.adj[v] | (1 << v)

    def is_complete(self) -> bool:
        full = self.all_mask
        return all(self.adj[v] | (1 << v) == full for v in range(self.n))

    def __eq__(self, other) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self.adj == other.adj

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(self.adj)
        return self._hash

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, edges={self.edges()})"

    # -- editing (all return new graphs) -----------------------------------

    def add_edges(self, edges: Iterable[tuple[int, int]]) -> "Graph":
        return Graph(self.n, self.edges() + list(edges))

    def remove_edge(self, u: int, v: int) -> "Graph":
        adj = list(self.adj)
        adj[u] &= ~(1 << v)
        adj[v] &= ~(1 << u)
        return Graph.from_masks(adj)

    def add_vertices(self, k: int, edges: Iterable[tuple[int, int]] = ()) -> "Graph":
        return Graph(self.n + k, self.edges() + list(edges))


def _check_vertices(G: Graph, W: Iterable[int]) -> int:
    m = mask_of(W)
    if m >> G.n:
        raise ValueError(f"vertex set {sorted(bits(m))} not within 0..{G.n - 1}")
    return m


def closed_neighborhood_mask(G: Graph, wmask: int) -> int:
    out = wmask
    for w in bits(wmask):
        out |= G.adj[w]
    return out


def closed_neighborhood(G: Graph, W: Iterable[int]) -> frozenset[int]:
    """N[W]: W together with every vertex adjacent to a member of W."""
    return frozenset(bits(closed_neighborhood_mask(G, _check_vertices(G, W))))


def open_neighborhood(G: Graph, W: Iterable[int]) -> frozenset[int]:
    """N(W) = N[W] - W.

    Not the union of the members' own neighbourhoods: a vertex of W adjacent
    to another vertex of W is excluded.
    """
    m = _check_vertices(G, W)
    return frozenset(bits(closed_neighborhood_mask(G, m) & ~m))


def induced_by_mask(G: Graph, keep: int) -> tuple[Graph, dict[int, int]]:
    index = {old: new for new, old in enumerate(bits(keep))}
    masks = []
    for old in index:
        m = 0
        for w in bits(G.adj[old] & keep):
            m |= 1 << index[w]
        masks.append(m)
    return Graph.from_masks(masks), index


def delete_vertices(G: Graph, D: Iterable[int]) -> tuple[Graph, dict[int, int]]:
    """Induced subgraph on V - D, densely relabelled; returns (graph, old->new map)."""
    return induced_by_mask(G, G.all_mask & ~_check_vertices(G, D))


def contract_vertex(G: Graph, v: int) -> Graph:
    """G\\v: join every pair of neighbours of v, then delete v."""
    nb = G.adj[v]
    adj = list(G.adj)
    for w in bits(nb):
        adj[w] |= nb & ~(1 << w)
    H = Graph.from_masks(adj)
    return induced_by_mask(H, G.all_mask & ~(1 << v))[0]


def is_domination_covered(G: Graph, v: int, u: int) -> bool:
    """True iff u is a neighbour of v and N[v] is contained in N[u]."""
    if u == v:
        raise ValueError("u and v must differ")
    return G.has_edge(u, v) and G.closed_mask(v) & ~G.closed_mask(u) == 0


def component_masks(G: Graph) -> list[int]:
    seen = 0
    comps = []
    for s in range(G.n):
        if seen >> s & 1:
            continue
        comp = frontier = 1 << s
        while frontier:
            nxt = 0
            for w in bits(frontier):
                nxt |= G.adj[w]
            frontier = nxt & ~comp
            comp |= frontier
        seen |= comp
        comps.append(comp)
    return comps


def is_connected(G: Graph) -> bool:
    return len(component_masks(G)) <= 1


def connected_components(G: Graph) -> list[tuple[Graph, dict[int, int]]]:
    """Components in order of their lowest vertex, each with an old->new map."""
    return [induced_by_mask(G, m) for m in component_masks(G)]


def _lowpoint_search(G: Graph) -> tuple[set[int], list[tuple[int, int]]]:
    disc = [-1] * G.n
    low = [0] * G.n
    cut: set[int] = set()
    bridges: list[tuple[int, int]] = []
    t = 0
    for root in range(G.n):
        if disc[root] >= 0:
            continue
        disc[root] = low[root] = t
        t += 1
        root_children = 0
        # stack of (vertex, parent, iterator over neighbours)
        stack = [(root, -1, bits(G.adj[root]))]
        while stack:
            v, parent, it = stack[-1]
            advanced = False
            for w in it:
                if disc[w] < 0:
                    disc[w] = low[w] = t
                    t += 1
                    stack.append((w, v, bits(G.adj[w])))
                    advanced = True
                    break
                if w != parent:
                    low[v] = min(low[v], disc[w])
            if advanced:
                continue
            stack.pop()
            if parent >= 0:
                low[parent] = min(low[parent], low[v])
                if low[v] > disc[parent]:
                    bridges.append((min(v, parent), max(v, parent)))
                if parent == root:
                    root_children += 1
                elif low[v] >= disc[parent]:
                    cut.add(parent)
        if root_children >= 2:
            cut.add(root)
    return cut, sorted(bridges)


def cut_vertices(G: Graph) -> frozenset[int]:
    """Articulation points."""
    return frozenset(_lowpoint_search(G)[0])


def cut_edges(G: Graph) -> list[tuple[int, int]]:
    """Bridges as sorted (u, v) pairs with u < v."""
    return _lowpoint_search(G)[1]


def split_at_cut_vertex(G: Graph, v: int) -> list[tuple[Graph, int, dict[int, int]]]:
    """Split G at cut vertex v into pieces C_1..C_l, each keeping its own copy of v.

    Piece j is induced on v plus the vertices of one component of G - v that
    contains a neighbour of v; components of G not containing v are ignored.
    Returns ``(piece, index of v in piece, old->new map)``
    triples ordered by the lowest vertex of each component.
    """
    rest_mask = G.all_mask & ~(1 << v)
    H, index = induced_by_mask(G, rest_mask)
    back = {new: old for old, new in index.items()}
    pieces = []
    for comp in component_masks(H):
        old = mask_of(back[w] for w in bits(comp))
        if old & G.adj[v]:
            pieces.append(old)
    if len(pieces) < 2:
        raise NotACutVertex(f"vertex {v} is not a cut vertex")
    out = []
    for old in pieces:
        piece, m = induced_by_mask(G, old | (1 << v))
        out.append((piece, m[v], m))
    return out


def disjoint_union(*graphs: Graph) -> Graph:
    edges = []
    offset = 0
    for g in graphs:
        edges.extend((u + offset, w + offset) for u, w in g.edges())
        offset += g.n
    return Graph(offset, edges)


def relabel(G: Graph, perm: Sequence[int]) -> Graph:
    """Graph whose vertex perm[i] plays the role of G's vertex i."""
    return Graph(G.n, [(perm[u], perm[w]) for u, w in G.edges()])


# -- standard graphs -------------------------------------------------------


def complete_graph(n: int) -> Graph:
    return Graph(n, [(u, v) for u in range(n) for v in range(u + 1, n)])


def path_graph(n: int) -> Graph:
    return Graph(n, [(i, i + 1) for i in range(n - 1)])


def cycle_graph(n: int) -> Graph:
    return Graph(n, [(i, (i + 1) % n) for i in range(n)] if n >= 3 else [])


def empty_graph(n: int) -> Graph:
    return Graph(n)


def star_graph(leaves: int) -> Graph:
    """K_{1,leaves} with centre 0."""
    return Graph(leaves + 1, [(0, i) for i in range(1, leaves + 1)])


# -- plain edge-list text ----------------------------------------------------


def parse_edge_list(text: str) -> Graph:
    """Parse ``n m`` followed by m lines ``u v`` (0-based); '#' starts a comment."""
    rows = []
    for raw in text.splitlines():
        line = raw.split("#", 1)[0].strip()
        if line:
            rows.append(line.split())
    if not rows:
        raise MalformedEdgeList("empty edge list")
    try:
        header = [int(t) for t in rows[0]]
        body = [tuple(int(t) for t in r) for r in rows[1:]]
    except ValueError as exc:
        raise MalformedEdgeList(f"non-integer token: {exc}") from None
    if len(header) != 2 or any(len(r) != 2 for r in body):
        raise MalformedEdgeList("header must be 'n m' and every edge line 'u v'")
    n, m = header
    if len(body) != m:
        raise MalformedEdgeList(f"header announces {m} edges, found {len(body)}")
    if n > MAX_ORDER:
        raise GraphTooLarge(f"order {n} exceeds the supported maximum {MAX_ORDER}")
    try:
        return Graph(n, body)
    except ValueError as exc:
        raise MalformedEdgeList(str(exc)) from None


def format_edge_list(G: Graph) -> str:
    edges = G.edges()
    lines = [f"{G.n} {len(edges)}"] + [f"{u} {v}" for u, v in edges]
    return "\n".join(lines) + "\n"

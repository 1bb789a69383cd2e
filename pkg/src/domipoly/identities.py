"""Identity suites: every recurrence checked against the constrained oracle.

Each suite walks a corpus and records, per identity, how many instances were
checked and which failed. Unconditional pieces on the right-hand sides come
from the plain oracle; conditional pieces from ``oracle.constrained`` or
``oracle.j_where``. The division-based conditionals are exercised through
``engine.conditional_*_from`` so a non-exact division shows up as a failure.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Callable, Iterable

from . import catalog, engine, oracle
from .canon import canonical_key
from .errors import RemainderNonZero
from .families import (
    AttachmentSpec,
    build_L_pair,
    build_M_pair,
    check_gadget_cut_identities,
    check_substitution_identities,
    tree_pair,
    m_pair_condition,
)
from .graph import (
    Graph,
    bits,
    complete_graph,
    contract_vertex,
    cut_edges,
    cut_vertices,
    delete_vertices,
    induced_by_mask,
    path_graph,
    split_at_cut_vertex,
)
from .graph6 import emit_graph6
from .poly import ONE, X, Y
from .specializations import check_pendant_conditionals


@dataclass
class CheckResult:
    name: str
    checked: int = 0
    failures: list[str] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.failures


class Suite:
    def __init__(self):
        self.results: dict[str, CheckResult] = {}

    def record(self, name: str, ok: bool, where: str) -> None:
        res = self.results.setdefault(name, CheckResult(name))
        res.checked += 1
        if not ok:
            res.failures.append(where)

    def attempt(self, name: str, fn: Callable[[], bool], where: str) -> None:
        try:
            ok = fn()
        except RemainderNonZero as exc:
            ok, where = False, f"{where} (RemainderNonZero: {exc})"
        self.record(name, ok, where)

    @property
    def passed(self) -> bool:
        return all(r.passed for r in self.results.values())

    def first_failure(self) -> str | None:
        for r in self.results.values():
            if r.failures:
                return f"{r.name}: {r.failures[0]}"
        return None


def _minus(G: Graph, *vs: int) -> Graph:
    return delete_vertices(G, vs)[0]


def _minus_closed(G: Graph, a: int) -> Graph:
    return induced_by_mask(G, G.all_mask & ~G.closed_mask(a))[0]


def vertex_identities(G: Graph, a: int, suite: Suite) -> None:
    """Conditional identities around one vertex a of G."""
    where = f"{emit_graph6(G)} a={a}"
    jg = oracle.j(G)
    na = G.adj[a]
    deg = G.valency(a)
    closed = bits(G.closed_mask(a))
    j_in = oracle.constrained(G, [a])
    j_out = oracle.constrained(G, [], [a])
    j_forb = oracle.constrained(G, [], closed)
    j_contract = oracle.j(contract_vertex(G, a))
    j_del = oracle.j(_minus(G, a))
    j_del_closed = oracle.j(_minus_closed(G, a))
    abit = 1 << a

    suite.record("split a in / a out", jg == j_in + j_out, where)
    suite.record(
        "a in W, N(a) out",
        oracle.constrained(G, [a], bits(na)) == X * j_del_closed.shift(0, deg),
        where,
    )
    meets_in = oracle.j_where(G, lambda w: bool(w & abit) and bool(w & na))
    suite.record("a in W, N(a) meets W", meets_in == X * (j_contract - j_forb), where)
    suite.record(
        "a in W",
        j_in == X * j_del_closed.shift(0, deg) + X * (j_contract - j_forb),
        where,
    )
    suite.record("a out, N(a) out", oracle.constrained(G, [], [a, *bits(na)]) == j_forb, where)
    meets_out = oracle.j_where(G, lambda w: not w & abit and bool(w & na))
    suite.record("a out, N(a) meets W", meets_out == Y * (j_del - j_forb), where)
    suite.record("a not in W", j_out == Y * j_del + (ONE - Y) * j_forb, where)
    suite.attempt(
        "N[a] out by division",
        lambda: engine.conditional_forbidden_closed_from(jg, j_contract, j_del, j_del_closed, deg)
        == j_forb,
        where,
    )
    suite.attempt(
        "a in W by division",
        lambda: engine.conditional_in_from(jg, j_contract, j_del, j_del_closed, deg) == j_in,
        where,
    )


def _oracle_cfg() -> engine.EngineConfig:
    cap = oracle.oracle_cap()
    return engine.EngineConfig(oracle_threshold=cap)


def pair_identities(G: Graph, suite: Suite) -> None:
    """Domination-covered, pendant and clique-twin rules at every admissible pair."""
    jg = oracle.j(G)
    cfg = _oracle_cfg()
    for v in range(G.n):
        for u in bits(G.adj[v]):
            where = f"{emit_graph6(G)} v={v} u={u}"
            if G.closed_mask(v) & ~G.closed_mask(u) == 0:
                suite.record("domination-covered pair", engine.rule_domination_covered(G, v, u, cfg) == jg, where)
            if G.valency(v) == 1:
                suite.record("pendant vertex", engine.rule_pendant(G, v, u, cfg) == jg, where)
                suite.record("pendant conditionals", check_pendant_conditionals(G, v, u), where)
            if u > v:
                try:
                    rhs = engine.rule_clique_twin(G, u, v, cfg)
                except engine.PreconditionFailed:
                    continue
                suite.record("clique twins", rhs == jg, where)


def domination_covered_identities(G: Graph, suite: Suite) -> None:
    jg = oracle.j(G)
    cfg = _oracle_cfg()
    for v in range(G.n):
        for u in bits(G.adj[v]):
            if G.closed_mask(v) & ~G.closed_mask(u) == 0:
                where = f"{emit_graph6(G)} v={v} u={u}"
                suite.record("domination-covered pair", engine.rule_domination_covered(G, v, u, cfg) == jg, where)


def cut_identities(G: Graph, suite: Suite) -> None:
    """Bridge identity at every cut edge; cut-vertex product formula at every cut vertex."""
    jg = oracle.j(G)
    for e in cut_edges(G):
        suite.record("cut edge", engine.check_cut_edge_identity(G, e), f"{emit_graph6(G)} e={e}")
    for v in sorted(cut_vertices(G)):
        where = f"{emit_graph6(G)} v={v}"
        pieces = split_at_cut_vertex(G, v)
        l = len(pieces)
        prod_in = prod_del = prod_forb = ONE
        for piece, pv, _ in pieces:
            prod_in = prod_in * oracle.constrained(piece, [pv])
            prod_del = prod_del * oracle.j(_minus(piece, pv))
            prod_forb = prod_forb * oracle.constrained(piece, [], bits(piece.closed_mask(pv)))
        in_part = prod_in.divide_by_monomial(l - 1, 0)
        out_part = Y * prod_del + (ONE - Y) * prod_forb
        suite.record("cut vertex", jg == in_part + out_part, where)
        suite.record("cut vertex, v in W", oracle.constrained(G, [v]) == in_part, where)
        suite.record("cut vertex, v not in W", oracle.constrained(G, [], [v]) == out_part, where)
        suite.attempt(
            "cut vertex by division",
            lambda: engine.rule_cut_vertex(G, v, _oracle_cfg()) == jg,
            where,
        )


def run_identity_suite(graphs: Iterable[Graph]) -> Suite:
    suite = Suite()
    for G in graphs:
        for a in range(G.n):
            vertex_identities(G, a, suite)
        pair_identities(G, suite)
        cut_identities(G, suite)
    return suite


def run_domination_covered_suite(graphs: Iterable[Graph]) -> Suite:
    suite = Suite()
    for G in graphs:
        domination_covered_identities(G, suite)
    return suite


FAMILY_BASES = {
    "K1": complete_graph(1),
    "K2": complete_graph(2),
    "P3": path_graph(3),
    "K3": complete_graph(3),
}


def family_specs() -> list[tuple[str, AttachmentSpec]]:
    out = []
    for name, base in FAMILY_BASES.items():
        for r in range(base.n + 1):
            for S in itertools.combinations(range(base.n), r):
                out.append((f"{name} S={list(S)}", AttachmentSpec(base, S)))
    return out


def run_family_suite(max_m: int = 6, cfg: engine.EngineConfig | None = None) -> Suite:
    suite = Suite()
    t1, t2 = tree_pair()
    suite.record("tree pair: equal J", oracle.j(t1) == oracle.j(t2), "T1/T2")
    suite.record("tree pair: equal valencies", sorted(t1.valencies()) == sorted(t2.valencies()), "T1/T2")
    suite.record("tree pair: non-isomorphic", canonical_key(t1) != canonical_key(t2), "T1/T2")

    for label, spec in family_specs():
        L1, L2 = build_L_pair(spec)
        suite.record("L pair: equal J", engine.j_engine(L1, cfg) == engine.j_engine(L2, cfg), label)
        if spec.anchors:
            suite.record("L pair: non-isomorphic", canonical_key(L1) != canonical_key(L2), label)
        suite.record("gadget identities", check_gadget_cut_identities(spec), label)
        suite.record("substitution identities", check_substitution_identities(spec), label)

    for M in catalog.all_graphs(max_m) if max_m >= 1 else []:
        for a in range(M.n):
            for b in range(a + 1, M.n):
                if M.has_edge(a, b) or not m_pair_condition(M, a, b):
                    continue
                where = f"{emit_graph6(M)} a={a} b={b}"
                M1, M2 = build_M_pair(M, a, b)
                suite.record("M pair: equal J", oracle.j(M1) == oracle.j(M2), where)
                if M.adj[a] and M.adj[b]:
                    suite.record("M pair: non-isomorphic", canonical_key(M1) != canonical_key(M2), where)
    return suite

"""Recursive computation of J(G) by structural reduction rules.

Rule precedence at each step: memo hit, small order (oracle), disconnected
(product of components), complete graph (closed form), pendant vertex,
adjacent clique twins, cut vertex, domination-covered pair, and finally the
oracle. Pivots are always the lowest-index qualifying vertex or pair, so a
given graph and configuration always produce the same trace.

Every rule is split into a *subproblem builder* (which graphs to recurse on,
plus integer parameters) and a *combiner* (the arithmetic joining the child
polynomials). The combiners are shared with ``ReductionTrace.replay``.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Callable, Sequence

from . import oracle
from .canon import CANONICAL_LIMIT, canonical_key, labeled_key
from .errors import GraphTooLarge, NotACutEdge, NotACutVertex, PreconditionFailed
from .graph import (
    Graph,
    bits,
    component_masks,
    contract_vertex,
    cut_edges,
    cut_vertices,
    delete_vertices,
    induced_by_mask,
    is_domination_covered,
    split_at_cut_vertex,
)
from .poly import (
    ONE,
    ONE_MINUS_X_MINUS_Y,
    X,
    Y,
    BivariatePolynomial,
    divide_exact,
    power,
)

RULES = (
    "disconnected",
    "complete",
    "pendant",
    "clique_twin",
    "cut_vertex",
    "domination_covered",
)
MEMO_MODES = ("off", "exact", "canonical")


@dataclass
class EngineConfig:
    oracle_threshold: int = 10
    memo_mode: str = "canonical"
    rules: dict[str, bool] = field(default_factory=lambda: dict.fromkeys(RULES, True))
    use_division: bool = True
    oracle_cap: int | None = None
    canonical_limit: int = CANONICAL_LIMIT

    def __post_init__(self):
        if self.memo_mode not in MEMO_MODES:
            raise ValueError(f"memo_mode must be one of {MEMO_MODES}")
        unknown = set(self.rules) - set(RULES)
        if unknown:
            raise ValueError(f"unknown rules {sorted(unknown)}")
        self.rules = {r: self.rules.get(r, True) for r in RULES}
        if self.oracle_threshold > self.cap:
            raise ValueError(
                f"oracle_threshold {self.oracle_threshold} exceeds oracle cap {self.cap}"
            )

    @property
    def cap(self) -> int:
        return oracle.oracle_cap() if self.oracle_cap is None else self.oracle_cap

    def enabled(self, rule: str) -> bool:
        return self.rules[rule]

    @classmethod
    def only(cls, *rules: str, **kw) -> "EngineConfig":
        """Config with just the named rules switched on."""
        return cls(rules={r: r in rules for r in RULES}, **kw)


# -- combiners ---------------------------------------------------------------


def _combine_product(vals, params):
    out = ONE
    for v in vals:
        out = out * v
    return out


def rule_complete(n: int) -> BivariatePolynomial:
    """J(K_n) = (x+y)^n - y^n + 1."""
    if n < 1:
        raise ValueError("n must be positive")
    return power(X + Y, n) - power(Y, n) + ONE


def _combine_complete(vals, params):
    return rule_complete(params["n"])


def _combine_pendant(vals, params):
    a, b, c = vals
    k = params["k"]
    return (ONE + X) * a + X * (Y - ONE) * (b + c.shift(0, k))


def _combine_clique_twin(vals, params):
    a, b, c = vals
    k = params["k"]
    # the last term enters with a minus sign, as follows from substituting the
    # twin relations into the domination-covered identity
    return (ONE + X + Y) * a - (X + Y) * b - X * (ONE - Y) * c.shift(0, k)


def _combine_domination_covered(vals, params):
    g_v, g_uv, g_u, gc_v, g_u_c_v, g_v_c_u, g_nu = vals
    k = params["k"]
    xy = X + Y
    return (
        xy * g_v
        - Y * xy * g_uv
        + Y * g_u
        + (ONE - Y) * (gc_v - Y * g_u_c_v - X * g_v_c_u)
        - X * (ONE - Y) * g_nu.shift(0, k)
    )


def conditional_in_from(jg, j_contract, j_delete, j_closed_delete, nval):
    """J(G | a in W) from J(G), J(G\\a), J(G-a), J(G-N[a]) by exact division."""
    num = (
        (ONE - Y) * j_contract
        + Y * j_delete
        + (ONE - Y) * j_closed_delete.shift(0, nval)
        - jg
    )
    return X * divide_exact(num, ONE_MINUS_X_MINUS_Y)


def conditional_forbidden_closed_from(jg, j_contract, j_delete, j_closed_delete, nval):
    """J(G | N[a] and W disjoint) from the same four polynomials by exact division."""
    num = jg - X * j_closed_delete.shift(0, nval) - X * j_contract - Y * j_delete
    return divide_exact(num, ONE_MINUS_X_MINUS_Y)


def _cut_vertex_formula(ins, deletes, forbids):
    l = len(ins)
    prod_in = ONE
    prod_del = ONE
    prod_forb = ONE
    for p in ins:
        prod_in = prod_in * p
    for p in deletes:
        prod_del = prod_del * p
    for p in forbids:
        prod_forb = prod_forb * p
    return prod_in.divide_by_monomial(l - 1, 0) + Y * prod_del + (ONE - Y) * prod_forb


def _combine_cut_vertex(vals, params):
    ins, deletes, forbids = [], [], []
    for j, nval in enumerate(params["valencies"]):
        jc, jcontract, jdel, jclosed = vals[4 * j: 4 * j + 4]
        ins.append(conditional_in_from(jc, jcontract, jdel, jclosed, nval))
        forbids.append(conditional_forbidden_closed_from(jc, jcontract, jdel, jclosed, nval))
        deletes.append(jdel)
    return _cut_vertex_formula(ins, deletes, forbids)


def _combine_cut_vertex_oracle(vals, params):
    # children per piece: J(C - v), J(C | v in W), J(C | N[v] out of W)
    return _cut_vertex_formula(vals[1::3], vals[0::3], vals[2::3])


COMBINERS: dict[str, Callable] = {
    "disconnected": _combine_product,
    "complete": _combine_complete,
    "pendant": _combine_pendant,
    "clique_twin": _combine_clique_twin,
    "cut_vertex": _combine_cut_vertex,
    "cut_vertex_oracle": _combine_cut_vertex_oracle,
    "domination_covered": _combine_domination_covered,
}


# -- subproblem builders -----------------------------------------------------


def _delete(G: Graph, *vs: int) -> Graph:
    return delete_vertices(G, vs)[0]


def _delete_closed(G: Graph, u: int) -> Graph:
    return induced_by_mask(G, G.all_mask & ~G.closed_mask(u))[0]


def _delete_then_contract(G: Graph, deleted: int, contracted: int) -> Graph:
    H, index = delete_vertices(G, [deleted])
    return contract_vertex(H, index[contracted])


def pendant_subproblems(G: Graph, v: int, u: int):
    if G.valency(v) != 1 or not G.has_edge(u, v):
        raise PreconditionFailed(f"vertex {v} is not a pendant vertex attached to {u}")
    subs = [_delete(G, v), _delete_then_contract(G, v, u), _delete_closed(G, u)]
    return subs, {"k": G.valency(u) - 1}


def clique_twin_subproblems(G: Graph, u: int, v: int, require_adjacent: bool = True):
    if u == v:
        raise PreconditionFailed("u and v must differ")
    lu = G.adj[u] & ~(1 << v)
    lv = G.adj[v] & ~(1 << u)
    if lu != lv:
        raise PreconditionFailed(f"N(u) - v differs from N(v) - u for u={u}, v={v}")
    if any(lu & ~(1 << w) & ~G.adj[w] for w in bits(lu)):
        raise PreconditionFailed("common neighbourhood is not a clique")
    if require_adjacent and not G.has_edge(u, v):
        raise PreconditionFailed(f"clique-twin rule requires u={u} and v={v} to be adjacent")
    subs = [_delete(G, v), _delete(G, u, v), _delete_closed(G, u)]
    return subs, {"k": G.valency(u) - 1}


def domination_covered_subproblems(G: Graph, v: int, u: int):
    if u == v or not is_domination_covered(G, v, u):
        raise PreconditionFailed(f"vertex {v} is not domination covered by {u}")
    subs = [
        _delete(G, v),
        _delete(G, u, v),
        _delete(G, u),
        contract_vertex(G, v),
        _delete_then_contract(G, u, v),
        _delete_then_contract(G, v, u),
        _delete_closed(G, u),
    ]
    return subs, {"k": G.valency(u) - 1}


def vertex_subproblems(G: Graph, a: int) -> list[Graph]:
    """[G\\a, G-a, G-N[a]]: the graphs feeding the exact-division conditionals."""
    return [contract_vertex(G, a), _delete(G, a), _delete_closed(G, a)]


def cut_vertex_subproblems(G: Graph, v: int):
    pieces = split_at_cut_vertex(G, v)
    subs, valencies = [], []
    for piece, pv, _ in pieces:
        subs.append(piece)
        subs.extend(vertex_subproblems(piece, pv))
        valencies.append(piece.valency(pv))
    return subs, {"valencies": valencies, "pieces": [p.n for p, _, _ in pieces]}


# -- pivot selection ---------------------------------------------------------


def find_pendant(G: Graph) -> tuple[int, int] | None:
    for v in range(G.n):
        nb = G.adj[v]
        if nb and nb & (nb - 1) == 0:
            return v, nb.bit_length() - 1
    return None


def find_clique_twin(G: Graph) -> tuple[int, int] | None:
    adj = G.adj
    for u in range(G.n):
        for v in bits(adj[u] >> (u + 1) << (u + 1)):
            lu = adj[u] & ~(1 << v)
            if lu != adj[v] & ~(1 << u):
                continue
            if all(lu & ~(1 << w) & ~adj[w] == 0 for w in bits(lu)):
                return u, v
    return None


def find_domination_covered(G: Graph) -> tuple[int, int] | None:
    for v in range(G.n):
        cv = G.closed_mask(v)
        for u in bits(G.adj[v]):
            if cv & ~G.closed_mask(u) == 0:
                return v, u
    return None


# -- trace -------------------------------------------------------------------


@dataclass
class TraceRecord:
    id: int
    rule: str
    order: int
    pivots: tuple[int, ...] = ()
    children: tuple[int, ...] = ()
    params: dict = field(default_factory=dict)
    result: BivariatePolynomial | None = None
    ref: int | None = None

    def to_json(self, with_result: bool = False) -> dict:
        d = {
            "id": self.id,
            "rule": self.rule,
            "order": self.order,
            "pivots": list(self.pivots),
            "subproblem_orders": self.params.get("orders", []),
            "children": list(self.children),
        }
        extra = {k: v for k, v in self.params.items() if k != "orders"}
        if extra:
            d["params"] = extra
        if self.ref is not None:
            d["ref"] = self.ref
        if with_result and self.result is not None:
            d["result"] = self.result.to_json()
        return d


LEAF_RULES = ("oracle", "oracle_conditional", "memo", "complete", "empty")


@dataclass
class ReductionTrace:
    records: list[TraceRecord] = field(default_factory=list)
    root: int | None = None

    def __len__(self) -> int:
        return len(self.records)

    def rule_counts(self) -> dict[str, int]:
        out: dict[str, int] = {}
        for r in self.records:
            out[r.rule] = out.get(r.rule, 0) + 1
        return out

    def replay(self) -> BivariatePolynomial:
        """Recompute the root polynomial from the recorded arithmetic.

        Leaves contribute their stored values (the complete-graph closed form is
        re-evaluated); internal nodes re-run their rule's combiner.
        """
        values: dict[int, BivariatePolynomial] = {}
        for rec in self.records:
            if rec.rule == "complete":
                values[rec.id] = rule_complete(rec.params["n"])
            elif rec.rule == "empty":
                values[rec.id] = ONE
            elif rec.rule == "memo" and rec.ref is not None:
                values[rec.id] = values[rec.ref]
            elif rec.rule in LEAF_RULES:
                values[rec.id] = rec.result
            else:
                vals = [values[c] for c in rec.children]
                values[rec.id] = COMBINERS[rec.rule](vals, rec.params)
        return values[self.root]

    def to_json(self, with_results: bool = False) -> dict:
        return {
            "root": self.root,
            "records": [r.to_json(with_results) for r in self.records],
        }

    def dumps(self, **kw) -> str:
        return json.dumps(self.to_json(), **kw)


# -- engine ------------------------------------------------------------------


class Engine:
    """One computation context: configuration, memo table and trace.

    A memo dict may be shared between engines; entries map a graph key to its
    polynomial, and duplicate inserts always carry equal values.
    """

    def __init__(self, cfg: EngineConfig | None = None, memo: dict | None = None):
        self.cfg = cfg or EngineConfig()
        self.memo = {} if memo is None else memo
        self.trace = ReductionTrace()
        self._memo_ids: dict[bytes, int] = {}

    def _key(self, G: Graph) -> bytes | None:
        mode = self.cfg.memo_mode
        if mode == "off":
            return None
        if mode == "canonical" and G.n <= self.cfg.canonical_limit:
            return canonical_key(G)
        return labeled_key(G)

    def _record(self, rule, G, result, pivots=(), children=(), params=None, ref=None) -> int:
        rid = len(self.trace.records)
        params = dict(params or {})
        if children:
            params["orders"] = [self.trace.records[c].order for c in children]
        self.trace.records.append(
            TraceRecord(rid, rule, G.n, tuple(pivots), tuple(children), params, result, ref)
        )
        return rid

    def _oracle(self, G: Graph) -> BivariatePolynomial:
        return oracle.j(G, cap=self.cfg.cap)

    def solve(self, G: Graph) -> tuple[BivariatePolynomial, int]:
        key = self._key(G)
        if key is not None and key in self.memo:
            result = self.memo[key]
            rid = self._record("memo", G, result, ref=self._memo_ids.get(key))
            return result, rid
        result, rid = self._dispatch(G)
        if key is not None:
            self.memo[key] = result
            self._memo_ids.setdefault(key, rid)
        return result, rid

    def _children(self, graphs: Sequence[Graph]) -> tuple[list, list[int]]:
        vals, ids = [], []
        for H in graphs:
            p, rid = self.solve(H)
            vals.append(p)
            ids.append(rid)
        return vals, ids

    def _apply(self, rule, G, graphs, params, pivots=()):
        vals, ids = self._children(graphs)
        result = COMBINERS[rule](vals, params)
        return result, self._record(rule, G, result, pivots, ids, params)

    def _dispatch(self, G: Graph) -> tuple[BivariatePolynomial, int]:
        cfg = self.cfg
        n = G.n
        if n == 0:
            return ONE, self._record("empty", G, ONE)
        if n <= cfg.oracle_threshold:
            result = self._oracle(G)
            return result, self._record("oracle", G, result)
        if cfg.enabled("disconnected"):
            comps = component_masks(G)
            if len(comps) > 1:
                graphs = [induced_by_mask(G, m)[0] for m in comps]
                return self._apply("disconnected", G, graphs, {})
        if cfg.enabled("complete") and G.is_complete():
            result = rule_complete(n)
            return result, self._record("complete", G, result, params={"n": n})
        if cfg.enabled("pendant"):
            hit = find_pendant(G)
            if hit:
                graphs, params = pendant_subproblems(G, *hit)
                return self._apply("pendant", G, graphs, params, hit)
        if cfg.enabled("clique_twin"):
            hit = find_clique_twin(G)
            if hit:
                graphs, params = clique_twin_subproblems(G, *hit)
                return self._apply("clique_twin", G, graphs, params, hit)
        if cfg.enabled("cut_vertex") and len(component_masks(G)) == 1:
            cuts = cut_vertices(G)
            if cuts:
                v = min(cuts)
                if cfg.use_division:
                    graphs, params = cut_vertex_subproblems(G, v)
                    return self._apply("cut_vertex", G, graphs, params, (v,))
                return self._cut_vertex_by_oracle(G, v)
        if cfg.enabled("domination_covered"):
            hit = find_domination_covered(G)
            if hit:
                graphs, params = domination_covered_subproblems(G, *hit)
                return self._apply("domination_covered", G, graphs, params, hit)
        if n > cfg.cap:
            raise GraphTooLarge(
                f"no reduction applies to a graph of order {n} and it exceeds the oracle cap {cfg.cap}"
            )
        result = self._oracle(G)
        return result, self._record("oracle", G, result)

    def _cut_vertex_by_oracle(self, G: Graph, v: int):
        ids, vals = [], []
        for piece, pv, _ in split_at_cut_vertex(G, v):
            p, rid = self.solve(_delete(piece, pv))
            ids.append(rid)
            vals.append(p)
            for fin, fout in (([pv], []), ([], bits(piece.closed_mask(pv)))):
                cond = oracle.constrained(piece, fin, fout) if piece.n <= self.cfg.cap else None
                if cond is None:
                    raise GraphTooLarge(f"cut-vertex piece of order {piece.n} exceeds the oracle cap")
                ids.append(self._record("oracle_conditional", piece, cond))
                vals.append(cond)
        result = _combine_cut_vertex_oracle(vals, {})
        return result, self._record("cut_vertex_oracle", G, result, (v,), ids, {})


def compute_j(
    G: Graph, cfg: EngineConfig | None = None, memo: dict | None = None
) -> tuple[BivariatePolynomial, ReductionTrace]:
    """J(G) by reduction; returns the polynomial and the trace of rules applied."""
    engine = Engine(cfg, memo)
    result, rid = engine.solve(G)
    engine.trace.root = rid
    return result, engine.trace


def j_engine(G: Graph, cfg: EngineConfig | None = None) -> BivariatePolynomial:
    return compute_j(G, cfg)[0]


# -- public rule entry points --------------------------------------------------


def _evaluate(graphs, cfg):
    return [j_engine(H, cfg) for H in graphs]


def rule_pendant(G: Graph, v: int, u: int, cfg: EngineConfig | None = None) -> BivariatePolynomial:
    graphs, params = pendant_subproblems(G, v, u)
    return _combine_pendant(_evaluate(graphs, cfg), params)


def rule_clique_twin(G: Graph, u: int, v: int, cfg: EngineConfig | None = None) -> BivariatePolynomial:
    graphs, params = clique_twin_subproblems(G, u, v)
    return _combine_clique_twin(_evaluate(graphs, cfg), params)


def clique_twin_formula(G: Graph, u: int, v: int, cfg: EngineConfig | None = None) -> BivariatePolynomial:
    """Right-hand side of the clique-twin identity without the adjacency requirement.

    Used to show the identity breaks for non-adjacent twins.
    """
    graphs, params = clique_twin_subproblems(G, u, v, require_adjacent=False)
    return _combine_clique_twin(_evaluate(graphs, cfg), params)


def rule_domination_covered(
    G: Graph, v: int, u: int, cfg: EngineConfig | None = None
) -> BivariatePolynomial:
    graphs, params = domination_covered_subproblems(G, v, u)
    return _combine_domination_covered(_evaluate(graphs, cfg), params)


def conditional_in(
    G: Graph, a: int, jG: BivariatePolynomial, cfg: EngineConfig | None = None
) -> BivariatePolynomial:
    """J(G | a in W) recovered from J(G) and three smaller unconditional polynomials."""
    contract, delete, closed = _evaluate(vertex_subproblems(G, a), cfg)
    return conditional_in_from(jG, contract, delete, closed, G.valency(a))


def conditional_forbidden_closed(
    G: Graph, a: int, jG: BivariatePolynomial, cfg: EngineConfig | None = None
) -> BivariatePolynomial:
    """J(G | no vertex of N[a] in W) recovered by exact division by 1 - x - y."""
    contract, delete, closed = _evaluate(vertex_subproblems(G, a), cfg)
    return conditional_forbidden_closed_from(jG, contract, delete, closed, G.valency(a))


def rule_cut_vertex(G: Graph, v: int, cfg: EngineConfig | None = None) -> BivariatePolynomial:
    if v not in cut_vertices(G):
        raise NotACutVertex(f"vertex {v} is not a cut vertex")
    if len(component_masks(G)) != 1:
        raise PreconditionFailed("the cut-vertex rule needs a connected graph")
    graphs, params = cut_vertex_subproblems(G, v)
    return _combine_cut_vertex(_evaluate(graphs, cfg), params)


def check_cut_edge_identity(G: Graph, e: tuple[int, int]) -> bool:
    """Check J(G) = J(G-e) + (y-1)[J(G-e | u in W, N[v] out) + J(G-e | N[u] out, v in W)]."""
    u, v = e
    if (min(u, v), max(u, v)) not in cut_edges(G):
        raise NotACutEdge(f"edge {e} is not a cut edge")
    H = G.remove_edge(u, v)
    left = oracle.constrained(H, [u], bits(H.closed_mask(v)))
    right = oracle.constrained(H, [v], bits(H.closed_mask(u)))
    return oracle.j(G) == oracle.j(H) + (Y - ONE) * (left + right)

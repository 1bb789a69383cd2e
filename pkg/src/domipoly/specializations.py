"""Domination polynomial D(G, t) from J(G), path closed forms, pendant identities."""

from __future__ import annotations

from . import oracle
from .engine import rule_complete
from .errors import NegativePowerEncountered, PreconditionFailed
from .graph import Graph, delete_vertices
from .poly import (
    ONE,
    X,
    Y,
    BivariatePolynomial,
    UnivariatePolynomial,
    coefficient_slice,
    parse_polynomial,
    substitute_monomials,
)

ONE_PLUS_T = UnivariatePolynomial({0: 1, 1: 1})

J_P3 = parse_polynomial("1 + 2*x*y + x*y^2 + 3*x^2*y + x^3")


def _j(G: Graph, jG: BivariatePolynomial | None) -> BivariatePolynomial:
    if G.n < 1:
        raise ValueError("graph must have at least one vertex")
    return oracle.j(G) if jG is None else jG


def domination_via_coefficient(G: Graph, jG: BivariatePolynomial | None = None) -> UnivariatePolynomial:
    """Coefficient of y^n in J(G; t*y, y)."""
    p = _j(G, jG)
    return coefficient_slice(substitute_monomials(p, (1, 1), (0, 1)), G.n)


def domination_via_transform(G: Graph, jG: BivariatePolynomial | None = None) -> UnivariatePolynomial:
    """(1+t)^n J(G; -1/(1+t), 1/(1+t)), cleared of denominators term by term.

    A term c x^a y^b becomes c (-1)^a (1+t)^(n-a-b).
    """
    p = _j(G, jG)
    n = G.n
    powers: dict[int, UnivariatePolynomial] = {}
    out = UnivariatePolynomial()
    for (a, b), c in p.items():
        e = n - a - b
        if e < 0:
            raise NegativePowerEncountered(f"term x^{a}*y^{b} has a+b > n = {n}")
        if e not in powers:
            powers[e] = ONE_PLUS_T**e
        out = out + powers[e] * (c if a % 2 == 0 else -c)
    return out


def j_path(n: int) -> BivariatePolynomial:
    """J(P_n) by the pendant recurrence seeded with P_1, P_2, P_3."""
    if n < 1:
        raise ValueError("n must be positive")
    seq = [ONE, rule_complete(1), rule_complete(2), J_P3]
    for _ in range(4, n + 1):
        seq.append((ONE + X) * seq[-1] + X * (Y - ONE) * (seq[-2] + Y * seq[-3]))
    return seq[n]


def check_pendant_conditionals(G: Graph, v: int, u: int) -> bool:
    """Both pendant-vertex identities, every term taken from the constrained oracle.

    J(G | v in W)     = x J(G-v | u in W) + x y J(G-v-u)
    J(G | v not in W) = (y-1) J(G-v | u in W) + J(G-v)
    """
    if G.valency(v) != 1 or not G.has_edge(u, v):
        raise PreconditionFailed(f"vertex {v} is not a pendant vertex attached to {u}")
    Gv, index = delete_vertices(G, [v])
    Guv, _ = delete_vertices(G, [u, v])
    gv_u_in = oracle.constrained(Gv, [index[u]])
    lhs_in = oracle.constrained(G, [v])
    lhs_out = oracle.constrained(G, [], [v])
    ok_in = lhs_in == X * gv_u_in + X * Y * oracle.j(Guv)
    ok_out = lhs_out == (Y - ONE) * gv_u_in + oracle.j(Gv)
    return ok_in and ok_out

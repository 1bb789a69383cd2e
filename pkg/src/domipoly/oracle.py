"""Ground-truth J(G; x, y) and conditional polynomials by subset enumeration.

Every vertex subset W contributes x^|W| y^|N(W)| with N(W) = N[W] - W taken in
the full graph, so forced-out vertices still count once dominated. Only the
unconstrained vertices are enumerated. Above a few free vertices the closed
neighbourhoods of all subsets are tabulated with numpy by doubling, popcounted,
and histogrammed; the high bits are iterated in blocks to bound memory.
"""

from __future__ import annotations

import os
from dataclasses import dataclass, field
from typing import Callable, Iterable

import numpy as np

from .errors import GraphTooLarge
from .graph import Graph, closed_neighborhood_mask, mask_of, popcount
from .poly import BivariatePolynomial

DEFAULT_ORACLE_CAP = 25
_BLOCK_BITS = 18
_NUMPY_MIN_FREE = 7


def oracle_cap() -> int:
    """Largest order the oracle accepts; overridable by DOMIPOLY_ORACLE_CAP."""
    raw = os.environ.get("DOMIPOLY_ORACLE_CAP")
    return int(raw) if raw else DEFAULT_ORACLE_CAP


@dataclass(frozen=True)
class ConstraintSet:
    forced_in: frozenset[int] = field(default_factory=frozenset)
    forced_out: frozenset[int] = field(default_factory=frozenset)

    def __post_init__(self):
        object.__setattr__(self, "forced_in", frozenset(self.forced_in))
        object.__setattr__(self, "forced_out", frozenset(self.forced_out))
        if self.forced_in & self.forced_out:
            raise ValueError(
                f"vertices {sorted(self.forced_in & self.forced_out)} forced both in and out"
            )

    def validate(self, G: Graph) -> None:
        bad = [v for v in self.forced_in | self.forced_out if not 0 <= v < G.n]
        if bad:
            raise ValueError(f"constraint vertices {sorted(bad)} outside 0..{G.n - 1}")


NO_CONSTRAINTS = ConstraintSet()


def _check_size(G: Graph, cap: int | None) -> None:
    cap = oracle_cap() if cap is None else cap
    if G.n > cap:
        raise GraphTooLarge(f"order {G.n} exceeds the oracle cap {cap}")


def _histogram_python(G: Graph, base: int, nin: int, free: list[int]) -> dict:
    counts: dict[tuple[int, int], int] = {}
    closed = [G.closed_mask(v) for v in free]
    k = len(free)
    # table[s] = N[forced_in + free subset s], built incrementally
    table = [base] + [0] * ((1 << k) - 1)
    sizes = [nin] + [0] * ((1 << k) - 1)
    for s in range(1, 1 << k):
        low = (s & -s).bit_length() - 1
        prev = s & (s - 1)
        table[s] = table[prev] | closed[low]
        sizes[s] = sizes[prev] + 1
    for s in range(1 << k):
        w = sizes[s]
        key = (w, popcount(table[s]) - w)
        counts[key] = counts.get(key, 0) + 1
    return counts


def _subset_table(closed: list[int], start: int) -> np.ndarray:
    table = np.array([start], dtype=np.uint64)
    for m in closed:
        table = np.concatenate([table, table | np.uint64(m)])
    return table


def _histogram_numpy(G: Graph, base: int, nin: int, free: list[int]) -> dict:
    n = G.n
    k = len(free)
    lo, hi = free[: min(k, _BLOCK_BITS)], free[min(k, _BLOCK_BITS):]
    low_table = _subset_table([G.closed_mask(v) for v in lo], base)
    low_sizes = np.bitwise_count(np.arange(1 << len(lo), dtype=np.uint64)).astype(np.int64)
    hist = np.zeros((n + 1) * (n + 1), dtype=np.int64)
    hi_closed = [G.closed_mask(v) for v in hi]
    for s in range(1 << len(hi)):
        extra = 0
        hs = 0
        for i, m in enumerate(hi_closed):
            if s >> i & 1:
                extra |= m
                hs += 1
        block = low_table | np.uint64(extra) if extra else low_table
        w = low_sizes + (nin + hs)
        dominated = np.bitwise_count(block).astype(np.int64)
        hist += np.bincount(w * (n + 1) + (dominated - w), minlength=hist.size)
    out = {}
    for idx in np.flatnonzero(hist):
        out[divmod(int(idx), n + 1)] = int(hist[idx])
    return out


def j_conditional(
    G: Graph, c: ConstraintSet = NO_CONSTRAINTS, cap: int | None = None
) -> BivariatePolynomial:
    """Sum of x^|W| y^|N(W)| over W with forced_in in W and W disjoint from forced_out."""
    _check_size(G, cap)
    c.validate(G)
    fin = mask_of(c.forced_in)
    fout = mask_of(c.forced_out)
    free = [v for v in range(G.n) if not (fin | fout) >> v & 1]
    base = closed_neighborhood_mask(G, fin)
    nin = len(c.forced_in)
    if len(free) >= _NUMPY_MIN_FREE:
        counts = _histogram_numpy(G, base, nin, free)
    else:
        counts = _histogram_python(G, base, nin, free)
    return BivariatePolynomial(counts)


def j(G: Graph, cap: int | None = None) -> BivariatePolynomial:
    return j_conditional(G, NO_CONSTRAINTS, cap)


def constrained(G: Graph, forced_in: Iterable[int] = (), forced_out: Iterable[int] = ()):
    """Shorthand for ``j_conditional(G, ConstraintSet(forced_in, forced_out))``."""
    return j_conditional(G, ConstraintSet(frozenset(forced_in), frozenset(forced_out)))


def j_where(G: Graph, condition: Callable[[int], bool], cap: int | None = None) -> BivariatePolynomial:
    """J(G | c(W)) for an arbitrary predicate on the subset bitmask W.

    Plain Python enumeration of all 2^n subsets; meant for conditions such as
    "N(a) meets W" that are not expressible as forced-in/forced-out sets.
    """
    _check_size(G, cap)
    counts: dict[tuple[int, int], int] = {}
    for w in range(1 << G.n):
        if condition(w):
            size = popcount(w)
            key = (size, popcount(closed_neighborhood_mask(G, w)) - size)
            counts[key] = counts.get(key, 0) + 1
    return BivariatePolynomial(counts)


def count_dominating_sets(G: Graph) -> int:
    full = G.all_mask
    return sum(1 for w in range(1 << G.n) if closed_neighborhood_mask(G, w) == full)


def dominating_set_sizes(G: Graph) -> dict[int, int]:
    """{|W|: number of dominating sets of that size}, by direct enumeration."""
    full = G.all_mask
    out: dict[int, int] = {}
    for w in range(1 << G.n):
        if closed_neighborhood_mask(G, w) == full:
            out[popcount(w)] = out.get(popcount(w), 0) + 1
    return out


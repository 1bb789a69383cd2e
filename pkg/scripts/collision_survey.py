#!/usr/bin/env python3
"""How many connected graphs share J with a non-isomorphic graph of the same order?

Prints, per order, the number of graphs, of distinct polynomials, and of
graphs lying in a class of size >= 2. Optionally writes the non-trivial
classes as graph6 groups.
"""

import argparse
import sys
import time
from collections import defaultdict

from domipoly import catalog, engine
from domipoly.graph6 import emit_graph6
from domipoly.poly import to_canonical_string


def survey(max_n: int, threshold: int):
    cfg = engine.EngineConfig(oracle_threshold=threshold)
    rows, groups_out = [], []
    for n in range(1, max_n + 1):
        graphs = catalog.connected_graphs(n, min_n=n)
        groups = defaultdict(list)
        for g in graphs:
            groups[to_canonical_string(engine.j_engine(g, cfg))].append(g)
        shared = [grp for grp in groups.values() if len(grp) > 1]
        rows.append((n, len(graphs), len(groups), sum(len(grp) for grp in shared)))
        groups_out.extend(shared)
    return rows, groups_out


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--max-n", type=int, default=8)
    ap.add_argument("--threshold", type=int, default=10)
    ap.add_argument("--classes", help="write non-trivial classes here (graph6, blank line between)")
    args = ap.parse_args(argv)
    t0 = time.perf_counter()
    rows, classes = survey(args.max_n, args.threshold)
    print(f"{'n':>3} {'graphs':>8} {'distinct J':>11} {'in shared class':>16} {'fraction':>9}")
    for n, total, distinct, shared in rows:
        print(f"{n:>3} {total:>8} {distinct:>11} {shared:>16} {shared / total:>9.4f}")
    print(f"# {time.perf_counter() - t0:.1f}s", file=sys.stderr)
    if args.classes:
        with open(args.classes, "w") as fh:
            fh.write("\n".join("".join(emit_graph6(g) + "\n" for g in grp) for grp in classes))


if __name__ == "__main__":
    main()

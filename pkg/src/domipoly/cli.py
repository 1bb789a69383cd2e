"""Command-line front end.

Exit codes: 0 success / equal, 1 unequal or failed check, 2 malformed input or
invalid parameters, 3 graph beyond the oracle size cap, 4 domination routes
disagree.
"""

from __future__ import annotations

import argparse
import json
import os
import re
import sys
from multiprocessing import Pool
from typing import Sequence

from . import catalog, engine, identities, oracle
from .canon import are_isomorphic, canonical_key
from .errors import (
    GraphTooLarge,
    MalformedEdgeList,
    MalformedGraph6,
    PreconditionFailed,
)
from .families import AttachmentSpec, build_L_pair, build_M_pair, tree_pair
from .graph import Graph, complete_graph, cycle_graph, format_edge_list, parse_edge_list, path_graph, star_graph
from .graph6 import emit_graph6, iter_graph6_lines, parse_graph6
from .poly import to_canonical_string
from .specializations import domination_via_coefficient, domination_via_transform

EXIT_OK, EXIT_UNEQUAL, EXIT_MALFORMED, EXIT_TOO_LARGE, EXIT_ROUTES = 0, 1, 2, 3, 4

THRESHOLD_ENV = "DOMIPOLY_ORACLE_THRESHOLD"


class UsageError(Exception):
    """Bad parameters; reported with exit code 2."""


# -- inputs ------------------------------------------------------------------


class _AppendInput(argparse.Action):
    """Collect --g6 / --edges in command-line order."""

    def __call__(self, parser, namespace, values, option_string=None):
        items = list(getattr(namespace, "inputs", None) or [])
        items.append((self.const, values))
        namespace.inputs = items


def _add_inputs(p: argparse.ArgumentParser) -> None:
    p.add_argument("--g6", action=_AppendInput, const="g6", metavar="STRING", help="graph6 string")
    p.add_argument("--edges", action=_AppendInput, const="edges", metavar="FILE",
                   help="edge-list file: header 'n m' then one 'u v' per line ('-' for stdin)")
    p.set_defaults(inputs=[])


def _read_text(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    with open(path) as fh:
        return fh.read()


def _load(kind: str, value: str) -> Graph:
    if kind == "g6":
        return parse_graph6(value.strip())
    return parse_edge_list(_read_text(value))


def _stdin_graphs() -> list[Graph]:
    return [g for _, g in iter_graph6_lines(sys.stdin.read().splitlines())]


def _graphs(args, count: int) -> list[Graph]:
    """Exactly ``count`` graphs from the flags, falling back to graph6 lines on stdin."""
    graphs = [_load(k, v) for k, v in args.inputs]
    if not graphs:
        graphs = _stdin_graphs()
    if len(graphs) != count:
        raise UsageError(f"expected {count} input graph(s), got {len(graphs)}")
    return graphs


_NAMED = re.compile(r"^([KPCS])(\d+)$")


def parse_base(text: str) -> Graph:
    """A base graph: K<n>, P<n>, C<n>, S<n> (star with n leaves) or a graph6 string."""
    m = _NAMED.match(text.strip())
    if m:
        kind, n = m.group(1), int(m.group(2))
        if kind == "C" and n < 3:
            raise UsageError("cycles need at least 3 vertices")
        if n < 1 and kind != "S":
            raise UsageError("graph must have at least one vertex")
        return {"K": complete_graph, "P": path_graph, "C": cycle_graph, "S": star_graph}[kind](n)
    return parse_graph6(text.strip())


def parse_index_list(text: str) -> list[int]:
    text = text.strip()
    if not text:
        return []
    try:
        return [int(t) for t in text.split(",")]
    except ValueError:
        raise UsageError(f"bad vertex list {text!r}") from None


# -- configuration -----------------------------------------------------------


def _config(args) -> engine.EngineConfig:
    cap = args.oracle_cap if args.oracle_cap is not None else oracle.oracle_cap()
    if args.threshold is not None:
        threshold = args.threshold
    else:
        threshold = int(os.environ.get(THRESHOLD_ENV, engine.EngineConfig.oracle_threshold))
    return engine.EngineConfig(
        oracle_threshold=min(threshold, cap), memo_mode=args.memo, oracle_cap=cap
    )


def _polynomial(G: Graph, args, cfg: engine.EngineConfig):
    if getattr(args, "oracle", False):
        p = oracle.j(G, cfg.cap)
        rec = engine.TraceRecord(0, "oracle", G.n, result=p)
        return p, engine.ReductionTrace([rec], 0)
    return engine.compute_j(G, cfg)


# -- commands ----------------------------------------------------------------


def cmd_compute(args) -> int:
    cfg = _config(args)
    (G,) = _graphs(args, 1)
    p, trace = _polynomial(G, args, cfg)
    text = to_canonical_string(p)
    if args.json:
        out = {"graph6": emit_graph6(G), "order": G.n, "polynomial": text, "terms": p.to_json()}
        if args.trace:
            out["trace"] = trace.to_json()
        print(json.dumps(out, sort_keys=True))
    else:
        print(text)
        if args.trace:
            print(trace.dumps(sort_keys=True))
    return EXIT_OK


def cmd_dominate(args) -> int:
    cfg = _config(args)
    (G,) = _graphs(args, 1)
    if G.n < 1:
        raise UsageError("graph must have at least one vertex")
    p, _ = _polynomial(G, args, cfg)
    routes = {"coeff": domination_via_coefficient, "transform": domination_via_transform}
    if args.route == "both":
        a, b = routes["coeff"](G, p), routes["transform"](G, p)
        if a != b:
            print(f"coeff: {a.to_string('t')}", file=sys.stderr)
            print(f"transform: {b.to_string('t')}", file=sys.stderr)
            print(a.to_string("t"))
            return EXIT_ROUTES
        print(a.to_string("t"))
    else:
        print(routes[args.route](G, p).to_string("t"))
    return EXIT_OK


def cmd_compare(args) -> int:
    cfg = _config(args)
    A, B = _graphs(args, 2)
    pa, pb = engine.j_engine(A, cfg), engine.j_engine(B, cfg)
    equal = pa == pb
    same_valencies = sorted(A.valencies()) == sorted(B.valencies())
    iso = are_isomorphic(A, B)
    print(f"polynomials: {'equal' if equal else 'different'}")
    print(f"valency sequences: {'match' if same_valencies else 'differ'}")
    print(f"isomorphism screen: {'isomorphic' if iso else 'non-isomorphic'}")
    if not equal:
        print(f"J(A) = {to_canonical_string(pa)}")
        print(f"J(B) = {to_canonical_string(pb)}")
    return EXIT_OK if equal else EXIT_UNEQUAL


def _collide_key(item: tuple[str, int, int]) -> tuple[str, str | None, str]:
    """Worker: (g6, cap, threshold) -> (g6, polynomial string or None if too large, memo)."""
    g6, cap, threshold = item
    cfg = engine.EngineConfig(oracle_threshold=threshold, oracle_cap=cap)
    try:
        return g6, to_canonical_string(engine.j_engine(parse_graph6(g6), cfg)), ""
    except GraphTooLarge as exc:
        return g6, None, str(exc)


def collide(entries: list[tuple[int, Graph]], cfg: engine.EngineConfig, workers: int = 1,
            include_singletons: bool = False) -> list[dict]:
    """Group graphs by polynomial; classes ordered by first member's input position."""
    jobs = [(emit_graph6(g), cfg.cap, cfg.oracle_threshold) for _, g in entries]
    if workers > 1 and len(jobs) > 1:
        with Pool(workers) as pool:
            keyed = pool.map(_collide_key, jobs, chunksize=max(1, len(jobs) // (4 * workers)))
    else:
        keyed = [_collide_key(j) for j in jobs]
    groups: dict[str, list[int]] = {}
    for idx, (_, poly, err) in enumerate(keyed):
        if poly is None:
            raise GraphTooLarge(f"line {entries[idx][0]}: {err}")
        groups.setdefault(poly, []).append(idx)
    classes = []
    for poly, idxs in groups.items():
        if len(idxs) < 2 and not include_singletons:
            continue
        keys = [canonical_key(entries[i][1]) for i in idxs]
        pairs = []
        for s in range(len(idxs)):
            for t in range(s + 1, len(idxs)):
                pairs.append({
                    "a": entries[idxs[s]][0],
                    "b": entries[idxs[t]][0],
                    "isomorphic": keys[s] == keys[t],
                })
        classes.append({
            "polynomial": poly,
            "members": [{"line": entries[i][0], "graph6": jobs[i][0]} for i in idxs],
            "pairs": pairs,
        })
    return classes


def cmd_collide(args) -> int:
    cfg = _config(args)
    text = _read_text(args.catalog)
    entries = list(iter_graph6_lines(text.splitlines()))
    classes = collide(entries, cfg, args.workers, args.all)
    nontrivial = sum(1 for c in classes if len(c["members"]) > 1)
    if args.json:
        print(json.dumps({"graphs": len(entries), "classes": classes}, sort_keys=True))
        return EXIT_OK
    print(f"graphs: {len(entries)}  classes shown: {len(classes)}  with collisions: {nontrivial}")
    for n, c in enumerate(classes, 1):
        print(f"class {n}: {c['polynomial']}")
        for m in c["members"]:
            print(f"  line {m['line']}: {m['graph6']}")
        for pr in c["pairs"]:
            verdict = "isomorphic" if pr["isomorphic"] else "non-isomorphic"
            print(f"  lines {pr['a']} and {pr['b']}: {verdict}")
    return EXIT_OK


def _emit_pair(pair: Sequence[Graph], fmt: str) -> None:
    if fmt == "g6":
        for g in pair:
            print(emit_graph6(g))
    else:
        print("\n".join(format_edge_list(g).rstrip("\n") for g in pair))


def cmd_family(args) -> int:
    if args.name == "fig1-trees":
        pair = tree_pair()
    elif args.name == "L-pair":
        if args.base is None:
            raise UsageError("L-pair needs --base")
        base = parse_base(args.base)
        try:
            spec = AttachmentSpec(base, parse_index_list(args.anchors))
        except ValueError as exc:
            raise UsageError(str(exc)) from None
        pair = build_L_pair(spec)
    else:
        if args.base is None or args.a is None or args.b is None:
            raise UsageError("M-pair needs --base, --a and --b")
        pair = build_M_pair(parse_base(args.base), args.a, args.b)
    _emit_pair(pair, args.format)
    return EXIT_OK


def _report(suite: identities.Suite) -> None:
    for r in suite.results.values():
        status = "PASS" if r.passed else "FAIL"
        line = f"{status} {r.name}: {r.checked} checked"
        if not r.passed:
            line += f", {len(r.failures)} failed"
        print(line)


def cmd_check(args) -> int:
    cfg = _config(args)
    suites = []
    if args.suite in ("lemmas", "all"):
        if args.max_n > 8:
            raise UsageError("--max-n is limited to 8 (bundled catalog)")
        graphs = catalog.connected_graphs(args.max_n) if args.max_n >= 1 else []
        if not graphs:
            print("warning: empty corpus, nothing checked", file=sys.stderr)
        suites.append(identities.run_identity_suite(graphs))
    if args.suite in ("families", "all"):
        if args.max_m > 6:
            raise UsageError("--max-m is limited to 6 (bundled catalog)")
        suites.append(identities.run_family_suite(args.max_m, cfg))
    failed = None
    for s in suites:
        _report(s)
        failed = failed or s.first_failure()
    if failed:
        print(f"first counterexample: {failed}")
        return EXIT_UNEQUAL
    print("all checks passed")
    return EXIT_OK


# -- parser ------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--oracle-cap", type=int, default=None,
                        help="largest order handed to subset enumeration "
                             "(default: $DOMIPOLY_ORACLE_CAP or 25)")
    common.add_argument("--threshold", type=int, default=None,
                        help=f"order at or below which the engine enumerates directly "
                             f"(default: ${THRESHOLD_ENV} or 10)")
    common.add_argument("--memo", choices=engine.MEMO_MODES, default="canonical",
                        help="memo table keying (default: canonical)")

    ap = argparse.ArgumentParser(
        prog="domipoly",
        description="Bivariate domination polynomial J(G; x, y) = sum over W of x^|W| y^|N(W)|.",
        epilog="Exit codes: 0 ok/equal, 1 unequal or failed check, 2 malformed input, "
               "3 size cap exceeded, 4 domination routes disagree.",
    )
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("compute", parents=[common], help="print J(G)")
    _add_inputs(p)
    p.add_argument("--oracle", action="store_true", help="enumerate subsets instead of reducing")
    p.add_argument("--trace", action="store_true", help="also print the reduction trace")
    p.add_argument("--json", action="store_true", help="JSON output")
    p.set_defaults(func=cmd_compute)

    p = sub.add_parser("dominate", parents=[common], help="print the domination polynomial D(G, t)")
    _add_inputs(p)
    p.add_argument("--route", choices=("coeff", "transform", "both"), default="both")
    p.add_argument("--oracle", action="store_true")
    p.set_defaults(func=cmd_dominate)

    p = sub.add_parser("compare", parents=[common], help="compare J of two graphs (exit 0 equal, 1 not)")
    _add_inputs(p)
    p.set_defaults(func=cmd_compare)

    p = sub.add_parser("collide", parents=[common], help="group a graph6 catalog by polynomial")
    p.add_argument("catalog", help="graph6 file, one graph per line ('-' for stdin)")
    p.add_argument("--workers", type=int, default=1)
    p.add_argument("--all", action="store_true", help="also list single-member classes")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_collide)

    p = sub.add_parser("family", help="emit a constructed pair of graphs")
    p.add_argument("name", choices=("fig1-trees", "L-pair", "M-pair"))
    p.add_argument("--base", help="K<n>, P<n>, C<n>, S<n> or a graph6 string")
    p.add_argument("--anchors", default="", help="comma-separated anchor vertices of the base")
    p.add_argument("--a", type=int)
    p.add_argument("--b", type=int)
    p.add_argument("--format", choices=("g6", "edges"), default="g6")
    p.set_defaults(func=cmd_family)

    p = sub.add_parser("check", parents=[common], help="run identity suites against the oracle")
    p.add_argument("suite", choices=("lemmas", "families", "all"))
    p.add_argument("--max-n", type=int, default=6, help="largest connected graph in the identity corpus")
    p.add_argument("--max-m", type=int, default=6, help="largest base graph M for the M-pair sweep")
    p.set_defaults(func=cmd_check)
    return ap


def main(argv: Sequence[str] | None = None) -> int:
    ap = build_parser()
    args = ap.parse_args(argv)
    if getattr(args, "workers", 1) < 1:
        ap.error("--workers must be positive")
    try:
        return args.func(args)
    except (MalformedGraph6, MalformedEdgeList) as exc:
        print(f"error: malformed input: {exc}", file=sys.stderr)
        return EXIT_MALFORMED
    except GraphTooLarge as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_TOO_LARGE
    except (UsageError, PreconditionFailed) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_MALFORMED
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_MALFORMED
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_MALFORMED


if __name__ == "__main__":
    sys.exit(main())

"""Regenerate the bundled graph6 catalogs in src/domipoly/data/.

    python scripts/make_catalogs.py [--max-connected 8] [--max-all 6]

Graphs are built by adding one vertex at a time and deduplicated by canonical
key; the counts printed should read 1 1 2 6 21 112 853 11117 (connected) and
1 2 4 11 34 156 (all graphs).
"""

import argparse
import time
from pathlib import Path

from domipoly.catalog import ALL_FILE, CONNECTED_FILE, generate
from domipoly.graph6 import emit_graph6

DATA = Path(__file__).resolve().parents[1] / "src" / "domipoly" / "data"


def write(levels, path):
    with open(path, "w") as fh:
        for n in sorted(levels):
            for g in levels[n]:
                fh.write(emit_graph6(g) + "\n")


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--max-connected", type=int, default=8)
    ap.add_argument("--max-all", type=int, default=6)
    args = ap.parse_args()

    t0 = time.time()
    conn = generate(args.max_connected, connected=True)
    print("connected:", " ".join(str(len(conn[n])) for n in sorted(conn)), f"({time.time() - t0:.1f}s)")
    write(conn, DATA / CONNECTED_FILE)

    t0 = time.time()
    every = generate(args.max_all, connected=False)
    print("all:", " ".join(str(len(every[n])) for n in sorted(every)), f"({time.time() - t0:.1f}s)")
    write(every, DATA / ALL_FILE)


if __name__ == "__main__":
    main()

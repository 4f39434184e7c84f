"""Enumerate exchange graphs for a list of reduced words and write JSON/DOT files.

    python scripts/enumerate_graphs.py --out results/graphs
    python scripts/enumerate_graphs.py --word A3:1,2,1,3,2,1 --word A4:1,2,1,3,2,1,4,3
"""

import argparse
import json
import time
from pathlib import Path

from qclaw import enumerate_graph, initial_seed, named_cartan
from qclaw.rootdata import parse_word

DEFAULT_WORDS = [
    "A1:1",
    "A2:1,2,1",
    "A3:1,2,1,3,2,1",
    "A3:1,2,3,1,2,1",
    "A4:2,1,3,2,4,3",
    "A4:1,2,1,3,2,1,4,3",
    "D4:2,1,3,4,2",
]


def main() -> None:
    p = argparse.ArgumentParser(description=__doc__, formatter_class=argparse.RawDescriptionHelpFormatter)
    p.add_argument("--word", action="append", help="TYPE:word, e.g. A3:1,2,1,3,2,1 (repeatable)")
    p.add_argument("--max-depth", type=int, default=16)
    p.add_argument("--out", default="results/graphs")
    args = p.parse_args()
    out = Path(args.out)
    out.mkdir(parents=True, exist_ok=True)
    print(f"{'type':5} {'word':28} {'Kex':>3} {'nodes':>6} {'edges':>6} {'vars':>5} closed  seconds")
    for spec in args.word or DEFAULT_WORDS:
        t, w = spec.split(":")
        word = parse_word(w)
        t0 = time.perf_counter()
        seed = initial_seed(named_cartan(t), word)
        g = enumerate_graph(seed, args.max_depth)
        dt = time.perf_counter() - t0
        stem = f"{t}_{'-'.join(map(str, word))}"
        (out / f"{stem}.json").write_text(json.dumps(g.to_json_obj(), indent=1, sort_keys=True) + "\n")
        (out / f"{stem}.dot").write_text(g.to_dot())
        print(f"{t:5} {w:28} {len(seed.exchangeable):3d} {len(g.nodes):6d} {len(g.undirected_edges()):6d} "
              f"{len(g.variables()):5d} {str(g.closed):6}  {dt:7.2f}")


if __name__ == "__main__":
    main()

"""Run every check suite on a list of reduced words and summarise the reports.

    python scripts/run_checks.py
    python scripts/run_checks.py --word A4:1,2,1,3,2,1,4,3 --seed 11 --out results/checks
"""

import argparse
import json
import time
from pathlib import Path

from qclaw import initial_seed, named_cartan
from qclaw.checks import DEFAULT_RNG_SEED, SUITES, run_checks
from qclaw.rootdata import parse_word

DEFAULT_WORDS = ["A2:1,2,1", "A3:1,2,1,3,2,1", "A3:1,2,3,1,2,1", "A4:2,1,3,2,4,3", "A4:1,2,1,3,2,1,4"]


def main() -> int:
    p = argparse.ArgumentParser(description=__doc__, formatter_class=argparse.RawDescriptionHelpFormatter)
    p.add_argument("--word", action="append", help="TYPE:word (repeatable)")
    p.add_argument("--suite", default="all")
    p.add_argument("--seed", type=int, default=DEFAULT_RNG_SEED)
    p.add_argument("--out", default="results/checks")
    args = p.parse_args()
    out = Path(args.out)
    out.mkdir(parents=True, exist_ok=True)
    names = list(SUITES) if args.suite == "all" else args.suite.split(",")
    print("word".ljust(24) + "".join(n[:8].rjust(9) for n in names) + "  seconds")
    total_bad = 0
    for spec in args.word or DEFAULT_WORDS:
        t, w = spec.split(":")
        t0 = time.perf_counter()
        rep = run_checks(initial_seed(named_cartan(t), parse_word(w)), names, rng_seed=args.seed)
        dt = time.perf_counter() - t0
        (out / f"{t}_{w.replace(',', '-')}.json").write_text(json.dumps(rep, indent=1, sort_keys=True) + "\n")
        cells = "".join(str(s["violation_count"]).rjust(9) for s in rep["suites"])
        print(f"{spec:24}{cells}  {dt:7.2f}")
        total_bad += rep["violation_count"]
    print(f"rng seed {args.seed}; total violations {total_bad}")
    return 0 if total_bad == 0 else 1


if __name__ == "__main__":
    raise SystemExit(main())

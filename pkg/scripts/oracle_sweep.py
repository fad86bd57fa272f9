"""Compare the Ext route with the auxiliary pipeline on many random inputs.

    python3 scripts/oracle_sweep.py --count 5000 --max-rank 6 --seed 1

Prints the first few disagreements (there should be none) and a summary.
"""

import argparse
import random
import sys
import time
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parent.parent))

from homfund.homspace import auxiliary_pipeline, pi1_top  # noqa: E402
from homfund.io import dumps_input  # noqa: E402
from tests.oracles import random_input  # noqa: E402


def main():
    ap = argparse.ArgumentParser(description=__doc__.split("\n\n")[0])
    ap.add_argument("--count", type=int, default=1000)
    ap.add_argument("--max-rank", type=int, default=5)
    ap.add_argument("--max-order", type=int, default=12)
    ap.add_argument("--extra-q", type=int, default=0, help="extra rank for Q^ beyond the default")
    ap.add_argument("--seed", type=int, default=0)
    args = ap.parse_args()

    rng = random.Random(args.seed)
    bad = 0
    start = time.perf_counter()
    for k in range(args.count):
        inp = random_input(rng, args.max_rank, args.max_order)
        direct = pi1_top(inp)
        via, _ = auxiliary_pipeline(inp, inp.h_hat.gens + args.extra_q)
        if not direct.isomorphic(via):
            bad += 1
            if bad <= 3:
                print(f"# case {k}: Ext route {direct}, pipeline {via}")
                print(dumps_input(inp))
    elapsed = time.perf_counter() - start
    print(f"{args.count - bad}/{args.count} agree ({elapsed:.1f}s)")
    return 1 if bad else 0


if __name__ == "__main__":
    sys.exit(main())

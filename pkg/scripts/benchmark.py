"""Wall-clock timings for dense random instances of growing size."""
import argparse
import time

import numpy as np

from bapsens.assignment_sensitivity import assignment_sensitivity
from bapsens.edge_sensitivity import edge_sensitivity
from bapsens.solver import solve_bap


def clock(fn, *args, **kw):
    t0 = time.perf_counter()
    out = fn(*args, **kw)
    return out, time.perf_counter() - t0


def main():
    p = argparse.ArgumentParser(description=__doc__)
    p.add_argument("--sizes", type=int, nargs="+", default=[5, 10, 20, 30])
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--full", action="store_true", help="also time the non-incremental mode")
    args = p.parse_args()
    rng = np.random.default_rng(args.seed)
    print(f"{'n':>4} {'solve':>9} {'edge':>9} {'assign':>9} {'iters':>6}" + (f" {'full':>9}" if args.full else ""))
    for n in args.sizes:
        w = rng.permutation(10 * n * n)[: n * n].reshape(n, n).astype(float)
        _, ts = clock(solve_bap, w)
        _, te = clock(edge_sensitivity, w)
        r, ta = clock(assignment_sensitivity, w)
        line = f"{n:4d} {ts:9.4f} {te:9.4f} {ta:9.4f} {r.iterations:6d}"
        if args.full:
            _, tf = clock(assignment_sensitivity, w, incremental=False)
            line += f" {tf:9.4f}"
        print(line)


if __name__ == "__main__":
    main()

"""Compare the numba and numpy scan backends on the two heavy workloads.

    python3 benchmarks/bench_scan.py [--repeat N]

Both backends must produce identical results; the script exits 1 otherwise.
"""

import argparse
import sys
import time

from penrose_inflation.inflation import find_centers, triple_from_abg
from penrose_inflation.pattern import Shift, generate

WORKLOADS = {
    "generate(0, R=20)": lambda b: [p.x for p in generate(Shift(), 20, backend=b).points],
    "generate(1/7, R=20)": lambda b: [p.x for p in generate(Shift.parse("1/7,0,0,0,0"), 20, backend=b).points],
    "centers(-3,-1,1; 0, R=40)": lambda b: [r.t for r in find_centers(Shift(), triple_from_abg(-3, -1, 1), 40, backend=b)],
}


def best_of(fn, backend, repeat):
    times, result = [], None
    for _ in range(repeat):
        t0 = time.perf_counter()
        result = fn(backend)
        times.append(time.perf_counter() - t0)
    return min(times), result


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args(argv)
    # warm the numba cache so compilation is not timed
    generate(Shift(), 2, backend="numba")
    print(f"{'workload':<28} {'numba s':>9} {'numpy s':>9} {'ratio':>7}")
    same = True
    for name, fn in WORKLOADS.items():
        tn, rn = best_of(fn, "numba", args.repeat)
        tp, rp = best_of(fn, "numpy", args.repeat)
        same &= rn == rp
        flag = "" if rn == rp else "  MISMATCH"
        print(f"{name:<28} {tn:>9.3f} {tp:>9.3f} {tp / tn:>7.2f}{flag}")
    return 0 if same else 1


if __name__ == "__main__":
    sys.exit(main())

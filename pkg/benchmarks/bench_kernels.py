"""Compare the compiled and pure-Python GF(p) echelon kernels.

Two workloads: random sparse rows, and the rows produced by a real
bounded-membership query on a three-vertex chain graph.

    python benchmarks/bench_kernels.py [--rows N] [--repeat R]
"""
import argparse
import random
import time

from lpaspec import kernels
from lpaspec.engine import LeavittAlgebra, eval_poly_at_cycle
from lpaspec.families import e_family
from lpaspec.fields import PrimeField
from lpaspec.laurent import LaurentPoly
from lpaspec.graph import enumerate_cycles
from lpaspec.oracle import BoundedIdeal


def random_rows(n, ncols, nnz, p, seed=0):
    rng = random.Random(seed)
    rows = []
    for _ in range(n):
        cols = rng.sample(range(ncols), nnz)
        rows.append((cols, [rng.randrange(1, p) for _ in cols]))
    return rows


def time_rows(backend, rows, p, repeat):
    best = float("inf")
    for _ in range(repeat):
        t = time.perf_counter()
        ech = kernels.modp_echelon(p, backend)
        for cols, vals in rows:
            ech.add_row(cols, vals)
        best = min(best, time.perf_counter() - t)
    return best, ech.rank


def captured_rows(p):
    """Rows (as column/value lists) fed to the span tracker by a real negative query."""
    F = PrimeField(p)
    A = LeavittAlgebra(e_family(3, [2]), F)
    c = next(c for c in enumerate_cycles(A.graph) if c.edges == ("f1",))
    f = LaurentPoly.from_coeffs(F, [1, 1, 1])
    ideal = BoundedIdeal(A, [eval_poly_at_cycle(f, c, A)], 10)
    rows, index = [], {}
    ideal.contains(A.vertex("v2"))
    for blk in ideal._blocks.values():
        for sig in blk.seen:
            cols, vals = [], []
            for k, v in sig:
                cols.append(index.setdefault(k, len(index)))
                vals.append(v)
            rows.append((cols, vals))
    return rows


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--rows", type=int, default=600)
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args()
    backends = kernels.available_backends()
    print(f"backends: {', '.join(backends)}")
    workloads = [
        ("random sparse, p=2", random_rows(args.rows, 4 * args.rows, 4, 2), 2),
        ("random sparse, p=10007", random_rows(args.rows, 4 * args.rows, 4, 10007), 10007),
        ("square fill-in, p=3", random_rows(args.rows // 2, args.rows // 2, 4, 3), 3),
        ("membership rows, p=2", captured_rows(2), 2),
    ]
    for name, rows, p in workloads:
        line = [f"{name:<26} rows={len(rows):>6}"]
        ranks = set()
        for b in backends:
            secs, rank = time_rows(b, rows, p, args.repeat)
            ranks.add(rank)
            line.append(f"{b}={secs * 1e3:9.1f} ms")
        line.append(f"rank={'/'.join(map(str, sorted(ranks)))}")
        print("  ".join(line))


if __name__ == "__main__":
    main()

"""Time the compiled and pure-Python subset-counting kernels on the same inputs.

    python3 benchmarks/bench_kernels.py [--sizes 14 18 22] [--repeat 3] [--workers 1]
"""
import argparse
import random
import time

from dompoly import kernel
from dompoly.config import DEFAULT_SEED
from dompoly.graph import cartesian_product, complete_graph, cycle_graph, path_graph, random_graph


def workloads(sizes):
    # Sparse families favour the fallback, which merges equal partial unions.
    rng = random.Random(DEFAULT_SEED)
    for n in sizes:
        yield f"C_{n}", cycle_graph(n)
        if n % 2 == 0:
            yield f"L_{n // 2}", cartesian_product(path_graph(n // 2), complete_graph(2))[0]
        yield f"G({n},.3)", random_graph(n, 0.3, rng)


def best_time(fn, repeat):
    best = float("inf")
    for _ in range(repeat):
        t0 = time.perf_counter()
        out = fn()
        best = min(best, time.perf_counter() - t0)
    return best, out


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--sizes", type=int, nargs="+", default=[14, 18, 22])
    ap.add_argument("--repeat", type=int, default=3)
    ap.add_argument("--workers", type=int, default=1)
    args = ap.parse_args(argv)

    backends = sorted(kernel.BACKENDS)
    if "cython" not in backends:
        print("compiled kernel not built; timing the Python fallback only")
    print(f"{'graph':>10} {'|V|':>4} " + " ".join(f"{b + ' s':>10}" for b in backends) + "   speedup")
    for name, G in workloads(args.sizes):
        closed = list(G.closed_masks)
        times, results = {}, {}
        for b in backends:
            times[b], results[b] = best_time(
                lambda: kernel.count_subsets(closed, G.full_mask, workers=args.workers, backend=b),
                args.repeat)
        if len({tuple(r) for r in results.values()}) != 1:
            raise SystemExit(f"backends disagree on {name}")
        speed = f"{times['python'] / times['cython']:8.1f}x" if "cython" in times else "       -"
        print(f"{name:>10} {G.n:>4} " + " ".join(f"{times[b]:10.4f}" for b in backends) + f"  {speed}")


if __name__ == "__main__":
    main()

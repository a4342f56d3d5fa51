"""Compare the compiled and pure-Python lattice-point kernels.

    python benchmarks/bench_count.py [--repeat 3]

Each instance is prepared once (column weights and multiplicities), then both
kernels count the same points; the counts must agree.
"""
import argparse
import time

from plethystab._kernels import BACKEND, count_matrix_points_compiled, count_matrix_points_py
from plethystab.tableaux import weight_multiplicities

INSTANCES = [
    # (lambda, mu, nu)
    ((3, 2), (2, 1), (5, 5, 3, 2)),
    ((4,), (2, 2), (4, 4, 4, 4)),
    ((2, 2, 1), (3,), (5, 4, 3, 3)),
    ((6,), (2,), (3, 3, 3, 3)),
    ((3, 3), (2, 1), (6, 5, 4, 3)),
    ((30, 30, 30), (1,), (30, 30, 30)),
]


def prepare(lam, mu, nu):
    mult = weight_multiplicities(mu, len(nu), cap=nu)
    weights = list(mult)
    return sorted(lam, reverse=True), weights, [mult[w] for w in weights], tuple(nu)


def best_time(fn, args, repeat):
    best = float("inf")
    for _ in range(repeat):
        start = time.perf_counter()
        value = fn(*args)
        best = min(best, time.perf_counter() - start)
    return value, best


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--repeat", type=int, default=3)
    args = parser.parse_args()
    if BACKEND != "cython":
        raise SystemExit("compiled kernel not built; run `pip install -e . --no-build-isolation`")
    print(f"{'lambda':>10} {'mu':>6} {'nu':>14} {'count':>10} {'python s':>10} "
          f"{'cython s':>10} {'speedup':>8}")
    for lam, mu, nu in INSTANCES:
        prepared = prepare(lam, mu, nu)
        c_py, t_py = best_time(count_matrix_points_py, prepared, args.repeat)
        c_cy, t_cy = best_time(count_matrix_points_compiled, prepared, args.repeat)
        assert c_py == c_cy, (lam, mu, nu, c_py, c_cy)
        fmt = lambda s: ",".join(map(str, s))
        print(f"{fmt(lam):>10} {fmt(mu):>6} {fmt(nu):>14} {c_py:>10} {t_py:>10.4f} "
              f"{t_cy:>10.4f} {t_py / t_cy:>7.1f}x")


if __name__ == "__main__":
    main()

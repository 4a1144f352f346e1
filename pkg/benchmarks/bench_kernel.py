"""Time the compiled and pure-Python enumeration kernels on the same modules.

    python3 benchmarks/bench_kernel.py [--repeat 3]
"""

import argparse
import time

from cohzeta.oracle import _kernel_py, extension_space, hall_module, inert_m1_quotient, order_module

try:
    from cohzeta.oracle import _kernel as _kernel_c
except ImportError:
    _kernel_c = None

CASES = [
    ("hall (3,3,3) q=2", lambda: hall_module((3, 3, 3), 2)),
    ("hall (3,3,2) q=3", lambda: hall_module((3, 3, 2), 3)),
    ("inert m=2 n=2 q=3", lambda: order_module("inert", 2, 2, 3)),
    ("quot n=2 K=3 q=2", lambda: inert_m1_quotient(2, 3, 2)),
    ("F_9^3 over F_3", lambda: extension_space(3, 3)),
    ("hall (4,4,4) q=2", lambda: hall_module((4, 4, 4), 2)),
    ("quot n=2 K=4 q=2", lambda: inert_m1_quotient(2, 4, 2)),
]


def best_time(kernel, M, repeat):
    ops = [list(map(list, g)) for g in M.ops]
    args = (ops, M.p, M.dim, M.dim - 1, 0, [], 0, M.dim, 10**9)
    best, count = float("inf"), None
    for _ in range(repeat):
        start = time.perf_counter()
        states, examined, _ = kernel.dfs(*args)
        best = min(best, time.perf_counter() - start)
        count = (len(states), examined)
    return best, count


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args()
    if _kernel_c is None:
        print("compiled kernel not built; timing the Python kernel only")
    print(f"{'module':<20} {'dim':>4} {'found':>7} {'examined':>9} {'python s':>9} {'cython s':>9} {'speedup':>8}")
    for label, build in CASES:
        M = build()
        t_py, (found, examined) = best_time(_kernel_py, M, args.repeat)
        if _kernel_c is None:
            print(f"{label:<20} {M.dim:>4} {found:>7} {examined:>9} {t_py:>9.4f}")
            continue
        t_c, counts = best_time(_kernel_c, M, args.repeat)
        assert counts == (found, examined), "kernels disagree"
        print(f"{label:<20} {M.dim:>4} {found:>7} {examined:>9} {t_py:>9.4f} {t_c:>9.4f} {t_py / t_c:>7.1f}x")


if __name__ == "__main__":
    main()

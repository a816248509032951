"""Time the compiled and pure-Python elimination kernels on boundary matrices.

    python3 benchmarks/bench_snf.py --max-n 6 --repeat 3
"""
import argparse
import os
import time

from wedgelab.config import build_ordered
from wedgelab.homology import snf
from wedgelab.simplicial import full_simplex


def time_kernel(mats, kernel: str, repeat: int) -> tuple[float, list]:
    if kernel == "python":
        os.environ["WEDGELAB_PURE_PYTHON"] = "1"
    else:
        os.environ.pop("WEDGELAB_PURE_PYTHON", None)
    assert snf.backend() == kernel
    best, result = float("inf"), None
    for _ in range(repeat):
        t0 = time.perf_counter()
        result = [snf.smith_invariants(m) for m in mats]
        best = min(best, time.perf_counter() - t0)
    return best, result


def main(argv=None) -> int:
    ap = argparse.ArgumentParser(description=__doc__.split("\n\n")[0])
    ap.add_argument("--max-n", type=int, default=6)
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args(argv)
    kernels = ["python"] + (["cython"] if snf._elim_c is not None else [])
    if len(kernels) == 1:
        print("compiled kernel not built; timing the Python kernel only")
    print(f"{'complex':<14}{'cells':>9}" + "".join(f"{k:>10}" for k in kernels) + f"{'speedup':>9}")
    for n in range(3, args.max_n + 1):
        for k in range(2, n + 1):
            C = build_ordered(full_simplex(n), k)
            mats = C.boundary_matrices()
            times, results = [], []
            for kern in kernels:
                t, r = time_kernel(mats, kern, args.repeat)
                times.append(t)
                results.append(r)
            assert all(r == results[0] for r in results), f"kernels disagree on D_{k}(Delta^{n})"
            speed = f"{times[0] / times[1]:8.1f}x" if len(times) == 2 and times[1] > 0 else ""
            label = f"D_{k}(Delta^{n})"
            print(f"{label:<14}{sum(C.f_vector()):>9}" + "".join(f"{t:>9.3f}s" for t in times) + f"{speed:>9}")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())

"""Time Hilbert-basis computations with the numba kernels on and off.

    python3 benchmarks/bench_kernels.py [--repeat 3]

Both backends must return identical bases; the script exits non-zero if not.
"""
import argparse
import os
import sys
import time

from toritrans import _kernels
from toritrans.cone import Cone, hilbert_basis
from toritrans.surfaces import family_dual_cone

CASES = {
    "rank2 Cone((1,0),(31,97))": Cone((1, 0), (31, 97)),
    "rank3 Cone(e1,e2,(5,7,23))": Cone((1, 0, 0), (0, 1, 0), (5, 7, 23)),
    "rank3 4 rays": Cone((1, 0, 0), (0, 1, 0), (1, 1, 9), (-2, 3, 11)),
    "rank4 X(4,5) dual": family_dual_cone(4, 5),
    "rank4 Cone(e1,e2,e3,(3,5,7,17))": Cone((1, 0, 0, 0), (0, 1, 0, 0), (0, 0, 1, 0), (3, 5, 7, 17)),
    "rank3 Cone(e1,e2,(37,91,1201))": Cone((1, 0, 0), (0, 1, 0), (37, 91, 1201)),
    "rank3 Cone(e1,e2,(-3,5,7),(251,333,4001))": Cone((1, 0, 0), (0, 1, 0), (-3, 5, 7), (251, 333, 4001)),
    "rank4 Cone(e1,e2,e3,(101,203,307,2003))": Cone((1, 0, 0, 0), (0, 1, 0, 0), (0, 0, 1, 0), (101, 203, 307, 2003)),
}


def run(flag, sigma, repeat):
    os.environ["TORITRANS_NUMBA"] = flag
    best = float("inf")
    for _ in range(repeat):
        t0 = time.perf_counter()
        hb = hilbert_basis(sigma)
        best = min(best, time.perf_counter() - t0)
    return best, hb


def main():
    parser = argparse.ArgumentParser()
    parser.add_argument("--repeat", type=int, default=3)
    args = parser.parse_args()

    if not _kernels.HAVE_NUMBA:
        print("numba is not installed; only the numpy path is available")
        return 1
    # warm the JIT cache so compile time is not counted
    run("1", Cone((1, 0, 0), (0, 1, 0), (1, 1, 2)), 1)

    print(f"{'case':44s} {'|HB|':>6s} {'numpy s':>10s} {'numba s':>10s} {'speedup':>8s}")
    ok = True
    for name, sigma in CASES.items():
        t_np, hb_np = run("0", sigma, args.repeat)
        t_nb, hb_nb = run("1", sigma, args.repeat)
        ok &= hb_np == hb_nb
        print(f"{name:44s} {len(hb_nb):6d} {t_np:10.4f} {t_nb:10.4f} {t_np / t_nb:8.2f}x")
    print("backends agree" if ok else "BACKENDS DISAGREE")
    return 0 if ok else 1


if __name__ == "__main__":
    sys.exit(main())

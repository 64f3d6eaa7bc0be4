"""Compare the compiled GF(p) kernels with the pure-Python fallback.

Usage: python3 benchmarks/bench_kernels.py [--repeat N]

Each case runs the same inputs through both backends, checks the outputs
agree, and prints the best-of-N wall time and the speedup.
"""

from __future__ import annotations

import argparse
import random
import time

from mscalg import _kernels_py as py

try:
    from mscalg import _kernels as cy
except ImportError:
    cy = None


def _random_mscs(n: int, p: int, count: int, seed: int) -> list[tuple]:
    rng = random.Random(seed)
    return [tuple(rng.randrange(p) for _ in range(n**3)) for _ in range(count)]


def cases():
    diag3 = tuple(1 if (k == i == j) else 0 for k in range(3) for i in range(3) for j in range(3))
    mscs_2_5 = _random_mscs(2, 5, 200, 1)
    mscs_3_3 = _random_mscs(3, 3, 50, 2)
    return [
        ("derivation_rank n=2 p=5 (200 MSCs)", lambda k: [k.derivation_rank(a, 2, 5) for a in mscs_2_5]),
        ("derivation_rank n=3 p=3 (50 MSCs)", lambda k: [k.derivation_rank(a, 3, 3) for a in mscs_3_3]),
        ("proper_closure_line n=3 p=3 (50 MSCs)", lambda k: [k.proper_closure_line(a, 3, 3) for a in mscs_3_3]),
        ("automorphisms of diag idempotent n=3 p=3", lambda k: k.scan_isomorphisms(diag3, diag3, 3, 3)),
        ("orbit_codes n=2 p=5 (20 MSCs)", lambda k: [sorted(k.orbit_codes(a, 2, 5)) for a in mscs_2_5[:20]]),
        ("census n=2 p=3 (codes 0..2000)", lambda k: k.census(2, 3, 0, 2000)),
    ]


def best_of(func, repeat: int) -> tuple[float, object]:
    best, out = float("inf"), None
    for _ in range(repeat):
        t = time.perf_counter()
        out = func()
        best = min(best, time.perf_counter() - t)
    return best, out


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--repeat", type=int, default=3)
    args = parser.parse_args()
    if cy is None:
        print("compiled kernels not built; timing the pure-Python backend only")
    print(f"{'case':46s} {'python s':>10s} {'compiled s':>11s} {'speedup':>8s}")
    for name, run in cases():
        t_py, out_py = best_of(lambda: run(py), args.repeat)
        if cy is None:
            print(f"{name:46s} {t_py:10.4f} {'-':>11s} {'-':>8s}")
            continue
        t_cy, out_cy = best_of(lambda: run(cy), args.repeat)
        if out_py != out_cy:
            raise SystemExit(f"backends disagree on {name}")
        print(f"{name:46s} {t_py:10.4f} {t_cy:11.4f} {t_py / max(t_cy, 1e-9):7.1f}x")


if __name__ == "__main__":
    main()

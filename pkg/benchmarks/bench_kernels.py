#!/usr/bin/env python3
"""Benchmark the compiled kernels against the pure-Python twin.

Times the Freudenthal recursion, Weyl orbit closure and dominant-subdominant
enumeration on representative inputs and prints a comparison table.  Run as

    python benchmarks/bench_kernels.py
"""

import time

from liespectra import _kernels_py as pure
from liespectra.rootdata import build_root_datum

try:
    from liespectra import _kernels_c as compiled
except ImportError:
    compiled = None

FREUDENTHAL_CASES = [
    ("A1", (1200,)),
    ("A2", (30, 30)),
    ("A4", (2, 1, 1, 2)),
    ("B3", (2, 2, 1)),
    ("C4", (1, 1, 1, 0)),
    ("D5", (1, 0, 0, 1, 1)),
    ("F4", (0, 1, 0, 0)),
]

ORBIT_CASES = [
    ("B5", (1, 1, 1, 1, 1)),
    ("D6", (1, 1, 1, 1, 1, 1)),
    ("E6", (1, 1, 1, 1, 1, 1)),
]


def freudenthal_args(datum, lam):
    return (
        datum.rank,
        datum.simple_root_coords,
        tuple(r.coords for r in datum.positive_roots),
        datum.coroot_pairings,
        datum.root_half_lengths,
        datum.cartan_t_adj,
        datum.cartan_det,
        datum.form_scaled,
        datum.form_denominator,
        lam,
    )


def timed(fn, *args, repeat=1):
    best = None
    for _ in range(repeat):
        t0 = time.perf_counter()
        result = fn(*args)
        dt = time.perf_counter() - t0
        best = dt if best is None else min(best, dt)
    return best, result


def main():
    if compiled is None:
        print("compiled kernels are not built; install with `pip install -e .`")
        return
    print(f"{'case':<26} {'pure':>10} {'compiled':>10} {'speedup':>9}")
    for name, lam in FREUDENTHAL_CASES:
        datum = build_root_datum(name[0], int(name[1:]))
        args = freudenthal_args(datum, lam)
        tp, rp = timed(pure.freudenthal, *args)
        tc, rc = timed(compiled.freudenthal, *args, repeat=3)
        assert list(map(tuple, rp[0])) == list(map(tuple, rc[0])) and list(rp[1]) == list(rc[1])
        print(f"freudenthal {name} {str(lam):<12} {tp:>9.4f}s {tc:>9.4f}s {tp / tc:>8.1f}x")
    for name, lam in ORBIT_CASES:
        datum = build_root_datum(name[0], int(name[1:]))
        args = (datum.rank, datum.simple_root_coords, lam)
        tp, rp = timed(pure.weyl_orbit, *args)
        tc, rc = timed(compiled.weyl_orbit, *args, repeat=3)
        assert rp == rc
        print(f"orbit       {name} {str(lam):<12} {tp:>9.4f}s {tc:>9.4f}s {tp / tc:>8.1f}x")


if __name__ == "__main__":
    main()

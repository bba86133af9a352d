"""Time the compiled kernels against the pure-Python ones.

Run: python3 benchmarks/bench_kernels.py [--repeat N]
Covers the two hot paths: cell enumeration and GF(2) rank over bitset columns.
"""

from __future__ import annotations

import argparse
import random
import time

from homtopo._kernels import _core, pure
from homtopo.graphs import complete, cycle, petersen


def _time(fn, repeat: int) -> float:
    best = float("inf")
    for _ in range(repeat):
        t0 = time.perf_counter()
        fn()
        best = min(best, time.perf_counter() - t0)
    return best


def _boundary_columns(adj_g, adj_h):
    """Full boundary matrix of the hom complex as bitset columns."""
    keys = pure.enumerate_hom_cells(adj_g, adj_h, 10**7)
    idx = {k: i for i, k in enumerate(keys)}
    n, w = len(adj_g), len(adj_h)
    full = (1 << w) - 1
    cols = []
    for k in keys:
        col = 0
        for x in range(n):
            sh = (n - 1 - x) * w
            m = k >> sh & full
            if m.bit_count() >= 2:
                v = m
                while v:
                    b = v & -v
                    col |= 1 << idx[k ^ (b << sh)]
                    v ^= b
        if col:
            cols.append(col)
    return cols, len(keys)


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args()
    if _core is None:
        print("compiled backend unavailable; nothing to compare")
        return

    cases = [("K4->K6", complete(4), complete(6)),
             ("K4->K7", complete(4), complete(7)),
             ("C5->K5", cycle(5), complete(5)),
             ("petersen->K4", petersen(), complete(4))]
    print(f"{'enumerate_hom_cells':<22} {'cells':>8} {'pure':>9} "
          f"{'compiled':>9} {'speedup':>8}")
    for name, g, h in cases:
        tp = _time(lambda: pure.enumerate_hom_cells(g.adj, h.adj, 10**7),
                   args.repeat)
        tc = _time(lambda: _core.enumerate_hom_cells(list(g.adj), list(h.adj),
                                                     10**7), args.repeat)
        cells = len(pure.enumerate_hom_cells(g.adj, h.adj, 10**7))
        print(f"{name:<22} {cells:>8} {tp:>8.3f}s {tc:>8.3f}s {tp / tc:>7.1f}x")

    print()
    print(f"{'gf2_rank':<22} {'cols':>8} {'pure':>9} "
          f"{'compiled':>9} {'speedup':>8}")
    for name, g, h in [("K3->K5 boundary", complete(3), complete(5)),
                       ("K4->K6 boundary", complete(4), complete(6))]:
        cols, nbits = _boundary_columns(g.adj, h.adj)
        tp = _time(lambda: pure.gf2_rank(cols, nbits), args.repeat)
        tc = _time(lambda: _core.gf2_rank(cols, nbits), args.repeat)
        assert pure.gf2_rank(cols, nbits) == _core.gf2_rank(cols, nbits)
        print(f"{name:<22} {len(cols):>8} {tp:>8.3f}s {tc:>8.3f}s "
              f"{tp / tc:>7.1f}x")

    rng = random.Random(0)
    nbits = 2400
    cols = [rng.getrandbits(nbits) for _ in range(1800)]
    tp = _time(lambda: pure.gf2_rank(cols, nbits), args.repeat)
    tc = _time(lambda: _core.gf2_rank(cols, nbits), args.repeat)
    assert pure.gf2_rank(cols, nbits) == _core.gf2_rank(cols, nbits)
    print(f"{'random 1800x2400':<22} {len(cols):>8} {tp:>8.3f}s {tc:>8.3f}s "
          f"{tp / tc:>7.1f}x")


if __name__ == "__main__":
    main()

"""Compare the compiled and pure enumeration kernels on the same codes.

Run:  python3 benchmarks/bench_scan.py
"""

import time

from srcodes import backends, make_tower, min_srd_exhaustive, msrd_code, reed_solomon_pair
from srcodes.linearized import GabidulinCode


def _cases():
    yield "thm25 q=2 t=4 k=1", reed_solomon_pair(2, 4, 1)
    yield "msrd q=2 (4,2) d=3", msrd_code(2, [4, 2], 3)
    yield "msrd q=2 (4,2) d=2", msrd_code(2, [4, 2], 2)
    yield "gabidulin q=2 n=3 v=1", _gab_code(2, 3, 1)
    yield "thm25 q=3 t=4 k=1", reed_solomon_pair(3, 4, 1)


def _gab_code(q, n, v):
    from srcodes.constructions import from_extension_code
    from srcodes.block_codes import BlockCode, DistanceInfo
    import numpy as np

    tower = make_tower(q, 1, n)
    big = tower.relative_extension(v + 1)
    gab = GabidulinCode(tower, v)
    code = from_extension_code(
        tower,
        BlockCode(big, np.array([[1]], dtype=np.int64), DistanceInfo(1, exact=True)),
        v,
    )
    assert code.K == gab.dimension
    return code


def main():
    avail = sorted(backends())  # "compiled" before "pure" when both exist
    print(f"available backends: {', '.join(avail)}")
    header = f"{'case':28s} {'K':>3s} {'codewords':>10s}"
    for name in avail:
        header += f"  {name + ' (s)':>14s} {name + ' cw/s':>14s}"
    if len(avail) == 2:
        header += f"  {'speedup':>8s}"
    print(header)
    for label, code in _cases():
        n_words = code.space.q ** code.K
        row = f"{label:28s} {code.K:>3d} {n_words:>10d}"
        times = []
        result = None
        for name in avail:
            code.verified = None  # drop the cache so both lanes do the work
            t0 = time.perf_counter()
            d = min_srd_exhaustive(code, budget=max(n_words, 1 << 24), backend=name)
            dt = time.perf_counter() - t0
            if result is None:
                result = d
            assert d == result, f"backends disagree on {label}: {d} vs {result}"
            times.append(dt)
            rate = n_words / dt if dt > 0 else float("inf")
            row += f"  {dt:>14.4f} {rate:>14.0f}"
        if len(times) == 2 and times[0] > 0:
            # avail is sorted: times[0] is compiled, times[1] is pure
            row += f"  {times[1] / times[0]:>7.1f}x"
        print(row)


if __name__ == "__main__":
    main()

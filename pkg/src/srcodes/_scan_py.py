"""Pure-numpy fallback for the exhaustive minimum-weight scan.

Same contract as the compiled kernel in _scan.pyx: walk messages
[start, start+count) in odometer order over base-q digits, maintain the
current codeword incrementally (one scaled-generator row added per digit
change), and return the minimum weight over the nonzero messages visited
(-1 if none).  Weight = sum of per-block ranks.
"""

from __future__ import annotations

import numpy as np


def _block_rank(buf: np.ndarray, add, mul, neg, inv) -> int:
    n, m = buf.shape
    rk = 0
    for j in range(m):
        if rk == n:
            break
        col = buf[rk:, j]
        nz = np.nonzero(col)[0]
        if nz.size == 0:
            continue
        piv = rk + int(nz[0])
        if piv != rk:
            buf[[rk, piv]] = buf[[piv, rk]]
        pv = int(buf[rk, j])
        if pv != 1:
            buf[rk, j:] = mul[inv[pv], buf[rk, j:]]
        f = buf[rk + 1 :, j]
        live = np.nonzero(f)[0]
        if live.size:
            rows = rk + 1 + live
            buf[np.ix_(rows, range(j, m))] = add[
                buf[np.ix_(rows, range(j, m))], neg[mul[f[live][:, None], buf[rk, j:][None, :]]]
            ]
        rk += 1
    return rk


def _weight(cur, offsets, shapes, add, mul, neg, inv, hamming: bool, cap: int) -> int:
    if hamming:
        return int(np.count_nonzero(cur))
    w = 0
    for (n, m), off in zip(shapes, offsets):
        buf = cur[off : off + n * m].reshape(n, m).copy()
        w += _block_rank(buf, add, mul, neg, inv)
        if 0 <= cap <= w:
            return w
    return w


def min_weight_scan(scaled, add, mul, neg, inv, block_rows, block_cols, start, count, K, q):
    t = len(block_rows)
    shapes = [(int(block_rows[b]), int(block_cols[b])) for b in range(t)]
    offsets = np.concatenate([[0], np.cumsum([n * m for n, m in shapes])])[:-1]
    hamming = all(n == 1 and m == 1 for n, m in shapes)
    L = scaled.shape[1]

    cur = np.zeros(L, dtype=np.int32)
    dig = [0] * K
    s = start
    for i in range(K):
        dig[i] = s % q
        s //= q
        if dig[i]:
            cur = add[cur, scaled[i * q + dig[i]]]

    best = -1
    msg = start
    end = start + count
    while msg < end:
        if msg != 0:
            w = _weight(cur, offsets, shapes, add, mul, neg, inv, hamming, best)
            if best < 0 or w < best:
                best = w
                if best == 1:
                    return best
        msg += 1
        if msg == end:
            break
        i = 0
        while True:
            old = dig[i]
            new = old + 1
            if new == q:
                dig[i] = 0
                delta = int(neg[old])
            else:
                dig[i] = new
                delta = int(add[new, neg[old]])
            if delta:
                cur = add[cur, scaled[i * q + delta]]
            if new == q:
                i += 1
            else:
                break
    return best

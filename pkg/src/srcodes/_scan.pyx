# cython: language_level=3, boundscheck=False, wraparound=False, initializedcheck=False, cdivision=True
"""Compiled exhaustive minimum-weight scan over an F_q-linear span.

Same contract as _scan_py.min_weight_scan; this is the hot loop the whole
distance-certification path sits on.
"""

import numpy as np

cimport numpy as cnp

cnp.import_array()


cdef inline int _weight(cnp.int32_t[::1] cur, cnp.int32_t[:, ::1] buf,
                        cnp.int32_t[:, ::1] add, cnp.int32_t[:, ::1] mul,
                        cnp.int32_t[::1] neg, cnp.int32_t[::1] inv,
                        cnp.int32_t[::1] rows, cnp.int32_t[::1] cols,
                        bint hamming, long long cap):
    cdef int t = rows.shape[0]
    cdef Py_ssize_t off = 0
    cdef int w = 0
    cdef int b, n, m, i, j, c, rk, piv, pinv, f, tmp
    for b in range(t):
        n = rows[b]
        m = cols[b]
        if hamming:
            if cur[off] != 0:
                w += 1
            off += 1
        else:
            for i in range(n):
                for j in range(m):
                    buf[i, j] = cur[off + i * m + j]
            off += n * m
            rk = 0
            for j in range(m):
                if rk == n:
                    break
                piv = -1
                for i in range(rk, n):
                    if buf[i, j] != 0:
                        piv = i
                        break
                if piv < 0:
                    continue
                if piv != rk:
                    for c in range(j, m):
                        tmp = buf[rk, c]
                        buf[rk, c] = buf[piv, c]
                        buf[piv, c] = tmp
                pinv = inv[buf[rk, j]]
                if pinv != 1:
                    for c in range(j, m):
                        buf[rk, c] = mul[pinv, buf[rk, c]]
                for i in range(rk + 1, n):
                    f = buf[i, j]
                    if f != 0:
                        for c in range(j, m):
                            buf[i, c] = add[buf[i, c], neg[mul[f, buf[rk, c]]]]
                rk += 1
            w += rk
        if cap >= 0 and w >= cap:
            return w
    return w


def min_weight_scan(cnp.int32_t[:, ::1] scaled,
                    cnp.int32_t[:, ::1] add,
                    cnp.int32_t[:, ::1] mul,
                    cnp.int32_t[::1] neg,
                    cnp.int32_t[::1] inv,
                    cnp.int32_t[::1] block_rows,
                    cnp.int32_t[::1] block_cols,
                    long long start, long long count,
                    int K, int q):
    cdef int t = block_rows.shape[0]
    cdef Py_ssize_t L = scaled.shape[1]
    cdef int max_n = 1, max_m = 1, b
    cdef bint hamming = 1
    for b in range(t):
        if block_rows[b] > max_n:
            max_n = block_rows[b]
        if block_cols[b] > max_m:
            max_m = block_cols[b]
        if block_rows[b] != 1 or block_cols[b] != 1:
            hamming = 0

    cur_np = np.zeros(L, dtype=np.int32)
    buf_np = np.zeros((max_n, max_m), dtype=np.int32)
    dig_np = np.zeros(K, dtype=np.int64)
    cdef cnp.int32_t[::1] cur = cur_np
    cdef cnp.int32_t[:, ::1] buf = buf_np
    cdef cnp.int64_t[::1] dig = dig_np

    cdef long long msg = start, end = start + count, best = -1, s = start
    cdef Py_ssize_t i, j, off
    cdef int old, new_, delta, w

    for i in range(K):
        dig[i] = s % q
        s //= q
        if dig[i] != 0:
            off = i * q + dig[i]
            for j in range(L):
                cur[j] = add[cur[j], scaled[off, j]]

    while msg < end:
        if msg != 0:
            w = _weight(cur, buf, add, mul, neg, inv, block_rows, block_cols, hamming, best)
            if best < 0 or w < best:
                best = w
                if best == 1:
                    return 1
        msg += 1
        if msg == end:
            break
        i = 0
        while True:
            old = <int> dig[i]
            new_ = old + 1
            if new_ == q:
                dig[i] = 0
                delta = neg[old]
            else:
                dig[i] = new_
                delta = add[new_, neg[old]]
            if delta != 0:
                off = i * q + delta
                for j in range(L):
                    cur[j] = add[cur[j], scaled[off, j]]
            if new_ == q:
                i += 1
            else:
                break
    return best

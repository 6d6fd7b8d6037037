"""Exhaustive weight-scan driver: backend selection, budgeting, table prep.

The compiled Cython kernel is used when the extension built; otherwise the
pure-numpy kernel.  Both walk the q^K - 1 nonzero F_q-combinations of the
generators and return the minimum weight, where weight is the sum of
per-block matrix ranks (Hamming weight when every block is 1x1).
"""

from __future__ import annotations

import itertools
import os

import numpy as np

from . import _scan_py
from .gf import FiniteField, SizeLimitError

try:  # compiled lane, absent if the extension didn't build
    from . import _scan as _scan_c
except ImportError:  # pragma: no cover - build environment dependent
    _scan_c = None

DEFAULT_BUDGET = 1 << 24

if os.environ.get("SRCODES_FORCE_PURE"):
    _scan_c = None

BACKEND = "compiled" if _scan_c is not None else "pure"


class BudgetExceededError(RuntimeError):
    """The requested enumeration is larger than the allowed budget."""


def backends() -> dict[str, object]:
    out = {"pure": _scan_py.min_weight_scan}
    if _scan_c is not None:
        out["compiled"] = _scan_c.min_weight_scan
    return out


def _scaled_rows(T, gens: np.ndarray) -> np.ndarray:
    """(K*q, L) array whose row i*q + c is c times generator i."""
    K, L = gens.shape
    q = T.q
    out = np.empty((K * q, L), dtype=np.int32)
    coeffs = np.arange(q, dtype=np.int32)
    for i in range(K):
        out[i * q : (i + 1) * q] = T.mul[coeffs[:, None], gens[i][None, :]]
    return out


def _scan_object(field: FiniteField, gens: np.ndarray, shapes) -> int:
    """Tableless fallback for fields too large for dense tables (tiny K only)."""
    from .gf import rank as gf_rank

    K, L = gens.shape
    best = -1
    for digits in itertools.product(range(field.size), repeat=K):
        if not any(digits):
            continue
        cur = np.zeros(L, dtype=np.int64)
        for i, c in enumerate(digits):
            if c:
                row = [field.mul(c, int(x)) for x in gens[i]]
                cur = np.array([field.add(int(a), b) for a, b in zip(cur, row)], dtype=np.int64)
        w, off = 0, 0
        for n, m in shapes:
            w += gf_rank(field, cur[off : off + n * m].reshape(n, m))
            off += n * m
        if best < 0 or w < best:
            best = w
            if best == 1:
                break
    return best


def min_nonzero_weight(
    field: FiniteField,
    gens: np.ndarray,
    shapes,
    budget: int | None = None,
    backend: str | None = None,
) -> int:
    """Exact minimum weight over all nonzero F_q-combinations of `gens`.

    gens: (K, L) int array of field encodings, L = sum of block areas.
    shapes: sequence of (n_i, m_i) block shapes.
    Raises BudgetExceededError if q^K exceeds the budget (default 2^24).
    """
    gens = np.ascontiguousarray(np.asarray(gens, dtype=np.int32))
    if gens.ndim != 2:
        raise ValueError("generators must form a 2-D array")
    K, L = gens.shape
    if sum(n * m for n, m in shapes) != L:
        raise ValueError("block shapes do not match generator length")
    if K == 0:
        raise ValueError("empty generator set has no nonzero combinations")
    if budget is None:
        budget = DEFAULT_BUDGET
    q = field.size
    total = q**K
    if total > budget:
        raise BudgetExceededError(
            f"enumeration needs q^K = {q}^{K} = {total} codewords, budget is {budget}"
        )

    try:
        T = field.np_tables()
    except SizeLimitError:
        return _scan_object(field, gens, shapes)

    fns = backends()
    if backend is None:
        backend = BACKEND
    if backend not in fns:
        raise ValueError(f"unknown or unavailable backend {backend!r}")
    fn = fns[backend]

    scaled = _scaled_rows(T, gens)
    rows = np.array([n for n, _ in shapes], dtype=np.int32)
    cols = np.array([m for _, m in shapes], dtype=np.int32)
    w = fn(scaled, T.add, T.mul, T.neg, T.inv, rows, cols, 0, total, K, q)
    assert w > 0, "scan found no nonzero codeword despite K > 0"
    return int(w)

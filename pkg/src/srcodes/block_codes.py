"""Linear block codes over an extension-field alphabet, used as components.

Codes carry an explicit distance record: `verified` means the value was
established here by exhaustive enumeration; otherwise it is a declared lower
bound (possibly exact by construction, e.g. MDS) whose origin is in `note`.

Text format for generator matrices::

    # comment lines allowed anywhere
    p e n t k
    <k rows of t symbols>

A symbol is the integer whose base-p digits (least significant first) are
the coordinates of the alphabet element over F_p in the nested polynomial
basis — exactly the element encoding used throughout this package.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Sequence

import numpy as np

from . import scan
from .gf import FiniteField, as_matrix, extend_field, make_tower, poly_mul, rank


@dataclass(frozen=True)
class DistanceInfo:
    value: int  # lower bound on the minimum distance (exact if `exact`)
    exact: bool = False
    verified: bool = False  # established by exhaustive enumeration here
    note: str = ""

    def __post_init__(self):
        if self.value < 1:
            raise ValueError("distance bounds are at least 1")


class BlockCode:
    """k x t generator matrix with full row rank over `field`."""

    def __init__(self, field: FiniteField, G, distance: DistanceInfo, check: bool = True):
        self.field = field
        self.G = as_matrix(G)
        self.k, self.t = self.G.shape
        if self.t < 1:
            raise ValueError("length must be >= 1")
        self.distance = distance
        if np.any(self.G < 0) or np.any(self.G >= field.size):
            raise ValueError("generator entries out of range for the alphabet field")
        if check and self.k and rank(field, self.G) != self.k:
            raise ValueError("generator matrix does not have full row rank")

    def __repr__(self):
        return f"BlockCode([{self.t},{self.k},>={self.distance.value}] over GF({self.field.size}))"

    def codeword(self, message: Sequence[int]) -> np.ndarray:
        from .gf import mat_vec

        msg = np.asarray(list(message), dtype=np.int32)
        if msg.shape != (self.k,):
            raise ValueError(f"message must have length {self.k}")
        if self.k == 0:
            return np.zeros(self.t, dtype=np.int32)
        return mat_vec(self.field, self.G.T, msg)


def repetition_code(field: FiniteField, t: int) -> BlockCode:
    if t < 1:
        raise ValueError("length must be >= 1")
    G = np.ones((1, t), dtype=np.int32)
    return BlockCode(field, G, DistanceInfo(t, exact=True, note="repetition"))


def rs_code(field: FiniteField, t: int, k: int, points: Optional[Sequence[int]] = None) -> BlockCode:
    """Reed-Solomon [t, k, t-k+1]: rows are point powers x^0 .. x^{k-1}.

    Default evaluation points: the first t field elements in encoding order.
    """
    if not 1 <= k <= t:
        raise ValueError(f"need 1 <= k <= t, got k={k}, t={t}")
    if t > field.size:
        raise ValueError(f"length {t} exceeds field size {field.size}")
    if points is None:
        points = list(range(t))
    else:
        points = [int(x) for x in points]
        if len(points) != t or len(set(points)) != t:
            raise ValueError("evaluation points must be t distinct elements")
    G = np.zeros((k, t), dtype=np.int32)
    for j, x in enumerate(points):
        G[0, j] = 1
        for i in range(1, k):
            G[i, j] = field.mul(int(G[i - 1, j]), x)
    return BlockCode(field, G, DistanceInfo(t - k + 1, exact=True, note="mds"))


def min_hamming_distance(code: BlockCode, budget: int | None = None, backend: str | None = None) -> int:
    """Exact minimum Hamming weight by scanning all q^k - 1 nonzero codewords."""
    if code.k == 0:
        raise ValueError("zero code has no nonzero codewords")
    d = scan.min_nonzero_weight(
        code.field, code.G, [(1, 1)] * code.t, budget=budget, backend=backend
    )
    code.distance = DistanceInfo(d, exact=True, verified=True, note="exhaustive")
    return d


# ---------------------------------------------------------------------------
# BCH codes
# ---------------------------------------------------------------------------


def cyclotomic_coset(c: int, N: int, Q: int) -> list[int]:
    """Orbit of c under multiplication by Q modulo N, sorted."""
    out = []
    x = c % N
    while x not in out:
        out.append(x)
        x = (x * Q) % N
    return sorted(out)


def bch_defining_set(N: int, Q: int, delta: int, b: int = 1) -> set[int]:
    """Union of the cyclotomic cosets of b, ..., b+delta-2 modulo N."""
    S: set[int] = set()
    for c in range(b, b + delta - 1):
        if (c % N) not in S:
            S.update(cyclotomic_coset(c, N, Q))
    return S


def bch_dimension(N: int, Q: int, delta: int, b: int = 1) -> int:
    """Dimension N - |defining set|, by coset counting only (no field work)."""
    if delta < 1 or delta > N + 1:
        raise ValueError(f"designed distance must be in [1, N+1], got {delta}")
    from math import gcd

    if gcd(N, Q) != 1:
        raise ValueError(f"need gcd(N, Q) = 1, got N={N}, Q={Q}")
    return N - len(bch_defining_set(N, Q, delta, b))


def _splitting_degree(N: int, Q: int) -> int:
    """Multiplicative order of Q modulo N."""
    u, x = 1, Q % N
    while x != 1:
        x = (x * Q) % N
        u += 1
        if u > N:
            raise AssertionError("order search overran N")
    return u


def bch_code(field: FiniteField, N: int, delta: int, b: int = 1) -> BlockCode:
    """Narrow-sense-by-default BCH code of length N over `field`.

    Roots alpha^b .. alpha^{b+delta-2} for an order-N element alpha of the
    splitting field; generator polynomial = product of (x - alpha^s) over the
    defining set; true distance >= delta by the BCH bound.
    """
    from math import gcd

    Q = field.size
    if N < 2:
        raise ValueError("length must be >= 2")
    if gcd(N, Q) != 1:
        raise ValueError(f"need gcd(N, alphabet size) = 1, got N={N}, Q={Q}")
    if delta < 1 or delta > N + 1:
        raise ValueError(f"designed distance must be in [1, N+1], got {delta}")
    S = sorted(bch_defining_set(N, Q, delta, b))
    k = N - len(S)
    if not S:
        G = np.eye(N, dtype=np.int32)
        return BlockCode(field, G, DistanceInfo(1, exact=True, note="full space"))
    if k == 0:
        raise ValueError("defining set covers every exponent: the code is zero")

    u = _splitting_degree(N, Q)
    ext = extend_field(field, u)
    gen = ext.pow(_multiplicative_generator(ext), (ext.size - 1) // N)
    # generator polynomial over the extension, then coefficients down to `field`
    g = [1]
    for s in S:
        g = poly_mul(ext, g, [ext.neg(ext.pow(gen, s)), 1])
    assert len(g) == len(S) + 1
    coeffs = []
    for c in g:
        digits = ext.decompose(c) if ext is not field else [c]
        if any(digits[1:]):
            raise AssertionError("generator coefficient not in the alphabet subfield")
        coeffs.append(digits[0])
    G = np.zeros((k, N), dtype=np.int32)
    for i in range(k):
        G[i, i : i + len(coeffs)] = coeffs
    code = BlockCode(field, G, DistanceInfo(delta, note=f"bch designed distance, b={b}"))
    assert code.k == k
    return code


def _multiplicative_generator(F: FiniteField) -> int:
    if getattr(F, "_exp", None):
        return F._exp[1]
    if hasattr(F, "_find_generator"):
        return F._find_generator()
    raise AssertionError("field has no generator search")


# ---------------------------------------------------------------------------
# text format
# ---------------------------------------------------------------------------


def _field_chain(field: FiniteField) -> list[int]:
    """Extension degrees from the prime field upward."""
    chain = []
    f = field
    while f.base is not None:
        chain.append(f.ext_degree)
        f = f.base
    return list(reversed(chain))


def _strip_comments(text: str) -> list[str]:
    toks = []
    for line in text.splitlines():
        line = line.split("#", 1)[0]
        toks.extend(line.split())
    return toks


def export_generator_matrix(code: BlockCode, note: str = "") -> str:
    """Render a BlockCode in the `p e n t k` text format."""
    chain = _field_chain(code.field)
    if len(chain) == 0:
        e, n = 1, 1
    elif len(chain) == 1:
        e, n = chain[0], 1
    elif len(chain) == 2:
        e, n = chain[0], chain[1]
    else:
        # relative tower (e.g. a construct1 component alphabet): flatten the
        # upper levels; such files must be re-imported with an explicit field
        e = chain[0]
        n = 1
        for d in chain[1:]:
            n *= d
    lines = []
    if note:
        lines.append(f"# {note}")
    lines.append(f"{code.field.p} {e} {n} {code.t} {code.k}")
    for row in code.G:
        lines.append(" ".join(str(int(x)) for x in row))
    return "\n".join(lines) + "\n"


def import_generator_matrix(
    text: str,
    field: Optional[FiniteField] = None,
    distance: Optional[DistanceInfo] = None,
) -> BlockCode:
    """Parse the `p e n t k` format.

    Without an explicit `field`, the alphabet is rebuilt as the top of the
    (p, e, n) tower.  With one, the header is only checked for consistency
    (same p, same total degree) and symbols are read as that field's
    encodings — needed for relative-tower alphabets.
    """
    toks = _strip_comments(text)
    if len(toks) < 5:
        raise ValueError("truncated header: expected `p e n t k`")
    try:
        p, e, n, t, k = (int(x) for x in toks[:5])
    except ValueError as exc:
        raise ValueError(f"bad header: {exc}") from None
    if field is None:
        field = make_tower(p, e, n).top
    else:
        if field.p != p or field.size != p ** (e * n):
            raise ValueError(
                f"header field GF({p}^{e * n}) does not match supplied field GF({field.size})"
            )
    body = toks[5:]
    if len(body) != t * k:
        raise ValueError(f"expected {t * k} symbols, found {len(body)}")
    try:
        vals = [int(x) for x in body]
    except ValueError as exc:
        raise ValueError(f"bad symbol: {exc}") from None
    for v in vals:
        if not 0 <= v < field.size:
            raise ValueError(f"symbol {v} out of range for GF({field.size})")
    G = np.array(vals, dtype=np.int32).reshape(k, t)
    if distance is None:
        distance = DistanceInfo(1, note="imported, no distance claim")
    return BlockCode(field, G, distance)

"""Sum-rank metric spaces and F_q-linear codes in them.

A point of the ambient space is a tuple of matrices, block i of shape
n_i x m_i over F_q; its weight is the sum of the block ranks.  A code is an
F_q-subspace, stored as a K x L generator matrix of flattened codewords
(blocks concatenated in order, each row-major), so the F_q-dimension K and
the cardinality q^K are explicit.

Text format for codes::

    # claimed-distance: 4         <- optional directives, all comment lines
    # claimed-exact: 0
    # verified-distance: 4
    # provenance: reed-solomon pair (q=2, t=4, k=1)
    p e t
    n_1 m_1  ...  n_t m_t
    K
    <K rows of sum(n_i * m_i) symbols over F_{p^e}>

Symbols are F_q element encodings (base-p digits = F_p coordinates).
Ordinary `#` comments are allowed anywhere; a comment of the form
`# key: value` with one of the four keys above is read as a directive.
Absent a claim the imported code gets the trivial lower bound 1.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Sequence

import numpy as np

from . import scan
from .block_codes import BlockCode, DistanceInfo
from .gf import FiniteField, extend_field, factor_prime_power, prime_field, rank


@dataclass(frozen=True)
class SumRankSpace:
    """Ambient tuple space: blocks of shape n_i x m_i over a ground field."""

    ground: FiniteField
    sizes: tuple[tuple[int, int], ...]  # ((n_1, m_1), ..., (n_t, m_t))

    def __init__(self, ground: FiniteField, sizes: Sequence[tuple[int, int]]):
        sizes = tuple((int(n), int(m)) for n, m in sizes)
        if not sizes:
            raise ValueError("need at least one block")
        for n, m in sizes:
            if not 1 <= n <= m:
                raise ValueError(f"block sizes must satisfy 1 <= n_i <= m_i, got {n}x{m}")
        ms = [m for _, m in sizes]
        if any(a < b for a, b in zip(ms, ms[1:])):
            raise ValueError("column sizes m_i must be nonincreasing")
        object.__setattr__(self, "ground", ground)
        object.__setattr__(self, "sizes", sizes)

    @property
    def q(self) -> int:
        return self.ground.size

    @property
    def t(self) -> int:
        return len(self.sizes)

    @property
    def N(self) -> int:
        """Maximum possible weight: sum of the row counts n_i."""
        return sum(n for n, _ in self.sizes)

    @property
    def total_dim(self) -> int:
        """F_q-dimension of the ambient space: sum of n_i * m_i."""
        return sum(n * m for n, m in self.sizes)

    def offsets(self) -> list[int]:
        out, off = [], 0
        for n, m in self.sizes:
            out.append(off)
            off += n * m
        return out

    def split(self, flat: np.ndarray) -> tuple[np.ndarray, ...]:
        flat = np.asarray(flat, dtype=np.int32).reshape(-1)
        if flat.shape[0] != self.total_dim:
            raise ValueError(f"expected {self.total_dim} entries, got {flat.shape[0]}")
        out, off = [], 0
        for n, m in self.sizes:
            out.append(flat[off : off + n * m].reshape(n, m))
            off += n * m
        return tuple(out)

    def join(self, blocks: Sequence[np.ndarray]) -> np.ndarray:
        if len(blocks) != self.t:
            raise ValueError(f"expected {self.t} blocks")
        parts = []
        for (n, m), B in zip(self.sizes, blocks):
            B = np.asarray(B, dtype=np.int32)
            if B.shape != (n, m):
                raise ValueError(f"block shape {B.shape} does not match {(n, m)}")
            parts.append(B.reshape(-1))
        return np.concatenate(parts)

    def weight(self, blocks_or_flat) -> int:
        if isinstance(blocks_or_flat, np.ndarray) and blocks_or_flat.ndim == 1:
            blocks = self.split(blocks_or_flat)
        else:
            blocks = blocks_or_flat
        return sum(rank(self.ground, np.asarray(B, dtype=np.int32)) for B in blocks)

    def distance(self, x, y) -> int:
        xf = x if isinstance(x, np.ndarray) and x.ndim == 1 else self.join(x)
        yf = y if isinstance(y, np.ndarray) and y.ndim == 1 else self.join(y)
        F = self.ground
        diff = np.array([F.sub(int(a), int(b)) for a, b in zip(xf, yf)], dtype=np.int32)
        return self.weight(diff)

    def __repr__(self):
        blocks = ",".join(f"{n}x{m}" for n, m in self.sizes)
        return f"SumRankSpace(q={self.q}, [{blocks}])"


def sr_weight(space: SumRankSpace, x) -> int:
    return space.weight(x)


def sr_distance(space: SumRankSpace, x, y) -> int:
    return space.distance(x, y)


class SumRankCode:
    """F_q-linear code given by K flattened generators (rows of `gens`)."""

    def __init__(
        self,
        space: SumRankSpace,
        gens,
        claimed: DistanceInfo,
        note: str = "",
        check: bool = True,
    ):
        self.space = space
        gens = np.asarray(gens, dtype=np.int32)
        if gens.size == 0:
            gens = gens.reshape(0, space.total_dim)
        if gens.ndim != 2 or gens.shape[1] != space.total_dim:
            raise ValueError(f"generators must have {space.total_dim} columns")
        if np.any(gens < 0) or np.any(gens >= space.q):
            raise ValueError("generator entries out of range for the ground field")
        self.gens = gens
        self.K = gens.shape[0]
        self.claimed = claimed
        self.note = note
        self.verified: Optional[int] = None  # exact min weight once scanned
        if check and self.K and rank(space.ground, gens) != self.K:
            raise ValueError("generators are not F_q-linearly independent")

    def __repr__(self):
        d = self.verified if self.verified is not None else f">={self.claimed.value}"
        return f"SumRankCode(K={self.K}, d={d}, {self.space!r})"

    @property
    def cardinality(self) -> int:
        return self.space.q**self.K

    def distance_info(self) -> DistanceInfo:
        if self.verified is not None:
            return DistanceInfo(self.verified, exact=True, verified=True, note="exhaustive")
        return self.claimed

    def codeword(self, message: Sequence[int]) -> np.ndarray:
        """Flattened codeword for a length-K message over F_q."""
        msg = [int(c) for c in message]
        if len(msg) != self.K:
            raise ValueError(f"message must have length {self.K}")
        if any(not 0 <= c < self.space.q for c in msg):
            raise ValueError("message symbols out of range for the ground field")
        F = self.space.ground
        out = np.zeros(self.space.total_dim, dtype=np.int32)
        for c, row in zip(msg, self.gens):
            if c == 0:
                continue
            for j in range(out.shape[0]):
                out[j] = F.add(int(out[j]), F.mul(int(c), int(row[j])))
        return out

    def codewords(self):
        """All q^K flattened codewords (small K only; tests and oracles)."""
        import itertools

        F = self.space.ground
        for msg in itertools.product(range(self.space.q), repeat=self.K):
            yield self.codeword(msg)


def min_srd_exhaustive(
    code: SumRankCode, budget: int | None = None, backend: str | None = None
) -> int:
    """Exact minimum sum-rank distance by scanning all nonzero codewords.

    The result is cached on `code.verified`.  A zero code (K = 0) has no
    nonzero codeword; its distance is taken to be N by convention.
    """
    if code.K == 0:
        code.verified = code.space.N
        return code.verified
    d = scan.min_nonzero_weight(
        code.space.ground,
        code.gens,
        list(code.space.sizes),
        budget=budget,
        backend=backend,
    )
    code.verified = d
    return d


# ---------------------------------------------------------------------------
# Singleton-like bound
# ---------------------------------------------------------------------------


def _locate(space: SumRankSpace, d: int) -> tuple[int, int]:
    """Write d - 1 = n_1 + ... + n_{j-1} + delta with 0 <= delta <= n_j - 1."""
    if not 1 <= d <= space.N:
        raise ValueError(f"distance must be in [1, {space.N}], got {d}")
    rem = d - 1
    for j, (n, _) in enumerate(space.sizes):
        if rem < n:
            return j, rem
        rem -= n
    raise AssertionError("unreachable: d <= N")


def singleton_bound(space: SumRankSpace, d: int) -> int:
    """Largest possible log_q |C| for a code of minimum distance d.

    Equals sum_{i >= j} n_i m_i - m_j * delta, with (j, delta) determined by
    d - 1 = n_1 + ... + n_{j-1} + delta, 0 <= delta <= n_j - 1.
    """
    j, delta = _locate(space, d)
    tail = sum(n * m for n, m in space.sizes[j:])
    return tail - space.sizes[j][1] * delta


def max_distance_for_dimension(space: SumRankSpace, K: int) -> int:
    """Largest d whose Singleton-like bound still allows dimension K."""
    if K < 0 or K > space.total_dim:
        raise ValueError(f"dimension must be in [0, {space.total_dim}]")
    if K == 0:
        return space.N
    best = 0
    for d in range(1, space.N + 1):
        if singleton_bound(space, d) >= K:
            best = d
    if best == 0:
        raise AssertionError("unreachable: d=1 bound is the full dimension")
    return best


def singleton_gap(code: SumRankCode) -> int:
    """max_distance_for_dimension(K) minus the code's (verified or claimed) distance."""
    d = code.verified if code.verified is not None else code.claimed.value
    return max_distance_for_dimension(code.space, code.K) - d


def defect(code: SumRankCode) -> int:
    """Dimension shortfall m * (N - d + 1) - K against the equal-size bound.

    Only defined when all column sizes m_i agree (the bound then reads
    m * (N - d + 1)); raises ValueError otherwise.
    """
    ms = {m for _, m in code.space.sizes}
    if len(ms) != 1:
        raise ValueError("defect is defined only for equal column sizes m_i")
    (m,) = ms
    if code.K == 0:
        d = code.space.N
    else:
        d = code.verified if code.verified is not None else code.claimed.value
    return m * (code.space.N - d + 1) - code.K


def rate_and_relative_distance(code: SumRankCode) -> tuple[float, float]:
    """(K / total ambient dimension, d / N), d = verified or claimed."""
    d = code.verified if code.verified is not None else code.claimed.value
    return code.K / code.space.total_dim, d / code.space.N


# ---------------------------------------------------------------------------
# Hamming bridge
# ---------------------------------------------------------------------------


def hamming_as_sumrank(code: BlockCode) -> SumRankCode:
    """View a block code as a sum-rank code with t blocks of shape 1x1.

    Sum-rank weight then counts nonzero symbols, i.e. Hamming weight over the
    alphabet field.
    """
    space = SumRankSpace(code.field, [(1, 1)] * code.t)
    return SumRankCode(space, code.G.copy(), code.distance, note="hamming")


# ---------------------------------------------------------------------------
# text format
# ---------------------------------------------------------------------------


_DIRECTIVE_KEYS = ("claimed-distance", "claimed-exact", "verified-distance", "provenance")


def export_sumrank_code(code: SumRankCode, comment: str = "") -> str:
    sp = code.space
    p, e = factor_prime_power(sp.q)
    lines = []
    if comment:
        lines.append(f"# {comment}")
    info = code.distance_info()
    lines.append(f"# claimed-distance: {info.value}")
    lines.append(f"# claimed-exact: {1 if info.exact else 0}")
    if code.verified is not None:
        lines.append(f"# verified-distance: {code.verified}")
    if code.note:
        lines.append(f"# provenance: {code.note}")
    lines.append(f"{p} {e} {sp.t}")
    lines.append("  ".join(f"{n} {m}" for n, m in sp.sizes))
    lines.append(str(code.K))
    for row in code.gens:
        lines.append(" ".join(str(int(x)) for x in row))
    return "\n".join(lines) + "\n"


def import_sumrank_code(text: str) -> SumRankCode:
    claimed_val: Optional[int] = None
    claimed_exact = False
    verified_val: Optional[int] = None
    note = ""
    toks: list[str] = []
    for line in text.splitlines():
        stripped = line.strip()
        if stripped.startswith("#"):
            body = stripped.lstrip("#").strip()
            key, sep, value = body.partition(":")
            key, value = key.strip(), value.strip()
            if sep and key in _DIRECTIVE_KEYS:
                try:
                    if key == "claimed-distance":
                        claimed_val = int(value)
                    elif key == "claimed-exact":
                        claimed_exact = bool(int(value))
                    elif key == "verified-distance":
                        verified_val = int(value)
                    else:
                        note = value
                except ValueError:
                    raise ValueError(f"bad value for directive {key}: {value!r}") from None
            continue
        toks.extend(line.split("#", 1)[0].split())

    def take(n: int) -> list[int]:
        nonlocal toks
        if len(toks) < n:
            raise ValueError("truncated file")
        head, toks = toks[:n], toks[n:]
        try:
            return [int(x) for x in head]
        except ValueError as exc:
            raise ValueError(f"bad symbol: {exc}") from None

    p, e, t = take(3)
    sizes = []
    flat_sizes = take(2 * t)
    for i in range(t):
        sizes.append((flat_sizes[2 * i], flat_sizes[2 * i + 1]))
    (K,) = take(1)
    ground = extend_field(prime_field(p), e)
    space = SumRankSpace(ground, sizes)
    vals = take(K * space.total_dim)
    if toks:
        raise ValueError(f"{len(toks)} trailing symbols after the generator rows")
    gens = np.array(vals, dtype=np.int32).reshape(K, space.total_dim)
    if claimed_val is None:
        claimed = DistanceInfo(1, note="imported, no distance claim")
    else:
        claimed = DistanceInfo(claimed_val, exact=claimed_exact, note="imported claim")
    code = SumRankCode(space, gens, claimed, note=note)
    if verified_val is not None:
        code.verified = verified_val
    return code

"""Generator-producing constructions of sum-rank-metric codes.

All constructions share one mechanism: a block code supplies symbols in an
extension field, each symbol becomes (part of) a q-polynomial, and the
q-polynomial's matrix over the ground field fills one block of the codeword.
Distances propagate as declared lower bounds; exact certification is a
separate exhaustive step (`sumrank.min_srd_exhaustive`).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Sequence

import numpy as np

from .block_codes import BlockCode, DistanceInfo, bch_code, rs_code
from .gf import FieldTower, factor_prime_power, make_tower
from .linearized import lin_to_matrix, qpoly
from .sumrank import SumRankCode, SumRankSpace, singleton_bound


def _flat_generator(polys) -> np.ndarray:
    """Flatten a tuple of q-polynomials (one per block) into a generator row."""
    parts = [lin_to_matrix(L).reshape(-1) for L in polys]
    return np.concatenate(parts)


# ---------------------------------------------------------------------------
# construction from a single code over the big field F_{q^{n(v+1)}}
# ---------------------------------------------------------------------------


def from_extension_code(tower: FieldTower, code: BlockCode, v: int) -> SumRankCode:
    """Expand a code over F_{q^{n(v+1)}} into t blocks of n x n matrices.

    Each symbol is split into v+1 coordinates over F_{q^n} (polynomial basis
    of the relative extension), read as the coefficients of a q-polynomial of
    q-degree <= v, and evaluated to a matrix.  The result has F_q-dimension
    K = k * n * (v+1) and declared distance d * (n - v), where [t, k, >=d] is
    the input code.
    """
    n = tower.n
    if not 0 <= v <= n - 1:
        raise ValueError(f"need 0 <= v <= n-1, got v={v}, n={n}")
    big = tower.relative_extension(v + 1)
    if code.field is not big:
        raise ValueError(
            "component alphabet must be the degree-(v+1) relative extension "
            f"of the tower's top field (expected GF({big.size}), got GF({code.field.size}))"
        )
    space = SumRankSpace(tower.ground, [(n, n)] * code.t)
    # F_q-basis of the big field: top-field basis times relative basis
    basis = [tower.q**a * tower.top.size**i for i in range(v + 1) for a in range(n)]
    rows = []
    for r in range(code.k):
        for beta in basis:
            polys = []
            for j in range(code.t):
                c = big.mul(beta, int(code.G[r, j]))
                coeffs = big.decompose(c) if v > 0 else [c]
                polys.append(qpoly(tower, coeffs))
            rows.append(_flat_generator(polys))
    gens = np.array(rows, dtype=np.int32) if rows else np.zeros((0, space.total_dim), np.int32)
    if code.k == 0:
        claimed = DistanceInfo(space.N, exact=True, note="zero code")
    else:
        claimed = DistanceInfo(code.distance.value * (n - v), note="component distance times n-v")
    out = SumRankCode(
        space,
        gens,
        claimed,
        note=f"extension-code expansion (q={tower.q}, n={n}, v={v}, [{code.t},{code.k}] component)",
    )
    assert out.K == code.k * n * (v + 1)
    return out


# ---------------------------------------------------------------------------
# construction from v+1 coefficient codes over F_{q^n}
# ---------------------------------------------------------------------------


def from_coefficient_codes(tower: FieldTower, codes: Sequence[BlockCode]) -> SumRankCode:
    """Combine codes C_0..C_v over F_{q^n} into one sum-rank code.

    Codeword blocks are the matrices of f_s(x) = sum_i a_{i,s} x^{q^i} where,
    for each i, the coefficient vector (a_{i,1},...,a_{i,t}) runs over C_i.
    Generators: for every i, every generator row g of C_i and every basis
    element beta of F_{q^n}/F_q, the tuple with block s = matrix of
    (beta*g_s) x^{q^i}.  K = n * sum(k_i); declared distance
    min_i w_i * (n - i) from the component distance records.
    """
    codes = list(codes)
    if not codes:
        raise ValueError("need at least one component code")
    n = tower.n
    if len(codes) > n:
        raise ValueError(f"at most n={n} coefficient codes are usable, got {len(codes)}")
    t = codes[0].t
    for C in codes:
        if C.field is not tower.top:
            raise ValueError("component codes must live over the tower's top field")
        if C.t != t:
            raise ValueError("component codes must share one block length")
    space = SumRankSpace(tower.ground, [(n, n)] * t)
    top = tower.top
    rows = []
    for i, C in enumerate(codes):
        for r in range(C.k):
            for a in range(n):
                beta = tower.q**a
                polys = [
                    qpoly(tower, [0] * i + [top.mul(beta, int(C.G[r, s]))])
                    for s in range(t)
                ]
                rows.append(_flat_generator(polys))
    gens = np.array(rows, dtype=np.int32) if rows else np.zeros((0, space.total_dim), np.int32)
    claimed_val = min(C.distance.value * (n - i) for i, C in enumerate(codes))
    claimed = DistanceInfo(max(claimed_val, 1), note="min over i of w_i*(n-i)")
    out = SumRankCode(
        space,
        gens,
        claimed,
        note=f"coefficient codes (q={tower.q}, n={n}, k=({','.join(str(C.k) for C in codes)}))",
    )
    assert out.K == n * sum(C.k for C in codes)
    return out


# ---------------------------------------------------------------------------
# Reed-Solomon pair instantiation (2x2 blocks)
# ---------------------------------------------------------------------------


def reed_solomon_pair(q: int, t: int, k: int) -> SumRankCode:
    """Two Reed-Solomon codes over F_{q^2} combined into 2x2 blocks.

    C_0 = RS[t, (t+k+1)/2] and C_1 = RS[t, k]; the larger code sits at
    coefficient index 0 so both terms of the distance bound agree.  Yields
    K = t + 3k + 1 and declared distance t - k + 1.
    """
    p, e = factor_prime_power(q)
    if not 1 <= t <= q * q:
        raise ValueError(f"need 1 <= t <= q^2, got t={t}")
    if not 1 <= k < t:
        raise ValueError(f"need 1 <= k < t, got k={k}")
    if (t - k) % 2 == 0:
        raise ValueError(f"t - k must be odd, got t={t}, k={k}")
    tower = make_tower(p, e, 2)
    c0 = rs_code(tower.top, t, (t + k + 1) // 2)
    c1 = rs_code(tower.top, t, k)
    out = from_coefficient_codes(tower, [c0, c1])
    out.note = f"reed-solomon pair (q={q}, t={t}, k={k})"
    assert out.K == t + 3 * k + 1
    assert out.claimed.value == t - k + 1
    return out


# ---------------------------------------------------------------------------
# BCH families
# ---------------------------------------------------------------------------


def bch_dimension_formula(q: int, n: int, u: int, u_i: int, lam: int = 1) -> int:
    """Closed-form dimension of the designed-distance-u_i BCH component.

    Alphabet F_Q with Q = q^n, block length (Q^u - 1)/lam; returns
    length - u*((u_i-1) - floor((u_i-1)/Q)).  Raises ValueError outside the
    parameter ranges where the formula counts cyclotomic cosets exactly:
    even u >= 4 with u_i <= Q^{u/2}+1; odd u >= 5 with u_i <= Q^{(u+1)/2}+1;
    and for lam > 1, odd u >= 5 with lam | Q-1 and u_i-1 <= (Q^{(u+1)/2}-1)/lam.
    """
    if n < 1 or u < 1:
        raise ValueError("n and u must be positive")
    Q = q**n
    if u_i < 2:
        raise ValueError(f"designed distance must be >= 2, got {u_i}")
    if lam < 1:
        raise ValueError("lam must be >= 1")
    if lam == 1:
        if u % 2 == 0:
            if u < 4:
                raise ValueError(f"even u must be >= 4, got {u}")
            cap = Q ** (u // 2) + 1
        else:
            if u < 5:
                raise ValueError(f"odd u must be >= 5, got {u}")
            cap = Q ** ((u + 1) // 2) + 1
        if u_i > cap:
            raise ValueError(f"designed distance {u_i} exceeds the valid range (<= {cap})")
    else:
        if u % 2 == 0 or u < 5:
            raise ValueError(f"lam > 1 requires odd u >= 5, got u={u}")
        if (Q - 1) % lam != 0:
            raise ValueError(f"lam={lam} must divide Q-1={Q - 1}")
        cap = (Q ** ((u + 1) // 2) - 1) // lam
        if u_i - 1 > cap:
            raise ValueError(f"designed distance {u_i} exceeds the valid range (u_i-1 <= {cap})")
    length = (Q**u - 1) // lam
    a = u_i - 1
    return length - u * (a - a // Q)


@dataclass
class BchFamily:
    """Parameter summary of a BCH-component sum-rank code (optionally built)."""

    q: int
    n: int
    u: int
    lam: int
    base_field: bool  # components over F_q instead of F_{q^n}
    designed: tuple[int, ...]
    block_length: int
    component_dims: tuple[int, ...]
    K: int
    claimed: int
    code: Optional[SumRankCode]


_MATERIALIZE_LIMIT = 127  # auto-build generators up to this block length


def bch_family(
    q: int,
    n: int,
    u: int,
    designed: Sequence[int],
    lam: int = 1,
    base_field: bool = False,
    materialize: Optional[bool] = None,
) -> BchFamily:
    """Sum-rank code with BCH component codes of the given designed distances.

    With base_field=False the components are BCH codes over F_{q^n} of length
    (q^{nu}-1)/lam; with base_field=True they are BCH codes over F_q of length
    (q^u-1)/lam, lifted coefficient-wise (dimension formula evaluated at the
    matching alphabet).  K = n * sum of component dimensions; declared distance
    min_i u_i*(n-i).  Generators are materialized via bch_code +
    from_coefficient_codes when the length is small (or on request).
    """
    designed = tuple(int(x) for x in designed)
    if not 1 <= len(designed) <= n:
        raise ValueError(f"need 1..{n} designed distances, got {len(designed)}")
    formula_n = 1 if base_field else n
    dims = tuple(bch_dimension_formula(q, formula_n, u, ui, lam) for ui in designed)
    Q = q**formula_n
    length = (Q**u - 1) // lam
    K = n * sum(dims)
    claimed = min(ui * (n - i) for i, ui in enumerate(designed))
    if materialize is None:
        materialize = length <= _MATERIALIZE_LIMIT
    code = None
    if materialize:
        p, e = factor_prime_power(q)
        tower = make_tower(p, e, n)
        comps = []
        for ui, dim in zip(designed, dims):
            if base_field:
                ground_code = bch_code(tower.ground, length, ui)
                comp = BlockCode(tower.top, ground_code.G, ground_code.distance)
            else:
                comp = bch_code(tower.top, length, ui)
            if comp.k != dim:
                raise AssertionError(
                    f"coset dimension {comp.k} disagrees with the formula value {dim}"
                )
            comps.append(comp)
        code = from_coefficient_codes(tower, comps)
        code.note = (
            f"bch components (q={q}, n={n}, u={u}, lam={lam}, "
            f"designed=({','.join(map(str, designed))}), base_field={base_field})"
        )
        assert code.K == K
        assert code.claimed.value == claimed
    return BchFamily(
        q=q,
        n=n,
        u=u,
        lam=lam,
        base_field=base_field,
        designed=designed,
        block_length=length,
        component_dims=dims,
        K=K,
        claimed=claimed,
        code=code,
    )


# ---------------------------------------------------------------------------
# dimension-maximal construction for strictly shrinking square blocks
# ---------------------------------------------------------------------------


def msrd_code(q: int, sizes: Sequence[int], d_sr: int) -> SumRankCode:
    """Code over square blocks n_1 >= ... >= n_t whose K meets the bound.

    The target distance decomposes as d_sr = n_1 + ... + n_{j-1} + d with
    1 <= d <= n_j.  Feasibility (checked): n_j >= sum_{i>j} n_i^2, and for
    j > 1 additionally n_{j-1} >= n_j(n_j-d+1) + sum_{i>j} n_i^2.

    Layout: block j carries free q-polynomials; blocks before j pin each
    degree of freedom to its own reserved span of basis vectors (consecutive
    powers of the polynomial-basis generator) as the coefficient of x; blocks
    after j carry single-monomial q-polynomials whose coefficients are echoed
    both before block j and, at exponent n_j-d+1, inside block j (the echo in
    block j is dropped when d = 1, where any nonzero block already has rank
    >= d).  K = n_j(n_j-d+1) + sum_{i>j} n_i^2 = the largest dimension the
    distance permits.
    """
    sizes = [int(x) for x in sizes]
    if not sizes or any(x < 1 for x in sizes):
        raise ValueError("sizes must be positive")
    if any(a < b for a, b in zip(sizes, sizes[1:])):
        raise ValueError("sizes must be nonincreasing")
    p, e = factor_prime_power(q)
    t = len(sizes)
    N = sum(sizes)
    if not 1 <= d_sr <= N:
        raise ValueError(f"distance must be in [1, {N}], got {d_sr}")
    # locate the block j holding the distance remainder
    j = 0
    rem = d_sr
    while rem > sizes[j]:
        rem -= sizes[j]
        j += 1
    d = rem  # 1 <= d <= sizes[j]
    nj = sizes[j]
    tail = sum(x * x for x in sizes[j + 1 :])
    K_free = nj * (nj - d + 1)
    K = K_free + tail
    if nj < tail:
        raise ValueError(
            f"infeasible: block {j + 1} needs n_j >= {tail} (sum of squared later sizes), got {nj}"
        )
    if j > 0 and sizes[j - 1] < K:
        raise ValueError(
            f"infeasible: block {j} needs n_(j-1) >= {K} to host all pinned coefficients, "
            f"got {sizes[j - 1]}"
        )
    towers = {nl: make_tower(p, e, nl) for nl in set(sizes)}
    space = SumRankSpace(towers[sizes[0]].ground, [(nl, nl) for nl in sizes])

    def front_pin(power: int):
        """Blocks before j: coefficient-of-x generator basis^power, one per block."""
        return [qpoly(towers[sizes[m]], [q**power]) for m in range(j)]

    zero_polys = [qpoly(towers[nl], []) for nl in sizes]
    rows = []
    # free part: block j carries every monomial of q-degree <= n_j - d
    for s in range(nj - d + 1):
        for r in range(nj):
            polys = list(zero_polys)
            polys[:j] = front_pin(s * nj + r)
            polys[j] = qpoly(towers[nj], [0] * s + [q**r])
            rows.append(_flat_generator(polys))
    # echoed part: one generator per entry of each later block
    off = 0  # basis offset inside block j (and, shifted by K_free, before it)
    for i in range(j + 1, t):
        ni = sizes[i]
        for l in range(ni):
            for r in range(ni):
                polys = list(zero_polys)
                polys[:j] = front_pin(K_free + off + r)
                if d > 1:
                    polys[j] = qpoly(towers[nj], [0] * (nj - d + 1) + [q ** (off + r)])
                polys[i] = qpoly(towers[ni], [0] * l + [q**r])
                rows.append(_flat_generator(polys))
            off += ni
    gens = np.array(rows, dtype=np.int32)
    claimed = DistanceInfo(d_sr, exact=True, note="dimension meets the bound at this distance")
    out = SumRankCode(
        space,
        gens,
        claimed,
        note=f"maximal square-block code (q={q}, sizes=({','.join(map(str, sizes))}), d={d_sr})",
    )
    assert out.K == K == singleton_bound(space, d_sr)
    return out

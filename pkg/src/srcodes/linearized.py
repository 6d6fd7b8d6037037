"""q-polynomials over F_{q^n}: sums a_0 x + a_1 x^q + ... + a_v x^{q^v}.

A q-polynomial is an F_q-linear map on F_{q^n}; its matrix (in the polynomial
basis, acting on column vectors) is what the sum-rank constructions put into
code blocks.  Coefficient index v is capped at n-1: exponents q^n and above
wrap (x^{q^n} = x on F_{q^n}) and are rejected rather than silently reduced.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, Sequence

import numpy as np

from . import scan
from .gf import FieldTower, kernel_basis, rank


@dataclass(frozen=True)
class LinearizedPoly:
    tower: FieldTower
    coeffs: tuple[int, ...]  # top-field encodings, coefficient of x^{q^i} at index i

    def __post_init__(self):
        if len(self.coeffs) > self.tower.n:
            raise ValueError(
                f"got {len(self.coeffs)} coefficients; at most n = {self.tower.n} allowed "
                "(exponent q^n wraps to x)"
            )
        for c in self.coeffs:
            if not 0 <= c < self.tower.top.size:
                raise ValueError(f"coefficient encoding {c} out of range")

    def qdegree(self) -> int:
        """Largest i with a nonzero coefficient; -1 for the zero map."""
        for i in range(len(self.coeffs) - 1, -1, -1):
            if self.coeffs[i]:
                return i
        return -1

    def is_zero(self) -> bool:
        return self.qdegree() < 0


def qpoly(tower: FieldTower, coeffs: Sequence[int]) -> LinearizedPoly:
    return LinearizedPoly(tower, tuple(int(c) for c in coeffs))


def lin_eval(L: LinearizedPoly, x: int) -> int:
    tw = L.tower
    top = tw.top
    acc = 0
    for i, a in enumerate(L.coeffs):
        if a:
            acc = top.add(acc, top.mul(a, tw.frobenius(x, i)))
    return acc


def lin_to_matrix(L: LinearizedPoly) -> np.ndarray:
    """n x n matrix over F_q; column j is the image of the basis element y^j."""
    tw = L.tower
    n = tw.n
    M = np.zeros((n, n), dtype=np.int32)
    for j, b in enumerate(tw.basis()):
        M[:, j] = tw.as_vector(lin_eval(L, b))
    return M


def lin_rank(L: LinearizedPoly) -> int:
    return rank(L.tower.ground, lin_to_matrix(L))


def lin_kernel(L: LinearizedPoly) -> list[int]:
    """Roots of L in F_{q^n} (as encodings), i.e. the kernel of the map."""
    tw = L.tower
    vecs = kernel_basis(tw.ground, lin_to_matrix(L))
    # expand the F_q-span of the kernel basis; ground encodings < q are the
    # constants of the top field, so they multiply in directly
    roots = [0]
    for v in vecs:
        elt = tw.from_vector([int(x) for x in v])
        roots = [tw.top.add(r, tw.top.mul(c, elt)) for r in roots for c in range(tw.q)]
    return sorted(roots)


class GabidulinCode:
    """All q-polynomials of q-degree at most v on F_{q^n}, as n x n matrices.

    q^{n(v+1)} codewords; minimum rank distance n - v (maximum possible for
    this cardinality).
    """

    def __init__(self, tower: FieldTower, v: int):
        if not 0 <= v <= tower.n - 1:
            raise ValueError(f"need 0 <= v <= n-1 = {tower.n - 1}, got v={v}")
        self.tower = tower
        self.v = v

    @property
    def dimension(self) -> int:
        """F_q-dimension n(v+1)."""
        return self.tower.n * (self.v + 1)

    def claimed_distance(self) -> int:
        return self.tower.n - self.v

    def card(self) -> int:
        return self.tower.q ** self.dimension

    def generator_polys(self) -> list[LinearizedPoly]:
        """F_q-basis: y^r x^{q^s} for r < n, s <= v."""
        tw = self.tower
        out = []
        for s in range(self.v + 1):
            for b in tw.basis():
                coeffs = [0] * (self.v + 1)
                coeffs[s] = b
                out.append(qpoly(tw, coeffs))
        return out

    def enumerate(self) -> Iterator[LinearizedPoly]:
        tw = self.tower
        size = tw.top.size

        def rec(i: int, cur: list[int]) -> Iterator[LinearizedPoly]:
            if i == self.v + 1:
                yield qpoly(tw, cur)
                return
            for a in range(size):
                cur[i] = a
                yield from rec(i + 1, cur)
            cur[i] = 0

        yield from rec(0, [0] * (self.v + 1))

    def min_rank_distance(self, budget: int | None = None, backend: str | None = None) -> int:
        """Exact minimum rank over the nonzero codewords, by exhaustive scan."""
        n = self.tower.n
        gens = np.stack([lin_to_matrix(L).reshape(-1) for L in self.generator_polys()])
        return scan.min_nonzero_weight(self.tower.ground, gens, [(n, n)], budget=budget, backend=backend)

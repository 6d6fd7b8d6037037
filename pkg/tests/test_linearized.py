"""q-polynomials: evaluation, matrices, ranks, kernels, Gabidulin spans."""

import random

import numpy as np

from srcodes import gf
from srcodes.linearized import (
    GabidulinCode,
    lin_eval,
    lin_kernel,
    lin_rank,
    lin_to_matrix,
    qpoly,
)


def test_coefficient_length_and_range_checks():
    tw = gf.make_tower(2, 1, 2)
    try:
        qpoly(tw, [0, 0, 1])  # q-degree 2 needs n >= 3
        assert False
    except ValueError:
        pass
    try:
        qpoly(tw, [4])  # encoding out of range for F_4
        assert False
    except ValueError:
        pass


def test_frobenius_twist_example_over_f4():
    # L = x^q - x on F_4: kills 1, maps the generator w to w^2 + w = 1
    tw = gf.make_tower(2, 1, 2)
    L = qpoly(tw, [tw.top.neg(1), 1])
    assert lin_eval(L, 0) == 0
    assert lin_eval(L, 1) == 0
    assert lin_eval(L, 2) == 1
    assert lin_eval(L, 3) == 1


def test_lin_eval_is_ground_linear():
    rng = random.Random(5)
    for (p, e, n) in ((2, 1, 3), (2, 2, 2), (3, 1, 2)):
        tw = gf.make_tower(p, e, n)
        top = tw.top
        for _ in range(30):
            deg = rng.randrange(1, n + 1)
            L = qpoly(tw, [rng.randrange(top.size) for _ in range(deg)])
            x, y = rng.randrange(top.size), rng.randrange(top.size)
            assert lin_eval(L, top.add(x, y)) == top.add(lin_eval(L, x), lin_eval(L, y))
            for c in range(tw.q):
                assert lin_eval(L, top.mul(c, x)) == top.mul(c, lin_eval(L, x))


def test_matrix_columns_are_images_of_the_basis():
    rng = random.Random(9)
    tw = gf.make_tower(2, 1, 3)
    for _ in range(20):
        L = qpoly(tw, [rng.randrange(tw.top.size) for _ in range(rng.randrange(1, 4))])
        M = lin_to_matrix(L)
        assert M.shape == (3, 3)
        for j, b in enumerate(tw.basis()):
            img = lin_eval(L, b)
            assert list(M[:, j]) == tw.as_vector(img)


def test_matrix_of_composition_against_direct_evaluation():
    # the matrix applied to coordinates equals evaluating the polynomial
    rng = random.Random(13)
    tw = gf.make_tower(3, 1, 2)
    for _ in range(20):
        L = qpoly(tw, [rng.randrange(tw.top.size) for _ in range(2)])
        M = lin_to_matrix(L)
        for x in range(tw.top.size):
            vec = np.array(tw.as_vector(x), dtype=np.int64)
            out = gf.mat_vec(tw.ground, M, vec)
            assert tw.from_vector([int(v) for v in out]) == lin_eval(L, x)


def test_rank_lower_bound_from_q_degree():
    # a nonzero q-polynomial of q-degree s has at most q^s roots: rank >= n - s
    rng = random.Random(21)
    tw = gf.make_tower(2, 1, 3)
    for _ in range(200):
        coeffs = [rng.randrange(tw.top.size) for _ in range(rng.randrange(1, 4))]
        L = qpoly(tw, coeffs)
        if L.is_zero():
            continue
        assert lin_rank(L) >= tw.n - L.qdegree()


def test_kernel_elements_evaluate_to_zero():
    rng = random.Random(33)
    tw = gf.make_tower(2, 1, 3)
    for _ in range(50):
        L = qpoly(tw, [rng.randrange(tw.top.size) for _ in range(rng.randrange(1, 4))])
        roots = lin_kernel(L)
        assert len(roots) == tw.q ** (tw.n - lin_rank(L))
        for r in roots:
            assert lin_eval(L, r) == 0
        assert 0 in roots


def test_gabidulin_dimension_and_span():
    tw = gf.make_tower(2, 1, 3)
    for v in range(3):
        g = GabidulinCode(tw, v)
        assert g.dimension == 3 * (v + 1)
        assert g.claimed_distance() == 3 - v
        polys = g.generator_polys()
        assert len(polys) == g.dimension
        gens = np.stack([lin_to_matrix(L).reshape(-1) for L in polys])
        assert gf.rank(tw.ground, gens) == g.dimension
        seen = sum(1 for _ in g.enumerate())
        assert seen == g.card()


def test_gabidulin_min_rank_distance_is_mrd():
    for (n, v) in ((2, 1), (3, 1), (3, 2)):
        tw = gf.make_tower(2, 1, n)
        assert GabidulinCode(tw, v).min_rank_distance() == n - v


def test_gabidulin_rejects_bad_degree():
    tw = gf.make_tower(2, 1, 2)
    try:
        GabidulinCode(tw, 2)
        assert False
    except ValueError:
        pass

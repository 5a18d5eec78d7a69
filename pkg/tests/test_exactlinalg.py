import itertools
import random
from fractions import Fraction
from math import gcd

import pytest
from hypothesis import given, settings, strategies as st

from simtree.complexes import SimplicialComplex
from simtree.errors import InputError
from simtree.exactlinalg import (
    bareiss_det,
    betti,
    char_poly,
    char_poly_fraction,
    fraction_det,
    homology,
    integer_spectrum_check,
    is_apc,
    kernel_basis,
    mat_mul,
    nonzero_eigenvalue_product,
    rank,
    smith_normal_form,
)
from simtree.fixtures import (
    bipyramid,
    rp2_six_vertices,
    simplex_skeleton,
    two_disjoint_edges,
)

small_matrices = st.integers(1, 4).flatmap(
    lambda m: st.integers(1, 4).flatmap(
        lambda n: st.lists(st.lists(st.integers(-9, 9), min_size=n, max_size=n),
                           min_size=m, max_size=m)))


def test_snf_examples():
    assert smith_normal_form([[0, 0], [0, 0]]) == []
    assert smith_normal_form([[1, 0, 0], [0, 1, 0], [0, 0, 1]]) == [1, 1, 1]


def test_snf_rp2_torsion():
    bd2 = rp2_six_vertices().boundary_matrix(2).as_lists()
    facs = smith_normal_form(bd2)
    assert [d for d in facs if d > 1] == [2]
    assert homology(rp2_six_vertices(), 1).torsion_order == 2


@settings(max_examples=80, deadline=None)
@given(small_matrices)
def test_snf_divisibility_and_rank(M):
    facs = smith_normal_form(M)
    assert all(d > 0 for d in facs)
    assert all(b % a == 0 for a, b in zip(facs, facs[1:]))
    assert len(facs) == rank(M)


@settings(max_examples=60, deadline=None)
@given(small_matrices)
def test_snf_matches_gcd_of_minors(M):
    facs = smith_normal_form(M)
    m, n = len(M), len(M[0])
    prev = 1
    for k in range(1, min(m, n) + 1):
        g = 0
        for rows in itertools.combinations(range(m), k):
            for cols in itertools.combinations(range(n), k):
                sub = [[M[i][j] for j in cols] for i in rows]
                g = gcd(g, bareiss_det(sub))
        if g == 0:
            assert len(facs) < k
            break
        assert facs[k - 1] == g // prev
        prev = g


@settings(max_examples=60, deadline=None)
@given(st.integers(1, 4).flatmap(
    lambda n: st.lists(st.lists(st.integers(-9, 9), min_size=n, max_size=n),
                       min_size=n, max_size=n)))
def test_det_vs_snf_product(M):
    det = bareiss_det(M)
    if det != 0:
        prod = 1
        for d in smith_normal_form(M):
            prod *= d
        assert abs(det) == prod


def test_det_examples():
    assert bareiss_det([[2, -1], [-1, 2]]) == 3
    assert bareiss_det([]) == 1
    with pytest.raises(InputError):
        bareiss_det([[1, 2, 3], [4, 5, 6]])


def test_char_poly_k2_laplacian():
    L = [[1, -1], [-1, 1]]
    assert char_poly(L) == [0, -2, 1]  # y^2 - 2y


def test_char_poly_constant_term_is_det():
    rng = random.Random(7)
    for _ in range(25):
        n = rng.randint(1, 4)
        M = [[rng.randint(-6, 6) for _ in range(n)] for _ in range(n)]
        cp = char_poly(M)
        assert cp[0] == (-1) ** n * bareiss_det(M)
        assert cp[n] == 1


def test_char_poly_laplacian_signs_alternate():
    # chi(L; y) for PSD L has coefficients alternating in sign (or zero)
    from simtree.trees import up_down_laplacian

    for cx, k in ((bipyramid(), 2), (bipyramid(), 1), (rp2_six_vertices(), 2)):
        cp = char_poly(up_down_laplacian(cx, k))
        n = len(cp) - 1
        for j, c in enumerate(cp):
            if c:
                assert (c > 0) == ((n - j) % 2 == 0)


def test_char_poly_fraction_agrees():
    M = [[2, -1], [-1, 2]]
    assert char_poly_fraction(M) == [Fraction(c) for c in char_poly(M)]


def test_rank_of_bipyramid_boundary():
    B = bipyramid()
    assert rank(B.boundary_matrix(2).as_lists()) == 5
    assert betti(B, 2) == 2  # cross-check f_2 - rank = 2


def test_kernel_basis():
    M = [[1, 1, 0], [0, 0, 0]]
    kb = kernel_basis(M)
    assert len(kb) == 2
    for v in kb:
        assert all(sum(r * x for r, x in zip(row, v)) == 0 for row in M)


def test_homology_examples():
    hollow = SimplicialComplex.from_facets([[1, 2], [1, 3], [2, 3]])
    h = homology(hollow, 1)
    assert (h.betti, h.torsion_order) == (1, 1)
    assert h.group_order() is None
    rp2 = rp2_six_vertices()
    assert (homology(rp2, 1).betti, homology(rp2, 1).torsion_order) == (0, 2)
    B = bipyramid()
    assert (homology(B, 1).betti, homology(B, 1).torsion_order) == (0, 1)
    assert (homology(B, 2).betti, homology(B, 2).torsion_order) == (2, 1)
    with pytest.raises(InputError):
        homology(B, 5)


def test_homology_of_empty_complex():
    empty = SimplicialComplex.empty()
    assert homology(empty, -1).betti == 1


def test_is_apc_examples():
    assert is_apc(bipyramid())
    assert not is_apc(two_disjoint_edges())
    assert is_apc(rp2_six_vertices())


def test_euler_characteristic_identity():
    for cx in (bipyramid(), rp2_six_vertices(), simplex_skeleton(5, 2),
               two_disjoint_edges()):
        lhs = sum((-1) ** i * cx.f(i) for i in range(-1, cx.dim + 1))
        rhs = sum((-1) ** i * betti(cx, i) for i in range(-1, cx.dim + 1))
        assert lhs == rhs


def test_nonzero_eigenvalue_product():
    # L for K2 on C_0 has eigenvalues {0, 2}
    assert nonzero_eigenvalue_product([[1, -1], [-1, 1]]) == 2


def test_integer_spectrum_check():
    L = [[1, -1], [-1, 1]]
    assert integer_spectrum_check(L, [2, 0])
    assert not integer_spectrum_check(L, [1, 1])
    assert not integer_spectrum_check(L, [2])


def test_fraction_det():
    M = [[Fraction(1, 2), Fraction(1, 3)], [Fraction(1, 5), Fraction(1, 7)]]
    assert fraction_det(M) == Fraction(1, 14) - Fraction(1, 15)


def test_mat_mul():
    assert mat_mul([[1, 2]], [[3], [4]]) == [[11]]

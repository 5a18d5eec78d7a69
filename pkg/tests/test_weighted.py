import random
from fractions import Fraction

import pytest

from simtree.complexes import SimplicialComplex
from simtree.errors import InputError, ResourceLimitError
from simtree.exactlinalg import char_poly_fraction, homology
from simtree.fixtures import bipyramid, complete_graph, tetrahedron_boundary
from simtree.laurent import (
    LaurentPoly,
    X_coarse,
    X_facet,
    X_fine,
    canonical_string,
    monomial_for_face,
    poly_sum,
)
from simtree.trees import enumerate_ssts, find_sst, star_ridges, tau_via_reduced_laplacian
from simtree.weighted import (
    SymbolicMatrix,
    symbolic_det,
    weighted_boundary,
    weighted_oracle,
    weighted_tau,
    weighted_tau_at_points,
    weighted_up_down_laplacian,
)

SEED = 20080814


def coarse_vars(cx):
    return [("c", v) for v in cx.vertices]


def test_weighted_boundary_single_edge_coarse():
    edge = SimplicialComplex.from_facets([[1, 2]])
    wb = weighted_boundary(edge, 1, "coarse")
    col = [wb.entry(i, 0) for i in range(2)]
    x1x2 = monomial_for_face((1, 2), "coarse", squared=False)
    assert col == [-x1x2, x1x2]
    L = weighted_up_down_laplacian(edge, "coarse")
    assert L.entry(0, 0) == monomial_for_face((1, 2), "coarse", squared=True)


def test_weighted_boundary_fine_column():
    B = bipyramid()
    wb = weighted_boundary(B, 2, "fine")
    j = wb.cols.index((1, 2, 3))
    x123 = monomial_for_face((1, 2, 3), "fine", squared=False)
    for i, row_face in enumerate(wb.rows):
        e = wb.entry(i, j)
        if row_face in ((2, 3), (1, 2)):
            assert e == x123
        elif row_face == (1, 3):
            assert e == -x123
        else:
            assert e.is_zero()


def test_weighted_boundary_specializes_to_signed_boundary():
    B = bipyramid()
    wb = weighted_boundary(B, 2, "facet")
    ones = {("e", F): 1 for F in B.faces_of_dim(2)}
    numeric = [[e.evaluate(ones) if e else Fraction(0) for e in row] for row in wb.entries]
    assert numeric == [[Fraction(x) for x in row] for row in B.boundary_matrix(2).entries]


def test_weighted_boundary_scheme_restrictions():
    B = bipyramid()
    with pytest.raises(InputError):
        weighted_boundary(B, 1, "coarse")
    weighted_boundary(B, 1, "fine")  # allowed: raising covers lower dimensions


def test_weighted_boundary_fine_lower_dimension_raises_positions():
    # at k < d the fine column weight is the raised monomial
    from simtree.laurent import raise_op

    B = bipyramid()
    wb = weighted_boundary(B, 1, "fine")
    j = wb.cols.index((1, 2))
    lifted = raise_op(monomial_for_face((1, 2), "fine", squared=False), 1, B.dim)
    col = {wb.rows[i]: wb.entry(i, j) for i in range(wb.n_rows)}
    assert col[(2,)] == lifted and col[(1,)] == -lifted
    assert all(col[F].is_zero() for F in wb.rows if F not in ((1,), (2,)))


def test_laplacian_symmetric():
    for scheme in ("fine", "coarse", "facet"):
        assert weighted_up_down_laplacian(bipyramid(), scheme).is_symmetric()


def test_weighted_tau_bipyramid_coarse():
    got = weighted_tau(bipyramid(), "coarse")
    expected = LaurentPoly.one()
    for v, e in ((1, 3), (2, 3), (3, 3), (4, 2), (5, 2)):
        expected = expected * X_coarse(v, e)
    e3 = poly_sum(X_coarse(v) for v in (1, 2, 3))
    e5 = poly_sum(X_coarse(v) for v in (1, 2, 3, 4, 5))
    assert got == expected * e3 * e5
    assert got.all_ones() == 15


def test_weighted_tau_k3_facet_generic():
    got = weighted_tau(complete_graph(3), "facet")
    e = {F: X_facet(F) for F in complete_graph(3).faces_of_dim(1)}
    expected = (e[(1, 2)] * e[(1, 3)] + e[(1, 2)] * e[(2, 3)] + e[(1, 3)] * e[(2, 3)])
    assert got == expected


def test_weighted_tau_cayley_prufer():
    for n in (3, 4, 5):
        got = weighted_tau(complete_graph(n), "coarse")
        prod = LaurentPoly.one()
        for v in range(1, n + 1):
            prod = prod * X_coarse(v)
        s = poly_sum(X_coarse(v) for v in range(1, n + 1))
        assert got == prod * s ** (n - 2)


def test_weighted_oracle_matches_tau():
    B = bipyramid()
    for scheme in ("fine", "coarse", "facet"):
        assert weighted_oracle(B, scheme) == weighted_tau(B, scheme)


def test_weighted_oracle_triangle_fine():
    tri = SimplicialComplex.from_facets([[1, 2, 3]])
    assert weighted_oracle(tri, "fine") == X_fine(1, 1) * X_fine(2, 2) * X_fine(3, 3)


def test_weighted_oracle_tetrahedron_facet():
    T = tetrahedron_boundary()
    facets = T.faces_of_dim(2)
    terms = []
    for drop in facets:
        mono = LaurentPoly.one()
        for F in facets:
            if F != drop:
                mono = mono * X_facet(F)
        terms.append(mono)
    assert weighted_oracle(T, "facet") == poly_sum(terms)


def test_symbolic_det_examples():
    diag = SymbolicMatrix(rows=(1, 2), cols=(1, 2), entries=(
        (X_coarse(1), LaurentPoly.zero()), (LaurentPoly.zero(), X_coarse(2))))
    assert symbolic_det(diag) == X_coarse(1) * X_coarse(2)
    repeated = SymbolicMatrix(rows=(1, 2), cols=(1, 2), entries=(
        (X_coarse(1), X_coarse(2)), (X_coarse(1), X_coarse(2))))
    assert symbolic_det(repeated).is_zero()
    big = SymbolicMatrix(rows=tuple(range(13)), cols=tuple(range(13)),
                         entries=tuple(tuple(LaurentPoly.one() for _ in range(13))
                                       for _ in range(13)))
    with pytest.raises(ResourceLimitError):
        symbolic_det(big)


def test_weighted_tau_u_independence():
    B = bipyramid()
    trees = [star_ridges(B, 1, 1), find_sst(B, 1),
             ((1, 2), (2, 3), (3, 4), (3, 5)), ((1, 5), (2, 5), (3, 5), (3, 4))]
    polys = {weighted_tau(B, "coarse", U) for U in trees}
    assert len(polys) == 1


def test_specialization_chain():
    B = bipyramid()
    fine = weighted_tau(B, "fine")
    assert fine.coarse_collapse() == weighted_tau(B, "coarse")
    assert fine.all_ones() == tau_via_reduced_laplacian(B, 2) == 15


def test_monomial_degrees():
    B = bipyramid()
    d = B.dim
    n_facets = B.f(d) - 2  # five facets per tree
    for key in weighted_tau(B, "coarse").terms:
        assert sum(e for _, e in key) // 2 == (d + 1) * n_facets
    for key in weighted_tau(B, "facet").terms:
        assert sum(e for _, e in key) // 2 == n_facets


def _product_of_nonzero_eigenvalues(M):
    cp = char_poly_fraction(M)
    j = next(i for i, c in enumerate(cp) if c != 0)
    r = len(M) - j
    return cp[j] * (-1) ** r


def test_weighted_smtt_eigenvalue_form():
    # pi-hat_d = tau-hat_d * tau_{d-1} / |H~_{d-2}|^2 at random substitutions
    rng = random.Random(SEED)
    for cx in (bipyramid(), tetrahedron_boundary()):
        d = cx.dim
        tau_hat = weighted_tau(cx, "coarse")
        tau_below = enumerate_ssts(cx, d - 1, include_trees=False).tau
        h = homology(cx, d - 2).group_order()
        L = weighted_up_down_laplacian(cx, "coarse")
        for _ in range(5):
            assignment = {("c", v): rng.randint(1, 10_000) for v in cx.vertices}
            pi_hat = _product_of_nonzero_eigenvalues(L.substitute(assignment))
            assert pi_hat == Fraction(tau_hat.evaluate(assignment) * tau_below, h * h)


def test_weighted_tau_at_points():
    B = bipyramid()
    rng = random.Random(SEED)
    assignments = [{("c", v): rng.randint(1, 10_000) for v in B.vertices}
                   for _ in range(3)]
    values = weighted_tau_at_points(B, "coarse", assignments)
    tau = weighted_tau(B, "coarse")
    assert values == [tau.evaluate(a) for a in assignments]

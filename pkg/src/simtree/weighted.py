"""Weighted simplicial matrix-tree machinery.

Three weighting schemes attach a monomial to each top-dimensional facet F:

  facet   an independent indeterminate X{F} per facet;
  coarse  X_F = prod of the per-vertex variables X[v], v in F;
  fine    X_F = prod over positions m of X[m, F_m], with the raising operator
          shifting positions for lower-dimensional boundary maps.

The weighted boundary scales each column of the signed boundary matrix by the
unsquared facet weight x_F, so the up-down Laplacian carries the squared
weights X_F that appear in every enumerator.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .complexes import SimplicialComplex
from .errors import DomainError, InputError, ResourceLimitError
from .exactlinalg import fraction_det, homology, is_apc
from .laurent import LaurentPoly, monomial_for_face, poly_sum, raise_op, x_facet
from .trees import (
    NOT_APC_MESSAGE,
    default_ridge_tree,
    enumerate_ssts,
    is_sst,
    tau_via_reduced_laplacian,
)

SCHEMES = ("fine", "coarse", "facet")


@dataclass(frozen=True)
class SymbolicMatrix:
    """A matrix of LaurentPoly entries with face-labelled rows and columns."""

    rows: tuple
    cols: tuple
    entries: tuple  # row-major tuple of tuples of LaurentPoly

    @property
    def n_rows(self):
        return len(self.rows)

    @property
    def n_cols(self):
        return len(self.cols)

    def entry(self, i, j) -> LaurentPoly:
        return self.entries[i][j]

    def transpose(self) -> "SymbolicMatrix":
        return SymbolicMatrix(rows=self.cols, cols=self.rows,
                              entries=tuple(zip(*self.entries)))

    def matmul(self, other: "SymbolicMatrix") -> "SymbolicMatrix":
        assert self.cols == other.rows
        k = len(self.cols)
        out = []
        for i in range(self.n_rows):
            row = []
            for j in range(other.n_cols):
                acc = LaurentPoly.zero()
                for t in range(k):
                    a = self.entries[i][t]
                    b = other.entries[t][j]
                    if a and b:
                        acc = acc + a * b
                row.append(acc)
            out.append(tuple(row))
        return SymbolicMatrix(rows=self.rows, cols=other.cols, entries=tuple(out))

    def delete_labels(self, labels) -> "SymbolicMatrix":
        drop = {tuple(F) for F in labels}
        ri = [i for i, F in enumerate(self.rows) if F not in drop]
        ci = [j for j, F in enumerate(self.cols) if F not in drop]
        return SymbolicMatrix(
            rows=tuple(self.rows[i] for i in ri),
            cols=tuple(self.cols[j] for j in ci),
            entries=tuple(tuple(self.entries[i][j] for j in ci) for i in ri))

    def is_symmetric(self) -> bool:
        return self.rows == self.cols and all(
            self.entries[i][j] == self.entries[j][i]
            for i in range(self.n_rows) for j in range(i))

    def substitute(self, assignment) -> list:
        """Numeric matrix of Fractions at an exact-rational assignment."""
        return [[e.evaluate(assignment) if e else Fraction(0) for e in row]
                for row in self.entries]

    def scale_row_col(self, row_divisors, col_divisors) -> "SymbolicMatrix":
        """Divide row i by row_divisors[i] and column j by col_divisors[j] (monomials)."""
        out = []
        for i in range(self.n_rows):
            row = []
            for j in range(self.n_cols):
                e = self.entries[i][j]
                if e:
                    e = e.div_exact(row_divisors[i]).div_exact(col_divisors[j])
                row.append(e)
            out.append(tuple(row))
        return SymbolicMatrix(rows=self.rows, cols=self.cols, entries=tuple(out))


def zero_symbolic(rows, cols) -> SymbolicMatrix:
    z = LaurentPoly.zero()
    return SymbolicMatrix(rows=tuple(rows), cols=tuple(cols),
                          entries=tuple(tuple(z for _ in cols) for _ in rows))


def identity_symbolic(labels, value: LaurentPoly | None = None) -> SymbolicMatrix:
    one = value if value is not None else LaurentPoly.one()
    z = LaurentPoly.zero()
    labels = tuple(labels)
    return SymbolicMatrix(rows=labels, cols=labels, entries=tuple(
        tuple(one if i == j else z for j in range(len(labels))) for i in range(len(labels))))


def sym_add(A: SymbolicMatrix, B: SymbolicMatrix) -> SymbolicMatrix:
    assert A.rows == B.rows and A.cols == B.cols
    return SymbolicMatrix(rows=A.rows, cols=A.cols, entries=tuple(
        tuple(a + b for a, b in zip(ra, rb)) for ra, rb in zip(A.entries, B.entries)))


def facet_weight(cx: SimplicialComplex, F, scheme: str, squared: bool = True,
                 raise_by: int = 0) -> LaurentPoly:
    """The monomial attached to facet F under the given scheme (x_F or X_F)."""
    F = tuple(F)
    if scheme == "facet":
        return x_facet(F, 2 if squared else 1)
    if scheme == "coarse":
        return monomial_for_face(F, "coarse", squared)
    if scheme == "fine":
        mono = monomial_for_face(F, "fine", squared)
        return raise_op(mono, raise_by, cx.dim) if raise_by else mono
    raise InputError(f"unknown weighting scheme {scheme!r}")


def weighted_boundary(cx: SimplicialComplex, k: int, scheme: str) -> SymbolicMatrix:
    """Column F of bd_k scaled by x_F (fine weighting raises positions by d-k)."""
    if scheme not in SCHEMES:
        raise InputError(f"unknown weighting scheme {scheme!r}")
    d = cx.dim
    if scheme != "fine" and k != d:
        raise InputError(f"{scheme} weighting is defined at the top dimension only")
    bd = cx.boundary_matrix(k)
    weights = [facet_weight(cx, F, scheme, squared=False, raise_by=d - k) for F in bd.cols]
    entries = []
    for i in range(bd.n_rows):
        row = []
        for j in range(bd.n_cols):
            s = bd.entries[i][j]
            row.append(weights[j] * s if s else LaurentPoly.zero())
        entries.append(tuple(row))
    return SymbolicMatrix(rows=bd.rows, cols=bd.cols, entries=tuple(entries))


def weighted_up_down_laplacian(cx: SimplicialComplex, scheme: str) -> SymbolicMatrix:
    """L-hat = bd-hat_d bd-hat_d^T on C_{d-1}; entries carry the squared weights."""
    B = weighted_boundary(cx, cx.dim, scheme)
    return B.matmul(B.transpose())


def symbolic_det(M: SymbolicMatrix, cap: int = 12) -> LaurentPoly:
    """Exact determinant by column expansion with minor memoization.

    Minors are keyed by the bitmask of available rows (the column index is the
    popcount), so the cost is O(2^n * n) polynomial operations.
    """
    n = M.n_rows
    if n != M.n_cols:
        raise InputError("determinant requires a square matrix")
    if n > cap:
        raise ResourceLimitError(
            f"symbolic determinant of size {n} exceeds the cap {cap}; "
            "use random-evaluation mode instead")
    entries = M.entries
    full = (1 << n) - 1
    memo = {}

    def minor(mask, j):
        if j == n:
            return LaurentPoly.one()
        cached = memo.get(mask)
        if cached is not None:
            return cached
        acc = LaurentPoly.zero()
        sign = 1
        i = 0
        rest = mask
        while rest:
            low = rest & (-rest)
            r = low.bit_length() - 1
            e = entries[r][j]
            if e:
                term = e * minor(mask ^ low, j + 1)
                acc = acc + (term if sign > 0 else -term)
            sign = -sign
            rest ^= low
            i += 1
        memo[mask] = acc
        return acc

    return minor(full, 0)


def _torsion_correction(amb: SimplicialComplex, d: int, U) -> Fraction:
    lower = [F for F in amb.all_faces() if len(F) - 1 <= d - 2]
    amb_u = SimplicialComplex(list(U) + lower)
    t_amb = homology(amb, d - 2).group_order()
    t_u = homology(amb_u, d - 2).group_order()
    assert t_amb is not None and t_u is not None
    return Fraction(t_amb * t_amb, t_u * t_u)


def reduced_weighted_laplacian(cx: SimplicialComplex, scheme: str,
                               ridge_tree=None) -> tuple:
    """(L-hat_U, U): the weighted Laplacian with a validated (d-1)-SST deleted."""
    d = cx.dim
    if not is_apc(cx):
        raise DomainError(NOT_APC_MESSAGE)
    U = tuple(tuple(F) for F in ridge_tree) if ridge_tree is not None \
        else default_ridge_tree(cx, d)
    if not is_sst(cx, d - 1, U).is_tree:
        raise InputError("the ridge set is not a (d-1)-SST")
    L = weighted_up_down_laplacian(cx, scheme)
    return L.delete_labels(U), U


def weighted_tau(cx: SimplicialComplex, scheme: str, ridge_tree=None,
                 det_cap: int = 12) -> LaurentPoly:
    """The weighted spanning-tree enumerator tau-hat_d as an exact polynomial."""
    d = cx.dim
    LU, U = reduced_weighted_laplacian(cx, scheme, ridge_tree)
    det = symbolic_det(LU, cap=det_cap)
    corr = _torsion_correction(cx, d, U)
    result = det * corr
    assert result.has_nonnegative_integer_coeffs(), \
        "weighted enumerator must have nonnegative integer coefficients"
    assert result.all_ones() == tau_via_reduced_laplacian(cx, d, U)
    return result


def weighted_tau_at_points(cx: SimplicialComplex, scheme: str, assignments,
                           ridge_tree=None) -> list:
    """Evaluation mode for matrices above the symbolic cap: the exact value of
    tau-hat at each assignment, via numeric determinants."""
    d = cx.dim
    LU, U = reduced_weighted_laplacian(cx, scheme, ridge_tree)
    corr = _torsion_correction(cx, d, U)
    return [fraction_det(LU.substitute(a)) * corr for a in assignments]


def weighted_oracle(cx: SimplicialComplex, scheme: str,
                    cap: int | None = None) -> LaurentPoly:
    """Direct sum over enumerated SSTs of torsion^2 times the tree monomial."""
    d = cx.dim
    kwargs = {"cap": cap} if cap is not None else {}
    count = enumerate_ssts(cx, d, **kwargs)
    weights = {F: facet_weight(cx, F, scheme, squared=True) for F in cx.faces_of_dim(d)}

    def tree_monomials():
        for facets, torsion in count.per_tree:
            mono = LaurentPoly.constant(torsion * torsion)
            for F in facets:
                mono = mono * weights[F]
            yield mono

    return poly_sum(tree_monomials())

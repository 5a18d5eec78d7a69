"""Arbitrary-precision integer matrix kernels.

Matrices are plain lists of lists of Python ints (or Fractions where stated);
everything is exact. Algorithms: fraction-free Bareiss elimination for
determinants and ranks, elimination-with-minimal-pivot Smith normal form, and
Faddeev-LeVerrier for characteristic polynomials with integrality asserts.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd

from .complexes import SimplicialComplex
from .errors import ExactnessError, InputError


def identity_matrix(n):
    return [[1 if i == j else 0 for j in range(n)] for i in range(n)]


def mat_mul(A, B):
    if not A or not B:
        return [[] for _ in A]
    Bt = list(zip(*B))
    return [[sum(a * b for a, b in zip(row, col)) for col in Bt] for row in A]


def transpose(A):
    return [list(col) for col in zip(*A)]


def mat_sub_scaled_identity(A, lam):
    """A - lam*I."""
    n = len(A)
    out = [list(r) for r in A]
    for i in range(n):
        out[i][i] -= lam
    return out


def bareiss_det(M) -> int:
    """Exact determinant of a square integer matrix (empty matrix -> 1)."""
    n = len(M)
    if n == 0:
        return 1
    if any(len(r) != n for r in M):
        raise InputError("determinant requires a square matrix")
    A = [list(r) for r in M]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if A[k][k] == 0:
            for i in range(k + 1, n):
                if A[i][k] != 0:
                    A[k], A[i] = A[i], A[k]
                    sign = -sign
                    break
            else:
                return 0
        pkk = A[k][k]
        for i in range(k + 1, n):
            Ai, Ak = A[i], A[k]
            aik = Ai[k]
            for j in range(k + 1, n):
                Ai[j] = (pkk * Ai[j] - aik * Ak[j]) // prev
            Ai[k] = 0
        prev = pkk
    return sign * A[n - 1][n - 1]


def fraction_det(M) -> Fraction:
    """Determinant over Q by clearing row denominators, then Bareiss."""
    n = len(M)
    if n == 0:
        return Fraction(1)
    scale = Fraction(1)
    rows = []
    for r in M:
        fr = [Fraction(x) for x in r]
        lcm = 1
        for x in fr:
            lcm = lcm * x.denominator // gcd(lcm, x.denominator)
        scale *= lcm
        rows.append([int(x * lcm) for x in fr])
    return Fraction(bareiss_det(rows), 1) / scale


def rank(M) -> int:
    """Rank over Q via fraction-free elimination."""
    if not M or not M[0]:
        return 0
    A = [list(r) for r in M]
    m, n = len(A), len(A[0])
    r = 0
    for c in range(n):
        piv = None
        for i in range(r, m):
            if A[i][c] != 0:
                piv = i
                break
        if piv is None:
            continue
        A[r], A[piv] = A[piv], A[r]
        prc = A[r][c]
        for i in range(r + 1, m):
            aic = A[i][c]
            if aic == 0:
                continue
            Ai, Ar = A[i], A[r]
            for j in range(c, n):
                Ai[j] = prc * Ai[j] - aic * Ar[j]
            g = 0
            for x in Ai:
                g = gcd(g, x)
                if g == 1:
                    break
            if g > 1:
                A[i] = [x // g for x in Ai]
        r += 1
        if r == m:
            break
    return r


def kernel_basis(M, n_cols=None):
    """Primitive integer basis vectors v with M @ v = 0 (column kernel)."""
    m = len(M)
    n = len(M[0]) if M and M[0] else (n_cols if n_cols is not None else 0)
    if n == 0:
        return []
    if m == 0:
        return [[1 if j == i else 0 for j in range(n)] for i in range(n)]
    A = [[Fraction(x) for x in row] for row in M]
    pivots = []
    r = 0
    for c in range(n):
        piv = None
        for i in range(r, m):
            if A[i][c] != 0:
                piv = i
                break
        if piv is None:
            continue
        A[r], A[piv] = A[piv], A[r]
        pr = A[r]
        inv = 1 / pr[c]
        A[r] = pr = [x * inv for x in pr]
        for i in range(m):
            if i != r and A[i][c] != 0:
                f = A[i][c]
                A[i] = [x - f * y for x, y in zip(A[i], pr)]
        pivots.append(c)
        r += 1
        if r == m:
            break
    pivot_set = set(pivots)
    basis = []
    for free in range(n):
        if free in pivot_set:
            continue
        v = [Fraction(0)] * n
        v[free] = Fraction(1)
        for row_i, c in enumerate(pivots):
            v[c] = -A[row_i][free]
        lcm = 1
        for x in v:
            lcm = lcm * x.denominator // gcd(lcm, x.denominator)
        iv = [int(x * lcm) for x in v]
        g = 0
        for x in iv:
            g = gcd(g, x)
        if g > 1:
            iv = [x // g for x in iv]
        basis.append(iv)
    return basis


def smith_normal_form(M) -> list:
    """Invariant factors d1 | d2 | ... | dr of an integer matrix, all positive."""
    if not M or not M[0]:
        return []
    A = [list(r) for r in M]
    m, n = len(A), len(A[0])
    factors = []
    t = 0
    while True:
        # locate a nonzero entry of minimal absolute value in A[t:, t:]
        best = None
        for i in range(t, m):
            Ai = A[i]
            for j in range(t, n):
                x = Ai[j]
                if x != 0 and (best is None or abs(x) < abs(A[best[0]][best[1]])):
                    best = (i, j)
                    if abs(x) == 1:
                        break
            if best is not None and abs(A[best[0]][best[1]]) == 1:
                break
        if best is None:
            break
        bi, bj = best
        A[t], A[bi] = A[bi], A[t]
        if bj != t:
            for row in A:
                row[t], row[bj] = row[bj], row[t]
        while True:
            # clear column t by row operations, re-pivoting on remainders
            repeat = False
            for i in range(t + 1, m):
                if A[i][t] != 0:
                    q = A[i][t] // A[t][t]
                    A[i] = [x - q * y for x, y in zip(A[i], A[t])]
                    if A[i][t] != 0:
                        A[t], A[i] = A[i], A[t]
                        repeat = True
            if repeat:
                continue
            # clear row t by column operations
            repeat = False
            for j in range(t + 1, n):
                if A[t][j] != 0:
                    q = A[t][j] // A[t][t]
                    for row in A:
                        row[j] -= q * row[t]
                    if A[t][j] != 0:
                        for row in A:
                            row[t], row[j] = row[j], row[t]
                        repeat = True
                        break
            if repeat:
                continue
            # enforce divisibility of the remaining block by the pivot
            piv = A[t][t]
            culprit = None
            for i in range(t + 1, m):
                for j in range(t + 1, n):
                    if A[i][j] % piv != 0:
                        culprit = i
                        break
                if culprit is not None:
                    break
            if culprit is None:
                break
            A[t] = [x + y for x, y in zip(A[t], A[culprit])]
        factors.append(abs(A[t][t]))
        t += 1
        if t == m or t == n:
            break
    for a, b in zip(factors, factors[1:]):
        assert b % a == 0, "SNF divisibility broken"
    return factors


def char_poly(M) -> list:
    """Coefficients [c_0, ..., c_n] of det(yI - M), ascending, exact integers."""
    n = len(M)
    coeffs = [0] * (n + 1)
    coeffs[n] = 1
    B = identity_matrix(n)
    for k in range(1, n + 1):
        B = mat_mul(M, B)
        tr = sum(B[i][i] for i in range(n))
        if tr % k != 0:
            raise ExactnessError("Faddeev-LeVerrier trace not divisible")
        c = -(tr // k)
        coeffs[n - k] = c
        for i in range(n):
            B[i][i] += c
    return coeffs


def char_poly_fraction(M) -> list:
    """Faddeev-LeVerrier over exact rationals; returns ascending Fractions."""
    n = len(M)
    coeffs = [Fraction(0)] * (n + 1)
    coeffs[n] = Fraction(1)
    A = [[Fraction(x) for x in row] for row in M]
    B = [[Fraction(1) if i == j else Fraction(0) for j in range(n)] for i in range(n)]
    for k in range(1, n + 1):
        B = mat_mul(A, B)
        tr = sum(B[i][i] for i in range(n))
        c = -tr / k
        coeffs[n - k] = c
        for i in range(n):
            B[i][i] += c
    return coeffs


def nonzero_eigenvalue_product(M) -> int:
    """|c_{n-r}| for chi(M;y), r = rank(M): product of the nonzero eigenvalues."""
    n = len(M)
    r = rank(M)
    c = char_poly(M)[n - r]
    assert c != 0, "rank disagrees with characteristic polynomial"
    return abs(c)


def integer_spectrum_check(M, expected) -> bool:
    """Does the symmetric integer matrix M have exactly the expected eigenvalue multiset?

    `expected` is a multiset (list) of integers with len == n. Verified via
    multiplicity(lam) = n - rank(M - lam I), valid because M is diagonalizable.
    """
    n = len(M)
    if len(expected) != n:
        return False
    counts = {}
    for lam in expected:
        counts[lam] = counts.get(lam, 0) + 1
    total = 0
    for lam, want in counts.items():
        mult = n - rank(mat_sub_scaled_identity(M, lam))
        if mult != want:
            return False
        total += mult
    return total == n


# -- homology ------------------------------------------------------------


@dataclass(frozen=True)
class HomologySummary:
    """Reduced homology in one dimension: free rank plus torsion order."""

    dimension: int
    betti: int
    torsion_order: int

    @property
    def is_finite(self) -> bool:
        return self.betti == 0

    def group_order(self):
        """|H~| as an int, or None when the group is infinite."""
        return self.torsion_order if self.betti == 0 else None

    def to_json_dict(self) -> dict:
        if self.betti > 0:
            return {"betti": self.betti, "torsion_order": self.torsion_order,
                    "group_order": "infinite-group"}
        return {"betti": self.betti, "torsion_order": self.torsion_order}


def _boundary_rank(cx: SimplicialComplex, k: int) -> int:
    if k < 0 or k > cx.dim:
        return 0
    return rank(cx.boundary_matrix(k).as_lists())


def homology(cx: SimplicialComplex, i: int) -> HomologySummary:
    """Reduced integral homology H~_i as Betti number + torsion order."""
    if i < -1 or i > cx.dim:
        raise InputError(f"homology dimension {i} out of range [-1, {cx.dim}]")
    ker_dim = cx.f(i) - _boundary_rank(cx, i)
    if i + 1 > cx.dim:
        rank_next = 0
        torsion = 1
    else:
        bd = cx.boundary_matrix(i + 1).as_lists()
        rank_next = rank(bd)
        torsion = 1
        for d in smith_normal_form(bd):
            if d > 1:
                torsion *= d
    return HomologySummary(dimension=i, betti=ker_dim - rank_next, torsion_order=torsion)


def betti(cx: SimplicialComplex, i: int) -> int:
    """Rational reduced Betti number (no SNF needed)."""
    if i < -1 or i > cx.dim:
        return 0
    ker_dim = cx.f(i) - _boundary_rank(cx, i)
    return ker_dim - (_boundary_rank(cx, i + 1) if i + 1 <= cx.dim else 0)


def is_apc(cx: SimplicialComplex) -> bool:
    """Acyclic in positive codimension: betti_j = 0 for every j < dim."""
    return all(betti(cx, j) == 0 for j in range(-1, cx.dim))

"""Simplicial spanning trees: predicate, oracle enumeration, greedy construction,
and both parts of the simplicial matrix-tree theorem.

A k-SST of an ambient complex is a set T of k-faces such that the subcomplex
T together with the full (k-1)-skeleton has vanishing top homology, finite
codimension-1 homology, and the forced facet count; any two of the three
conditions imply the third ("two out of three"). All counts here are exact:
tau_k weights each tree by the squared order of its codimension-1 torsion.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import comb, gcd

from .complexes import SimplicialComplex
from .errors import DomainError, InputError, ResourceLimitError
from .exactlinalg import (
    HomologySummary,
    bareiss_det,
    betti,
    homology,
    is_apc,
    kernel_basis,
    nonzero_eigenvalue_product,
    rank,
    smith_normal_form,
)

DEFAULT_SUBSET_CAP = 2_000_000

NOT_APC_MESSAGE = "complex is not APC"


@dataclass(frozen=True)
class SstCertificate:
    facet_set: tuple
    homology_below: HomologySummary


@dataclass(frozen=True)
class SstResult:
    is_tree: bool
    conditions: tuple  # (acyclic, finite codim-1 homology, facet count)
    certificate: SstCertificate | None


@dataclass(frozen=True)
class TreeCount:
    tau: int
    per_tree: tuple | None  # ((facet_set, torsion_order), ...) or None


def up_down_laplacian(cx: SimplicialComplex, k: int):
    """L = bd_k bd_k^T acting on C_{k-1} (an f_{k-1} x f_{k-1} integer matrix)."""
    bd = cx.boundary_matrix(k).as_lists()
    n = len(bd)
    if n == 0:
        return []
    m = len(bd[0])
    return [[sum(bd[i][t] * bd[j][t] for t in range(m)) for j in range(n)] for i in range(n)]


def star_ridges(cx: SimplicialComplex, k: int, p: int) -> tuple:
    """All k-faces containing the vertex p (the cone part of the k-skeleton)."""
    return tuple(F for F in cx.faces_of_dim(k) if p in F)


def _submatrix_columns(bd_lists, col_indices):
    return [[row[j] for j in col_indices] for row in bd_lists]


def _tree_size(amb: SimplicialComplex, k: int) -> int:
    return amb.f(k) - betti(amb, k) + betti(amb, k - 1)


def is_sst(cx: SimplicialComplex, k: int, facet_set) -> SstResult:
    """Check the SST conditions for T = facet_set inside the k-skeleton of cx."""
    amb = cx.skeleton(k)
    kfaces = amb.faces_of_dim(k)
    index = {F: i for i, F in enumerate(kfaces)}
    T = sorted({tuple(F) for F in facet_set})
    for F in T:
        if F not in index:
            raise InputError(f"{F} is not a {k}-face of the complex")
    bd = amb.boundary_matrix(k).as_lists()
    sub = _submatrix_columns(bd, [index[F] for F in T])
    r = rank(sub)
    acyclic = (len(T) - r) == 0
    ker_below = amb.f(k - 1) - (rank(amb.boundary_matrix(k - 1).as_lists()) if k >= 1 else 0)
    finite_below = (ker_below - r) == 0
    count_ok = len(T) == _tree_size(amb, k)
    conds = (acyclic, finite_below, count_ok)
    assert sum(conds) != 2, "two-out-of-three violated"
    cert = None
    if all(conds):
        torsion = 1
        if k >= 2:
            for d in smith_normal_form(sub):
                if d > 1:
                    torsion *= d
        cert = SstCertificate(facet_set=tuple(T),
                              homology_below=HomologySummary(k - 1, 0, torsion))
    return SstResult(is_tree=all(conds), conditions=conds, certificate=cert)


def enumerate_ssts(cx: SimplicialComplex, k: int, cap: int = DEFAULT_SUBSET_CAP,
                   include_trees: bool = True) -> TreeCount:
    """Brute-force oracle: every k-SST with its torsion order, and tau_k.

    Trees are exactly the column bases of bd_k (the count condition pins the
    size to rank bd_k for an APC ambient skeleton), enumerated by DFS with an
    incremental fraction-free echelon.
    """
    amb = cx.skeleton(k)
    if not is_apc(amb):
        raise DomainError(NOT_APC_MESSAGE)
    kfaces = amb.faces_of_dim(k)
    n_cols = len(kfaces)
    size = _tree_size(amb, k)
    if comb(n_cols, size) > cap:
        raise ResourceLimitError(
            f"{comb(n_cols, size)} candidate subsets exceed the cap {cap}")
    bd = amb.boundary_matrix(k).as_lists()
    cols = [[row[j] for row in bd] for j in range(n_cols)]

    results = []

    def reduce_against(v, pivots):
        v = list(v)
        for vec, pos in pivots:
            if v[pos] != 0:
                a, b = vec[pos], v[pos]
                v = [a * x - b * y for x, y in zip(v, vec)]
                g = 0
                for x in v:
                    g = gcd(g, x)
                    if g == 1:
                        break
                if g > 1:
                    v = [x // g for x in v]
        for pos, x in enumerate(v):
            if x != 0:
                return v, pos
        return None, None

    def dfs(start, chosen, pivots):
        if len(chosen) == size:
            results.append(tuple(chosen))
            return
        need = size - len(chosen)
        for j in range(start, n_cols - need + 1):
            vec, pos = reduce_against(cols[j], pivots)
            if vec is None:
                continue
            chosen.append(j)
            pivots.append((vec, pos))
            dfs(j + 1, chosen, pivots)
            chosen.pop()
            pivots.pop()

    if size == 0:
        results.append(())
    else:
        dfs(0, [], [])

    results.sort(key=lambda idxs: tuple(reversed(idxs)))  # colex over index sets
    tau = 0
    per_tree = []
    for idxs in results:
        torsion = 1
        if k >= 2:
            sub = _submatrix_columns(bd, list(idxs))
            for d in smith_normal_form(sub):
                if d > 1:
                    torsion *= d
        tau += torsion * torsion
        if include_trees:
            per_tree.append((tuple(kfaces[j] for j in idxs), torsion))
    return TreeCount(tau=tau, per_tree=tuple(per_tree) if include_trees else None)


def find_sst(cx: SimplicialComplex, k: int) -> tuple:
    """Greedy k-SST: delete the lexicographically largest facet carrying a kernel
    coefficient until the top homology vanishes."""
    amb = cx.skeleton(k)
    if not is_apc(amb):
        raise DomainError(NOT_APC_MESSAGE)
    kfaces = list(amb.faces_of_dim(k))
    bd = amb.boundary_matrix(k).as_lists()
    chosen = list(range(len(kfaces)))
    while True:
        sub = _submatrix_columns(bd, chosen)
        kb = kernel_basis(sub, n_cols=len(chosen))
        if not kb:
            break
        eligible = {chosen[idx] for v in kb for idx, x in enumerate(v) if x != 0}
        victim = max(eligible, key=lambda j: kfaces[j])
        chosen.remove(victim)
    tree = tuple(kfaces[j] for j in chosen)
    assert is_sst(amb, k, tree).is_tree
    return tree


def default_ridge_tree(cx: SimplicialComplex, k: int) -> tuple:
    """A (k-1)-SST to reduce by: the star of the minimal vertex when the complex
    is shifted (the star is a cone, hence contractible), else the greedy tree."""
    from .complexes import is_shifted

    amb = cx.skeleton(k)
    if k == 0:
        return ()
    if is_shifted(amb):
        return star_ridges(amb, k - 1, amb.min_vertex)
    return find_sst(amb, k - 1)


def reduced_laplacian(cx: SimplicialComplex, k: int, ridge_tree) -> list:
    """Delete the rows/columns of L^ud_{k-1} indexed by the ridge tree."""
    amb = cx.skeleton(k)
    ridges = amb.faces_of_dim(k - 1)
    drop = {tuple(F) for F in ridge_tree}
    keep = [i for i, F in enumerate(ridges) if F not in drop]
    L = up_down_laplacian(amb, k)
    return [[L[i][j] for j in keep] for i in keep]


def tau_via_reduced_laplacian(cx: SimplicialComplex, k: int, ridge_tree=None) -> int:
    """tau_k by the reduced-Laplacian matrix-tree formula, with the torsion
    correction |H~_{k-2}(ambient)|^2 / |H~_{k-2}(ambient_U)|^2 always applied."""
    amb = cx.skeleton(k)
    if not is_apc(amb):
        raise DomainError(NOT_APC_MESSAGE)
    if k == 0:
        if ridge_tree:
            raise InputError("the ridge set must be empty when k = 0")
        return bareiss_det(up_down_laplacian(amb, 0))
    U = tuple(tuple(F) for F in ridge_tree) if ridge_tree is not None \
        else default_ridge_tree(amb, k)
    if not is_sst(amb, k - 1, U).is_tree:
        raise InputError("the ridge set is not a (k-1)-SST")
    ridges = amb.faces_of_dim(k - 1)
    assert len(ridges) - len(U) == amb.f(k) - betti(amb, k), "reduced Laplacian has the wrong size"
    det = bareiss_det(reduced_laplacian(amb, k, U))
    t_amb = homology(amb, k - 2).group_order() if k >= 1 else 1
    lower = [F for F in amb.all_faces() if len(F) - 1 <= k - 2]
    amb_u = SimplicialComplex(list(U) + lower)
    t_u = homology(amb_u, k - 2).group_order()
    assert t_amb is not None and t_u is not None
    num = t_amb * t_amb * det
    assert num % (t_u * t_u) == 0, "torsion correction is not integral"
    tau = num // (t_u * t_u)
    assert tau > 0
    return tau


def pi(cx: SimplicialComplex, k: int) -> int:
    """Product of the nonzero eigenvalues of L^ud_{k-1}, read off the exact
    characteristic polynomial."""
    if k < 0 or k > cx.dim:
        raise InputError(f"pi dimension {k} out of range [0, {cx.dim}]")
    return nonzero_eigenvalue_product(up_down_laplacian(cx, k))


def tau_via_alternating_product(cx: SimplicialComplex, k: int | None = None) -> int:
    """tau_k as the alternating product of the pi_j, j = 0..k.

    Requires H~_{j-2}(skeleton_j) = 0 at every level j used; the failing level
    is named in the error.
    """
    d = cx.dim if k is None else k
    if not is_apc(cx.skeleton(d)):
        raise DomainError(NOT_APC_MESSAGE)
    for j in range(1, d + 1):
        h = homology(cx.skeleton(j), j - 2)
        if h.betti != 0 or h.torsion_order != 1:
            raise DomainError(
                f"alternating product needs vanishing H~_{j - 2} at level {j}")
    num = 1
    den = 1
    for j in range(0, d + 1):
        if (d - j) % 2 == 0:
            num *= pi(cx, j)
        else:
            den *= pi(cx, j)
    assert num % den == 0, "alternating product is not integral"
    return num // den


def smtt_identity_report(cx: SimplicialComplex, k: int) -> dict:
    """Both sides of pi_k = tau_k tau_{k-1} / |H~_{k-2}|^2, recomputed exactly."""
    amb = cx.skeleton(k)
    if not is_apc(amb):
        raise DomainError(NOT_APC_MESSAGE)
    pk = pi(cx, k)
    tk = tau_via_reduced_laplacian(cx, k)
    tk1 = tau_via_reduced_laplacian(cx, k - 1) if k >= 1 else 1
    h = homology(amb, k - 2).group_order() if k >= 1 else 1
    assert h is not None
    return {
        "k": k,
        "pi": pk,
        "tau_k": tk,
        "tau_k_minus_1": tk1,
        "h_order": h,
        "identity_holds": pk * h * h == tk * tk1,
    }

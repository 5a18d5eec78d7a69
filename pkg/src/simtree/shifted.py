"""Shifted-complex spectral theory: critical pairs, z-polynomials, the spectrum
recurrence, spectral reconstruction, and the closed-form tree enumerators
(fine, coarse, threshold graphs, Ferrers graphs).

A critical pair of a shifted family is (A, B) with A a member, B a non-member,
and B covering A componentwise (one coordinate bumped by 1). Its long
signature (S, T) has S = the prefix strictly below the bumped coordinate and
T = the interval from the family's initial vertex up to the bumped value. The
z-polynomial z(S,T) = (1/raise(X_S)) * sum_{j in T} X_{S u j} attached to each
long signature is a Laplacian eigenvalue of the algebraic fine weighting.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .complexes import SimplicialComplex, _ideal_below, is_shifted, vertex_sign
from .errors import DomainError, InputError
from .exactlinalg import betti
from .laurent import LaurentPoly, X_fine, monomial_for_face, raise_op
from .weighted import SymbolicMatrix, zero_symbolic


def _check_shifted(cx: SimplicialComplex):
    if not cx.vertices:
        return
    lo, hi = cx.vertices[0], cx.vertices[-1]
    if cx.vertices != tuple(range(lo, hi + 1)):
        raise DomainError("complex is not shifted (vertex set is not an interval)")
    if not is_shifted(cx):
        raise DomainError("complex is not shifted")


# -- critical pairs -----------------------------------------------------------


@dataclass(frozen=True)
class CriticalPair:
    A: tuple
    B: tuple
    position: int  # index of the bumped coordinate
    initial_vertex: int

    @property
    def signature(self) -> tuple:
        return self.A[: self.position + 1]

    @property
    def long_signature(self) -> tuple:
        S = self.A[: self.position]
        T = tuple(range(self.initial_vertex, self.A[self.position] + 1))
        return (S, T)


def is_shifted_family(family, initial_vertex: int | None = None) -> bool:
    """Order-ideal test relative to the ground set [p, oo): closed under
    decrementing one coordinate while staying >= p."""
    fam = {tuple(F) for F in family}
    if not fam:
        return True
    p = initial_vertex if initial_vertex is not None else min(F[0] for F in fam)
    for A in fam:
        for idx, a in enumerate(A):
            b = a - 1
            if b >= p and (idx == 0 or b > A[idx - 1]):
                if A[:idx] + (b,) + A[idx + 1:] not in fam:
                    return False
    return True


def critical_pairs(family, initial_vertex: int | None = None) -> list:
    """All critical pairs of a shifted k-family, in lex order of members."""
    fam = sorted({tuple(F) for F in family})
    if not fam:
        return []
    p = initial_vertex if initial_vertex is not None else min(F[0] for F in fam)
    if not is_shifted_family(fam, p):
        raise DomainError("family is not shifted")
    fam_set = set(fam)
    pairs = []
    for A in fam:
        for idx in range(len(A)):
            b = A[idx] + 1
            if idx + 1 < len(A) and b == A[idx + 1]:
                continue  # not a k-set
            B = A[:idx] + (b,) + A[idx + 1:]
            if B not in fam_set:
                pairs.append(CriticalPair(A=A, B=B, position=idx, initial_vertex=p))
    return pairs


def lsg_direct(family, initial_vertex: int | None = None) -> list:
    """The multiset of long signatures, by direct critical-pair extraction."""
    return sorted(cp.long_signature for cp in critical_pairs(family, initial_vertex))


def lsg_recursive(cx: SimplicialComplex, i: int) -> list:
    """The same multiset via the deletion/link recurrence on the pure i-skeleton."""
    if i < 0 or not cx.vertices:
        return []
    pure = cx.pure_skeleton(i)
    if pure.dim < i:
        return []
    p = pure.min_vertex
    dele = pure.deletion(p)
    link = pure.link(p)
    out = [(S, (p,) + T) for S, T in lsg_recursive(dele, i)]
    out += [(tuple(sorted(S + (p,))), (p,) + T) for S, T in lsg_recursive(link, i - 1)]
    out += [((), (p,))] * betti(dele, i - 1)
    return sorted(out)


# -- z-polynomials and spectra -------------------------------------------------


@lru_cache(maxsize=None)
def _expand_z(S: tuple, T: tuple, shift: int, cutoff: int) -> LaurentPoly:
    if not T:
        return LaurentPoly.zero()
    num = LaurentPoly.zero()
    for j in T:
        num = num + monomial_for_face(tuple(sorted(S + (j,))), "fine", squared=True)
    den = raise_op(monomial_for_face(S, "fine", squared=True), 1, cutoff) \
        if S else LaurentPoly.one()
    z = num.div_exact(den)
    return raise_op(z, shift, cutoff) if shift else z


@dataclass(frozen=True, order=True)
class ZPolynomial:
    """z(S,T) carried by its defining pair, with a pending raise and its cutoff."""

    S: tuple
    T: tuple
    shift: int = 0
    cutoff: int = 10

    @property
    def poly(self) -> LaurentPoly:
        return _expand_z(self.S, self.T, self.shift, self.cutoff)

    @property
    def coarse_part(self) -> int:
        """Size t of the coarse specialization E_t = X_1 + ... + X_t."""
        return len(self.T)

    def evaluate(self, assignment) -> Fraction:
        return self.poly.evaluate(assignment)


def z_poly(S, T, d_cutoff: int) -> ZPolynomial:
    return ZPolynomial(S=tuple(sorted(S)), T=tuple(sorted(T)), shift=0, cutoff=d_cutoff)


@dataclass(frozen=True)
class SpectrumMultiset:
    """Nonzero eigenvalues (as z-polynomials) plus the multiplicity of zero."""

    zpolys: tuple
    zero_multiplicity: int

    def pairs(self) -> tuple:
        return tuple(sorted((z.S, z.T) for z in self.zpolys))

    def coarse_parts(self) -> tuple:
        return tuple(sorted((z.coarse_part for z in self.zpolys), reverse=True))

    def same_nonzero(self, other) -> bool:
        """Spectrum equality up to zero eigenvalues (zeros carry no tree data)."""
        return self.pairs() == other.pairs()

    def __len__(self):
        return len(self.zpolys) + self.zero_multiplicity


def shifted_spectrum(cx: SimplicialComplex, i: int) -> SpectrumMultiset:
    """Eigenvalues of the algebraic finely weighted up-down Laplacian on C_{i-1}.

    Computed by the deletion/link recurrence and independently by direct
    critical-pair extraction; both readings are asserted equal.
    """
    _check_shifted(cx)
    if i < 0 or i > cx.dim:
        raise InputError(f"spectrum dimension {i} out of range [0, {cx.dim}]")
    rec = lsg_recursive(cx, i)
    fam = cx.faces_of_dim(i)
    direct = lsg_direct(fam, cx.min_vertex) if fam else []
    assert rec == direct, "recurrence and critical-pair extraction disagree"
    d = cx.dim
    zs = tuple(ZPolynomial(S=S, T=T, shift=d - i, cutoff=d) for S, T in rec)
    zero_mult = cx.f(i - 1) - len(zs)
    assert zero_mult >= 0
    return SpectrumMultiset(zpolys=zs, zero_multiplicity=zero_mult)


def conjugate_partition(parts) -> tuple:
    parts = sorted((p for p in parts if p > 0), reverse=True)
    if not parts:
        return ()
    return tuple(sum(1 for p in parts if p >= t) for t in range(1, parts[0] + 1))


def unweighted_spectrum_duval_reiner(cx: SimplicialComplex) -> tuple:
    """Integer eigenvalues of L^ud_{d-1}: the conjugate of the facet-degree
    partition, padded with zeros to f_{d-1}."""
    _check_shifted(cx)
    degrees = cx.degree_sequence(cx.dim)
    conj = conjugate_partition(degrees)
    pad = cx.f(cx.dim - 1) - len(conj)
    assert pad >= 0
    return conj + (0,) * pad


def hear_shape(spectra: dict, validate: bool = True) -> SimplicialComplex:
    """Reconstruct a shifted complex from its spectra.

    `spectra` maps dimension i to an iterable of ZPolynomial (or a
    SpectrumMultiset). Each z(S,T) yields the short signature S u {max T};
    the complex is the closure of the componentwise order ideals below all
    short signatures. With validate=True the result's spectra are recomputed
    and must match the input multisets.
    """
    pairs_by_dim = {}
    for i, spec in spectra.items():
        zp = spec.zpolys if isinstance(spec, SpectrumMultiset) else tuple(spec)
        pairs_by_dim[i] = sorted((z.S, z.T) for z in zp)
    all_pairs = [pair for pairs in pairs_by_dim.values() for pair in pairs]
    if not all_pairs:
        return SimplicialComplex.empty()
    starts = {T[0] for _, T in all_pairs}
    if len(starts) != 1:
        raise DomainError("inconsistent spectra: mixed initial vertices")
    p = starts.pop()
    faces = set()
    for S, T in all_pairs:
        sig = tuple(sorted(S + (T[-1],)))
        for idx_face in _ideal_members(sig, p):
            faces.add(idx_face)
    cx = SimplicialComplex.closure(faces)
    if validate:
        for i, pairs in pairs_by_dim.items():
            got = sorted(lsg_direct(cx.faces_of_dim(i), cx.min_vertex)) \
                if cx.faces_of_dim(i) else []
            if got != pairs:
                raise DomainError(f"spectra do not arise from a shifted complex (dim {i})")
    return cx


def _ideal_members(sig: tuple, p: int):
    yield from _ideal_below(sig, p)


# -- closed-form enumerators ----------------------------------------------------


def shifted_tau_fine(cx: SimplicialComplex) -> LaurentPoly:
    """The finely weighted spanning-tree enumerator of a shifted complex:
    (prod over link ridges F of X_{F u p}) * prod over long signatures (S,T)
    of del_p's facets of (sum_{j in T u p} X_{S u j}) / X_{S u p}."""
    _check_shifted(cx)
    if not cx.vertices:
        raise InputError("enumerator needs at least one vertex")
    p = cx.min_vertex
    d = cx.dim
    dele = cx.deletion(p)
    link = cx.link(p)
    result = LaurentPoly.one()
    for F in link.faces_of_dim(d - 1):
        result = result * monomial_for_face(tuple(sorted(F + (p,))), "fine", squared=True)
    denom = LaurentPoly.one()
    fam = dele.faces_of_dim(d)
    for S, T in (lsg_direct(fam, dele.min_vertex) if fam else []):
        num = LaurentPoly.zero()
        for j in (p,) + T:
            num = num + monomial_for_face(tuple(sorted(S + (j,))), "fine", squared=True)
        result = result * num
        denom = denom * monomial_for_face(tuple(sorted(S + (p,))), "fine", squared=True)
    result = result.div_exact(denom)
    assert result.has_nonnegative_integer_coeffs() and _all_exps_nonneg(result), \
        "fine enumerator must be a genuine polynomial"
    return result


def _all_exps_nonneg(p: LaurentPoly) -> bool:
    return all(e >= 0 for key in p.terms for _, e in key)


def coarse_E(t: int) -> LaurentPoly:
    out = LaurentPoly.zero()
    for j in range(1, t + 1):
        out = out + monomial_for_face((j,), "coarse", squared=True)
    return out


def shifted_tau_coarse(cx: SimplicialComplex) -> LaurentPoly:
    """Coarse enumerator X^{deg(1*link)_d} * prod_t (E_t/X_1)^{mult of t in
    (deg(1*del)_{d+1})'}; requires initial vertex 1."""
    _check_shifted(cx)
    if not cx.vertices or cx.min_vertex != 1:
        raise DomainError("coarse enumerator requires initial vertex 1")
    d = cx.dim
    dele = cx.deletion(1)
    link = cx.link(1)
    cone_link_tops = [tuple(sorted(F + (1,))) for F in link.faces_of_dim(d - 1)]
    result = LaurentPoly.one()
    for F in cone_link_tops:
        result = result * monomial_for_face(F, "coarse", squared=True)
    cone_del_tops = [tuple(sorted(F + (1,))) for F in dele.faces_of_dim(d)]
    q = cx.vertices[-1]
    degs = [sum(1 for F in cone_del_tops if v in F) for v in range(1, q + 2)]
    x1 = monomial_for_face((1,), "coarse", squared=True)
    denom_exp = 0
    for t in range(1, q + 1):
        mult = degs[t - 1] - degs[t]
        assert mult >= 0, "facet degrees of a shifted family must be weakly decreasing"
        if mult:
            result = result * (coarse_E(t) ** mult)
            denom_exp += mult
    if denom_exp:
        result = result.div_exact(x1 ** denom_exp)
    fine = shifted_tau_fine(cx).coarse_collapse()
    assert result == fine, "coarse enumerator must match the collapsed fine enumerator"
    return result


# -- threshold graphs ------------------------------------------------------------


def edge_monomial(a: int, b: int) -> LaurentPoly:
    """X_{{a,b}} = X[1,min] * X[2,max] (a == b gives the multiset {a,a})."""
    return monomial_for_face(tuple(sorted((a, b))), "fine", squared=True)


def threshold_tau(cx: SimplicialComplex) -> LaurentPoly:
    """Weighted spanning-tree enumerator of a connected threshold graph:
    X_{{1,n}} * prod_{v=2}^{n-1} sum_{j=1}^{(deg)'_v} X_{{v,j}}."""
    _check_shifted(cx)
    if cx.dim != 1:
        raise DomainError("threshold graphs are 1-dimensional shifted complexes")
    if cx.min_vertex != 1:
        raise DomainError("threshold graph must have vertex set [1, n]")
    if betti(cx, 0) != 0:
        raise DomainError("threshold graph is not connected")
    n = cx.vertices[-1]
    conj = conjugate_partition(cx.degree_sequence(1))
    result = edge_monomial(1, n)
    for v in range(2, n):
        factor = LaurentPoly.zero()
        for j in range(1, conj[v - 1] + 1):
            factor = factor + edge_monomial(v, j)
        result = result * factor
    assert result == shifted_tau_fine(cx), \
        "threshold formula must match the general fine enumerator"
    return result


def threshold_graph_from_degrees(degrees) -> SimplicialComplex:
    """The threshold graph on [1, n] whose vertex v is adjacent to the first
    deg(v) vertices other than itself; validated against the requested degrees."""
    degrees = tuple(degrees)
    n = len(degrees)
    if n < 2 or any(d < 1 or d > n - 1 for d in degrees):
        raise InputError("degrees must be between 1 and n-1")
    edges = set()
    for j, dj in enumerate(degrees, start=1):
        others = [v for v in range(1, n + 1) if v != j][:dj]
        edges.update(tuple(sorted((j, v))) for v in others)
    cx = SimplicialComplex.from_facets(edges)
    if cx.degree_sequence(1) != degrees or not is_shifted(cx):
        raise InputError("not a threshold degree sequence")
    return cx


# -- Ferrers graphs ----------------------------------------------------------------


def _validate_partition(partition) -> tuple:
    lam = tuple(partition)
    if not lam or any(not isinstance(x, int) or x < 1 for x in lam) \
            or any(a < b for a, b in zip(lam, lam[1:])):
        raise InputError("partition must be a weakly decreasing list of positive integers")
    return lam


def ferrers_bipartite_complex(partition) -> SimplicialComplex:
    """The Ferrers graph of the partition as a 1-complex: x-side vertices
    1..m = lambda_1, y-side vertices m+1..m+l, edges {r, m+s} iff r <= lambda_s."""
    lam = _validate_partition(partition)
    m = lam[0]
    edges = [(r, m + s) for s, part in enumerate(lam, start=1) for r in range(1, part + 1)]
    return SimplicialComplex.from_facets(edges)


def ferrers_tau(partition) -> LaurentPoly:
    """Weighted spanning-tree enumerator of the Ferrers graph of the partition:
    (x_1..x_m)(y_1..y_l) * prod_{i=2}^m (y_1+..+y_{lambda'_i})
                         * prod_{j=2}^l (x_1+..+x_{lambda_j}),
    with x_r = X[1,r] and y_s = X[2,s]."""
    lam = _validate_partition(partition)
    m = lam[0]
    ell = len(lam)
    conj = conjugate_partition(lam)
    result = LaurentPoly.one()
    for r in range(1, m + 1):
        result = result * X_fine(1, r)
    for s in range(1, ell + 1):
        result = result * X_fine(2, s)
    for i in range(2, m + 1):
        factor = LaurentPoly.zero()
        for r in range(1, conj[i - 1] + 1):
            factor = factor + X_fine(2, r)
        result = result * factor
    for j in range(2, ell + 1):
        factor = LaurentPoly.zero()
        for r in range(1, lam[j - 1] + 1):
            factor = factor + X_fine(1, r)
        result = result * factor
    return result


def ferrers_threshold_graph(partition) -> SimplicialComplex:
    """The connected threshold graph whose clique-edge deletion is the Ferrers graph."""
    lam = _validate_partition(partition)
    m = lam[0]
    edges = [(a, b) for a in range(1, m + 1) for b in range(a + 1, m + 1)]
    edges += [(a, m + s) for s, part in enumerate(lam, start=1) for a in range(1, part + 1)]
    cx = SimplicialComplex.from_facets(edges)
    assert is_shifted(cx)
    return cx


def ferrers_via_threshold_zero_substitution(partition) -> LaurentPoly:
    """Cross-check route: take the threshold-graph enumerator in factored form,
    set every clique-edge indeterminate (both endpoints <= m) to zero, and
    rename X[1,a] -> x_a, X[2,b] -> y_{b-m}."""
    lam = _validate_partition(partition)
    m = lam[0]
    G = ferrers_threshold_graph(lam)
    n = G.vertices[-1]
    conj = conjugate_partition(G.degree_sequence(1))
    factors = [[(1, n)]]
    for v in range(2, n):
        factors.append([tuple(sorted((v, j))) for j in range(1, conj[v - 1] + 1)])
    result = LaurentPoly.one()
    for terms in factors:
        factor = LaurentPoly.zero()
        for a, b in terms:
            if b <= m:
                continue  # clique edge killed by the zero substitution
            assert a <= m < b
            factor = factor + X_fine(1, a) * X_fine(2, b - m)
        result = result * factor
    return result


# -- algebraic fine weighting ---------------------------------------------------


def algebraic_fine_boundary(cx: SimplicialComplex, i: int) -> SymbolicMatrix:
    """The chain-complex-forming boundary map: entry (F\\j, F) equals
    eps(j,F) * raise^{d-i}(x_F) / raise^{d-i+1}(x_{F\\j})."""
    d = cx.dim
    rows = cx.faces_of_dim(i - 1)
    cols = cx.faces_of_dim(i)
    if i > d or not cols:
        return zero_symbolic(rows, cols)
    row_index = {F: r for r, F in enumerate(rows)}
    z = LaurentPoly.zero()
    entries = [[z] * len(cols) for _ in rows]
    for j, F in enumerate(cols):
        num = raise_op(monomial_for_face(F, "fine", squared=False), d - i, d)
        for pos, v in enumerate(F):
            G = F[:pos] + F[pos + 1:]
            den = raise_op(monomial_for_face(G, "fine", squared=False), d - i + 1, d)
            val = num.div_exact(den)
            entries[row_index[G]][j] = val if pos % 2 == 0 else -val
    return SymbolicMatrix(rows=tuple(rows), cols=tuple(cols),
                          entries=tuple(tuple(r) for r in entries))


def algebraic_fine_laplacian(cx: SimplicialComplex, i: int) -> SymbolicMatrix:
    """LL^ud_i = bd_{i+1} bd*_{i+1} built from the boundary matrices."""
    B = algebraic_fine_boundary(cx, i + 1)
    return B.matmul(B.transpose())


def algebraic_fine_laplacian_entries(cx: SimplicialComplex, i: int) -> SymbolicMatrix:
    """LL^ud_i from the closed entry formulas (off-diagonal X_H over the raised
    x_F x_G, diagonal sum of X_{F u j} over raised X_F); much faster than the
    product for sweep checks."""
    d = cx.dim
    faces_i = cx.faces_of_dim(i)
    idx = {F: t for t, F in enumerate(faces_i)}
    n = len(faces_i)
    a = d - i - 1
    z = LaurentPoly.zero()
    entries = [[z] * n for _ in range(n)]
    for H in cx.faces_of_dim(i + 1):
        XH = raise_op(monomial_for_face(H, "fine", squared=True), a, d)
        raised_x = {}
        for pos in range(len(H)):
            F = H[:pos] + H[pos + 1:]
            raised_x[pos] = raise_op(monomial_for_face(F, "fine", squared=False), a + 1, d)
        for p1 in range(len(H)):
            F = H[:p1] + H[p1 + 1:]
            fi = idx[F]
            entries[fi][fi] = entries[fi][fi] + XH.div_exact(raised_x[p1] * raised_x[p1])
            for p2 in range(p1 + 1, len(H)):
                G = H[:p2] + H[p2 + 1:]
                gi = idx[G]
                sign = vertex_sign(H[p1], H) * vertex_sign(H[p2], H)
                val = XH.div_exact(raised_x[p1] * raised_x[p2]) * sign
                entries[fi][gi] = entries[fi][gi] + val
                entries[gi][fi] = entries[gi][fi] + val
    return SymbolicMatrix(rows=tuple(faces_i), cols=tuple(faces_i),
                          entries=tuple(tuple(r) for r in entries))

"""The acceptance suite: one callable per criterion, runnable from the CLI
(`sst verify`) and from pytest.

Every check is exact; random elements (substitution points, random complexes,
random facet subsets) come from a seeded PRNG whose seed is recorded in the
report detail. Substitution values are integers drawn from [1, 10^4].
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass
from fractions import Fraction
from math import comb

from .complexes import SimplicialComplex
from .corpus import (
    DEFAULT_SEED,
    componentwise_ideals,
    enumerate_shifted_complexes,
    find_coarse_hearing_witness,
    random_apc_2_complexes,
)
from .exactlinalg import (
    bareiss_det,
    betti,
    fraction_det,
    homology,
    integer_spectrum_check,
    rank,
    smith_normal_form,
)
from .fixtures import (
    bipyramid,
    bipyramid_subcomplex,
    complete_bipartite,
    complete_graph,
    rp2_six_vertices,
    simplex_skeleton,
)
from .laurent import LaurentPoly, X_coarse, monomial_for_face
from .shifted import (
    algebraic_fine_laplacian_entries,
    critical_pairs,
    ferrers_bipartite_complex,
    ferrers_tau,
    ferrers_via_threshold_zero_substitution,
    hear_shape,
    shifted_spectrum,
    shifted_tau_fine,
    threshold_tau,
    unweighted_spectrum_duval_reiner,
)
from .trees import (
    enumerate_ssts,
    find_sst,
    is_sst,
    pi,
    star_ridges,
    tau_via_alternating_product,
    tau_via_reduced_laplacian,
    up_down_laplacian,
)
from .weighted import weighted_oracle, weighted_tau


@dataclass(frozen=True)
class CheckResult:
    criterion: int
    name: str
    passed: bool
    detail: str

    def line(self) -> str:
        flag = "PASS" if self.passed else "FAIL"
        return f"[{flag}] criterion {self.criterion:2d} {self.name}: {self.detail}"


def _rng(seed, *tags) -> random.Random:
    return random.Random(":".join(str(t) for t in (seed,) + tags))


def _assignment(variables, rng) -> dict:
    return {v: rng.randint(1, 10_000) for v in variables}


def spectrum_theorem_holds(cx: SimplicialComplex, i: int, n_subs: int,
                           seed, tag) -> bool:
    """det(yI - LL^ud_{i-1}) == y^m * prod (y - raised z(S,T)) at seeded
    integer substitutions (both sides exact rationals)."""
    spec = shifted_spectrum(cx, i)
    L = algebraic_fine_laplacian_entries(cx, i - 1)
    variables = set()
    for row in L.entries:
        for e in row:
            variables.update(e.variables())
    zpolys = [z.poly for z in spec.zpolys]
    for zp in zpolys:
        variables.update(zp.variables())
    variables = sorted(variables)
    n = L.n_rows
    rng = _rng(seed, "spectrum", tag, i)
    for _ in range(n_subs):
        assignment = _assignment(variables, rng)
        y = Fraction(rng.randint(1, 10_000))
        M = L.substitute(assignment)
        shifted_M = [[(y if a == b else 0) - M[a][b] for b in range(n)] for a in range(n)]
        lhs = fraction_det(shifted_M)
        rhs = y ** spec.zero_multiplicity
        for zp in zpolys:
            rhs *= y - zp.evaluate(assignment)
        if lhs != rhs:
            return False
    return True


# -- criteria -------------------------------------------------------------------


def check_01_bipyramid_tau_ladder(seed=DEFAULT_SEED, **_) -> CheckResult:
    B = bipyramid()
    expected = (5, 75, 15)
    rows = []
    ok = True
    for k in range(3):
        oracle = enumerate_ssts(B, k).tau
        lap = tau_via_reduced_laplacian(B, k, star_ridges(B, k - 1, 1) if k else ())
        alt = tau_via_alternating_product(B, k)
        ok &= oracle == lap == alt == expected[k]
        rows.append(f"tau_{k}={oracle}/{lap}/{alt}")
    return CheckResult(1, "bipyramid tau ladder (oracle/reduced-Laplacian/alternating)",
                       ok, "; ".join(rows) + f" expected {expected}")


def check_02_bipyramid_pi_ladder(seed=DEFAULT_SEED, **_) -> CheckResult:
    B = bipyramid()
    got = tuple(pi(B, k) for k in range(3))
    return CheckResult(2, "bipyramid pi ladder via exact characteristic polynomials",
                       got == (5, 375, 1125), f"pi={got} expected (5, 375, 1125)")


def check_03_classical(seed=DEFAULT_SEED, **_) -> CheckResult:
    ok = True
    for n in range(3, 8):
        ok &= tau_via_reduced_laplacian(complete_graph(n), 1) == n ** (n - 2)
    for n in range(1, 5):
        for m in range(1, 5):
            got = tau_via_reduced_laplacian(complete_bipartite(n, m), 1)
            ok &= got == n ** (m - 1) * m ** (n - 1)
    return CheckResult(3, "Cayley and complete-bipartite counts",
                       ok, "K_n for n=3..7 and K_{n,m} for n,m<=4, exact")


def check_04_kalai(seed=DEFAULT_SEED, **_) -> CheckResult:
    ok = True
    cases = 0
    for n in range(2, 8):
        for d in range(0, min(3, n - 1) + 1):
            got = tau_via_reduced_laplacian(simplex_skeleton(n, d), d)
            ok &= got == n ** comb(n - 2, d)
            cases += 1
    return CheckResult(4, "Kalai simplex-skeleton formula n<=7, d<=3",
                       ok, f"{cases} (n,d) cases, exact")


def check_05_torsion_tree(seed=DEFAULT_SEED, **_) -> CheckResult:
    rp2 = rp2_six_vertices()
    count = enumerate_ssts(rp2, 2)
    h1 = homology(rp2, 1)
    lap = tau_via_reduced_laplacian(rp2, 2)
    ok = (len(count.per_tree) == 1 and count.per_tree[0][1] == 2
          and count.tau == 4 == lap and h1.betti == 0 and h1.torsion_order == 2)
    return CheckResult(5, "RP^2 torsion tree",
                       ok, f"one 2-SST with |H~_1|=2, tau_2={count.tau} (oracle) = {lap} (Laplacian)")


def _expected_bipyramid_coarse() -> LaurentPoly:
    out = LaurentPoly.one()
    for v, e in ((1, 3), (2, 3), (3, 3), (4, 2), (5, 2)):
        out = out * X_coarse(v, e)
    e3 = X_coarse(1) + X_coarse(2) + X_coarse(3)
    e5 = e3 + X_coarse(4) + X_coarse(5)
    return out * e3 * e5


def _expected_bipyramid_fine() -> LaurentPoly:
    def xf(face):
        return monomial_for_face(tuple(face), "fine", squared=True)

    pre = xf((1, 2, 3)) * xf((1, 2, 4)) * xf((1, 3, 4)) * xf((1, 2, 5)) * xf((1, 3, 5))
    f1 = (xf((1, 2)) + xf((2, 2)) + xf((2, 3))).div_exact(xf((1, 2)))
    f2 = (xf((1, 2, 3)) + xf((2, 2, 3)) + xf((2, 3, 3)) + xf((2, 3, 4))
          + xf((2, 3, 5))).div_exact(xf((1, 2, 3)))
    return pre * f1 * f2


def check_06_weighted_bipyramid(seed=DEFAULT_SEED, **_) -> CheckResult:
    B = bipyramid()
    coarse = weighted_tau(B, "coarse")
    fine = shifted_tau_fine(B)
    ok = (coarse == _expected_bipyramid_coarse()
          and fine == _expected_bipyramid_fine()
          and fine.coarse_collapse() == coarse
          and weighted_tau(B, "fine") == fine)
    return CheckResult(6, "weighted bipyramid enumerators (coarse, fine, collapse)",
                       ok, "coarse matches the displayed product; fine matches the "
                           "displayed factorization; collapse agrees")


_B_TABLE = {
    7: [((), (5,))],
    6: [((), (4, 5))],
    5: [((), (3, 4, 5))],
    4: [((), (3,)), ((3,), (3, 4, 5))],
    3: [((2,), (2, 3, 4, 5)), ((3,), (2, 3, 4, 5)), ((), (2, 3))],
    2: [((2, 3), (2, 3, 4, 5)), ((2,), (2, 3))],
    1: [((1, 2), (1, 2, 3, 4, 5)), ((1, 3), (1, 2, 3, 4, 5)), ((1,), (1, 2, 3)),
        ((2, 3), (1, 2, 3, 4, 5)), ((2,), (1, 2, 3))],
}

_B_PAIRS = {
    7: {((5,), (6,))},
    6: {((5,), (6,))},
    5: {((5,), (6,))},
    4: {((3, 5), (4, 5)), ((3, 5), (3, 6))},
    3: {((2, 5), (2, 6)), ((3, 5), (3, 6)), ((3, 5), (4, 5))},
    2: {((2, 3, 5), (2, 3, 6)), ((2, 3, 5), (2, 4, 5))},
    1: {((1, 2, 5), (1, 2, 6)), ((1, 3, 5), (1, 3, 6)), ((1, 3, 5), (1, 4, 5)),
        ((2, 3, 5), (2, 3, 6)), ((2, 3, 5), (2, 4, 5))},
}


def check_07_critical_pair_table(seed=DEFAULT_SEED, **_) -> CheckResult:
    ok = True
    for idx in range(1, 8):
        cx = bipyramid_subcomplex(idx)
        spec = shifted_spectrum(cx, cx.dim)
        ok &= list(spec.pairs()) == sorted(_B_TABLE[idx])
        cps = critical_pairs(cx.faces_of_dim(cx.dim), cx.min_vertex)
        ok &= {(cp.A, cp.B) for cp in cps} == _B_PAIRS[idx]
        ok &= sorted(cp.long_signature for cp in cps) == sorted(_B_TABLE[idx])
    return CheckResult(7, "B1..B7 critical pairs, signatures, eigenvalues",
                       ok, "all seven table rows match as multisets")


def check_08_spectrum_theorem(seed=DEFAULT_SEED, max_vertices=6, n_subs=20, **_) -> CheckResult:
    corpus = enumerate_shifted_complexes(max_vertices, 2)
    failures = 0
    checks = 0
    for idx, cx in enumerate(corpus):
        for i in range(0, cx.dim + 1):
            checks += 1
            if not spectrum_theorem_holds(cx, i, n_subs, seed, idx):
                failures += 1
    return CheckResult(8, "spectrum theorem: char poly vs product of z-eigenvalues",
                       failures == 0,
                       f"{checks} (complex, dim) pairs x {n_subs} substitutions over "
                       f"{len(corpus)} shifted complexes (<= {max_vertices} vertices), "
                       f"seed {seed}, {failures} failures")


def check_09_oracle_equivalence(seed=DEFAULT_SEED, oracle_count=100, **_) -> CheckResult:
    complexes = random_apc_2_complexes(oracle_count, seed)
    failures = 0
    for cx in complexes:
        oracle2 = enumerate_ssts(cx, 2, include_trees=False).tau
        lap2 = tau_via_reduced_laplacian(cx, 2)
        tau1 = enumerate_ssts(cx, 1, include_trees=False).tau
        h0 = homology(cx, 0).group_order()
        quotient = Fraction(pi(cx, 2) * h0 * h0, tau1)
        if not (oracle2 == lap2 and quotient == oracle2):
            failures += 1
    return CheckResult(9, "oracle = reduced Laplacian = eigenvalue quotient",
                       failures == 0,
                       f"{len(complexes)} seeded random APC 2-complexes "
                       f"(seed {seed}), {failures} failures")


def check_10_duval_reiner(seed=DEFAULT_SEED, max_vertices=6, **_) -> CheckResult:
    corpus = enumerate_shifted_complexes(max_vertices, 2)
    failures = 0
    for cx in corpus:
        expected = unweighted_spectrum_duval_reiner(cx)
        L = up_down_laplacian(cx, cx.dim)
        if not integer_spectrum_check(L, list(expected)):
            failures += 1
    return CheckResult(10, "Duval-Reiner: top spectrum = conjugate facet-degree partition",
                       failures == 0,
                       f"{len(corpus)} complexes, exact integer multisets, {failures} failures")


def check_11_hearing(seed=DEFAULT_SEED, max_vertices=6, witness_max=7,
                     witness_extended=9, **_) -> CheckResult:
    corpus = enumerate_shifted_complexes(max_vertices, 2)
    failures = 0
    for cx in corpus:
        spectra = {i: shifted_spectrum(cx, i) for i in range(0, cx.dim + 1)}
        if hear_shape(spectra) != cx:
            failures += 1
    witness = find_coarse_hearing_witness(witness_max, witness_extended)
    if witness["found"]:
        wdetail = (f"primary range <= {witness_max} exhausted; witness found on "
                   f"{witness['vertices']} vertices: facets differ in "
                   f"{sorted(set(witness['facets_a']) - set(witness['facets_b']))} vs "
                   f"{sorted(set(witness['facets_b']) - set(witness['facets_a']))}, "
                   f"equal coarse top spectra, different fine spectra, non-isomorphic")
    else:
        wdetail = (f"witness search exhausted up to {witness['searched_max_vertices']} vertices")
    return CheckResult(11, "hearing the shape: reconstruction round trip + coarse witness",
                       failures == 0,
                       f"{len(corpus)} round trips, {failures} failures; {wdetail}")


def _connected_threshold_graphs(max_vertices: int):
    for q in range(2, max_vertices + 1):
        for ideal in componentwise_ideals(q, 2):
            if (1, q) not in ideal:
                continue
            yield SimplicialComplex.from_facets(ideal)


def check_12_threshold_ferrers(seed=DEFAULT_SEED, threshold_max=7, **_) -> CheckResult:
    graphs = 0
    failures = 0
    for g in _connected_threshold_graphs(threshold_max):
        graphs += 1
        if threshold_tau(g) != weighted_oracle(g, "fine"):
            failures += 1
    partitions = [lam for parts in range(1, 5)
                  for lam in itertools.combinations_with_replacement(range(4, 0, -1), parts)
                  if all(a >= b for a, b in zip(lam, lam[1:]))]
    fcases = 0
    for lam in partitions:
        fcases += 1
        tau = ferrers_tau(lam)
        ok = tau == ferrers_via_threshold_zero_substitution(lam)
        ok &= tau.all_ones() == tau_via_reduced_laplacian(ferrers_bipartite_complex(lam), 1)
        if not ok:
            failures += 1
    for n in range(1, 5):
        for m in range(1, 5):
            if ferrers_tau((n,) * m).all_ones() != n ** (m - 1) * m ** (n - 1):
                failures += 1
    return CheckResult(12, "threshold and Ferrers enumerators vs oracles",
                       failures == 0,
                       f"{graphs} connected threshold graphs (<= {threshold_max} vertices), "
                       f"{fcases} partitions (<= 4 parts of size <= 4), {failures} failures")


def _euler_ok(cx: SimplicialComplex) -> bool:
    lhs = sum((-1) ** i * cx.f(i) for i in range(-1, cx.dim + 1))
    rhs = sum((-1) ** i * betti(cx, i) for i in range(-1, cx.dim + 1))
    return lhs == rhs


def _boundary_squares_to_zero(cx: SimplicialComplex) -> bool:
    for k in range(1, cx.dim + 1):
        a = cx.boundary_matrix(k - 1).as_lists()
        b = cx.boundary_matrix(k).as_lists()
        if not a or not a[0]:
            continue
        for col in zip(*b):
            image = [sum(r * c for r, c in zip(row, col)) for row in a]
            if any(image):
                return False
    return True


def check_13_property_suites(seed=DEFAULT_SEED, max_vertices=6, **_) -> CheckResult:
    corpus = enumerate_shifted_complexes(max_vertices, 2)
    fixtures = [bipyramid(), rp2_six_vertices(), simplex_skeleton(5, 2),
                complete_graph(5), complete_bipartite(3, 3)]
    problems = []

    for cx in fixtures + list(corpus[::7]):
        if not _boundary_squares_to_zero(cx):
            problems.append("boundary composition")
        if not _euler_ok(cx):
            problems.append("euler")

    rng = _rng(seed, "two-out-of-three")
    for cx in fixtures:
        k = cx.dim
        faces = cx.faces_of_dim(k)
        for _ in range(30):
            size = rng.randint(0, len(faces))
            T = rng.sample(faces, size)
            is_sst(cx, k, T)  # internally asserts the two-out-of-three property
    two_of_three = "ok"

    rng = _rng(seed, "snf")
    snf_ok = True
    for _ in range(60):
        m = rng.randint(1, 5)
        n = rng.randint(1, 5)
        M = [[rng.randint(-9, 9) for _ in range(n)] for _ in range(m)]
        facs = smith_normal_form(M)
        snf_ok &= all(b % a == 0 for a, b in zip(facs, facs[1:]))
        snf_ok &= len(facs) == rank(M)
        if m == n:
            det = bareiss_det(M)
            prod = 1
            for d in facs:
                prod *= d
            if det != 0:
                snf_ok &= abs(det) == prod

    B = bipyramid()
    ridge_trees = [star_ridges(B, 1, 1), find_sst(B, 1),
                   ((1, 2), (2, 3), (3, 4), (3, 5)), ((1, 5), (2, 5), (3, 5), (3, 4))]
    taus = {tau_via_reduced_laplacian(B, 2, U) for U in ridge_trees}
    wtaus = {weighted_tau(B, "coarse", U) for U in ridge_trees}
    u_indep = taus == {15} and len(wtaus) == 1

    deg_sig_ok = True
    beta_ok = True
    for cx in corpus:
        p = cx.min_vertex
        for i in range(0, cx.dim + 1):
            fam = cx.faces_of_dim(i)
            if fam:
                cps = critical_pairs(fam, p)
                degs = {v: sum(1 for F in fam if v in F) for v in cx.vertices}
                degs[cx.vertices[-1] + 1] = 0
                for v in cx.vertices:
                    have = sum(1 for cp in cps if cp.signature[-1] == v)
                    if degs[v] - degs[v + 1] != have:
                        deg_sig_ok = False
            count = sum(1 for F in fam
                        if p not in F and tuple(sorted(F + (p,))) not in cx)
            if betti(cx, i) != count:
                beta_ok = False

    ok = (not problems and snf_ok and u_indep and deg_sig_ok and beta_ok)
    detail = (f"boundary^2/Euler on {len(fixtures) + len(corpus[::7])} complexes; "
              f"two-out-of-three {two_of_three}; SNF divisibility {'ok' if snf_ok else 'FAIL'}; "
              f"U-independence {'ok' if u_indep else 'FAIL'}; "
              f"degree-signature {'ok' if deg_sig_ok else 'FAIL'}; "
              f"Betti identity {'ok' if beta_ok else 'FAIL'}; seed {seed}")
    return CheckResult(13, "property suites", ok, detail)


ALL_CHECKS = [
    check_01_bipyramid_tau_ladder,
    check_02_bipyramid_pi_ladder,
    check_03_classical,
    check_04_kalai,
    check_05_torsion_tree,
    check_06_weighted_bipyramid,
    check_07_critical_pair_table,
    check_08_spectrum_theorem,
    check_09_oracle_equivalence,
    check_10_duval_reiner,
    check_11_hearing,
    check_12_threshold_ferrers,
    check_13_property_suites,
]


def run_acceptance(seed=DEFAULT_SEED, max_vertices=6, n_subs=20, oracle_count=100,
                   threshold_max=7, quick=False):
    """Run every acceptance criterion; `quick` shrinks the sweeps (for smoke
    tests only, the accepted configuration is the default)."""
    if quick:
        max_vertices = min(max_vertices, 5)
        n_subs = min(n_subs, 3)
        oracle_count = min(oracle_count, 10)
        threshold_max = min(threshold_max, 6)
    kwargs = dict(seed=seed, max_vertices=max_vertices, n_subs=n_subs,
                  oracle_count=oracle_count, threshold_max=threshold_max)
    return [check(**kwargs) for check in ALL_CHECKS]

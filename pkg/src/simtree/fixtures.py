"""Bundled test corpus: named complexes shipped as JSON plus parametric families."""

from __future__ import annotations

import itertools
import json
from functools import lru_cache
from importlib import resources

from .complexes import SimplicialComplex, complex_from_json_dict


@lru_cache(maxsize=None)
def named_complex(name: str) -> SimplicialComplex:
    data = json.loads(resources.files("simtree.data").joinpath(f"{name}.json").read_text())
    return complex_from_json_dict(data)


def bipyramid() -> SimplicialComplex:
    """The equatorial bipyramid <235>: facets 123,124,125,134,135,234,235."""
    return named_complex("bipyramid")


def bipyramid_subcomplex(i: int) -> SimplicialComplex:
    """B2..B7 from the recursive bipyramid computation (B1 is the bipyramid)."""
    if i == 1:
        return bipyramid()
    if i == 8:
        return SimplicialComplex.empty()
    return named_complex(f"b{i}")


def tetrahedron_boundary() -> SimplicialComplex:
    return named_complex("tetrahedron_boundary")


def rp2_six_vertices() -> SimplicialComplex:
    """The 6-vertex triangulation of the real projective plane."""
    return named_complex("rp2_six")


def two_disjoint_edges() -> SimplicialComplex:
    return named_complex("two_edges")


def simplex_skeleton(n: int, d: int) -> SimplicialComplex:
    """The d-skeleton of the simplex on [1, n]."""
    return SimplicialComplex.from_facets(itertools.combinations(range(1, n + 1), d + 1))


def complete_graph(n: int) -> SimplicialComplex:
    return simplex_skeleton(n, 1)


def complete_bipartite(n: int, m: int) -> SimplicialComplex:
    """K_{n,m} with sides {1..n} and {n+1..n+m}."""
    return SimplicialComplex.from_facets(
        (a, n + b) for a in range(1, n + 1) for b in range(1, m + 1))

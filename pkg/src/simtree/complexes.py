"""Simplicial complexes on positive integer vertices, with exact face combinatorics.

Faces are strictly increasing tuples of positive integers; the empty face () is
always stored, so chain groups include C_{-1} and homology is reduced. Complexes
are immutable: every construction returns a new object.
"""

from __future__ import annotations

import itertools
import json
from dataclasses import dataclass

from .errors import InputError

Face = tuple  # tuple[int, ...], strictly increasing


def face(vertices) -> Face:
    """Normalize an iterable of vertices into a face tuple."""
    vs = tuple(sorted(vertices))
    for v in vs:
        if not isinstance(v, int) or v < 1:
            raise InputError(f"vertices must be positive integers, got {v!r}")
    if any(vs[i] == vs[i + 1] for i in range(len(vs) - 1)):
        raise InputError(f"duplicate vertex in face {vertices!r}")
    return vs


def face_label(F: Face) -> str:
    """Canonical text for a face: digit string if all vertices <= 9, else comma-separated."""
    if not F:
        return "-"
    if all(v <= 9 for v in F):
        return "".join(str(v) for v in F)
    return ",".join(str(v) for v in F)


def vertex_sign(v: int, F: Face) -> int:
    """epsilon(v, F) = (-1)^(j+1) when v is the j-th smallest vertex of F, else 0."""
    try:
        j = F.index(v) + 1
    except ValueError:
        return 0
    return -1 if j % 2 == 0 else 1


@dataclass(frozen=True)
class BoundaryMatrix:
    """Signed boundary map from k-faces (columns) to (k-1)-faces (rows)."""

    rows: tuple
    cols: tuple
    entries: tuple  # row-major tuple of tuples, values in {-1, 0, +1}

    @property
    def n_rows(self):
        return len(self.rows)

    @property
    def n_cols(self):
        return len(self.cols)

    def as_lists(self):
        return [list(r) for r in self.entries]


class SimplicialComplex:
    """A finite simplicial complex, stored as the full downward-closed face set."""

    __slots__ = ("_by_dim", "_faces", "_vertices", "_hash")

    def __init__(self, faces):
        face_set = set(faces)
        face_set.add(())
        by_dim = {}
        for F in face_set:
            by_dim.setdefault(len(F) - 1, []).append(F)
        for lst in by_dim.values():
            lst.sort()
        # downward closure check: every facet of every face must be present
        for F in face_set:
            for i in range(len(F)):
                if F[:i] + F[i + 1:] not in face_set:
                    raise InputError(f"face set not downward closed at {F}")
        object.__setattr__(self, "_by_dim", {d: tuple(fs) for d, fs in sorted(by_dim.items())})
        object.__setattr__(self, "_faces", frozenset(face_set))
        verts = sorted({v for F in face_set for v in F})
        object.__setattr__(self, "_vertices", tuple(verts))
        object.__setattr__(self, "_hash", hash(self._faces))

    # -- construction -------------------------------------------------

    @classmethod
    def empty(cls) -> "SimplicialComplex":
        return cls([()])

    @classmethod
    def closure(cls, generators) -> "SimplicialComplex":
        faces = set()
        for G in generators:
            G = face(G)
            for r in range(len(G) + 1):
                faces.update(itertools.combinations(G, r))
        return cls(faces)

    @classmethod
    def from_facets(cls, facets) -> "SimplicialComplex":
        facets = [tuple(f_) for f_ in facets]
        if any(len(f_) == 0 for f_ in facets):
            raise InputError("facets must be nonempty")
        return cls.closure(facets)

    # -- basic queries -------------------------------------------------

    @property
    def dim(self) -> int:
        return max(self._by_dim)

    @property
    def vertices(self) -> tuple:
        return self._vertices

    @property
    def min_vertex(self) -> int:
        if not self._vertices:
            raise InputError("complex has no vertices")
        return self._vertices[0]

    def faces_of_dim(self, i: int) -> tuple:
        return self._by_dim.get(i, ())

    def all_faces(self) -> frozenset:
        return self._faces

    def f(self, i: int) -> int:
        return len(self._by_dim.get(i, ()))

    def f_vector(self) -> tuple:
        return tuple(self.f(i) for i in range(-1, self.dim + 1))

    def facets(self) -> tuple:
        """Inclusion-maximal faces."""
        out = []
        for d in sorted(self._by_dim, reverse=True):
            for F in self._by_dim[d]:
                fs = set(F)
                if not any(fs < set(G) for e in self._by_dim if e > d for G in self._by_dim[e]):
                    out.append(F)
        return tuple(sorted(out, key=lambda F: (len(F), F)))

    def is_pure(self) -> bool:
        d = self.dim
        return all(len(F) - 1 == d for F in self.facets())

    def __contains__(self, F) -> bool:
        return tuple(F) in self._faces

    def __eq__(self, other):
        return isinstance(other, SimplicialComplex) and self._faces == other._faces

    def __hash__(self):
        return self._hash

    def __repr__(self):
        tops = ",".join(face_label(F) for F in self.facets())
        return f"SimplicialComplex<{tops}>"

    # -- constructions -------------------------------------------------

    def skeleton(self, i: int) -> "SimplicialComplex":
        if i < -1 or i > self.dim:
            raise InputError(f"skeleton dimension {i} out of range [-1, {self.dim}]")
        return SimplicialComplex(F for F in self._faces if len(F) - 1 <= i)

    def pure_skeleton(self, i: int) -> "SimplicialComplex":
        """Subcomplex generated by the i-faces; the empty complex if there are none."""
        gens = self._by_dim.get(i, ())
        if not gens:
            return SimplicialComplex.empty()
        return SimplicialComplex.closure(gens)

    def link(self, v: int) -> "SimplicialComplex":
        if v not in self._vertices:
            raise InputError(f"vertex {v} not in complex")
        return SimplicialComplex(
            F for F in self._faces if v not in F and tuple(sorted(F + (v,))) in self._faces
        )

    def deletion(self, v: int) -> "SimplicialComplex":
        """del_v = {F \\ {v} : F a face}; coincides with faces avoiding v plus the link."""
        if v not in self._vertices:
            raise InputError(f"vertex {v} not in complex")
        return SimplicialComplex(tuple(u for u in F if u != v) for F in self._faces)

    def cone(self, p: int) -> "SimplicialComplex":
        if p in self._vertices:
            raise InputError(f"cone apex {p} already a vertex")
        if p < 1:
            raise InputError("cone apex must be a positive integer")
        faces = set(self._faces)
        faces.update(tuple(sorted(F + (p,))) for F in self._faces)
        return SimplicialComplex(faces)

    # -- boundary matrices ----------------------------------------------

    def boundary_matrix(self, k: int) -> BoundaryMatrix:
        """The signed boundary map C_k -> C_{k-1}; k may be dim+1 (zero columns)."""
        if k < 0 or k > self.dim + 1:
            raise InputError(f"boundary dimension {k} out of range [0, {self.dim}]")
        rows = self._by_dim.get(k - 1, ())
        cols = self._by_dim.get(k, ())
        row_index = {F: i for i, F in enumerate(rows)}
        entries = [[0] * len(cols) for _ in rows]
        for j, F in enumerate(cols):
            for pos, v in enumerate(F):
                G = F[:pos] + F[pos + 1:]
                entries[row_index[G]][j] = -1 if pos % 2 else 1
        return BoundaryMatrix(rows=tuple(rows), cols=tuple(cols),
                              entries=tuple(tuple(r) for r in entries))

    # -- degrees --------------------------------------------------------

    def degree_sequence(self, i: int | None = None) -> tuple:
        """Per-vertex count of i-faces containing each vertex (i defaults to dim)."""
        if i is None:
            i = self.dim
        fam = self._by_dim.get(i, ())
        return tuple(sum(1 for F in fam if v in F) for v in self._vertices)

    # -- shifted / near-cone predicates ----------------------------------

    def is_near_cone(self, p: int) -> bool:
        dele = self.deletion(p) if p in self._vertices else None
        if dele is None:
            return False
        for F in dele.all_faces():
            for v in F:
                G = tuple(sorted(set(F) - {v} | {p}))
                if G not in self._faces:
                    return False
        return True


def is_shifted(cx: SimplicialComplex) -> bool:
    """Exchange condition: i < j vertices, j in F, i not in F => F - j + i is a face."""
    verts = cx.vertices
    for F in cx.all_faces():
        for j in F:
            for i in verts:
                if i >= j:
                    break
                if i not in F:
                    G = tuple(sorted(set(F) - {j} | {i}))
                    if G not in cx:
                        return False
    return True


def componentwise_leq(A, B) -> bool:
    return len(A) == len(B) and all(a <= b for a, b in zip(A, B))


def _ideal_below(gen: Face, p: int):
    """All strictly increasing tuples componentwise <= gen with entries >= p."""

    def rec(idx, lo):
        if idx == len(gen):
            yield ()
            return
        for v in range(lo, gen[idx] + 1):
            for rest in rec(idx + 1, v + 1):
                yield (v,) + rest

    yield from rec(0, p)


def shifted_from_generators(generators, p: int) -> SimplicialComplex:
    """The shifted complex generated by the given faces, with minimal vertex p."""
    faces = set()
    for gen in generators:
        G = face(gen)
        if G and G[0] < p:
            raise InputError(f"generator {G} has a vertex below the minimal vertex {p}")
        faces.update(_ideal_below(G, p))
    cx = SimplicialComplex.closure(faces) if faces else SimplicialComplex.empty()
    assert is_shifted(cx)
    return cx


# -- JSON interchange ---------------------------------------------------


def complex_to_json_dict(cx: SimplicialComplex) -> dict:
    return {"facets": [list(F) for F in cx.facets() if F]}


def complex_from_json_dict(data: dict) -> SimplicialComplex:
    if "facets" in data:
        return SimplicialComplex.from_facets([face(f_) for f_ in data["facets"]])
    if "shifted_generators" in data:
        p = data.get("min_vertex", 1)
        return shifted_from_generators([face(g) for g in data["shifted_generators"]], p)
    raise InputError("complex JSON needs a 'facets' or 'shifted_generators' key")


def load_complex(path: str) -> SimplicialComplex:
    try:
        with open(path) as fh:
            data = json.load(fh)
    except (OSError, json.JSONDecodeError) as exc:
        raise InputError(f"cannot read complex from {path}: {exc}") from exc
    return complex_from_json_dict(data)

"""Simplicial complexes on [m], full subcomplexes and the Hochster decomposition."""

from __future__ import annotations

import json
from collections import Counter
from dataclasses import dataclass, field
from functools import cached_property
from itertools import combinations
from typing import Iterable, Iterator, Mapping

from . import _linalg

VertexSet = tuple[int, ...]
BettiVector = dict[int, int]

MAX_ENUMERATION_VERTICES = 16


class NotFlagError(ValueError):
    """Raised when an operation requires a flag complex."""


def vertex_set(vertices: Iterable[int], m: int | None = None) -> VertexSet:
    """Canonical sorted tuple; rejects repeats and (when m is given) out-of-range vertices."""
    vs = tuple(sorted(vertices))
    if len(set(vs)) != len(vs):
        raise ValueError(f"repeated vertex in {vs}")
    if m is not None and any(v < 1 or v > m for v in vs):
        raise ValueError(f"vertex set {vs} not contained in [1..{m}]")
    return vs


def subsets(vs: VertexSet) -> Iterator[VertexSet]:
    for k in range(len(vs) + 1):
        yield from combinations(vs, k)


@dataclass(frozen=True)
class SimplicialComplex:
    """A simplicial complex on the vertex set [m], stored by its maximal faces.

    Vertices need not all be faces (ghost vertices are allowed). The empty
    set is always a face, so the void complex is not representable.
    """

    m: int
    maximal_faces: tuple[VertexSet, ...] = field(default=())

    def __post_init__(self):
        if self.m < 0:
            raise ValueError("vertex count must be nonnegative")
        faces = {vertex_set(f, self.m) for f in self.maximal_faces}
        maximal = [f for f in faces if f and not any(f != g and set(f) <= set(g) for g in faces)]
        object.__setattr__(self, "maximal_faces", tuple(sorted(maximal)))

    @classmethod
    def from_faces(cls, m: int, faces: Iterable[Iterable[int]]) -> "SimplicialComplex":
        return cls(m, tuple(tuple(f) for f in faces))

    @classmethod
    def simplex(cls, m: int) -> "SimplicialComplex":
        return cls(m, (tuple(range(1, m + 1)),) if m else ())

    @property
    def vertices(self) -> VertexSet:
        return tuple(range(1, self.m + 1))

    @cached_property
    def faces(self) -> frozenset[VertexSet]:
        out = {()}
        for f in self.maximal_faces:
            out.update(subsets(f))
        return frozenset(out)

    @cached_property
    def edges(self) -> frozenset[VertexSet]:
        return frozenset(f for f in self.faces if len(f) == 2)

    @cached_property
    def _neighbours(self) -> dict[int, frozenset[int]]:
        nb = {v: set() for v in self.vertices}
        for a, b in self.edges:
            nb[a].add(b)
            nb[b].add(a)
        return {v: frozenset(s) for v, s in nb.items()}

    def neighbours(self, v: int) -> frozenset[int]:
        return self._neighbours[v]

    def faces_of_dim(self, d: int) -> list[VertexSet]:
        return sorted(f for f in self.faces if len(f) == d + 1)

    @property
    def dimension(self) -> int:
        return max((len(f) for f in self.maximal_faces), default=0) - 1

    def __contains__(self, face) -> bool:
        return tuple(sorted(face)) in self.faces

    def to_json(self) -> dict:
        return {"m": self.m, "maximal_faces": [list(f) for f in self.maximal_faces]}

    @classmethod
    def from_json(cls, data: Mapping) -> "SimplicialComplex":
        try:
            m = data["m"]
            faces = data["maximal_faces"]
        except (KeyError, TypeError) as exc:
            raise ValueError(f"complex JSON needs 'm' and 'maximal_faces': {exc}") from None
        if not isinstance(m, int) or isinstance(m, bool):
            raise ValueError("'m' must be an integer")
        if not isinstance(faces, list) or not all(
            isinstance(f, list) and all(isinstance(v, int) and not isinstance(v, bool) for v in f)
            for f in faces
        ):
            raise ValueError("'maximal_faces' must be a list of integer lists")
        return cls(m, tuple(tuple(f) for f in faces))

    def dumps(self) -> str:
        return json.dumps(self.to_json())


def polygon_boundary(n: int) -> SimplicialComplex:
    """Boundary of the n-gon: edges {i, i+1} and {n, 1}."""
    if n < 3:
        raise ValueError(f"a polygon needs at least 3 vertices, got {n}")
    return SimplicialComplex(n, tuple((i, i + 1) for i in range(1, n)) + ((1, n),))


def is_face(K: SimplicialComplex, face: Iterable[int]) -> bool:
    vs = vertex_set(face, K.m)
    return vs in K.faces


def minimal_non_faces(K: SimplicialComplex) -> list[VertexSet]:
    _check_size(K)
    out = []
    for vs in subsets(K.vertices):
        if vs not in K.faces and all(tuple(x for x in vs if x != v) in K.faces for v in vs):
            out.append(vs)
    return out


def is_flag(K: SimplicialComplex) -> bool:
    """True iff every minimal non-face has exactly two vertices.

    Ghost vertices are one-element minimal non-faces, so complexes with
    ghost vertices are not flag.
    """
    return all(len(f) == 2 for f in minimal_non_faces(K))


def require_flag(K: SimplicialComplex) -> None:
    if not is_flag(K):
        raise NotFlagError("operation requires a flag complex")


def full_subcomplex(K: SimplicialComplex, vertices: Iterable[int]) -> SimplicialComplex:
    """Restriction of K to a vertex subset; vertex labels (and m) are kept."""
    vs = set(vertex_set(vertices, K.m))
    restricted = {tuple(v for v in f if v in vs) for f in K.maximal_faces}
    return SimplicialComplex(K.m, tuple(restricted))


def connected_components(K: SimplicialComplex, vertices: Iterable[int] | None = None) -> list[VertexSet]:
    """Components of the 1-skeleton, isolated vertices as singletons, ordered by least vertex.

    ``vertices`` restricts to a full subcomplex; by default all of [m] is used.
    """
    pool = set(K.vertices if vertices is None else vertex_set(vertices, K.m))
    comps = []
    while pool:
        start = min(pool)
        seen = {start}
        stack = [start]
        while stack:
            v = stack.pop()
            for w in K.neighbours(v) & pool:
                if w not in seen:
                    seen.add(w)
                    stack.append(w)
        pool -= seen
        comps.append(tuple(sorted(seen)))
    return sorted(comps)


def _used_faces(K: SimplicialComplex) -> dict[int, list[VertexSet]]:
    by_dim: dict[int, list[VertexSet]] = {}
    for f in K.faces:
        by_dim.setdefault(len(f) - 1, []).append(f)
    for d in by_dim:
        by_dim[d].sort()
    return by_dim


def _simplicial_boundary(rows_faces: list[VertexSet], cols_faces: list[VertexSet]) -> list[list[int]]:
    """Matrix of the reduced boundary from faces of dim d (columns) to dim d-1 (rows)."""
    index = {f: i for i, f in enumerate(rows_faces)}
    mat = [[0] * len(cols_faces) for _ in rows_faces]
    for c, f in enumerate(cols_faces):
        for pos in range(len(f)):
            mat[index[f[:pos] + f[pos + 1:]]][c] += (-1) ** pos
    return mat


def reduced_betti(K: SimplicialComplex) -> BettiVector:
    """Reduced rational Betti numbers of K; degree -1 is nonzero only for K = {empty}."""
    by_dim = _used_faces(K)
    top = max(by_dim)
    ranks = {}
    for d in range(0, top + 1):
        ranks[d] = _linalg.rank(_simplicial_boundary(by_dim[d - 1], by_dim[d]), len(by_dim[d]))
    betti = {}
    for d in range(-1, top + 1):
        b = len(by_dim[d]) - ranks.get(d, 0) - ranks.get(d + 1, 0)
        if b:
            betti[d] = b
    return betti


def reduced_euler_characteristic(K: SimplicialComplex) -> int:
    counts = Counter(len(f) - 1 for f in K.faces)
    return sum((-1) ** d * n for d, n in counts.items())


def _check_size(K: SimplicialComplex, limit: int = MAX_ENUMERATION_VERTICES) -> None:
    if K.m > limit:
        raise ValueError(f"m = {K.m} exceeds the enumeration limit of {limit} vertices")


def hochster_cohomology(K: SimplicialComplex) -> BettiVector:
    """Ranks of H^p(Z_K) as the sum over vertex subsets I of reduced Betti numbers of K_I in degree p-|I|-1."""
    _check_size(K)
    total: Counter = Counter()
    for vs in subsets(K.vertices):
        for d, b in reduced_betti(full_subcomplex(K, vs)).items():
            total[d + len(vs) + 1] += b
    return dict(sorted((p, r) for p, r in total.items() if r))


def hochster_bigraded(K: SimplicialComplex) -> dict[VertexSet, BettiVector]:
    """Nonzero summands of the Hochster decomposition, keyed by the vertex subset."""
    _check_size(K)
    out = {}
    for vs in subsets(K.vertices):
        b = reduced_betti(full_subcomplex(K, vs))
        if b:
            out[vs] = {d + len(vs) + 1: r for d, r in b.items()}
    return out

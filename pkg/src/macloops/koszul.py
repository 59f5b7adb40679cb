"""Finite Koszul model of the cohomology of Z_K.

The cochain algebra is the exterior algebra on u_1..u_m (degree 1) tensored
with the face ring of K (v_i of degree 2), modulo v_i^2 = u_i v_i = 0. Its
monomials u_J v_I with I a face and I, J disjoint form a basis that is dual to
the cells of Z_K. The differential sends u_i to v_i.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from typing import Iterable, Mapping, Sequence

from . import _linalg
from ._lincomb import LinearCombination
from .cellular import Cell, Chain
from .simplicial import SimplicialComplex, VertexSet


@dataclass(frozen=True, order=True)
class KoszulMonomial:
    u: VertexSet
    v: VertexSet

    @property
    def degree(self) -> int:
        return len(self.u) + 2 * len(self.v)

    def __str__(self) -> str:
        return " ".join([f"u{i}" for i in self.u] + [f"v{i}" for i in self.v]) or "1"


class KoszulElement(LinearCombination):
    __slots__ = ()

    @staticmethod
    def _sort_key(mono: KoszulMonomial):
        return (mono.degree, mono.u, mono.v)

    @property
    def degree(self) -> int | None:
        ds = {m.degree for m in self}
        if len(ds) > 1:
            raise ValueError(f"element is not homogeneous: degrees {sorted(ds)}")
        return ds.pop() if ds else None

    def to_json(self) -> list[dict]:
        return [{"u": list(m.u), "v": list(m.v), "coeff": c} for m, c in self.items()]

    @classmethod
    def from_json(cls, data: Sequence[Mapping], K: SimplicialComplex) -> "KoszulElement":
        try:
            return sum((int(t["coeff"]) * monomial(t["u"], t["v"], K) for t in data), cls())
        except (KeyError, TypeError) as exc:
            raise ValueError(f"malformed Koszul JSON: {exc}") from None


def _sort_sign(seq: Sequence[int]) -> int:
    inversions = sum(1 for a, b in combinations(seq, 2) if a > b)
    return -1 if inversions % 2 else 1


def monomial(u: Iterable[int], v: Iterable[int], K: SimplicialComplex) -> KoszulElement:
    """The element u_{j1}...u_{jk} v_I, with u factors in the order given.

    Vanishes when a u or v repeats, a u meets a v index, or the v indices do
    not span a face of K.
    """
    u = list(u)
    v = list(v)
    if len(set(u)) != len(u) or len(set(v)) != len(v) or set(u) & set(v):
        return KoszulElement()
    for i in u + v:
        if not 1 <= i <= K.m:
            raise ValueError(f"index {i} outside [1..{K.m}]")
    face = tuple(sorted(v))
    if face not in K.faces:
        return KoszulElement()
    return KoszulElement({KoszulMonomial(tuple(sorted(u)), face): _sort_sign(u)})


_KTERM = re.compile(r"\s*([+-])?\s*(\d+)?\s*((?:[uv]_?\{?\d+\}?\s*)+|1(?![\d]))")
_KFACTOR = re.compile(r"([uv])_?\{?(\d+)\}?")


def parse_koszul(text: str, K: SimplicialComplex) -> KoszulElement:
    """Parse e.g. ``"u1 v3"``, ``"-u_2 u_1 u_5 v_3"`` or ``"u2 u3 v6 - u4 v1"``."""
    text = text.strip()
    if text in ("", "0"):
        return KoszulElement()
    total = KoszulElement()
    pos = 0
    while pos < len(text):
        match = _KTERM.match(text, pos)
        if not match or match.end() == pos:
            raise ValueError(f"cannot parse Koszul element at: {text[pos:]!r}")
        sgn, coeff, body = match.groups()
        factors = _KFACTOR.findall(body)
        u = [int(i) for kind, i in factors if kind == "u"]
        v = [int(i) for kind, i in factors if kind == "v"]
        n = (int(coeff) if coeff else 1) * (-1 if sgn == "-" else 1)
        total = total + n * monomial(u, v, K)
        pos = match.end()
    return total


def monomials_of(K: SimplicialComplex, degree: int) -> list[KoszulMonomial]:
    """Basis monomials of the given degree, sorted."""
    out = []
    for face in K.faces:
        rest = degree - 2 * len(face)
        if rest < 0:
            continue
        free = [i for i in K.vertices if i not in face]
        out.extend(KoszulMonomial(u, face) for u in combinations(free, rest))
    return sorted(out)


def _mono_differential(mono: KoszulMonomial, K: SimplicialComplex) -> list[tuple[KoszulMonomial, int]]:
    out = []
    for pos, j in enumerate(mono.u):
        face = tuple(sorted(mono.v + (j,)))
        if face in K.faces:
            out.append((KoszulMonomial(mono.u[:pos] + mono.u[pos + 1:], face), -1 if pos % 2 else 1))
    return out


def differential(e: KoszulElement, K: SimplicialComplex) -> KoszulElement:
    """d u_i = v_i, d v_i = 0, extended as a derivation of degree +1."""
    terms = []
    for mono, c in e.items():
        terms.extend((m, c * s) for m, s in _mono_differential(mono, K))
    return KoszulElement(terms)


def multiply(a: KoszulElement, b: KoszulElement, K: SimplicialComplex) -> KoszulElement:
    terms = []
    for ma, ca in a.items():
        for mb, cb in b.items():
            if set(ma.u) & set(mb.u) or set(ma.v) & set(mb.v):
                continue
            if (set(ma.u) | set(mb.u)) & (set(ma.v) | set(mb.v)):
                continue
            face = tuple(sorted(ma.v + mb.v))
            if face not in K.faces:
                continue
            u = ma.u + mb.u
            terms.append((KoszulMonomial(tuple(sorted(u)), face), ca * cb * _sort_sign(u)))
    return KoszulElement(terms)


def is_cocycle(e: KoszulElement, K: SimplicialComplex) -> bool:
    return not differential(e, K)


def coboundary_matrix(K: SimplicialComplex, degree: int) -> tuple[list[list[int]], list[KoszulMonomial], list[KoszulMonomial]]:
    """Matrix of d from ``degree`` (columns) to ``degree + 1`` (rows)."""
    cols = monomials_of(K, degree)
    rows = monomials_of(K, degree + 1)
    index = {m: i for i, m in enumerate(rows)}
    mat = [[0] * len(cols) for _ in rows]
    for j, mono in enumerate(cols):
        for m, s in _mono_differential(mono, K):
            mat[index[m]][j] += s
    return mat, cols, rows


def _vector(e: KoszulElement, basis: Sequence[KoszulMonomial]) -> list[int]:
    index = {m: i for i, m in enumerate(basis)}
    vec = [0] * len(basis)
    for m, c in e.items():
        vec[index[m]] = c
    return vec


@dataclass(frozen=True)
class CohomologyClass:
    representative: KoszulElement
    degree: int

    def __str__(self) -> str:
        text = str(self.representative)
        return f"[{text}]"


def _coboundaries(K: SimplicialComplex, degree: int) -> list[list[int]]:
    """Images of the degree-1 lower basis monomials, as coordinate vectors."""
    mat, cols, _ = coboundary_matrix(K, degree - 1)
    return _linalg.transpose(mat, len(cols)) if mat else []


def cohomology_basis(K: SimplicialComplex, p: int) -> list[CohomologyClass]:
    """Cocycle representatives of a basis of H^p, chosen greedily in echelon order."""
    basis = monomials_of(K, p)
    if not basis:
        return []
    mat, _, _ = coboundary_matrix(K, p)
    cocycles = _linalg.nullspace(mat, len(basis)) if mat else [
        [int(i == j) for j in range(len(basis))] for i in range(len(basis))]
    exact = _coboundaries(K, p)
    columns = exact + cocycles
    pivots = _linalg.independent_columns(_linalg.transpose(columns, len(basis)), len(columns))
    chosen = [cocycles[i - len(exact)] for i in pivots if i >= len(exact)]
    return [CohomologyClass(KoszulElement(zip(basis, vec)), p) for vec in chosen]


def _require_cocycle(e: KoszulElement, K: SimplicialComplex) -> int | None:
    if not is_cocycle(e, K):
        raise ValueError(f"{e} is not a cocycle")
    return e.degree


def class_coordinates(e: KoszulElement, reps: Sequence[KoszulElement], K: SimplicialComplex) -> list[Fraction] | None:
    """Coefficients x with e = sum x_i reps_i + d(y), or None if [e] is outside their span."""
    degree = _require_cocycle(e, K)
    for r in reps:
        _require_cocycle(r, K)
    if degree is None:
        degree = next((r.degree for r in reps if r.degree is not None), None)
        if degree is None:
            return [Fraction(0)] * len(reps)
    basis = monomials_of(K, degree)
    columns = [_vector(r, basis) for r in reps] + _coboundaries(K, degree)
    rows = _linalg.transpose(columns, len(basis)) if columns else [[] for _ in basis]
    x = _linalg.solve(rows, _vector(e, basis), len(columns))
    return None if x is None else x[:len(reps)]


def same_class(a: KoszulElement, b: KoszulElement, K: SimplicialComplex) -> bool:
    """True iff the cocycles a and b differ by a coboundary."""
    da = _require_cocycle(a, K)
    db = _require_cocycle(b, K)
    if da is not None and db is not None and da != db:
        return False
    return class_coordinates(a - b, [], K) is not None


def top_class(K: SimplicialComplex) -> CohomologyClass:
    """Generator of the highest nonzero cohomology group, which must have rank one."""
    for p in range(K.m + K.dimension + 1, -1, -1):
        basis = cohomology_basis(K, p)
        if basis:
            if len(basis) != 1:
                raise ValueError(f"top cohomology H^{p} has rank {len(basis)}, not 1")
            return basis[0]
    raise ValueError("complex has no cohomology")


def product_pairing_table(K: SimplicialComplex, left: Sequence[KoszulElement], right: Sequence[KoszulElement],
                          top: KoszulElement) -> list[list[Fraction]]:
    """M[a][b] with left[a] * right[b] = M[a][b] * top in cohomology."""
    dt = _require_cocycle(top, K)
    dl = {_require_cocycle(x, K) for x in left} - {None}
    dr = {_require_cocycle(x, K) for x in right} - {None}
    if len(dl) > 1 or len(dr) > 1:
        raise ValueError("basis elements must share a degree")
    if dl and dr and dl.pop() + dr.pop() != dt:
        raise ValueError(f"degrees do not add up to the top degree {dt}")
    table = []
    for a in left:
        row = []
        for b in right:
            coords = class_coordinates(multiply(a, b, K), [top], K)
            if coords is None:
                raise ValueError(f"product of {a} and {b} is not a multiple of the top class")
            row.append(coords[0])
        table.append(row)
    return table


def evaluate(cochain: KoszulElement, chain: Chain) -> int:
    """Kronecker pairing: u_J v_I takes value 1 on the cell with circles J and discs I."""
    total = 0
    for mono, c in cochain.items():
        total += c * chain.get(Cell(mono.v, mono.u), 0)
    return total

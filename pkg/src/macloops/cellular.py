"""The cellular chain complex of Z_K.

Every coordinate disc is split into a point, an open arc ``S`` (dimension 1)
and an open disc ``D`` (dimension 2). A cell of Z_K is a pair (I, J) of
disjoint vertex sets with I a face of K: the coordinates in I carry ``D``,
those in J carry ``S``, the rest sit at the base point. Product cells are
oriented by listing factors in ascending vertex order.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations
from typing import Iterable, Mapping, Sequence

from . import _linalg
from ._lincomb import LinearCombination
from .simplicial import BettiVector, SimplicialComplex, VertexSet, vertex_set


@dataclass(frozen=True, order=True)
class Cell:
    disc: VertexSet
    circle: VertexSet

    def __post_init__(self):
        if set(self.disc) & set(self.circle):
            raise ValueError(f"disc and circle sets overlap: {self.disc}, {self.circle}")

    @property
    def dim(self) -> int:
        return 2 * len(self.disc) + len(self.circle)

    def factors(self) -> list[tuple[str, int]]:
        out = [("D", i) for i in self.disc] + [("S", j) for j in self.circle]
        return sorted(out, key=lambda f: f[1])

    def __str__(self) -> str:
        return " ".join(f"{kind}{i}" for kind, i in self.factors()) or "pt"


class Chain(LinearCombination):
    """Finitely supported integer combination of cells."""

    __slots__ = ()

    def dims(self) -> set[int]:
        return {c.dim for c in self._terms}

    @property
    def dim(self) -> int | None:
        ds = self.dims()
        if len(ds) > 1:
            raise ValueError(f"chain is not homogeneous: dimensions {sorted(ds)}")
        return ds.pop() if ds else None

    def to_json(self) -> list[dict]:
        return [{"D": list(c.disc), "S": list(c.circle), "coeff": v} for c, v in self._terms.items()]

    @classmethod
    def from_json(cls, data: Sequence[Mapping]) -> "Chain":
        try:
            return cls((Cell(vertex_set(t["D"]), vertex_set(t["S"])), int(t["coeff"])) for t in data)
        except (KeyError, TypeError) as exc:
            raise ValueError(f"malformed chain JSON: {exc}") from None


def cell(disc: Iterable[int] = (), circle: Iterable[int] = ()) -> Chain:
    return Chain({Cell(vertex_set(disc), vertex_set(circle)): 1})


_TERM = re.compile(r"\s*([+-])?\s*(\d+)?\s*((?:[SD]_?\{?\d+\}?\s*)+)")
_FACTOR = re.compile(r"([SD])_?\{?(\d+)\}?")


def product_cell(factors: Sequence[tuple[str, int]]) -> tuple[int, Cell]:
    """Sort a written product of S/D factors into ascending order, returning (sign, cell).

    Only transpositions of two S factors (both odd) contribute a sign.
    """
    sign = 1
    fs = list(factors)
    for i in range(len(fs)):
        for j in range(len(fs) - 1 - i):
            if fs[j][1] > fs[j + 1][1]:
                if fs[j][0] == "S" and fs[j + 1][0] == "S":
                    sign = -sign
                fs[j], fs[j + 1] = fs[j + 1], fs[j]
            elif fs[j][1] == fs[j + 1][1]:
                raise ValueError(f"repeated coordinate {fs[j][1]} in product")
    disc = tuple(i for kind, i in fs if kind == "D")
    circle = tuple(i for kind, i in fs if kind == "S")
    return sign, Cell(disc, circle)


def parse_chain(text: str) -> Chain:
    """Parse e.g. ``"S1 D3 + D1 S3"`` or ``"- S_2 S_4 D_5"``; factors may come in any order."""
    text = text.strip()
    if text in ("", "0"):
        return Chain()
    terms = []
    pos = 0
    while pos < len(text):
        match = _TERM.match(text, pos)
        if not match or match.end() == pos:
            raise ValueError(f"cannot parse chain at: {text[pos:]!r}")
        sgn, coeff, body = match.groups()
        factors = [(k, int(i)) for k, i in _FACTOR.findall(body)]
        s, c = product_cell(factors)
        n = int(coeff) if coeff else 1
        terms.append((c, s * n * (-1 if sgn == "-" else 1)))
        pos = match.end()
    return Chain(terms)


def cells_of(K: SimplicialComplex, dim: int) -> list[Cell]:
    """All cells of Z_K of the given dimension, sorted."""
    if dim < 0:
        return []
    out = []
    for face in K.faces:
        rest = dim - 2 * len(face)
        if rest < 0:
            continue
        free = [v for v in K.vertices if v not in face]
        for circle in combinations(free, rest):
            out.append(Cell(face, circle))
    return sorted(out)


def cell_boundary(c: Cell) -> Chain:
    terms = []
    for i in c.disc:
        sign = (-1) ** sum(1 for j in c.circle if j < i)
        terms.append((Cell(tuple(x for x in c.disc if x != i), tuple(sorted(c.circle + (i,)))), sign))
    return Chain(terms)


def boundary(chain: Chain) -> Chain:
    """Cellular boundary: D_i -> S_i, S_i -> 0, extended by the graded Leibniz rule."""
    terms = []
    for c, coeff in chain.items():
        terms.extend((b, coeff * s) for b, s in cell_boundary(c).items())
    return Chain(terms)


def is_cycle(chain: Chain) -> bool:
    return not boundary(chain)


def boundary_matrix(K: SimplicialComplex, dim: int) -> tuple[list[list[int]], list[Cell], list[Cell]]:
    """Matrix of the boundary from dimension ``dim`` (columns) to ``dim - 1`` (rows)."""
    cols = cells_of(K, dim)
    rows = cells_of(K, dim - 1)
    index = {c: i for i, c in enumerate(rows)}
    mat = [[0] * len(cols) for _ in rows]
    for j, c in enumerate(cols):
        for b, s in cell_boundary(c).items():
            mat[index[b]][j] += s
    return mat, rows, cols


def _vector(chain: Chain, cells: Sequence[Cell]) -> list[int]:
    index = {c: i for i, c in enumerate(cells)}
    vec = [0] * len(cells)
    for c, v in chain.items():
        if c not in index:
            raise ValueError(f"cell {c} is not a cell of this complex in this dimension")
        vec[index[c]] = v
    return vec


def _chain(vec: Sequence[int], cells: Sequence[Cell]) -> Chain:
    return Chain((c, int(v)) for c, v in zip(cells, vec) if v)


@dataclass
class ZKHomology:
    """Integer homology of Z_K: free ranks, torsion coefficients and cycle bases."""

    ranks: BettiVector
    torsion: dict[int, list[int]] = field(default_factory=dict)
    cycles: dict[int, list[Chain]] = field(default_factory=dict)

    @property
    def top_degree(self) -> int:
        return max(self.ranks)


def zk_homology(K: SimplicialComplex, bases: Mapping[int, Sequence[Chain]] | None = None,
                integer: bool = True) -> ZKHomology:
    """Homology of the cellular chain complex of Z_K.

    ``bases`` optionally supplies preferred cycle bases per degree; they are
    validated and used in place of the echelon basis. With ``integer=False``
    the Smith normal form step (torsion) is skipped.
    """
    top = K.m + K.dimension + 1
    mats = {d: boundary_matrix(K, d) for d in range(0, top + 2)}
    ranks_of = {d: _linalg.rank(mats[d][0], len(mats[d][2])) for d in mats}
    result = ZKHomology(ranks={})
    for d in range(0, top + 1):
        cells = mats[d][2]
        r = len(cells) - ranks_of[d] - ranks_of[d + 1]
        if integer and ranks_of[d + 1]:
            factors = [f for f in _linalg.smith_invariants(mats[d + 1][0], len(mats[d + 1][2])) if f > 1]
            if factors:
                result.torsion[d] = factors
        if r == 0:
            continue
        result.ranks[d] = r
        if bases is not None and d in bases:
            chosen = list(bases[d])
            _check_basis(K, d, chosen, r)
        else:
            chosen = _echelon_cycles(mats[d][0], mats[d + 1][0], cells, len(mats[d + 1][2]))
        result.cycles[d] = chosen
    return result


def _echelon_cycles(bd_out, bd_in, cells, n_in) -> list[Chain]:
    kernel = _linalg.nullspace(bd_out, len(cells)) if bd_out else [
        [int(i == j) for j in range(len(cells))] for i in range(len(cells))]
    images = _linalg.transpose(bd_in, n_in) if bd_in else []
    columns = images + kernel
    # columns of the matrix are the image vectors followed by kernel vectors
    pivots = _linalg.independent_columns(_linalg.transpose(columns, len(cells)), len(columns))
    chosen = [kernel[p - len(images)] for p in pivots if p >= len(images)]
    return [_chain(v, cells) for v in chosen]


def _check_basis(K, d, chains, expected_rank) -> None:
    if len(chains) != expected_rank:
        raise ValueError(f"degree {d}: {len(chains)} chains supplied, homology rank is {expected_rank}")
    for c in chains:
        if not is_cycle(c):
            raise ValueError(f"degree {d}: {c} is not a cycle")
    mat, _, _ = boundary_matrix(K, d + 1)
    cells = cells_of(K, d)
    columns = _linalg.transpose(mat, len(cells_of(K, d + 1))) if mat else []
    columns = columns + [_vector(c, cells) for c in chains]
    if _linalg.rank(columns, len(cells)) != _linalg.rank(columns[:len(columns) - len(chains)], len(cells)) + len(chains):
        raise ValueError(f"degree {d}: supplied chains are dependent modulo boundaries")


def homology_coordinates(K: SimplicialComplex, chain: Chain, basis: Sequence[Chain]) -> list[Fraction] | None:
    """Rational coordinates of [chain] in the classes of ``basis``, or None outside their span.

    The basis chains are assumed independent modulo boundaries.
    """
    if not is_cycle(chain):
        raise ValueError(f"{chain} is not a cycle")
    d = chain.dim
    if d is None:
        dims = {b.dim for b in basis} - {None}
        if not dims:
            return [Fraction(0)] * len(basis)
        d = dims.pop()
    cells = cells_of(K, d)
    upper, _, upper_cells = boundary_matrix(K, d + 1)
    columns = [_vector(b, cells) for b in basis]
    columns += _linalg.transpose(upper, len(upper_cells)) if upper else []
    rows = _linalg.transpose(columns, len(cells)) if columns else [[] for _ in cells]
    x = _linalg.solve(rows, _vector(chain, cells), len(columns))
    if x is None:
        return None
    return x[:len(basis)]

"""Iterated-commutator generators of the loop homology of Z_K and their Hurewicz cycles."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from typing import Sequence

from .cellular import Chain, homology_coordinates, is_cycle, product_cell, zk_homology
from .loopalg import CommutatorExpr, format_expr, right_nested, right_nested_indices
from .simplicial import SimplicialComplex, VertexSet, connected_components, require_flag


@dataclass(frozen=True, order=True)
class GeneratorDescriptor:
    """The nested commutator [mu_k1, [mu_k2, ..., [mu_j, mu_i]...]] with k1 < ... < kp < j > i."""

    k_list: VertexSet
    j: int
    i: int

    @property
    def degree(self) -> int:
        return len(self.k_list) + 2

    @property
    def indices(self) -> tuple[int, ...]:
        return self.k_list + (self.j, self.i)

    @property
    def expr(self) -> CommutatorExpr:
        return right_nested(self.indices)

    def __str__(self) -> str:
        return format_expr(self.expr)


def _is_generator(K: SimplicialComplex, k_list: VertexSet, j: int, i: int) -> bool:
    for comp in connected_components(K, k_list + (j, i)):
        if i in comp:
            return j not in comp and min(comp) == i
    return False


def enumerate_gptw_generators(K: SimplicialComplex) -> list[GeneratorDescriptor]:
    """All index data (k_1 < ... < k_p < j > i) satisfying the connectivity condition.

    i must be the least vertex of a component of K restricted to {k, j, i} that
    does not contain j. Sorted by degree, then by index data.
    """
    require_flag(K)
    out = []
    for j in K.vertices:
        for i in range(1, j):
            pool = [k for k in range(1, j) if k != i]
            for p in range(len(pool) + 1):
                for ks in combinations(pool, p):
                    if _is_generator(K, ks, j, i):
                        out.append(GeneratorDescriptor(ks, j, i))
    return sorted(out, key=lambda g: (g.degree, g.indices))


def hurewicz_image(g: GeneratorDescriptor | CommutatorExpr | Sequence[int]) -> Chain:
    """Cellular cycle of the nested commutator [mu_i1, [..., [mu_i(k-1), mu_ik]...]].

    It is S_i1 ... S_i(k-2) D_i(k-1) S_ik + S_i1 ... S_i(k-1) D_ik, with each
    product re-sorted into ascending order.
    """
    if isinstance(g, GeneratorDescriptor):
        idx = list(g.indices)
    elif isinstance(g, (list, tuple)) and all(isinstance(x, int) for x in g):
        idx = list(g)
    else:
        idx = right_nested_indices(g)
        if idx is None:
            raise ValueError(f"{format_expr(g)} is not a right-nested commutator")
    if len(set(idx)) != len(idx):
        raise ValueError(f"repeated letter in nested commutator {idx}")
    first = [("S", x) for x in idx[:-2]] + [("D", idx[-2]), ("S", idx[-1])]
    second = [("S", x) for x in idx[:-1]] + [("D", idx[-1])]
    terms = [product_cell(first), product_cell(second)]
    return Chain((c, s) for s, c in terms)


@dataclass
class GeneratorRow:
    descriptor: GeneratorDescriptor
    chain: Chain
    cycle: bool
    coords: list[Fraction] | None

    def to_json(self) -> dict:
        return {
            "commutator": str(self.descriptor),
            "degree": self.descriptor.degree,
            "chain": self.chain.to_json(),
            "chain_text": str(self.chain),
            "is_cycle": self.cycle,
            "coords": None if self.coords is None else [str(x) for x in self.coords],
        }


def generator_cycle_table(K: SimplicialComplex, homology=None) -> list[GeneratorRow]:
    """Each generator with its Hurewicz chain and coordinates in the cellular homology basis.

    A generator of degree n lands in H_{n+1}(Z_K).
    """
    generators = enumerate_gptw_generators(K)
    if homology is None:
        from .reference import reference_cycle_bases
        homology = zk_homology(K, bases=reference_cycle_bases(K))
    rows = []
    for g in generators:
        chain = hurewicz_image(g)
        cyc = is_cycle(chain)
        basis = homology.cycles.get(g.degree + 1, [])
        coords = homology_coordinates(K, chain, basis) if cyc else None
        rows.append(GeneratorRow(g, chain, cyc, coords))
    return rows

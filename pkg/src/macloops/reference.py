"""Published representatives for the pentagon and hexagon, stored as data.

The cohomology classes, cellular cycles and commutators below are the
row-aligned bases used to cross-check every computation. Strings are parsed
on demand so the data stays readable.
"""

from __future__ import annotations

from functools import lru_cache

from .cellular import Chain, parse_chain
from .koszul import KoszulElement, parse_koszul
from .loopalg import CommutatorExpr, parse_expr
from .simplicial import SimplicialComplex, polygon_boundary

PENTAGON = polygon_boundary(5)
HEXAGON = polygon_boundary(6)
SQUARE = polygon_boundary(4)

# (H^3, H^4) pairs whose product is the top class
PENTAGON_PRODUCTS = [
    ("u1 v3", "u4 u5 v2"),
    ("u2 v4", "-u1 u5 v3"),
    ("u3 v5", "u1 u2 v4"),
    ("u4 v1", "u2 u3 v5"),
    ("u5 v2", "u3 u4 v1"),
]
PENTAGON_TOP = "u1 u2 u3 v4 v5"

PENTAGON_CYCLES = [
    ("S1 D3 + D1 S3", "D2 S4 S5 - S2 S4 D5"),
    ("S2 D4 + D2 S4", "-S1 S3 D5 - S1 D3 S5"),
    ("S3 D5 + D3 S5", "-D1 S2 S4 + S1 S2 D4"),
    ("S4 D1 + D4 S1", "-D2 S3 S5 + S2 S3 D5"),
    ("S5 D2 + D5 S2", "D1 S3 S4 - S1 S3 D4"),
]

PENTAGON_COMMUTATORS = [
    ("[3,1]", 1, "[4,[5,2]]"),
    ("[4,2]", -1, "[1,[5,3]]"),
    ("[5,3]", -1, "[2,[4,1]]"),
    ("[4,1]", -1, "[3,[5,2]]"),
    ("[5,2]", 1, "[3,[4,1]]"),
]

# generators and relation signs of the one-relator presentation
PENTAGON_ALPHA = ["[3,1]", "[4,1]", "[4,2]", "[5,2]", "[5,3]"]
PENTAGON_BETA = ["[4,[5,2]]", "[3,[5,2]]", "[1,[5,3]]", "[3,[4,1]]", "[2,[4,1]]"]
PENTAGON_SIGNS = [-1, 1, 1, -1, 1]

HEXAGON_PRODUCTS_35 = [
    ("u1 v3", "u4 u5 u6 v2"),
    ("u1 v4", "-u2 u3 u5 v6 + u2 u3 u6 v5"),
    ("u1 v5", "u2 u3 u4 v6"),
    ("u2 v4", "-u1 u5 u6 v3"),
    ("u2 v5", "-u1 u3 u6 v4 + u1 u4 u6 v3"),
    ("u2 v6", "-u3 u4 u5 v1"),
    ("u3 v5", "u1 u2 u6 v4"),
    ("u3 v6", "u1 u2 u4 v5 - u1 u2 u5 v4"),
    ("u4 v6", "-u1 u2 u3 v5"),
]
HEXAGON_PRODUCTS_44 = [
    ("u1 u5 v3", "-u2 u6 v4"),
    ("u3 u5 v1", "-u4 u6 v2 + u2 u6 v4"),
    ("u2 u3 v6", "-u4 u5 v1"),
    ("u5 u6 v2", "u3 u4 v1"),
    ("u1 u6 v3", "u4 u5 v2"),
    ("u3 u4 v6", "-u2 u5 v1 + u1 u5 v2"),
    ("u5 u6 v3", "-u2 u4 v1 + u1 u4 v2"),
    ("u1 u6 v4", "-u3 u5 v2 + u2 u5 v3"),
]
# u1 u2 u3 v4 v5 v6 would vanish ({4,5,6} is not a face); this is the degree-8 generator
HEXAGON_TOP = "u1 u2 u3 u4 v5 v6"

HEXAGON_CYCLES_35 = [
    ("S1 D3 + D1 S3", "D2 S4 S5 S6 + S2 S4 S5 D6"),
    ("S1 D4 + D1 S4", "-S2 S3 S5 D6 - D2 S3 S5 S6"),
    ("S1 D5 + D1 S5", "D2 S3 S4 S6 + S2 S3 S4 D6"),
    ("S2 D4 + D2 S4", "S1 S3 S5 D6 - S1 D3 S5 S6"),
    ("S2 D5 + D2 S5", "S1 D3 S4 S6 - S1 S3 S4 D6"),
    ("S2 D6 + D2 S6", "-D1 S3 S4 S5 - S1 S3 S4 D5"),
    ("S3 D5 + D3 S5", "S1 S2 D4 S6 + S1 S2 S4 D6"),
    ("S3 D6 + D3 S6", "D1 S2 S4 S5 + S1 S2 S4 D5"),
    ("S4 D6 + D4 S6", "-S1 S2 S3 D5 - D1 S2 S3 S5"),
]
HEXAGON_CYCLES_44 = [
    ("S1 S3 D5 + S1 D3 S5", "-D2 S4 S6 - S2 D4 S6"),
    ("-S1 S3 D5 + D1 S3 S5", "S2 S4 D6 - D2 S4 S6"),
    ("S2 S3 D6 - D2 S3 S6", "S1 S4 D5 - D1 S4 S5"),
    ("D2 S5 S6 - S2 S5 D6", "-S1 S3 D4 + D1 S3 S4"),
    ("S1 D3 S6 + S1 S3 D6", "-S2 S4 D5 + D2 S4 S5"),
    ("S3 S4 D6 - D3 S4 S6", "S1 S2 D5 - D1 S2 S5"),
    ("-S3 S5 D6 + D3 S5 S6", "-D1 S2 S4 + S1 S2 D4"),
    ("S1 S4 D6 + S1 D4 S6", "-D2 S3 S5 + S2 S3 D5"),
]

# rows: degree-2 commutator, sign and degree-4 commutator, additional
# commutators (unknown id, expression) paired with the row's degree-2 entry
HEXAGON_COMMUTATORS_24 = [
    ("[3,1]", 1, "[4,[5,[6,2]]]", [("k1", "[[2,5],[4,6]]")]),
    ("[4,1]", -1, "[3,[5,[6,2]]]", [("k2", "[[5,3],[6,2]]"), ("k3", "[[6,3],[5,2]]")]),
    ("[5,1]", 1, "[3,[4,[6,2]]]", [("k4", "[[4,2],[6,3]]")]),
    ("[4,2]", -1, "[1,[5,[6,3]]]", [("k5", "[[6,3],[5,1]]")]),
    ("[5,2]", 1, "[1,[4,[6,3]]]", [("k6", "[[4,1],[6,3]]"), ("k7", "[[6,4],[3,1]]")]),
    ("[6,2]", -1, "[3,[4,[5,1]]]", [("k8", "[[5,3],[4,1]]")]),
    ("[5,3]", 1, "[1,[2,[6,4]]]", [("k9", "[[4,1],[6,2]]")]),
    ("[6,3]", 1, "[2,[4,[5,1]]]", [("k10", "[[4,2],[5,1]]"), ("k11", "[[4,1],[5,2]]")]),
    ("[6,4]", -1, "[2,[3,[5,1]]]", [("k12", "[[5,2],[3,1]]")]),
]
HEXAGON_COMMUTATORS_33 = [
    (1, "[1,[5,3]]", 1, "[6,[4,2]]"),
    (1, "[3,[5,1]]", -1, "[4,[6,2]]"),
    (-1, "[3,[6,2]]", -1, "[4,[5,1]]"),
    (1, "[5,[6,2]]", 1, "[3,[4,1]]"),
    (1, "[1,[6,3]]", 1, "[4,[5,2]]"),
    (-1, "[4,[6,3]]", -1, "[2,[5,1]]"),
    (1, "[5,[6,3]]", -1, "[2,[4,1]]"),
    (1, "[1,[6,4]]", -1, "[3,[5,2]]"),
]

HEXAGON_ALPHA = [row[0] for row in HEXAGON_COMMUTATORS_24]
HEXAGON_GAMMA = [row[2] for row in HEXAGON_COMMUTATORS_24]
HEXAGON_BETA = [row[1] for row in HEXAGON_COMMUTATORS_33]
HEXAGON_DELTA = [row[3] for row in HEXAGON_COMMUTATORS_33]
# sign of gamma_i inside gamma'_i
HEXAGON_GAMMA_SIGNS = [-1, 1, -1, 1, -1, 1, -1, -1, 1]
HEXAGON_SIGMA = [1, -1, 1, 1, 1, 1, -1, -1]
# coefficients of the additional commutators read off the gamma' formulas
HEXAGON_K = {"k1": 1, "k2": 1, "k3": -1, "k4": 1, "k5": -1, "k6": 1, "k7": -1, "k8": -1,
             "k9": 0, "k10": 0, "k11": 0, "k12": 0}

SQUARE_RELATION = "[[3,1],[4,2]]"


def exprs(texts) -> list[CommutatorExpr]:
    return [parse_expr(t) for t in texts]


def chains(texts) -> list[Chain]:
    return [parse_chain(t) for t in texts]


def cochains(texts, K: SimplicialComplex) -> list[KoszulElement]:
    return [parse_koszul(t, K) for t in texts]


def _column(rows, i):
    return [row[i] for row in rows]


@lru_cache(maxsize=None)
def _cycle_bases(m: int) -> dict[int, tuple[Chain, ...]]:
    if m == 5:
        return {3: tuple(chains(_column(PENTAGON_CYCLES, 0))),
                4: tuple(chains(_column(PENTAGON_CYCLES, 1)))}
    return {3: tuple(chains(_column(HEXAGON_CYCLES_35, 0))),
            4: tuple(chains(_column(HEXAGON_CYCLES_44, 0) + _column(HEXAGON_CYCLES_44, 1))),
            5: tuple(chains(_column(HEXAGON_CYCLES_35, 1)))}


def reference_cycle_bases(K: SimplicialComplex) -> dict[int, list[Chain]] | None:
    """Tabulated cycle bases per degree for the pentagon and hexagon, else None."""
    if K == PENTAGON or K == HEXAGON:
        return {d: list(b) for d, b in _cycle_bases(K.m).items()}
    return None


def reference_cohomology_bases(K: SimplicialComplex) -> dict[int, list[KoszulElement]] | None:
    """Tabulated cocycle representatives per degree, plus the top class, else None."""
    if K == PENTAGON:
        return {3: cochains(_column(PENTAGON_PRODUCTS, 0), K),
                4: cochains(_column(PENTAGON_PRODUCTS, 1), K),
                7: cochains([PENTAGON_TOP], K)}
    if K == HEXAGON:
        return {3: cochains(_column(HEXAGON_PRODUCTS_35, 0), K),
                4: cochains(_column(HEXAGON_PRODUCTS_44, 0) + _column(HEXAGON_PRODUCTS_44, 1), K),
                5: cochains(_column(HEXAGON_PRODUCTS_35, 1), K),
                8: cochains([HEXAGON_TOP], K)}
    return None


def reference_pairings(K: SimplicialComplex) -> dict[tuple[int, int], tuple[list, list, KoszulElement]]:
    """(p, q) -> (left basis, right basis, top) for each tabulated product table.

    Row a of a table pairs left[a] with right[a] to the top class.
    """
    if K == PENTAGON:
        return {(3, 4): (cochains(_column(PENTAGON_PRODUCTS, 0), K),
                         cochains(_column(PENTAGON_PRODUCTS, 1), K),
                         parse_koszul(PENTAGON_TOP, K))}
    if K == HEXAGON:
        top = parse_koszul(HEXAGON_TOP, K)
        return {(3, 5): (cochains(_column(HEXAGON_PRODUCTS_35, 0), K),
                         cochains(_column(HEXAGON_PRODUCTS_35, 1), K), top),
                (4, 4): (cochains(_column(HEXAGON_PRODUCTS_44, 0), K),
                         cochains(_column(HEXAGON_PRODUCTS_44, 1), K), top)}
    return {}

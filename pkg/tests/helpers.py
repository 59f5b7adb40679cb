"""Random inputs and brute-force oracles shared by the test modules."""

import random
from itertools import combinations

from macloops.simplicial import SimplicialComplex


def random_complex(rng: random.Random, m: int) -> SimplicialComplex:
    faces = []
    for _ in range(rng.randint(0, 2 * m)):
        size = rng.randint(1, m)
        faces.append(rng.sample(range(1, m + 1), size))
    return SimplicialComplex.from_faces(m, faces)


def random_flag_complex(rng: random.Random, m: int, p: float = 0.5) -> SimplicialComplex:
    """Clique complex of a random graph on [m]."""
    edges = {e for e in combinations(range(1, m + 1), 2) if rng.random() < p}
    cliques = [(v,) for v in range(1, m + 1)]
    for size in range(2, m + 1):
        for c in combinations(range(1, m + 1), size):
            if all(e in edges for e in combinations(c, 2)):
                cliques.append(c)
    return SimplicialComplex.from_faces(m, cliques)


def small_corpus() -> list[SimplicialComplex]:
    from macloops.simplicial import polygon_boundary
    out = [polygon_boundary(n) for n in range(3, 7)]
    out += [SimplicialComplex.simplex(m) for m in range(1, 5)]
    out.append(SimplicialComplex.from_faces(4, [[1, 2, 3], [3, 4]]))
    out.append(SimplicialComplex.from_faces(5, [[1, 2], [3], [4, 5]]))
    out.append(SimplicialComplex.from_faces(6, [[1, 2, 3], [2, 3, 4], [4, 5], [5, 6, 1]]))
    return out


def rewrite_closure(alg, word) -> tuple[bool, dict]:
    """Exhaustive search over legal swaps: (vanishes, {word: sign})."""
    seen = {tuple(word): 1}
    stack = [tuple(word)]
    vanishes = False
    while stack:
        w = stack.pop()
        for p in range(len(w) - 1):
            a, b = w[p], w[p + 1]
            if a == b:
                vanishes = True
            elif alg.anticommute(a, b):
                nxt = w[:p] + (b, a) + w[p + 2:]
                if nxt not in seen:
                    seen[nxt] = -seen[w]
                    stack.append(nxt)
    return vanishes, seen


def random_rewrites(alg, word, rng: random.Random, steps: int):
    """Apply random legal swaps; returns (sign, word), or None once two equal letters meet."""
    w = list(word)
    sign = 1
    for _ in range(steps):
        if any(w[p] == w[p + 1] for p in range(len(w) - 1)):
            return None
        moves = [p for p in range(len(w) - 1) if alg.anticommute(w[p], w[p + 1])]
        if not moves:
            break
        p = rng.choice(moves)
        w[p], w[p + 1] = w[p + 1], w[p]
        sign = -sign
    if any(w[p] == w[p + 1] for p in range(len(w) - 1)):
        return None
    return sign, tuple(w)

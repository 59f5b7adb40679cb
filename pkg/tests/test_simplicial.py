import json
import random
from itertools import combinations

import pytest

from helpers import random_complex, small_corpus
from macloops.simplicial import (SimplicialComplex, connected_components, full_subcomplex, hochster_cohomology,
                                 is_face, is_flag, minimal_non_faces, polygon_boundary, reduced_betti,
                                 reduced_euler_characteristic)

PENTAGON = polygon_boundary(5)


def test_polygon_boundary():
    assert PENTAGON.maximal_faces == ((1, 2), (1, 5), (2, 3), (3, 4), (4, 5))
    assert polygon_boundary(6).m == 6 and len(polygon_boundary(6).maximal_faces) == 6
    assert set(polygon_boundary(3).maximal_faces) == {(1, 2), (2, 3), (1, 3)}
    with pytest.raises(ValueError):
        polygon_boundary(2)


def test_is_face():
    assert is_face(PENTAGON, (1, 2))
    assert not is_face(PENTAGON, (1, 3))
    assert is_face(PENTAGON, ())
    with pytest.raises(ValueError):
        is_face(PENTAGON, (1, 9))


def test_is_flag():
    assert is_flag(PENTAGON)
    assert not is_flag(polygon_boundary(3))
    assert is_flag(SimplicialComplex.simplex(4))
    assert minimal_non_faces(polygon_boundary(3)) == [(1, 2, 3)]


def test_flag_against_brute_force():
    rng = random.Random(3)
    for _ in range(100):
        K = random_complex(rng, rng.randint(1, 6))
        ground = range(1, K.m + 1)
        brute = all((v,) in K.faces for v in ground) and all(
            face in K.faces for r in range(3, K.m + 1) for face in combinations(ground, r)
            if all(e in K.faces for e in combinations(face, 2)))
        assert is_flag(K) == brute


def test_full_subcomplex():
    path = full_subcomplex(PENTAGON, (1, 2, 3))
    assert path.maximal_faces == ((1, 2), (2, 3))
    assert full_subcomplex(PENTAGON, PENTAGON.vertices) == PENTAGON
    assert full_subcomplex(PENTAGON, (1, 3)).maximal_faces == ((1,), (3,))
    with pytest.raises(ValueError):
        full_subcomplex(PENTAGON, (0, 1))


def test_full_subcomplex_brute_force():
    rng = random.Random(11)
    for _ in range(60):
        K = random_complex(rng, rng.randint(1, 6))
        for r in range(K.m + 1):
            for I in combinations(range(1, K.m + 1), r):
                assert full_subcomplex(K, I).faces == {J for J in K.faces if set(J) <= set(I)}


def test_downward_closure():
    rng = random.Random(5)
    for _ in range(50):
        K = random_complex(rng, rng.randint(1, 6))
        for face in K.faces:
            for r in range(len(face)):
                for sub in combinations(face, r):
                    assert is_face(K, sub)


def test_connected_components():
    assert connected_components(PENTAGON, (1, 3)) == [(1,), (3,)]
    assert connected_components(PENTAGON) == [(1, 2, 3, 4, 5)]
    assert connected_components(PENTAGON, (1, 2, 4)) == [(1, 2), (4,)]
    K = SimplicialComplex.from_faces(4, [[2, 4]])
    assert connected_components(K) == [(1,), (2, 4), (3,)]


def test_reduced_betti():
    assert reduced_betti(full_subcomplex(PENTAGON, ())) == {-1: 1}
    assert reduced_betti(PENTAGON) == {1: 1}
    assert reduced_betti(full_subcomplex(PENTAGON, (1, 3))) == {0: 1}
    assert reduced_betti(SimplicialComplex.simplex(3)) == {}


def test_cone_is_acyclic():
    rng = random.Random(2)
    for _ in range(40):
        K = random_complex(rng, rng.randint(1, 5))
        apex = K.m + 1
        cone = SimplicialComplex.from_faces(apex, [f + (apex,) for f in K.maximal_faces] + [(apex,)])
        assert reduced_betti(cone) == {}


def test_euler_characteristic():
    rng = random.Random(9)
    for K in small_corpus() + [random_complex(rng, rng.randint(1, 6)) for _ in range(60)]:
        alternating = sum((-1) ** d * b for d, b in reduced_betti(K).items())
        assert alternating == reduced_euler_characteristic(K)


def test_hochster():
    assert hochster_cohomology(PENTAGON) == {0: 1, 3: 5, 4: 5, 7: 1}
    assert hochster_cohomology(polygon_boundary(6)) == {0: 1, 3: 9, 4: 16, 5: 9, 8: 1}
    assert hochster_cohomology(SimplicialComplex.simplex(4)) == {0: 1}
    rng = random.Random(4)
    for _ in range(30):
        assert hochster_cohomology(random_complex(rng, rng.randint(0, 5))).get(0) == 1


def test_json_round_trip():
    K = SimplicialComplex.from_faces(4, [[3, 1], [2, 3, 4], [1]])
    data = json.loads(K.dumps())
    assert data == {"m": 4, "maximal_faces": [[1, 3], [2, 3, 4]]}
    assert SimplicialComplex.from_json(data) == K
    for bad in [{}, {"m": "x", "maximal_faces": []}, {"m": 3, "maximal_faces": [[1, 4]]}, {"m": 3, "maximal_faces": 5}]:
        with pytest.raises(ValueError):
            SimplicialComplex.from_json(bad)

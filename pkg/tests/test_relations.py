import json

import pytest

from macloops import reference as ref
from macloops.loopalg import QuotientTensorAlgebra, parse_expr
from macloops.relations import (RelationTemplate, build_hexagon_template, build_pentagon_relation, free_template,
                                instantiate, pentagon_relation_terms, preset_template, solve_coefficients,
                                verify_zero)


def test_pentagon_relation():
    assert verify_zero(build_pentagon_relation())
    for n in range(5):
        assert not verify_zero(build_pentagon_relation(omit=[n]))


def test_pentagon_terms_use_generators_only():
    from macloops.generators import enumerate_gptw_generators
    gens = {g.expr for g in enumerate_gptw_generators(ref.PENTAGON)}
    for _, (a, b) in pentagon_relation_terms():
        assert a in gens and b in gens


def test_single_bracket_nonzero():
    alg = QuotientTensorAlgebra(ref.PENTAGON)
    _, first = pentagon_relation_terms()[0]
    assert not verify_zero(alg.expand(first))


def test_hexagon_template_shape():
    t = build_hexagon_template()
    assert len(t.fixed) == 17 and len(t.unknowns) == 12
    assert t.degree == 6
    sigmas = [c for c, _ in t.fixed[9:]]
    assert sigmas[0] == 1 and sigmas[1] == -1


def test_additional_commutators_are_brackets_of_generators():
    from macloops.generators import enumerate_gptw_generators
    degree2 = {g.expr for g in enumerate_gptw_generators(ref.HEXAGON) if g.degree == 2}
    for _, (_, (x, y)) in build_hexagon_template().unknowns:
        for e in (x, y):
            assert e in degree2 or (e[1], e[0]) in degree2


def test_hexagon_literal_assignment_fails():
    t = build_hexagon_template()
    residue = instantiate(t, ref.HEXAGON)
    assert len(residue) == 96
    sol = solve_coefficients(t, ref.HEXAGON)
    assert sol.consistent and sol.dimension == 4
    assert not sol.contains(t.assignment)


def test_hexagon_oriented_assignment_solves():
    t = build_hexagon_template(oriented=True)
    assert verify_zero(instantiate(t, ref.HEXAGON))
    sol = solve_coefficients(t, ref.HEXAGON)
    assert sol.contains(t.assignment)
    assert all(t.assignment[k] == 0 for k in ("k9", "k10", "k11", "k12"))


def test_solution_members_round_trip():
    for oriented in (False, True):
        t = build_hexagon_template(oriented)
        sol = solve_coefficients(t, ref.HEXAGON)
        members = [sol.particular] + [[p + v for p, v in zip(sol.particular, h)] for h in sol.homogeneous]
        for x in members:
            assert verify_zero(instantiate(t, ref.HEXAGON, dict(zip(sol.ids, x))))


def test_fixed_signs_are_forced():
    """With all 29 coefficients free, the fixed ones are proportional to the tabulated signs."""
    t = build_hexagon_template()
    sol = solve_coefficients(free_template(t), ref.HEXAGON)
    signs = [c for c, _ in t.fixed]
    fixed_parts = [v[:17] for v in sol.homogeneous if any(v[:17])]
    assert fixed_parts
    for part in fixed_parts:
        ratio = part[0] * signs[0]
        assert [ratio * s for s in signs] == part
    # sigma_j follows the signs of the degree-3 table, gamma signs oppose the mixed table
    assert ref.HEXAGON_SIGMA == [s1 * s2 for s1, _, s2, _ in ref.HEXAGON_COMMUTATORS_33]
    assert ref.HEXAGON_GAMMA_SIGNS == [-s for _, s, _, _ in ref.HEXAGON_COMMUTATORS_24]


def test_pentagon_template_no_unknowns():
    template, K = preset_template("pentagon")
    sol = solve_coefficients(template, K)
    assert sol.consistent and sol.dimension == 0 and sol.ids == []


def test_inconsistent_template():
    t = RelationTemplate([(1, (3, 1))], [("k", (4, 2))])
    sol = solve_coefficients(t, ref.SQUARE)
    assert not sol.consistent and sol.dimension is None


def test_square_relation():
    template, K = preset_template("square")
    assert verify_zero(instantiate(template, K))


def test_template_json_round_trip():
    t = build_hexagon_template()
    data = json.loads(json.dumps(t.to_json()))
    assert data["fixed"][0] == {"coeff": -1, "expr": "[[3,1],[4,[5,[6,2]]]]"}
    back = RelationTemplate.from_json(data)
    assert back.fixed == t.fixed and back.unknowns == t.unknowns and back.assignment == t.assignment


def test_template_validation():
    with pytest.raises(ValueError):
        RelationTemplate([(1, (1, 2)), (1, (1, (2, 3)))])
    with pytest.raises(ValueError):
        RelationTemplate.loads("[1, 2]")
    with pytest.raises(ValueError):
        RelationTemplate.from_json({"fixed": [{"expr": "[1,2]"}]})
    with pytest.raises(ValueError):
        instantiate(RelationTemplate([(1, parse_expr("[7,1]"))]), ref.PENTAGON)
    with pytest.raises(ValueError):
        preset_template("octagon")

"""Relations among iterated commutators, and solving for unknown coefficients.

A relation template is a sum of integer multiples of commutator expressions
plus terms with unknown coefficients. Expanding everything in the quotient
tensor algebra turns "the sum is zero" into one linear equation per
normal-form word.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Mapping, Sequence

from . import _linalg
from . import reference as ref
from .loopalg import (CommutatorExpr, QuotientTensorAlgebra, TensorElement, Word, expr_degree, expr_leaves,
                      format_expr, normalize_expr, parse_expr)
from .simplicial import SimplicialComplex


@dataclass
class RelationTemplate:
    fixed: list[tuple[int, CommutatorExpr]]
    unknowns: list[tuple[str, CommutatorExpr]] = field(default_factory=list)
    assignment: dict[str, int] | None = None

    def __post_init__(self):
        self.fixed = [(int(c), normalize_expr(e)) for c, e in self.fixed]
        self.unknowns = [(str(k), normalize_expr(e)) for k, e in self.unknowns]
        ids = [k for k, _ in self.unknowns]
        if len(set(ids)) != len(ids):
            raise ValueError("duplicate unknown ids")
        degrees = {expr_degree(e) for _, e in self.fixed + self.unknowns}
        if len(degrees) > 1:
            raise ValueError(f"template is not homogeneous: degrees {sorted(degrees)}")
        if self.assignment is not None:
            missing = set(ids) - set(self.assignment)
            if missing:
                raise ValueError(f"assignment lacks {sorted(missing)}")

    @property
    def ids(self) -> list[str]:
        return [k for k, _ in self.unknowns]

    @property
    def degree(self) -> int | None:
        terms = self.fixed + self.unknowns
        return expr_degree(terms[0][1]) if terms else None

    def max_letter(self) -> int:
        return max((max(expr_leaves(e)) for _, e in self.fixed + self.unknowns), default=0)

    def to_json(self) -> dict:
        data: dict = {
            "fixed": [{"coeff": c, "expr": format_expr(e)} for c, e in self.fixed],
            "unknowns": [{"id": k, "expr": format_expr(e)} for k, e in self.unknowns],
        }
        if self.assignment is not None:
            data["assignment"] = dict(self.assignment)
        return data

    @classmethod
    def from_json(cls, data: Mapping) -> "RelationTemplate":
        try:
            fixed = [(t["coeff"], _read_expr(t["expr"])) for t in data.get("fixed", [])]
            unknowns = [(t["id"], _read_expr(t["expr"])) for t in data.get("unknowns", [])]
            assignment = data.get("assignment")
            if assignment is not None:
                assignment = {str(k): int(v) for k, v in assignment.items()}
        except (KeyError, TypeError, AttributeError) as exc:
            raise ValueError(f"malformed template JSON: {exc}") from None
        return cls(fixed, unknowns, assignment)

    @classmethod
    def loads(cls, text: str) -> "RelationTemplate":
        try:
            data = json.loads(text)
        except json.JSONDecodeError as exc:
            raise ValueError(f"template is not valid JSON: {exc}") from None
        if not isinstance(data, dict):
            raise ValueError("template JSON must be an object")
        return cls.from_json(data)


def _read_expr(value) -> CommutatorExpr:
    return parse_expr(value) if isinstance(value, str) else normalize_expr(value)


def _algebra(K: SimplicialComplex, template: RelationTemplate) -> QuotientTensorAlgebra:
    if template.max_letter() > K.m:
        raise ValueError(f"template uses letter {template.max_letter()} but K has {K.m} vertices")
    return QuotientTensorAlgebra(K)


def instantiate(template: RelationTemplate, K: SimplicialComplex,
                assignment: Mapping[str, int] | None = None) -> TensorElement:
    """Expand the template with the unknowns set to ``assignment`` (default: the template's own)."""
    alg = _algebra(K, template)
    if assignment is None:
        assignment = template.assignment or {}
    total = alg.zero()
    for c, e in template.fixed:
        total = total + c * alg.expand(e)
    for k, e in template.unknowns:
        if k not in assignment:
            raise ValueError(f"no value for unknown {k}")
        value = Fraction(assignment[k])
        if value.denominator != 1:
            raise ValueError(f"unknown {k} = {value} is not an integer")
        total = total + int(value) * alg.expand(e)
    return total


def verify_zero(e: TensorElement) -> bool:
    return not e


@dataclass
class SolutionSet:
    """Affine solution space {particular + span(homogeneous)} of a template's unknowns."""

    ids: list[str]
    particular: list[Fraction] | None
    homogeneous: list[list[int]]
    n_words: int
    _rows: list[list[int]] = field(repr=False, default_factory=list)
    _rhs: list[int] = field(repr=False, default_factory=list)

    @property
    def consistent(self) -> bool:
        return self.particular is not None

    @property
    def dimension(self) -> int | None:
        return len(self.homogeneous) if self.consistent else None

    def contains(self, assignment: Mapping[str, int | Fraction]) -> bool:
        x = [Fraction(assignment[k]) for k in self.ids]
        return all(sum(a * v for a, v in zip(row, x)) == b for row, b in zip(self._rows, self._rhs))

    def to_json(self) -> dict:
        return {
            "consistent": self.consistent,
            "unknowns": self.ids,
            "equations": self.n_words,
            "particular": None if self.particular is None else {k: str(v) for k, v in zip(self.ids, self.particular)},
            "dimension": self.dimension,
            "homogeneous_basis": [dict(zip(self.ids, v)) for v in self.homogeneous] if self.consistent else [],
        }


def solve_coefficients(template: RelationTemplate, K: SimplicialComplex) -> SolutionSet:
    """Solve for the unknowns making the expanded template vanish, word by word."""
    alg = _algebra(K, template)
    fixed = alg.zero()
    for c, e in template.fixed:
        fixed = fixed + c * alg.expand(e)
    parts = [alg.expand(e) for _, e in template.unknowns]
    words: list[Word] = sorted(set(fixed).union(*parts), key=lambda w: (len(w), w))
    rows = [[p.get(w, 0) for p in parts] for w in words]
    rhs = [-fixed.get(w, 0) for w in words]
    n = len(parts)
    particular = _linalg.solve(rows, rhs, n)
    homogeneous = _linalg.nullspace(rows, n) if n else []
    return SolutionSet(template.ids, particular, homogeneous, len(words), rows, rhs)


def free_template(template: RelationTemplate) -> RelationTemplate:
    """The same template with every fixed coefficient turned into an unknown f1, f2, ..."""
    fixed_ids = [f"f{n}" for n in range(1, len(template.fixed) + 1)]
    unknowns = list(zip(fixed_ids, (e for _, e in template.fixed))) + template.unknowns
    assignment = None
    if template.assignment is not None:
        assignment = {**dict(zip(fixed_ids, (c for c, _ in template.fixed))), **template.assignment}
    return RelationTemplate([], unknowns, assignment)


def pentagon_relation_terms() -> list[tuple[int, CommutatorExpr]]:
    """Signed brackets [alpha_i, beta_i] whose sum is the pentagon relation."""
    alphas = ref.exprs(ref.PENTAGON_ALPHA)
    betas = ref.exprs(ref.PENTAGON_BETA)
    return [(s, (a, b)) for s, a, b in zip(ref.PENTAGON_SIGNS, alphas, betas)]


def build_pentagon_relation(omit: Sequence[int] = ()) -> TensorElement:
    """Expand the pentagon relation, optionally leaving out summands by 0-based position."""
    terms = [t for n, t in enumerate(pentagon_relation_terms()) if n not in set(omit)]
    return instantiate(RelationTemplate(terms), ref.PENTAGON)


def _lead(expr: CommutatorExpr) -> int:
    return min(expr_leaves(expr))


def build_hexagon_template(oriented: bool = False) -> RelationTemplate:
    """Hexagon relation with 17 fixed brackets and 12 unknown-coefficient brackets.

    Fixed terms are [alpha_i, +-gamma_i] and sigma_j [beta_j, delta_j]. Each
    unknown k multiplies [alpha_i, [[a,b],[c,d]]] for the additional
    commutators of row i. With ``oriented`` each [[a,b],[c,d]] is rewritten
    with the pair of smaller least index first, the orientation under which
    the tabulated k values solve the system.
    """
    fixed: list[tuple[int, CommutatorExpr]] = []
    unknowns: list[tuple[str, CommutatorExpr]] = []
    gamma_signs = ref.HEXAGON_GAMMA_SIGNS
    for (alpha, _, gamma, extra), s in zip(ref.HEXAGON_COMMUTATORS_24, gamma_signs):
        a = parse_expr(alpha)
        fixed.append((s, (a, parse_expr(gamma))))
        for k, text in extra:
            x = parse_expr(text)
            if oriented and _lead(x[1]) < _lead(x[0]):
                x = (x[1], x[0])
            unknowns.append((k, (a, x)))
    for sigma, beta, delta in zip(ref.HEXAGON_SIGMA, ref.HEXAGON_BETA, ref.HEXAGON_DELTA):
        fixed.append((sigma, (parse_expr(beta), parse_expr(delta))))
    return RelationTemplate(fixed, unknowns, dict(ref.HEXAGON_K))


def square_template() -> RelationTemplate:
    return RelationTemplate([(1, parse_expr(ref.SQUARE_RELATION))])


PRESETS = {
    "pentagon": (lambda: RelationTemplate(pentagon_relation_terms()), ref.PENTAGON),
    "hexagon": (build_hexagon_template, ref.HEXAGON),
    "hexagon-oriented": (lambda: build_hexagon_template(oriented=True), ref.HEXAGON),
    "square": (square_template, ref.SQUARE),
}


def preset_template(name: str) -> tuple[RelationTemplate, SimplicialComplex]:
    if name not in PRESETS:
        raise ValueError(f"unknown relation preset {name!r}; choose from {', '.join(PRESETS)}")
    build, K = PRESETS[name]
    return build(), K

"""The quotient tensor algebra T<mu_1..mu_m> / (mu_i^2, mu_i mu_j + mu_j mu_i for edges {i,j}).

For a flag complex K this is the loop homology of the Davis-Januszkiewicz
space, and the loop homology of Z_K sits inside it as the commutator
subalgebra. Words are tuples of generator indices; elements are integer
combinations of words in normal form.
"""

from __future__ import annotations

import json
import re
from typing import Iterable, Mapping, Sequence, Union

from ._lincomb import LinearCombination
from .simplicial import SimplicialComplex, require_flag

Word = tuple[int, ...]
CommutatorExpr = Union[int, tuple["CommutatorExpr", "CommutatorExpr"]]


class TensorElement(LinearCombination):
    """Integer combination of normal-form words of one algebra."""

    __slots__ = ("algebra",)

    def __init__(self, algebra: "QuotientTensorAlgebra", terms: Mapping | Iterable = ()):
        self.algebra = algebra
        super().__init__(terms)

    @staticmethod
    def _sort_key(word: Word):
        return (len(word), word)

    def _new(self, terms):
        return TensorElement(self.algebra, terms)

    def _format_key(self, word: Word) -> str:
        return " ".join(f"m{i}" for i in word) or "1"

    def __mul__(self, other: "TensorElement") -> "TensorElement":
        if isinstance(other, int):
            return other * self
        return self.algebra.multiply(self, other)

    @property
    def degree(self) -> int | None:
        ds = {len(w) for w in self}
        if len(ds) > 1:
            raise ValueError(f"element is not homogeneous: degrees {sorted(ds)}")
        return ds.pop() if ds else None

    def to_json(self) -> list[dict]:
        return [{"word": list(w), "coeff": c} for w, c in self.items()]


class QuotientTensorAlgebra:
    """Sign-tracked arithmetic in the loop homology algebra of a flag complex."""

    def __init__(self, K: SimplicialComplex):
        require_flag(K)
        self.K = K
        self.m = K.m
        self._adjacent = {v: K.neighbours(v) for v in K.vertices}
        self._expanded: dict = {}

    def anticommute(self, a: int, b: int) -> bool:
        return b in self._adjacent[a]

    def _check_word(self, word: Sequence[int]) -> Word:
        w = tuple(word)
        for x in w:
            if not isinstance(x, int) or not 1 <= x <= self.m:
                raise ValueError(f"letter {x!r} outside [1..{self.m}]")
        return w

    def is_zero_word(self, word: Sequence[int]) -> bool:
        """True iff two equal letters can be made adjacent by legal swaps."""
        w = self._check_word(word)
        for p, a in enumerate(w):
            for q in range(p + 1, len(w)):
                if w[q] == a:
                    return True
                if not self.anticommute(a, w[q]):
                    break
        return False

    def normal_form(self, word: Sequence[int]) -> tuple[int, Word]:
        """Return (sign, w') with word = sign * w', w' the lexicographically least equivalent word.

        A word that vanishes in the algebra returns (0, ()).
        """
        w = self._check_word(word)
        if self.is_zero_word(w):
            return 0, ()
        rest = list(w)
        out = []
        sign = 1
        while rest:
            best = None
            seen = set()
            # only the first occurrence of a letter can be available
            for k, x in enumerate(rest):
                if x not in seen and (best is None or x < rest[best]):
                    if all(self.anticommute(x, y) for y in rest[:k]):
                        best = k
                seen.add(x)
            if best % 2:
                sign = -sign
            out.append(rest.pop(best))
        return sign, tuple(out)

    def element(self, terms: Mapping | Iterable[tuple[Sequence[int], int]] = ()) -> TensorElement:
        """Build an element from arbitrary (unnormalised) words."""
        items = terms.items() if isinstance(terms, Mapping) else terms
        acc = []
        for word, c in items:
            s, w = self.normal_form(word)
            if s:
                acc.append((w, s * c))
        return TensorElement(self, acc)

    def word(self, *letters: int) -> TensorElement:
        return self.element([(letters, 1)])

    def generator(self, i: int) -> TensorElement:
        return self.word(i)

    def zero(self) -> TensorElement:
        return TensorElement(self)

    def multiply(self, a: TensorElement, b: TensorElement) -> TensorElement:
        return self.element((wa + wb, ca * cb) for wa, ca in a.items() for wb, cb in b.items())

    def commutator(self, a: TensorElement, b: TensorElement) -> TensorElement:
        """Graded commutator ab - (-1)^(deg a deg b) ba of homogeneous elements."""
        da, db = a.degree, b.degree
        if da is None or db is None:
            return self.zero()
        sign = -1 if (da * db) % 2 == 0 else 1
        return self.multiply(a, b) + sign * self.multiply(b, a)

    def expand(self, expr: CommutatorExpr) -> TensorElement:
        expr = normalize_expr(expr)
        if expr not in self._expanded:
            if isinstance(expr, int):
                result = self.generator(expr)
            else:
                result = self.commutator(self.expand(expr[0]), self.expand(expr[1]))
            self._expanded[expr] = result
        return self._expanded[expr]

    def parse(self, text: str) -> TensorElement:
        return self.element(parse_words(text))


_WTERM = re.compile(r"\s*([+-])?\s*(\d+)?\s*((?:(?:m|mu|\\mu|μ)_?\{?\d+\}?\s*)+)")
_WLETTER = re.compile(r"(?:m|mu|\\mu|μ)_?\{?(\d+)\}?")


def parse_words(text: str) -> list[tuple[Word, int]]:
    """Parse ``"-m1 m3 m2 + 2 m4 m5"`` (also ``mu_1``, ``\\mu_1``) into (word, coeff) pairs."""
    text = text.strip()
    if text in ("", "0"):
        return []
    out = []
    pos = 0
    while pos < len(text):
        match = _WTERM.match(text, pos)
        if not match or match.end() == pos:
            raise ValueError(f"cannot parse word sum at: {text[pos:]!r}")
        sgn, coeff, body = match.groups()
        n = (int(coeff) if coeff else 1) * (-1 if sgn == "-" else 1)
        out.append((tuple(int(i) for i in _WLETTER.findall(body)), n))
        pos = match.end()
    return out


def normalize_expr(expr) -> CommutatorExpr:
    """Convert nested lists/tuples into the canonical nested-tuple form, validating shape."""
    if isinstance(expr, bool):
        raise ValueError("commutator leaves must be integers")
    if isinstance(expr, int):
        return expr
    if isinstance(expr, (list, tuple)) and len(expr) == 2:
        return (normalize_expr(expr[0]), normalize_expr(expr[1]))
    raise ValueError(f"malformed commutator expression: {expr!r}")


def parse_expr(text: str) -> CommutatorExpr:
    """Parse bracket notation such as ``"[4,[5,2]]"``."""
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ValueError(f"malformed commutator expression {text!r}: {exc}") from None
    return normalize_expr(data)


def format_expr(expr: CommutatorExpr) -> str:
    if isinstance(expr, int):
        return str(expr)
    return f"[{format_expr(expr[0])},{format_expr(expr[1])}]"


def expr_degree(expr: CommutatorExpr) -> int:
    return 1 if isinstance(expr, int) else expr_degree(expr[0]) + expr_degree(expr[1])


def expr_leaves(expr: CommutatorExpr) -> list[int]:
    return [expr] if isinstance(expr, int) else expr_leaves(expr[0]) + expr_leaves(expr[1])


def right_nested(indices: Sequence[int]) -> CommutatorExpr:
    """[i1, [i2, ..., [i_{k-1}, i_k]...]] from its index sequence (k >= 2)."""
    if len(indices) < 2:
        raise ValueError("a nested commutator needs at least two letters")
    expr: CommutatorExpr = (indices[-2], indices[-1])
    for i in reversed(indices[:-2]):
        expr = (i, expr)
    return expr


def right_nested_indices(expr: CommutatorExpr) -> list[int] | None:
    """Inverse of right_nested; None for any other tree shape."""
    expr = normalize_expr(expr)
    if isinstance(expr, int):
        return None
    out = []
    while isinstance(expr, tuple):
        left, right = expr
        if not isinstance(left, int):
            return None
        out.append(left)
        expr = right
    out.append(expr)
    return out

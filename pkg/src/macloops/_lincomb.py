from __future__ import annotations

from typing import Hashable, Iterable, Iterator, Mapping, TypeVar

K = TypeVar("K", bound=Hashable)


class LinearCombination(Mapping):
    """Immutable finitely supported integer combination of sortable basis keys.

    Subclasses supply ``_format_key`` for text rendering. Zero coefficients
    are dropped and keys are kept sorted, so equality and iteration order
    are canonical.
    """

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Mapping | Iterable[tuple] = ()):
        acc: dict = {}
        items = terms.items() if isinstance(terms, Mapping) else terms
        for key, c in items:
            acc[key] = acc.get(key, 0) + c
        self._terms = {k: v for k, v in sorted(acc.items(), key=lambda kv: self._sort_key(kv[0])) if v}
        self._hash = None

    @staticmethod
    def _sort_key(key):
        return key

    def _new(self, terms):
        return type(self)(terms)

    def __getitem__(self, key):
        return self._terms[key]

    def __iter__(self) -> Iterator:
        return iter(self._terms)

    def __len__(self) -> int:
        return len(self._terms)

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __eq__(self, other) -> bool:
        if isinstance(other, int) and not isinstance(other, bool) and other == 0:
            return not self._terms
        if not isinstance(other, LinearCombination):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    def __add__(self, other):
        if isinstance(other, int) and other == 0:
            return self
        return self._new(list(self._terms.items()) + list(other._terms.items()))

    __radd__ = __add__

    def __neg__(self):
        return self._new({k: -v for k, v in self._terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def __rmul__(self, n: int):
        if not isinstance(n, int):
            return NotImplemented
        return self._new({k: n * v for k, v in self._terms.items()})

    def _format_key(self, key) -> str:
        return str(key)

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        out = []
        for i, (key, c) in enumerate(self._terms.items()):
            mag = "" if abs(c) == 1 else f"{abs(c)} "
            body = f"{mag}{self._format_key(key)}"
            if i == 0:
                out.append(("-" if c < 0 else "") + body)
            else:
                out.append(("- " if c < 0 else "+ ") + body)
        return " ".join(out)

    def __repr__(self) -> str:
        return f"{type(self).__name__}({str(self)!r})"

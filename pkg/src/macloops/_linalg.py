"""Exact linear algebra over the integers and rationals.

Matrices are plain lists of rows. Rational elimination is delegated to
sympy's ``DomainMatrix``; the Smith normal form is computed here on sparse
integer rows because sympy's dense implementation suffers coefficient
blow-up on boundary matrices of a few hundred cells.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd
from typing import Sequence

from sympy import QQ
from sympy.polys.matrices import DomainMatrix

Matrix = Sequence[Sequence[int | Fraction]]


def _to_qq(rows: Matrix, ncols: int) -> DomainMatrix:
    data = [[QQ(int(x.numerator), int(x.denominator)) if isinstance(x, Fraction) else QQ(int(x))
             for x in row] for row in rows]
    return DomainMatrix(data, (len(rows), ncols), QQ)


def _frac(x) -> Fraction:
    return Fraction(int(x.numerator), int(x.denominator))


def rref(rows: Matrix, ncols: int) -> tuple[list[list[Fraction]], tuple[int, ...]]:
    """Reduced row echelon form and pivot columns."""
    if not rows or ncols == 0:
        return [[Fraction(0)] * ncols for _ in rows], ()
    reduced, pivots = _to_qq(rows, ncols).rref()
    return [[_frac(x) for x in row] for row in reduced.to_list()], tuple(pivots)


def rank(rows: Matrix, ncols: int) -> int:
    if not rows or ncols == 0:
        return 0
    return _to_qq(rows, ncols).rank()


def primitive(vec: Sequence[Fraction | int]) -> list[int]:
    """Scale a rational vector to a primitive integer vector, first nonzero entry positive."""
    den = 1
    for x in vec:
        den = den * Fraction(x).denominator // gcd(den, Fraction(x).denominator)
    ints = [int(Fraction(x) * den) for x in vec]
    g = 0
    for x in ints:
        g = gcd(g, x)
    if g == 0:
        return ints
    lead = next(x for x in ints if x)
    if lead < 0:
        g = -g
    return [x // g for x in ints]


def nullspace(rows: Matrix, ncols: int) -> list[list[int]]:
    """Basis of the right kernel, as primitive integer vectors in echelon order."""
    if ncols == 0:
        return []
    reduced, pivots = rref(rows, ncols)
    pivset = set(pivots)
    basis = []
    for free in range(ncols):
        if free in pivset:
            continue
        vec = [Fraction(0)] * ncols
        vec[free] = Fraction(1)
        for r, p in enumerate(pivots):
            vec[p] = -reduced[r][free]
        basis.append(primitive(vec))
    return basis


def solve(rows: Matrix, rhs: Sequence[int | Fraction], ncols: int) -> list[Fraction] | None:
    """One rational solution of ``rows @ x = rhs`` (free variables set to 0), or None."""
    if ncols == 0:
        return [] if all(Fraction(b) == 0 for b in rhs) else None
    augmented = [list(row) + [b] for row, b in zip(rows, rhs)]
    if not augmented:
        return [Fraction(0)] * ncols
    reduced, pivots = rref(augmented, ncols + 1)
    if ncols in pivots:
        return None
    x = [Fraction(0)] * ncols
    for r, p in enumerate(pivots):
        x[p] = reduced[r][ncols]
    return x


def independent_columns(rows: Matrix, ncols: int) -> tuple[int, ...]:
    """Indices of the greedy (leftmost) maximal independent set of columns."""
    return rref(rows, ncols)[1]


def transpose(rows: Matrix, ncols: int) -> list[list]:
    return [[row[c] for row in rows] for c in range(ncols)]


def smith_invariants(rows: Matrix, ncols: int) -> list[int]:
    """Nonzero invariant factors d_1 | d_2 | ... of an integer matrix."""
    work = [r for r in ({c: int(v) for c, v in enumerate(row) if v} for row in rows) if r]
    diagonal = []
    while work:
        best = None
        for ri, row in enumerate(work):
            for c, v in row.items():
                if best is None or abs(v) < best[0]:
                    best = (abs(v), ri, c)
            if best[0] == 1:
                break
        _, ri, c = best
        pivot_row = work[ri]
        p = pivot_row[c]
        # row operations: reduce column c modulo the pivot
        for rj, row in enumerate(work):
            if rj != ri and c in row:
                _axpy(row, pivot_row, -(row[c] // p))
        # column operations: reduce the pivot row modulo the pivot
        quotients = {k: v // p for k, v in pivot_row.items() if k != c}
        for row in work:
            if c in row:
                factor = row[c]
                for k, q in quotients.items():
                    _add_entry(row, k, -q * factor)
        work = [r for r in work if r]
        ri = next(i for i, r in enumerate(work) if r is pivot_row)
        if len(pivot_row) == 1 and not any(c in r for i, r in enumerate(work) if i != ri):
            diagonal.append(abs(p))
            del work[ri]
    return _normalize_diagonal(diagonal)


def _add_entry(row: dict, col: int, delta: int) -> None:
    v = row.get(col, 0) + delta
    if v:
        row[col] = v
    else:
        row.pop(col, None)


def _axpy(row: dict, other: dict, scale: int) -> None:
    if scale:
        for col, v in other.items():
            _add_entry(row, col, scale * v)


def _normalize_diagonal(diagonal: list[int]) -> list[int]:
    d = sorted(diagonal)
    changed = True
    while changed:
        changed = False
        for i in range(len(d)):
            for j in range(i + 1, len(d)):
                if d[j] % d[i]:
                    g = gcd(d[i], d[j])
                    d[i], d[j] = g, d[i] * d[j] // g
                    changed = True
        d.sort()
    return d

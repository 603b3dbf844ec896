"""Exact sparse linear algebra over the rationals.

Rows are dicts mapping column keys to coefficients; keys can be any
mutually comparable values (ints, tuples).  Everything is fraction-free:
rows are scaled to primitive integer vectors and elimination uses
cross-multiplication, so no floating point and no rounding anywhere.

Pivoting is first-nonzero: the first row (in input order) to claim a
lead column becomes its pivot.  Output is deterministic for a
deterministic input order.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd, lcm


def _primitive(row) -> dict:
    """Scale a Fraction/int row to coprime integers, preserving sign."""
    out = {}
    denoms = 1
    for key, value in row.items():
        value = Fraction(value)
        if value:
            out[key] = value
            denoms = lcm(denoms, value.denominator)
    if not out:
        return {}
    nums = [int(v * denoms) for v in out.values()]
    g = 0
    for n in nums:
        g = gcd(g, n)
    return {k: n // g for k, n in zip(out, nums)}


def _normalize(row: dict) -> dict:
    g = 0
    for v in row.values():
        g = gcd(g, v)
    if g > 1:
        return {k: v // g for k, v in row.items()}
    return row


def _combine(row: dict, pivot: dict, lead) -> dict:
    # row := (pivot[lead]/g) * row - (row[lead]/g) * pivot, killing `lead`.
    a, b = row[lead], pivot[lead]
    g = gcd(a, b)
    mr, mp = b // g, a // g
    out = {k: mr * v for k, v in row.items()}
    for k, v in pivot.items():
        w = out.get(k, 0) - mp * v
        if w:
            out[k] = w
        else:
            out.pop(k, None)
    return _normalize(out)


def echelon(rows) -> dict:
    """Forward-eliminate; returns {lead column: integer pivot row}."""
    pivots = {}
    for row in rows:
        row = _primitive(row)
        while row:
            lead = min(row)
            pivot = pivots.get(lead)
            if pivot is None:
                pivots[lead] = row
                break
            row = _combine(row, pivot, lead)
    return pivots


def rank(rows) -> int:
    return len(echelon(rows))


def nullspace(rows, columns) -> list[dict]:
    """Basis of {x : row . x = 0 for all rows}, over the given columns.

    Returns one primitive integer vector per free column, in column
    order; each has entry +1 at its free column before scaling, so the
    basis is independent by construction.
    """
    pivots = echelon(rows)
    column_set = set(columns)
    for lead in pivots:
        if lead not in column_set:
            raise ValueError(f"row references unknown column {lead!r}")
    basis = []
    pivot_order = sorted(pivots, reverse=True)
    for free in columns:
        if free in pivots:
            continue
        x = {free: Fraction(1)}
        for lead in pivot_order:
            row = pivots[lead]
            residual = Fraction(0)
            for k, coeff in row.items():
                if k != lead and k in x:
                    residual += coeff * x[k]
            if residual:
                x[lead] = -residual / row[lead]
        vec = _primitive(x)
        if vec[min(vec)] < 0:
            vec = {k: -v for k, v in vec.items()}
        basis.append(vec)
    return basis


def feasible(equations) -> bool:
    """Whether the system [(coeffs, rhs), ...] has a solution.

    Decided exactly: eliminate the augmented matrix and look for a row
    of the form 0 = nonzero.  Column keys are wrapped so the augmented
    column always sorts last and can never be eliminated early.
    """
    aug_rows = []
    for coeffs, rhs in equations:
        row = {(0, k): v for k, v in coeffs.items() if v}
        rhs = Fraction(rhs)
        if rhs:
            row[(1, 0)] = -rhs
        if row:
            aug_rows.append(row)
    pivots = echelon(aug_rows)
    return (1, 0) not in pivots


class Span:
    """Incrementally built span of sparse vectors, with exact membership."""

    def __init__(self):
        self._pivots = {}

    @property
    def dim(self) -> int:
        return len(self._pivots)

    def _reduce(self, vec) -> dict:
        row = _primitive(vec)
        while row:
            lead = min(row)
            pivot = self._pivots.get(lead)
            if pivot is None:
                return row
            row = _combine(row, pivot, lead)
        return row

    def contains(self, vec) -> bool:
        return not self._reduce(vec)

    def add(self, vec) -> bool:
        """Add a vector; True if it enlarged the span."""
        row = self._reduce(vec)
        if not row:
            return False
        self._pivots[min(row)] = row
        return True

"""Exact rational feasibility with Farkas certificates.

A phase-one simplex over :class:`~fractions.Fraction` with Bland's rule, so
it always terminates and never rounds.  The public entry point is
:func:`feasibility`, which accepts free variables and mixed ``<=`` / ``=`` /
``>=`` rows and returns either a point or an infeasibility certificate.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .linalg import Vector, dot

LE, EQ, GE = "<=", "=", ">="


@dataclass(frozen=True)
class Constraint:
    coeffs: Vector
    sense: str
    rhs: Fraction


@dataclass(frozen=True)
class FeasibilityResult:
    """Either ``point`` (feasible) or ``farkas`` (one multiplier per row)."""

    point: Vector | None
    farkas: Vector | None

    @property
    def feasible(self) -> bool:
        return self.point is not None


def _phase_one(a: list[list[Fraction]], b: list[Fraction]):
    """Find x >= 0 with a x = b.  Returns (x, None) or (None, y), y^T a <= 0 < y^T b."""
    m = len(a)
    n = len(a[0]) if m else 0
    flip = [bi < 0 for bi in b]
    rows = []
    for i in range(m):
        s = -1 if flip[i] else 1
        rows.append([s * x for x in a[i]] + [Fraction(int(i == k)) for k in range(m)] + [s * b[i]])
    basis = [n + i for i in range(m)]
    width = n + m
    cost = [Fraction(0)] * n + [Fraction(1)] * m

    def reduced():
        r = list(cost)
        for i, bi in enumerate(basis):
            cb = cost[bi]
            if cb:
                row = rows[i]
                for j in range(width):
                    r[j] -= cb * row[j]
        return r

    while True:
        r = reduced()
        enter = next((j for j in range(width) if r[j] < 0), None)
        if enter is None:
            break
        best = None
        for i in range(m):
            piv = rows[i][enter]
            if piv > 0:
                ratio = rows[i][-1] / piv
                key = (ratio, basis[i])
                if best is None or key < best[0]:
                    best = (key, i)
        if best is None:  # unbounded cannot happen in phase one
            raise AssertionError("phase-one objective unbounded")
        p = best[1]
        pv = rows[p][enter]
        rows[p] = [x / pv for x in rows[p]]
        for i in range(m):
            if i != p and rows[i][enter] != 0:
                f = rows[i][enter]
                rows[i] = [x - f * y for x, y in zip(rows[i], rows[p])]
        basis[p] = enter

    value = sum((cost[bi] * rows[i][-1] for i, bi in enumerate(basis)), Fraction(0))
    if value == 0:
        x = [Fraction(0)] * n
        for i, bi in enumerate(basis):
            if bi < n:
                x[bi] = rows[i][-1]
        return x, None
    r = reduced()
    y = [Fraction(1) - r[n + i] for i in range(m)]
    y = [-yi if flip[i] else yi for i, yi in enumerate(y)]
    return None, y


def feasibility(constraints: Sequence[Constraint], nvars: int, nonneg: Sequence[bool] | None = None) -> FeasibilityResult:
    """Decide whether the constraint system has a rational solution.

    Variables are free unless ``nonneg[k]`` is true.  On infeasibility the
    result carries multipliers ``y`` (one per constraint) with
    ``sum y_r a_r`` zero on free variables and ``<= 0`` on non-negative ones,
    ``y_r <= 0`` for ``<=`` rows, ``y_r >= 0`` for ``>=`` rows and
    ``sum y_r b_r > 0``.
    """
    nonneg = list(nonneg) if nonneg is not None else [False] * nvars
    cols: list[tuple[int, int]] = []  # (variable, sign)
    for k in range(nvars):
        cols.append((k, 1))
        if not nonneg[k]:
            cols.append((k, -1))
    slack_of: dict[int, int] = {}
    for r, c in enumerate(constraints):
        if c.sense != EQ:
            slack_of[r] = len(cols) + len(slack_of)
    width = len(cols) + len(slack_of)
    a, b = [], []
    for r, c in enumerate(constraints):
        row = [sgn * Fraction(c.coeffs[k]) for k, sgn in cols] + [Fraction(0)] * len(slack_of)
        if c.sense == LE:
            row[slack_of[r]] = Fraction(1)
        elif c.sense == GE:
            row[slack_of[r]] = Fraction(-1)
        elif c.sense != EQ:
            raise ValueError(f"unknown sense {c.sense!r}")
        a.append(row)
        b.append(Fraction(c.rhs))
    if not constraints:
        return FeasibilityResult(tuple(Fraction(0) for _ in range(nvars)), None)
    x, y = _phase_one(a, b)
    if x is None:
        y = tuple(y)
        assert check_farkas(constraints, nvars, nonneg, y)
        return FeasibilityResult(None, y)
    point = [Fraction(0)] * nvars
    for (k, sgn), xv in zip(cols, x):
        point[k] += sgn * xv
    point = tuple(point)
    assert check_point(constraints, point)
    return FeasibilityResult(point, None)


def check_point(constraints: Sequence[Constraint], point: Sequence) -> bool:
    for c in constraints:
        lhs = dot(c.coeffs, point)
        if c.sense == LE and lhs > c.rhs:
            return False
        if c.sense == GE and lhs < c.rhs:
            return False
        if c.sense == EQ and lhs != c.rhs:
            return False
    return True


def check_farkas(constraints: Sequence[Constraint], nvars: int, nonneg: Sequence[bool], y: Sequence) -> bool:
    """Independent re-check of an infeasibility certificate."""
    if len(y) != len(constraints):
        return False
    for c, yr in zip(constraints, y):
        if c.sense == LE and yr > 0:
            return False
        if c.sense == GE and yr < 0:
            return False
    for k in range(nvars):
        s = sum((yr * Fraction(c.coeffs[k]) for c, yr in zip(constraints, y)), Fraction(0))
        if (nonneg[k] and s > 0) or (not nonneg[k] and s != 0):
            return False
    return sum((yr * Fraction(c.rhs) for c, yr in zip(constraints, y)), Fraction(0)) > 0

"""Exact rational linear algebra on tuples of :class:`fractions.Fraction`.

Vectors are tuples, matrices are tuples of row tuples.  Nothing here ever
touches floating point.
"""

from __future__ import annotations

from fractions import Fraction
from functools import reduce
from math import gcd, lcm
from typing import Iterable, Sequence

Vector = tuple[Fraction, ...]
Matrix = tuple[Vector, ...]


def frac(x) -> Fraction:
    """Parse an int, Fraction or a string ``"p"`` / ``"p/q"``."""
    if isinstance(x, Fraction):
        return x
    if isinstance(x, bool):
        raise TypeError("booleans are not rationals")
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, str):
        return Fraction(x.strip())
    raise TypeError(f"cannot interpret {x!r} as an exact rational (floats are rejected)")


def vec(xs: Iterable) -> Vector:
    return tuple(frac(x) for x in xs)


def mat(rows: Iterable[Iterable]) -> Matrix:
    return tuple(vec(r) for r in rows)


def zero(n: int) -> Vector:
    return (Fraction(0),) * n


def unit(n: int, i: int) -> Vector:
    return tuple(Fraction(int(k == i)) for k in range(n))


def identity(n: int) -> Matrix:
    return tuple(unit(n, i) for i in range(n))


def dot(a: Sequence, b: Sequence) -> Fraction:
    return sum((x * y for x, y in zip(a, b)), Fraction(0))


def add(a: Sequence, b: Sequence) -> Vector:
    return tuple(x + y for x, y in zip(a, b))


def sub(a: Sequence, b: Sequence) -> Vector:
    return tuple(x - y for x, y in zip(a, b))


def scale(c, a: Sequence) -> Vector:
    return tuple(c * x for x in a)


def neg(a: Sequence) -> Vector:
    return tuple(-x for x in a)


def is_zero(a: Sequence) -> bool:
    return all(x == 0 for x in a)


def matvec(m: Sequence[Sequence], v: Sequence) -> Vector:
    return tuple(dot(row, v) for row in m)


def vecmat(v: Sequence, m: Sequence[Sequence]) -> Vector:
    """Row vector times matrix."""
    if not m:
        return ()
    n = len(m[0])
    return tuple(sum((v[i] * m[i][j] for i in range(len(m))), Fraction(0)) for j in range(n))


def matmul(a: Sequence[Sequence], b: Sequence[Sequence]) -> Matrix:
    bt = transpose(b)
    return tuple(tuple(dot(row, col) for col in bt) for row in a)


def transpose(m: Sequence[Sequence]) -> Matrix:
    if not m:
        return ()
    return tuple(tuple(Fraction(m[i][j]) for i in range(len(m))) for j in range(len(m[0])))


def rref(rows: Sequence[Sequence]) -> tuple[Matrix, list[int]]:
    """Reduced row echelon form and pivot columns; zero rows are dropped."""
    m = [list(map(Fraction, r)) for r in rows]
    if not m:
        return (), []
    ncols = len(m[0])
    pivots: list[int] = []
    r = 0
    for c in range(ncols):
        p = next((i for i in range(r, len(m)) if m[i][c] != 0), None)
        if p is None:
            continue
        m[r], m[p] = m[p], m[r]
        pv = m[r][c]
        m[r] = [x / pv for x in m[r]]
        for i in range(len(m)):
            if i != r and m[i][c] != 0:
                f = m[i][c]
                m[i] = [x - f * y for x, y in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
        if r == len(m):
            break
    return tuple(tuple(row) for row in m[:r]), pivots


def rank(rows: Sequence[Sequence]) -> int:
    return len(rref(rows)[1])


def nullspace(rows: Sequence[Sequence], ncols: int) -> list[Vector]:
    """Basis of {x : rows . x = 0}."""
    if not rows:
        return [unit(ncols, i) for i in range(ncols)]
    red, piv = rref(rows)
    free = [c for c in range(ncols) if c not in piv]
    basis = []
    for f in free:
        x = [Fraction(0)] * ncols
        x[f] = Fraction(1)
        for row, p in zip(red, piv):
            x[p] = -row[f]
        basis.append(tuple(x))
    return basis


def solve(m: Sequence[Sequence], b: Sequence) -> Vector | None:
    """One solution x of m x = b, or None if inconsistent."""
    if not m:
        return None if any(b) else ()
    ncols = len(m[0])
    aug = [tuple(row) + (bi,) for row, bi in zip(m, b)]
    red, piv = rref(aug)
    if ncols in piv:
        return None
    x = [Fraction(0)] * ncols
    for row, p in zip(red, piv):
        x[p] = row[-1]
    return tuple(x)


def coordinates(basis: Sequence[Sequence], v: Sequence) -> Vector | None:
    """Coefficients c with sum c_i basis_i = v, or None if v is outside the span."""
    if not basis:
        return () if is_zero(v) else None
    return solve(transpose(basis), v)


def in_span(basis: Sequence[Sequence], v: Sequence) -> bool:
    return coordinates(basis, v) is not None


def inverse(m: Sequence[Sequence]) -> Matrix:
    n = len(m)
    aug = [tuple(row) + unit(n, i) for i, row in enumerate(m)]
    red, piv = rref(aug)
    if piv[:n] != list(range(n)) or len(red) < n:
        raise ZeroDivisionError("singular matrix")
    return tuple(tuple(row[n:]) for row in red)


def det(m: Sequence[Sequence]) -> Fraction:
    a = [list(map(Fraction, r)) for r in m]
    n = len(a)
    d = Fraction(1)
    for c in range(n):
        p = next((i for i in range(c, n) if a[i][c] != 0), None)
        if p is None:
            return Fraction(0)
        if p != c:
            a[c], a[p] = a[p], a[c]
            d = -d
        d *= a[c][c]
        for i in range(c + 1, n):
            f = a[i][c] / a[c][c]
            if f:
                a[i] = [x - f * y for x, y in zip(a[i], a[c])]
    return d


def primitive(v: Sequence) -> Vector:
    """Positive rational multiple of v with coprime integer entries."""
    v = vec(v)
    if is_zero(v):
        return v
    den = reduce(lcm, (x.denominator for x in v), 1)
    ints = [int(x * den) for x in v]
    g = reduce(gcd, (abs(i) for i in ints), 0)
    return tuple(Fraction(i // g) for i in ints)


def sign_normalize(v: Sequence) -> Vector:
    """Primitive multiple of v whose first nonzero entry is positive."""
    p = primitive(v)
    for x in p:
        if x != 0:
            return p if x > 0 else neg(p)
    return p


def is_integral(v: Sequence) -> bool:
    return all(Fraction(x).denominator == 1 for x in v)


def fmt(x: Fraction) -> str:
    """Canonical string for a rational: ``"p"`` or ``"p/q"`` in lowest terms."""
    x = Fraction(x)
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def fmt_vec(v: Sequence) -> list[str]:
    return [fmt(x) for x in v]


# -- integer lattices -------------------------------------------------------


def integer_row_echelon(rows: Sequence[Sequence[int]]) -> tuple[list[list[int]], list[list[int]]]:
    """Unimodular row reduction of an integer matrix.

    Returns ``(H, U)`` with ``U`` unimodular and ``H = U A`` in row echelon
    form (zero rows last).
    """
    a = [list(map(int, r)) for r in rows]
    m = len(a)
    ncols = len(a[0]) if a else 0
    u = [[int(i == j) for j in range(m)] for i in range(m)]
    r = 0
    for c in range(ncols):
        if r == m:
            break
        while True:
            nz = [i for i in range(r, m) if a[i][c] != 0]
            if not nz:
                break
            p = min(nz, key=lambda i: abs(a[i][c]))
            a[r], a[p] = a[p], a[r]
            u[r], u[p] = u[p], u[r]
            done = True
            for i in range(r + 1, m):
                if a[i][c]:
                    q = a[i][c] // a[r][c]
                    a[i] = [x - q * y for x, y in zip(a[i], a[r])]
                    u[i] = [x - q * y for x, y in zip(u[i], u[r])]
                    if a[i][c]:
                        done = False
            if done:
                break
        if any(a[i][c] for i in range(r, m)):
            r += 1
    return a, u


def integer_left_kernel(rows: Sequence[Sequence]) -> list[Vector]:
    """Lattice basis of {y in Z^m : y A = 0} for a rational m x k matrix A."""
    if not rows:
        return []
    den = reduce(lcm, (Fraction(x).denominator for r in rows for x in r), 1)
    a = [[int(Fraction(x) * den) for x in r] for r in rows]
    h, u = integer_row_echelon(a)
    return [tuple(Fraction(x) for x in u[i]) for i in range(len(h)) if not any(h[i])]

"""Exact rational polyhedral cones.

A :class:`Cone` is created from generators (or from inequalities) and
lazily computes the other description with the double description method.
Extreme rays are stored as primitive integer vectors, which gives a
canonical form and hence decidable equality.
"""

from __future__ import annotations

import itertools
import threading
from fractions import Fraction
from math import floor, ceil
from typing import Iterable, Sequence

from . import linalg as la
from .errors import DimensionBoundExceeded, DimensionMismatch, LinealityError
from .linalg import Vector
from .lp import GE, Constraint, feasibility

HILBERT_DIM_BOUND = 6


def double_description(constraints: Sequence[Sequence], n: int) -> tuple[list[Vector], list[Vector]]:
    """Lineality basis and extreme rays of ``{x : a . x >= 0 for a in constraints}``.

    Constraints are inserted in the given order.  When the current lineality
    space is not orthogonal to the new row, one lineality direction becomes a
    ray; otherwise rays are split by sign and adjacent (pos, neg) pairs are
    combined, adjacency being decided by the rank of the common tight rows.
    """
    lin: list[Vector] = [la.unit(n, i) for i in range(n)]
    rays: list[Vector] = []
    seen: list[Vector] = []
    for a in constraints:
        a = la.vec(a)
        if la.is_zero(a):
            continue
        seen.append(a)
        vals = [la.dot(a, l) for l in lin]
        k = next((i for i, v in enumerate(vals) if v != 0), None)
        if k is not None:
            l0, v0 = lin.pop(k), vals[k]
            if v0 < 0:
                l0, v0 = la.neg(l0), -v0
            lin = [la.sign_normalize(la.sub(l, la.scale(la.dot(a, l) / v0, l0))) for l in lin]
            rays = [la.primitive(la.sub(r, la.scale(la.dot(a, r) / v0, l0))) for r in rays]
            rays.append(la.primitive(l0))
            continue
        pos, zer, negs = [], [], []
        for r in rays:
            v = la.dot(a, r)
            (pos if v > 0 else negs if v < 0 else zer).append((r, v))
        target = n - len(lin) - 2
        new = [r for r, _ in pos] + [r for r, _ in zer]
        tight = {r: frozenset(i for i, s in enumerate(seen[:-1]) if la.dot(s, r) == 0) for r, _ in pos + negs}
        for (p, vp), (q, vq) in itertools.product(pos, negs):
            common = tight[p] & tight[q]
            if len(common) < target:
                continue
            if la.rank([seen[i] for i in common]) != target:
                continue
            new.append(la.primitive(la.sub(la.scale(vp, q), la.scale(vq, p))))
        rays = list(dict.fromkeys(new))
    return lin, rays


def _complement_projection(lin: Sequence[Vector], n: int):
    """Projection onto the orthogonal complement of span(lin)."""
    if not lin:
        return lambda v: la.vec(v)
    basis = la.rref(lin)[0]
    gram = tuple(tuple(la.dot(a, b) for b in basis) for a in basis)
    ginv = la.inverse(gram)

    def proj(v):
        coeffs = la.matvec(ginv, [la.dot(b, v) for b in basis])
        out = la.vec(v)
        for c, b in zip(coeffs, basis):
            out = la.sub(out, la.scale(c, b))
        return out

    return proj


class Cone:
    """A rational polyhedral cone in Q^n.

    ``Cone(generators)`` is the set of non-negative combinations of the
    generators; :meth:`from_inequalities` builds ``{x : f.x >= 0, e.x = 0}``.
    """

    def __init__(self, generators: Iterable[Sequence] = (), ambient_dim: int | None = None):
        gens = [la.vec(g) for g in generators]
        if ambient_dim is None:
            if not gens:
                raise ValueError("ambient_dim is required for a cone without generators")
            ambient_dim = len(gens[0])
        if any(len(g) != ambient_dim for g in gens):
            raise DimensionMismatch("generators have inconsistent lengths")
        self.ambient_dim = ambient_dim
        self.generators: tuple[Vector, ...] = tuple(g for g in gens if not la.is_zero(g))
        self._lock = threading.Lock()
        self._h = None
        self._v = None

    @classmethod
    def from_inequalities(cls, inequalities: Iterable[Sequence], equations: Iterable[Sequence] = (), ambient_dim: int | None = None) -> "Cone":
        ineqs = [la.vec(f) for f in inequalities]
        eqs = [la.vec(e) for e in equations]
        if ambient_dim is None:
            ambient_dim = len((ineqs + eqs)[0])
        rows = ineqs + eqs + [la.neg(e) for e in eqs]
        lin, rays = double_description(rows, ambient_dim)
        c = cls(rays + lin + [la.neg(l) for l in lin], ambient_dim)
        c._v = (lin, rays)
        return c

    @classmethod
    def zero(cls, n: int) -> "Cone":
        return cls((), n)

    @classmethod
    def full(cls, n: int) -> "Cone":
        return cls([la.unit(n, i) for i in range(n)] + [la.neg(la.unit(n, i)) for i in range(n)], n)

    # -- lazily computed descriptions --------------------------------------

    def _hrep(self):
        if self._h is None:
            with self._lock:
                if self._h is None:
                    lin, rays = double_description(self.generators, self.ambient_dim)
                    self._h = ([la.sign_normalize(l) for l in la.rref(lin)[0]] if lin else [], sorted(rays))
        return self._h

    def _vrep(self):
        if self._v is None:
            eqs, facets = self._hrep()
            rows = list(facets) + list(eqs) + [la.neg(e) for e in eqs]
            lin, rays = double_description(rows, self.ambient_dim)
            with self._lock:
                if self._v is None:
                    self._v = (lin, rays)
        return self._v

    @property
    def equations(self) -> list[Vector]:
        """Linear forms vanishing on the cone (a basis of its annihilator)."""
        return list(self._hrep()[0])

    @property
    def facets(self) -> list[Vector]:
        """Irredundant inward facet normals (modulo the equations)."""
        return list(self._hrep()[1])

    @property
    def lineality_basis(self) -> list[Vector]:
        lin = self._vrep()[0]
        return [la.sign_normalize(l) for l in la.rref(lin)[0]] if lin else []

    @property
    def rays(self) -> list[Vector]:
        """Extreme rays, primitive and sorted; modulo lineality for non-pointed cones."""
        lin, rays = self._vrep()
        if not lin:
            return sorted(rays)
        proj = _complement_projection(lin, self.ambient_dim)
        return sorted({la.primitive(proj(r)) for r in rays})

    @property
    def canonical_generators(self) -> list[Vector]:
        lin = self.lineality_basis
        return self.rays + lin + [la.neg(l) for l in lin]

    @property
    def dim(self) -> int:
        return la.rank(self.generators) if self.generators else 0

    @property
    def lineality_dim(self) -> int:
        return len(self._vrep()[0])

    def key(self):
        return (self.ambient_dim, tuple(self.lineality_basis), tuple(self.rays))

    def __eq__(self, other):
        return isinstance(other, Cone) and self.key() == other.key()

    def __hash__(self):
        return hash(self.key())

    def __repr__(self):
        gens = [tuple(la.fmt(x) for x in r) for r in self.canonical_generators]
        return f"Cone({gens}, ambient_dim={self.ambient_dim})"

    def contains(self, v: Sequence) -> bool:
        v = la.vec(v)
        eqs, facets = self._hrep()
        return all(la.dot(e, v) == 0 for e in eqs) and all(la.dot(f, v) >= 0 for f in facets)

    def contains_cone(self, other: "Cone") -> bool:
        return all(self.contains(g) for g in other.generators)

    def to_json(self) -> dict:
        return {"generators": [la.fmt_vec(g) for g in self.canonical_generators]}

    @classmethod
    def from_json(cls, data: dict, ambient_dim: int | None = None) -> "Cone":
        return cls([la.vec(g) for g in data["generators"]], ambient_dim)


def dual_cone(c: Cone) -> Cone:
    """``{y : y . g >= 0 for every generator g of c}``."""
    eqs, facets = c._hrep()
    return Cone(list(facets) + list(eqs) + [la.neg(e) for e in eqs], c.ambient_dim)


def is_strictly_convex(c: Cone) -> bool:
    return c.lineality_dim == 0


def intersect(a: Cone, b: Cone) -> Cone:
    if a.ambient_dim != b.ambient_dim:
        raise DimensionMismatch(f"{a.ambient_dim} != {b.ambient_dim}")
    return Cone.from_inequalities(a.facets + b.facets, a.equations + b.equations, a.ambient_dim)


def minkowski_sum(a: Cone, b: Cone) -> Cone:
    if a.ambient_dim != b.ambient_dim:
        raise DimensionMismatch(f"{a.ambient_dim} != {b.ambient_dim}")
    joined = Cone(a.generators + b.generators, a.ambient_dim)
    return Cone(joined.canonical_generators, a.ambient_dim)


def faces(c: Cone) -> list[Cone]:
    """All faces of a strictly convex cone, from {0} up to c, sorted by dimension."""
    if not is_strictly_convex(c):
        raise LinealityError("faces are only enumerated for strictly convex cones")
    rays = c.rays
    facets = c.facets
    full = frozenset(range(len(rays)))
    found = {full}
    frontier = [full]
    while frontier:
        nxt = []
        for s in frontier:
            for f in facets:
                t = frozenset(i for i in s if la.dot(f, rays[i]) == 0)
                if t not in found:
                    found.add(t)
                    nxt.append(t)
        frontier = nxt
    found.add(frozenset())
    out = [Cone([rays[i] for i in sorted(s)], c.ambient_dim) for s in found]
    return sorted(out, key=lambda f: (f.dim, f.rays))


def relint_witness(c: Cone, h: Cone) -> Vector | None:
    """A point of relint(c) inside h, or None.

    Solves for multipliers ``lam_g >= 1`` on the canonical generators of c
    with ``sum lam_g g`` satisfying the inequalities of h, and returns that
    sum.
    """
    gens = c.canonical_generators
    n = c.ambient_dim
    if not gens:
        return la.zero(n)
    m = len(gens)
    base = [Fraction(0)] * n
    for g in gens:
        base = la.add(base, g)
    rows = []
    for f in h.facets:
        rows.append(Constraint(tuple(la.dot(f, g) for g in gens), GE, -la.dot(f, base)))
    for e in h.equations:
        rows.append(Constraint(tuple(la.dot(e, g) for g in gens), "=", -la.dot(e, base)))
    res = feasibility(rows, m, nonneg=[True] * m)
    if not res.feasible:
        return None
    point = la.zero(n)
    for lam, g in zip(res.point, gens):
        point = la.add(point, la.scale(lam + 1, g))
    return point


def relint_meets(c: Cone, h: Cone) -> bool:
    return relint_witness(c, h) is not None


# -- Hilbert bases ----------------------------------------------------------


def _triangulate(rays: list[Vector], n: int) -> list[list[Vector]]:
    """Pulling triangulation of the pointed cone spanned by ``rays``."""
    d = la.rank(rays)
    if len(rays) == d:
        return [list(rays)]
    apex = rays[0]
    cone = Cone(rays, n)
    out = []
    for face in faces(cone):
        if face.dim != d - 1 or face.contains(apex):
            continue
        for simplex in _triangulate(face.rays, n):
            out.append([apex] + simplex)
    return out


def _parallelepiped_points(simplex: list[Vector], n: int) -> list[tuple[int, ...]]:
    """Integer points of the half-open parallelepiped spanned by a simplex."""
    lo = [sum(min(0, g[i]) for g in simplex) for i in range(n)]
    hi = [sum(max(0, g[i]) for g in simplex) for i in range(n)]
    pts = []
    ranges = [range(ceil(lo[i]), floor(hi[i]) + 1) for i in range(n)]
    basis = list(simplex)
    for p in itertools.product(*ranges):
        t = la.coordinates(basis, p)
        if t is None:
            continue
        if all(0 <= x < 1 for x in t):
            pts.append(tuple(p))
    return pts


def hilbert_basis(c: Cone, lattice: Sequence[Sequence] | None = None) -> list[Vector]:
    """Minimal generating set of ``c`` intersected with the lattice.

    ``lattice`` holds basis rows; the default is Z^n.  The monoid of lattice
    points is generated by the simplex generators and the points of their
    fundamental parallelepipeds; reducible candidates are then discarded.
    """
    if not is_strictly_convex(c):
        raise LinealityError("Hilbert bases are only computed for strictly convex cones")
    n = c.ambient_dim
    if n > HILBERT_DIM_BOUND:
        raise DimensionBoundExceeded(f"ambient dimension {n} exceeds {HILBERT_DIM_BOUND}")
    if not c.generators:
        return []
    m = la.mat(lattice) if lattice is not None else la.identity(n)
    minv = la.inverse(m)
    # y = x M^{-1}: lattice points become integer points
    local = Cone([la.vecmat(r, minv) for r in c.rays], n)
    cands: set[tuple[int, ...]] = set()
    for simplex in _triangulate(local.rays, n):
        cands.update(tuple(int(x) for x in r) for r in simplex)
        cands.update(_parallelepiped_points(simplex, n))
    cands.discard((0,) * n)
    cands_v = sorted(cands)

    def reducible(x):
        for h in cands_v:
            if h == x:
                continue
            d = tuple(a - b for a, b in zip(x, h))
            if any(d) and local.contains(h) and local.contains(d):
                return True
        return False

    basis = [x for x in cands_v if not reducible(x)]
    return sorted(la.vecmat(la.vec(b), m) for b in basis)


def in_lattice(v: Sequence, lattice: Sequence[Sequence]) -> bool:
    y = la.vecmat(la.vec(v), la.inverse(la.mat(lattice)))
    return la.is_integral(y)

"""Combinatorial model of a connected reductive group.

Coordinates.  The cocharacter space is Q^n with n = l + z.  A cocharacter v
has coordinates ``v_i = <omega_i, v>`` for i < l followed by z central
coordinates, so the simple coroots are the first l standard basis vectors.
Characters live in the dual copy of Q^n (first l entries are coefficients
on the fundamental weights) and pair by the dot product.

``cartan[i][k] = <alpha_i, alpha_k^vee>``: row i is the simple root
``alpha_i`` as a linear form on the semisimple block.  This is the
transpose of the Bourbaki matrix; simple roots are numbered as in Bourbaki.
"""

from __future__ import annotations

import os
from dataclasses import dataclass, field
from fractions import Fraction
from math import factorial
from typing import Sequence

from . import linalg as la
from .cones import Cone
from .errors import InputError, MissingCoroots, WeylBoundExceeded
from .linalg import Matrix, Vector

DEFAULT_WEYL_BOUND = 10**6

_EXCEPTIONAL_RANKS = {"E": (6, 7, 8), "F": (4,), "G": (2,)}


def weyl_bound() -> int:
    """Current bound on |W|; the ``MONOID_WEYL_BOUND`` variable overrides it."""
    raw = os.environ.get("MONOID_WEYL_BOUND")
    return int(raw) if raw else DEFAULT_WEYL_BOUND


def bourbaki_cartan(letter: str, rank: int) -> list[list[int]]:
    """Bourbaki Cartan matrix ``A[i][j] = <alpha_i^vee, alpha_j>``."""
    if letter not in "ABCDEFG" or len(letter) != 1:
        raise InputError(f"unknown Dynkin type {letter!r}")
    if letter in _EXCEPTIONAL_RANKS and rank not in _EXCEPTIONAL_RANKS[letter]:
        raise InputError(f"type {letter} has no rank {rank}")
    minimum = {"A": 1, "B": 2, "C": 2, "D": 4}
    if letter in minimum and rank < minimum[letter]:
        raise InputError(f"type {letter}{rank} is not a valid Dynkin type (rank >= {minimum[letter]})")
    a = [[2 if i == j else 0 for j in range(rank)] for i in range(rank)]

    def link(i, j, aij=-1, aji=-1):
        a[i][j], a[j][i] = aij, aji

    if letter in "ABC":
        for i in range(rank - 1):
            link(i, i + 1)
        if letter == "B":  # alpha_r short
            link(rank - 2, rank - 1, -1, -2)
        elif letter == "C":  # alpha_r long
            link(rank - 2, rank - 1, -2, -1)
    elif letter == "D":
        for i in range(rank - 2):
            link(i, i + 1)
        link(rank - 3, rank - 1)
    elif letter == "E":
        link(0, 2)
        link(1, 3)
        for i in range(2, rank - 1):
            link(i, i + 1)
    elif letter == "F":
        link(0, 1)
        link(1, 2, -1, -2)
        link(2, 3)
    elif letter == "G":
        link(0, 1, -3, -1)
    return a


def weyl_group_order(letter: str, rank: int) -> int:
    if letter == "A":
        return factorial(rank + 1)
    if letter in "BC":
        return 2**rank * factorial(rank)
    if letter == "D":
        return 2 ** (rank - 1) * factorial(rank)
    return {("E", 6): 51840, ("E", 7): 2903040, ("E", 8): 696729600, ("F", 4): 1152, ("G", 2): 12}[(letter, rank)]


CLASSICAL_ROOT_COUNTS = {
    "A": lambda r: r * (r + 1) // 2,
    "B": lambda r: r * r,
    "C": lambda r: r * r,
    "D": lambda r: r * (r - 1),
    "E": lambda r: {6: 36, 7: 63, 8: 120}[r],
    "F": lambda r: 24,
    "G": lambda r: 6,
}


@dataclass(frozen=True)
class GroupSpec:
    factors: tuple[tuple[str, int], ...]
    central_rank: int = 0
    lattice: Matrix | None = None

    def __post_init__(self):
        object.__setattr__(self, "factors", tuple((str(t), int(r)) for t, r in self.factors))
        if self.lattice is not None:
            object.__setattr__(self, "lattice", la.mat(self.lattice))

    @property
    def semisimple_rank(self) -> int:
        return sum(r for _, r in self.factors)

    @classmethod
    def from_json(cls, data: dict) -> "GroupSpec":
        try:
            factors = tuple((f["type"], int(f["rank"])) for f in data.get("factors", []))
            lattice = data.get("lattice")
            return cls(factors, int(data.get("central_rank", 0)), la.mat(lattice) if lattice is not None else None)
        except (KeyError, TypeError, ValueError, ZeroDivisionError) as exc:
            raise InputError(f"malformed group specification: {exc}") from exc

    def to_json(self) -> dict:
        out = {"factors": [{"type": t, "rank": r} for t, r in self.factors], "central_rank": self.central_rank}
        if self.lattice is not None:
            out["lattice"] = [la.fmt_vec(r) for r in self.lattice]
        return out


@dataclass(frozen=True)
class GroupModel:
    spec: GroupSpec
    cartan: tuple[tuple[int, ...], ...]
    positive_roots: tuple[tuple[int, ...], ...]
    ambient_dim: int
    lattice: Matrix
    reflection_matrices: tuple[Matrix, ...]
    blocks: tuple[tuple[str, int, int], ...] = field(default=())  # (letter, rank, offset)

    @property
    def semisimple_rank(self) -> int:
        return len(self.cartan)

    @property
    def central_rank(self) -> int:
        return self.ambient_dim - len(self.cartan)

    @property
    def dimension(self) -> int:
        """dim G = l + z + 2 |positive roots|."""
        return self.ambient_dim + 2 * len(self.positive_roots)

    @property
    def weyl_order(self) -> int:
        order = 1
        for letter, rank, _ in self.blocks:
            order *= weyl_group_order(letter, rank)
        return order

    @property
    def dual_lattice(self) -> Matrix:
        """Basis rows of the character lattice, dual to the cocharacter lattice."""
        return la.transpose(la.inverse(self.lattice))

    def simple_root(self, j: int) -> Vector:
        """Simple root alpha_j (0-based) as a linear form on cocharacters."""
        return tuple(Fraction(x) for x in self.cartan[j]) + (Fraction(0),) * self.central_rank

    def factor_of(self, i: int) -> int:
        """Index of the simple factor containing simple root i (0-based)."""
        for k, (_, rank, off) in enumerate(self.blocks):
            if off <= i < off + rank:
                return k
        raise IndexError(i)

    def with_lattice(self, lattice: Matrix) -> "GroupModel":
        spec = GroupSpec(self.spec.factors, self.spec.central_rank, lattice)
        return build_group(spec)


def _positive_roots(cartan: Sequence[Sequence[int]]) -> list[tuple[int, ...]]:
    """Positive roots as coefficient vectors over the simple roots.

    Built level by level: beta + alpha_i is a root exactly when the
    alpha_i-string through beta extends upward, i.e. when
    p - <beta, alpha_i^vee> > 0 with p the downward string length.
    """
    l = len(cartan)
    simple = [tuple(int(i == j) for j in range(l)) for i in range(l)]
    roots = set(simple)
    level = list(simple)
    while level:
        nxt = set()
        for beta in level:
            for i in range(l):
                pairing = sum(beta[j] * cartan[j][i] for j in range(l))
                p = 0
                down = list(beta)
                while True:
                    down[i] -= 1
                    if tuple(down) in roots:
                        p += 1
                    else:
                        break
                if p - pairing > 0:
                    up = list(beta)
                    up[i] += 1
                    up = tuple(up)
                    if up not in roots:
                        nxt.add(up)
        roots |= nxt
        level = sorted(nxt)
    return sorted(roots, key=lambda r: (sum(r), r))


def build_group(spec: GroupSpec) -> GroupModel:
    l = spec.semisimple_rank
    z = spec.central_rank
    if z < 0:
        raise InputError("central_rank must be non-negative")
    n = l + z
    if n < 1:
        raise InputError("ambient dimension l + z must be at least 1")
    cartan = [[0] * l for _ in range(l)]
    blocks = []
    off = 0
    for letter, rank in spec.factors:
        if rank < 1:
            raise InputError("factor ranks must be positive")
        a = bourbaki_cartan(letter, rank)
        for i in range(rank):
            for k in range(rank):
                cartan[off + i][off + k] = a[k][i]
        blocks.append((letter, rank, off))
        off += rank
    lattice = spec.lattice if spec.lattice is not None else la.identity(n)
    if len(lattice) != n or any(len(r) != n for r in lattice):
        raise InputError(f"lattice must be a {n}x{n} matrix")
    if la.det(lattice) == 0:
        raise InputError("lattice basis is singular")
    inv = la.inverse(lattice)
    for i in range(l):
        if not la.is_integral(la.vecmat(la.unit(n, i), inv)):
            raise MissingCoroots(f"coroot {i + 1} is not in the cocharacter lattice")
    roots = _positive_roots(cartan)
    reflections = []
    for i in range(l):
        m = [list(r) for r in la.identity(n)]
        for k in range(l):
            m[i][k] -= cartan[i][k]
        reflections.append(la.mat(m))
    return GroupModel(
        spec=spec,
        cartan=tuple(tuple(r) for r in cartan),
        positive_roots=tuple(roots),
        ambient_dim=n,
        lattice=lattice,
        reflection_matrices=tuple(reflections),
        blocks=tuple(blocks),
    )


def group(*factors: str, central_rank: int = 0, lattice=None) -> GroupModel:
    """Shorthand: ``group("A1", "B2", central_rank=1)``."""
    parsed = tuple((f[0].upper(), int(f[1:])) for f in factors)
    return build_group(GroupSpec(parsed, central_rank, la.mat(lattice) if lattice is not None else None))


def valuation_cone(model: GroupModel) -> Cone:
    """Anti-dominant chamber times the central space: ``alpha_j(v) <= 0`` for all j."""
    n = model.ambient_dim
    ineqs = [la.neg(model.simple_root(j)) for j in range(model.semisimple_rank)]
    return Cone.from_inequalities(ineqs, (), n) if ineqs else Cone.full(n)


def colors(model: GroupModel) -> list[Vector]:
    """Valuations of the colors D_1..D_l: the simple coroots e_1..e_l."""
    return [la.unit(model.ambient_dim, i) for i in range(model.semisimple_rank)]


def roots_supported_on(model: GroupModel, indices) -> int:
    """Number of positive roots whose support lies in the given 1-based simple roots."""
    allowed = {i - 1 for i in indices}
    return sum(1 for r in model.positive_roots if all(c == 0 or i in allowed for i, c in enumerate(r)))


def _block_generators(model: GroupModel, letter_rank_off) -> list[tuple[tuple[int, ...], ...]]:
    _, rank, off = letter_rank_off
    gens = []
    for i in range(rank):
        m = [[int(p == q) for q in range(rank)] for p in range(rank)]
        for k in range(rank):
            m[i][k] -= model.cartan[off + i][off + k]
        gens.append(tuple(tuple(r) for r in m))
    return gens


def _mul(a, b):
    size = len(a)
    return tuple(tuple(sum(a[i][k] * b[k][j] for k in range(size)) for j in range(size)) for i in range(size))


def weyl_group_elements(model: GroupModel, block: int, bound: int | None = None) -> list:
    """All elements of the Weyl group of one simple factor, as integer matrices on its block."""
    letter, rank, _ = model.blocks[block]
    bound = weyl_bound() if bound is None else bound
    order = weyl_group_order(letter, rank)
    if order > bound:
        raise WeylBoundExceeded(order, bound)
    gens = _block_generators(model, model.blocks[block])
    ident = tuple(tuple(int(p == q) for q in range(rank)) for p in range(rank))
    seen = {ident}
    frontier = [ident]
    while frontier:
        nxt = []
        for w in frontier:
            for s in gens:
                u = _mul(s, w)
                if u not in seen:
                    seen.add(u)
                    nxt.append(u)
        frontier = nxt
    return sorted(seen)


def w_average(model: GroupModel, v: Sequence, bound: int | None = None) -> Vector:
    """Sum of w.v over the whole Weyl group."""
    bound = weyl_bound() if bound is None else bound
    total = model.weyl_order
    if total > bound:
        raise WeylBoundExceeded(total, bound)
    v = la.vec(v)
    out = list(v)
    for b, (_, rank, off) in enumerate(model.blocks):
        elems = weyl_group_elements(model, b, bound)
        summed = [[sum(w[i][k] for w in elems) for k in range(rank)] for i in range(rank)]
        sub = v[off : off + rank]
        rest = total // len(elems)
        for i in range(rank):
            out[off + i] = rest * sum((summed[i][k] * sub[k] for k in range(rank)), Fraction(0))
    for c in range(model.semisimple_rank, model.ambient_dim):
        out[c] = total * v[c]
    return tuple(out)

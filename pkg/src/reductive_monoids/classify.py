"""Normal reductive monoids as colored cones.

A monoid with unit group G is recorded as a pair (cone, colors): a strictly
convex cone in the cocharacter space and the subset of color indices
(1-based) whose valuations, the simple coroots, lie on it.  Everything
below is derived from that pair: affineness certificates, the G x G orbits
with their dimensions, the kernel, the B x B^- weight monoid, the split
into a group factor and a monoid with zero, the decoloration, and the
behavior under central isogenies.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from . import linalg as la
from .cones import (
    Cone,
    dual_cone,
    faces,
    hilbert_basis,
    intersect,
    is_strictly_convex,
    minkowski_sum,
    relint_witness,
)
from .errors import (
    BadColors,
    BadGenerators,
    InputError,
    InputOutsideValuationCone,
    MissingCoroots,
    NoInteriorValuation,
    NotAMonoid,
    NotCommensurable,
    NotStrictlyConvex,
    PreconditionFailed,
    ResourceBoundExceeded,
    SpanMismatch,
    WitnessZero,
)
from .linalg import Vector
from .lp import EQ, GE, LE, Constraint, check_farkas, feasibility
from .rootsys import GroupModel, GroupSpec, build_group, colors, roots_supported_on, valuation_cone, w_average

COLOR_ENUMERATION_BOUND = 12


@dataclass(frozen=True)
class ColoredCone:
    cone: Cone
    colors: frozenset[int]

    def __post_init__(self):
        object.__setattr__(self, "colors", frozenset(int(i) for i in self.colors))

    def to_json(self) -> dict:
        return {"cone": self.cone.to_json(), "colors": sorted(self.colors)}

    @classmethod
    def from_json(cls, data: dict, ambient_dim: int | None = None) -> "ColoredCone":
        return cls(Cone.from_json(data["cone"], ambient_dim), frozenset(data.get("colors", [])))


@dataclass(frozen=True)
class AffineCertificate:
    """A character chi with chi <= 0 on V(G), chi = 0 on the cone, chi > 0 on omitted colors."""

    chi: Vector

    def to_json(self) -> dict:
        return {"chi": la.fmt_vec(self.chi)}


@dataclass(frozen=True)
class AffineRefusal:
    """No certificate exists.

    ``multipliers`` is a Farkas combination of the rows listed in ``rows``;
    see :func:`is_affine` for the row layout.
    """

    rows: tuple[tuple[str, Vector], ...]
    multipliers: Vector

    def to_json(self) -> dict:
        used = [
            {"constraint": kind, "vector": la.fmt_vec(v), "multiplier": la.fmt(y)}
            for (kind, v), y in zip(self.rows, self.multipliers)
            if y != 0
        ]
        return {"refused": True, "farkas": used}


@dataclass(frozen=True)
class OrbitDatum:
    face: Cone
    face_colors: frozenset[int]
    dimension: int
    is_open: bool
    is_closed: bool

    def to_json(self) -> dict:
        return {
            "face": self.face.to_json(),
            "colors": sorted(self.face_colors),
            "dim": self.dimension,
            "open": self.is_open,
            "closed": self.is_closed,
        }


@dataclass(frozen=True)
class WeightMonoidData:
    dual_cone: Cone
    hilbert_basis: tuple[Vector, ...]
    all_dominant: bool

    def to_json(self) -> dict:
        return {
            "dual_cone": self.dual_cone.to_json(),
            "hilbert_basis": [la.fmt_vec(h) for h in self.hilbert_basis],
            "all_dominant": self.all_dominant,
        }


@dataclass(frozen=True)
class Decomposition:
    """S = (G_1 x S_0)/Gamma read off from the colored cone.

    ``s0_basis`` lists the ambient vectors used as coordinates on
    ``g2_span``: the coroots of F(S) first, then a basis of the central part
    of the span.  ``gamma_index`` is the index of (L cap Q(G_2)) + (L cap
    Q(G_1)) in the cocharacter lattice L, where Q(G_1) is spanned by the
    remaining coroots and the orthogonal complement, inside the center, of
    the central part of the span.
    """

    g2_span: tuple[Vector, ...]
    g1_color_indices: frozenset[int]
    g2_color_indices: frozenset[int]
    s0_basis: tuple[Vector, ...]
    s0_model: GroupModel | None
    s0_colored_cone: ColoredCone | None
    g1_model: GroupModel | None
    gamma_index: int

    def to_json(self) -> dict:
        return {
            "g2_span": [la.fmt_vec(v) for v in self.g2_span],
            "g1_colors": sorted(self.g1_color_indices),
            "g2_colors": sorted(self.g2_color_indices),
            "s0_basis": [la.fmt_vec(v) for v in self.s0_basis],
            "s0_group": self.s0_model.spec.to_json() if self.s0_model else None,
            "s0_colored_cone": self.s0_colored_cone.to_json() if self.s0_colored_cone else None,
            "g1_group": self.g1_model.spec.to_json() if self.g1_model else None,
            "gamma_index": self.gamma_index,
        }


# -- helpers -----------------------------------------------------------------


def _color_cone(model: GroupModel, indices: Iterable[int]) -> Cone:
    return Cone([la.unit(model.ambient_dim, i - 1) for i in sorted(indices)], model.ambient_dim)


def _check_indices(model: GroupModel, indices: Iterable[int]) -> frozenset[int]:
    out = frozenset(int(i) for i in indices)
    bad = [i for i in out if not 1 <= i <= model.semisimple_rank]
    if bad:
        raise BadColors(f"color indices {sorted(bad)} outside 1..{model.semisimple_rank}")
    return out


def _lattice_primitive_character(model: GroupModel, chi: Vector) -> Vector:
    """Positive multiple of chi that is primitive in the character lattice."""
    if la.is_zero(chi):
        return chi
    coords = la.matvec(model.lattice, chi)  # chi . (basis row) for each cocharacter basis row
    c = la.primitive(coords)
    return la.vecmat(c, model.dual_lattice)


def certificate_holds(model: GroupModel, cone: Cone, F: Iterable[int], chi: Sequence) -> bool:
    """Re-check the three affineness conditions directly, without the solver."""
    F = set(F)
    V = valuation_cone(model)
    if any(la.dot(chi, g) > 0 for g in V.canonical_generators):
        return False
    if any(la.dot(chi, g) != 0 for g in cone.canonical_generators):
        return False
    return all(chi[i] > 0 for i in range(model.semisimple_rank) if i + 1 not in F)


# -- operations ---------------------------------------------------------------


def validate_colored_cone(model: GroupModel, cone: Cone, F: Iterable[int]) -> ColoredCone:
    """Check that (cone, F) is a strictly convex colored cone of G.

    Conditions are tested in the order: colors are coroots (i), strict
    convexity, relative interior meets V(G) (iii), every extreme ray is a
    color of F or lies in V(G) and every color of F lies on the cone (ii).
    """
    if cone.ambient_dim != model.ambient_dim:
        raise InputError(f"cone lives in Q^{cone.ambient_dim}, expected Q^{model.ambient_dim}")
    F = _check_indices(model, F)
    if any(la.is_zero(la.unit(model.ambient_dim, i - 1)) for i in F):
        raise BadColors("a color valuation is zero")
    if not is_strictly_convex(cone):
        raise NotStrictlyConvex("cone contains a line", lineality_dim=cone.lineality_dim)
    V = valuation_cone(model)
    if relint_witness(cone, V) is None:
        raise NoInteriorValuation("relative interior of the cone misses the valuation cone")
    color_rays = {la.unit(model.ambient_dim, i - 1) for i in F}
    for r in cone.rays:
        if r not in color_rays and not V.contains(r):
            raise BadGenerators(
                "extreme ray is neither a color of F nor a valuation", ray=la.fmt_vec(r)
            )
    for i in sorted(F):
        if not cone.contains(la.unit(model.ambient_dim, i - 1)):
            raise BadGenerators(f"color {i} does not lie on the cone", color=i)
    return ColoredCone(cone, F)


def is_affine(model: GroupModel, cc: ColoredCone) -> AffineCertificate | AffineRefusal:
    """Search for an affineness certificate by exact feasibility.

    Rows are, in order: ``("valuation", g)`` for chi.g <= 0 over the
    generators of V(G); ``("cone", g)`` for chi.g = 0 over the generators of
    the cone; ``("color", e_i)`` for chi.e_i >= 1, i not in F.
    """
    n = model.ambient_dim
    V = valuation_cone(model)
    rows: list[tuple[str, Vector]] = []
    cons: list[Constraint] = []
    for g in V.canonical_generators:
        rows.append(("valuation", g))
        cons.append(Constraint(g, LE, Fraction(0)))
    for g in cc.cone.canonical_generators:
        rows.append(("cone", g))
        cons.append(Constraint(g, EQ, Fraction(0)))
    for i in range(1, model.semisimple_rank + 1):
        if i not in cc.colors:
            e = la.unit(n, i - 1)
            rows.append(("color", e))
            cons.append(Constraint(e, GE, Fraction(1)))
    res = feasibility(cons, n)
    if not res.feasible:
        assert check_farkas(cons, n, [False] * n, res.farkas)
        return AffineRefusal(tuple(rows), res.farkas)
    chi = _lattice_primitive_character(model, res.point)
    assert certificate_holds(model, cc.cone, cc.colors, chi)
    return AffineCertificate(chi)


def monoid_colors(model: GroupModel, tau: Cone) -> frozenset[int]:
    """Colors of the unique monoid built on tau: every simple factor tau projects onto nontrivially."""
    touched = set()
    for g in tau.generators:
        for i in range(model.semisimple_rank):
            if g[i] != 0:
                touched.add(model.factor_of(i))
    return frozenset(
        off + k + 1 for b, (_, rank, off) in enumerate(model.blocks) if b in touched for k in range(rank)
    )


def construction_certificate(model: GroupModel, tau: Cone, F: Iterable[int]) -> Vector:
    """chi from an adapted basis: 1 on colors outside F, 0 on F, on tau and on a completion.

    The basis is F, then generators of tau extending it, then the remaining
    colors, then standard vectors until it spans.
    """
    n = model.ambient_dim
    F = set(F)
    basis: list[Vector] = [la.unit(n, i - 1) for i in sorted(F)]
    values: list[Fraction] = [Fraction(0)] * len(basis)

    def extend(v, value):
        if la.rank(basis + [v]) > len(basis):
            basis.append(la.vec(v))
            values.append(Fraction(value))
            return True
        return False

    for g in tau.canonical_generators:
        extend(g, 0)
    for i in range(1, model.semisimple_rank + 1):
        if i not in F and not extend(la.unit(n, i - 1), 1):
            raise NotAMonoid(f"color {i} lies in the span of tau and F")
    for k in range(n):
        extend(la.unit(n, k), 0)
    # chi . b = value for every basis vector b
    chi = la.solve(basis, values)
    return _lattice_primitive_character(model, chi)


def construct_monoid(model: GroupModel, tau_generators: Sequence[Sequence] | Cone) -> tuple[ColoredCone, AffineCertificate]:
    """The unique affine (monoid) colored cone of the form (tau + Q+F, F)."""
    n = model.ambient_dim
    tau = tau_generators if isinstance(tau_generators, Cone) else Cone([la.vec(g) for g in tau_generators], n)
    if tau.ambient_dim != n:
        raise InputError(f"tau lives in Q^{tau.ambient_dim}, expected Q^{n}")
    V = valuation_cone(model)
    for g in tau.generators:
        if not V.contains(g):
            raise InputOutsideValuationCone("generator outside the valuation cone", generator=la.fmt_vec(g))
    all_colors = minkowski_sum(tau, Cone(colors(model), n) if model.semisimple_rank else Cone.zero(n))
    if not is_strictly_convex(all_colors):
        raise NotAMonoid("not strictly convex after adding all colors")
    F = monoid_colors(model, tau)
    cone = minkowski_sum(tau, _color_cone(model, F))
    cc = validate_colored_cone(model, cone, F)
    chi = construction_certificate(model, tau, F)
    if not certificate_holds(model, cone, F, chi):
        raise AssertionError("construction certificate failed its independent check")
    return cc, AffineCertificate(chi)


def is_monoid(model: GroupModel, cone: Cone, F: Iterable[int]) -> bool:
    """True iff (cone, F) is a valid colored cone with an affineness certificate."""
    try:
        cc = validate_colored_cone(model, cone, F)
    except (NotStrictlyConvex, NoInteriorValuation, BadGenerators, BadColors):
        return False
    return isinstance(is_affine(model, cc), AffineCertificate)


def enumerate_affine_color_sets(model: GroupModel, tau: Sequence[Sequence] | Cone) -> list[frozenset[int]]:
    """Brute force over all color subsets F' with (tau + Q+F', F') affine."""
    l = model.semisimple_rank
    if l > COLOR_ENUMERATION_BOUND:
        raise ResourceBoundExceeded(f"2^{l} color subsets exceed the enumeration bound")
    n = model.ambient_dim
    tau = tau if isinstance(tau, Cone) else Cone([la.vec(g) for g in tau], n)
    out = []
    for size in range(l + 1):
        for subset in itertools.combinations(range(1, l + 1), size):
            cone = minkowski_sum(tau, _color_cone(model, subset))
            if is_monoid(model, cone, subset):
                out.append(frozenset(subset))
    return out


def orbit_dimension(model: GroupModel, face: Cone, face_colors: Iterable[int]) -> int:
    """(l + z) - dim face + 2 (|positive roots| - |positive roots supported on F(Y)|)."""
    return model.ambient_dim - face.dim + 2 * (len(model.positive_roots) - roots_supported_on(model, face_colors))


def orbits(model: GroupModel, cc: ColoredCone) -> list[OrbitDatum]:
    """G x G orbits as colored faces, from the open orbit down to the kernel."""
    V = valuation_cone(model)
    n = model.ambient_dim
    out = []
    for f in faces(cc.cone):
        if relint_witness(f, V) is None:
            continue
        fc = frozenset(i for i in cc.colors if f.contains(la.unit(n, i - 1)))
        out.append(OrbitDatum(f, fc, orbit_dimension(model, f, fc), f.dim == 0, f == cc.cone))
    return sorted(out, key=lambda o: (-o.dimension, o.face.dim, o.face.rays))


def orbit_covers(orbit_list: Sequence[OrbitDatum]) -> list[tuple[int, int]]:
    """Covering pairs (i, j): orbit j lies in the closure of orbit i with nothing between.

    Closure order is reverse inclusion of faces.
    """
    below = {
        (i, j)
        for i, a in enumerate(orbit_list)
        for j, b in enumerate(orbit_list)
        if i != j and b.face.contains_cone(a.face) and a.face != b.face
    }
    return sorted(
        (i, j) for i, j in below if not any((i, k) in below and (k, j) in below for k in range(len(orbit_list)))
    )


def kernel(model: GroupModel, cc: ColoredCone) -> OrbitDatum:
    """The unique closed orbit (the minimal ideal); it is a reductive group."""
    for o in orbits(model, cc):
        if o.is_closed:
            return o
    raise AssertionError("a valid colored cone always has its full face as an orbit")


def has_zero(model: GroupModel, cc: ColoredCone) -> bool:
    return cc.cone.dim == model.ambient_dim and cc.colors == frozenset(range(1, model.semisimple_rank + 1))


def _dominant_dual(model: GroupModel, cc: ColoredCone) -> Cone:
    n = model.ambient_dim
    dual = dual_cone(cc.cone)
    dominant = Cone.from_inequalities([la.unit(n, i) for i in range(model.semisimple_rank)], (), n) if model.semisimple_rank else Cone.full(n)
    return intersect(dual, dominant)


def weight_monoid(model: GroupModel, cc: ColoredCone) -> WeightMonoidData:
    """Hilbert basis of the dominant lattice characters non-negative on the cone."""
    dual = dual_cone(cc.cone)
    dominant_part = _dominant_dual(model, cc)
    basis = tuple(hilbert_basis(dominant_part, model.dual_lattice))
    dominant = all(all(h[i] >= 0 for i in range(model.semisimple_rank)) for h in basis)
    return WeightMonoidData(dual, basis, dominant)


def dominant_weights(model: GroupModel, cc: ColoredCone, height: int) -> list[Vector]:
    """Dominant lattice characters in the dual cone with lattice coordinates bounded by ``height``.

    In characteristic 0 these index the summands V_chi (x) V_chi^* of k[S];
    in positive characteristic they only index a good filtration.
    """
    cone = _dominant_dual(model, cc)
    basis = model.dual_lattice
    out = []
    for coords in itertools.product(range(-height, height + 1), repeat=model.ambient_dim):
        chi = la.vecmat(la.vec(coords), basis)
        if cone.contains(chi):
            out.append(chi)
    return sorted(out, key=lambda c: (sum(abs(x) for x in c), c))


def decoloration(model: GroupModel, cc: ColoredCone) -> Cone:
    """The cone of the decolored embedding: cone cap V(G)."""
    return intersect(cc.cone, valuation_cone(model))


def _integer_span_lattice(lattice_rows, subspace_basis, n) -> list[Vector]:
    """Basis of L cap U for L given by rows and U by a (rational) basis."""
    if not subspace_basis:
        return []
    perp = la.nullspace(subspace_basis, n)
    if not perp:
        return [tuple(r) for r in lattice_rows]
    prod = la.matmul(lattice_rows, la.transpose(perp))
    ker = la.integer_left_kernel(prod)
    return [la.vecmat(y, lattice_rows) for y in ker]


def quasi_direct_decompose(model: GroupModel, cc: ColoredCone) -> Decomposition:
    n = model.ambient_dim
    l = model.semisimple_rank
    span = list(la.rref(cc.cone.generators)[0]) if cc.cone.generators else []
    for i in range(1, l + 1):
        inside = la.in_span(span, la.unit(n, i - 1)) if span else False
        if i in cc.colors and not inside:
            raise SpanMismatch(f"color {i} of F lies outside the span of the cone", color=i)
        if i not in cc.colors and inside:
            raise SpanMismatch(f"color {i} outside F lies in the span of the cone", color=i)
    F = sorted(cc.colors)
    g1 = frozenset(range(1, l + 1)) - cc.colors
    central_proj = [tuple(Fraction(0) for _ in range(l)) + tuple(v[l:]) for v in span]
    central_basis = list(la.rref(central_proj)[0]) if central_proj and any(not la.is_zero(v) for v in central_proj) else []
    s0_basis = [la.unit(n, i - 1) for i in F] + central_basis
    if len(s0_basis) != len(span):
        raise SpanMismatch("span of the cone does not split as colors plus center")

    blocks_in = [(letter, rank) for letter, rank, off in model.blocks if off + 1 in cc.colors]
    blocks_out = [(letter, rank) for letter, rank, off in model.blocks if off + 1 not in cc.colors]
    s0_model = s0_cc = None
    if s0_basis:
        s0_model = build_group(GroupSpec(tuple(blocks_in), len(central_basis)))
        gens = [la.coordinates(s0_basis, g) for g in cc.cone.canonical_generators]
        s0_cc = ColoredCone(Cone(gens, len(s0_basis)), frozenset(range(1, len(F) + 1)))
    g1_central = n - l - len(central_basis)
    g1_model = None
    if blocks_out or g1_central:
        g1_model = build_group(GroupSpec(tuple(blocks_out), g1_central))

    # Q(G_1): remaining coroots plus the complement of the central span inside the center
    comp = la.nullspace([b[l:] for b in central_basis], n - l)
    cperp = [(Fraction(0),) * l + tuple(v) for v in comp]
    g1_span = [la.unit(n, i - 1) for i in sorted(g1)] + cperp
    lat2 = _integer_span_lattice(model.lattice, s0_basis, n)
    lat1 = _integer_span_lattice(model.lattice, g1_span, n)
    joint = lat2 + lat1
    index = int(abs(la.det(joint) / la.det(model.lattice))) if len(joint) == n else 0
    return Decomposition(tuple(span), g1, frozenset(F), tuple(s0_basis), s0_model, s0_cc, g1_model, index)


def central_quotient(model: GroupModel, new_lattice: Sequence[Sequence]) -> GroupModel:
    """The model of G/Gamma: same root data, cocharacter lattice enlarged to ``new_lattice``."""
    new = la.mat(new_lattice)
    n = model.ambient_dim
    if len(new) != n or any(len(r) != n for r in new) or la.det(new) == 0:
        raise NotCommensurable("new lattice must be a nonsingular square basis of the same size")
    transition = la.matmul(model.lattice, la.inverse(new))
    if not all(la.is_integral(r) for r in transition):
        raise NotCommensurable("new lattice does not contain the old one")
    inv = la.inverse(new)
    for i in range(model.semisimple_rank):
        if not la.is_integral(la.vecmat(la.unit(n, i), inv)):
            raise MissingCoroots(f"coroot {i + 1} missing from the new lattice")
    return model.with_lattice(new)


def central_witness(model: GroupModel, cc: ColoredCone) -> Vector:
    """W-sum of an interior valuation of the cone: a nonzero central cocharacter."""
    if cc.cone.dim < 1:
        raise PreconditionFailed("the cone is {0}: S = G has no boundary to witness")
    lam = relint_witness(cc.cone, valuation_cone(model))
    if lam is None:
        raise NoInteriorValuation("relative interior of the cone misses the valuation cone")
    mu = w_average(model, lam)
    if la.is_zero(mu):
        raise WitnessZero("W-average of the interior valuation vanishes", point=la.fmt_vec(lam))
    assert all(x == 0 for x in mu[: model.semisimple_rank])
    return mu

"""Normal reductive monoids with a prescribed unit group, classified by colored cones.

Exact rational arithmetic throughout.  Typical use::

    from reductive_monoids import group, construct_monoid, orbits
    G = group("A1", central_rank=1)          # Sl(2) x k*
    cc, chi = construct_monoid(G, [(-1, -1)])
    [o.dimension for o in orbits(G, cc)]     # [4, 3, 0]
"""

from .classify import (
    AffineCertificate,
    AffineRefusal,
    ColoredCone,
    Decomposition,
    OrbitDatum,
    WeightMonoidData,
    central_quotient,
    central_witness,
    construct_monoid,
    decoloration,
    dominant_weights,
    enumerate_affine_color_sets,
    has_zero,
    is_affine,
    is_monoid,
    kernel,
    orbits,
    quasi_direct_decompose,
    validate_colored_cone,
    weight_monoid,
)
from .cones import Cone, dual_cone, faces, hilbert_basis, intersect, is_strictly_convex, minkowski_sum, relint_meets
from .rootsys import GroupModel, GroupSpec, build_group, colors, group, valuation_cone, w_average

__version__ = "0.1.0"

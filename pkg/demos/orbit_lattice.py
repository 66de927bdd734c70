"""
Orbits of the 2x2 matrix monoid
===============================

G x G orbits correspond to colored faces whose relative interior meets
the valuation cone.  For M_2 they are the three rank strata.
"""

from reductive_monoids import group, linalg as la
from reductive_monoids.classify import construct_monoid, kernel, orbit_covers, orbits
from reductive_monoids.cli import orbits_dot

G = group("A1", central_rank=1)
cc, _ = construct_monoid(G, [(-1, -1)])

ol = orbits(G, cc)
for o in ol:
    print(o.dimension, [la.fmt_vec(r) for r in o.face.rays], sorted(o.face_colors))

# rank r matrices in M_n have dimension r(2n - r)
print([r * (4 - r) for r in (2, 1, 0)])
print("kernel:", kernel(G, cc).dimension)
print("covers:", orbit_covers(ol))

print(orbits_dot(ol))

# Sl(3) x k*: a monoid with zero whose two middle faces give
# incomparable orbits of the same dimension
G3 = group("A2", central_rank=1)
cc3, _ = construct_monoid(G3, [(-2, -2, -3)])
print([o.dimension for o in orbits(G3, cc3)])

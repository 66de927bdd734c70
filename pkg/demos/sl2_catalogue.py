"""
Monoids with unit group Sl(2) x k*
==================================

The cocharacter space is Q^2: first coordinate along the coroot, second
along the center.  The valuation cone is the half-plane v1 <= 0 and the
only color sits at (1, 0).
"""

from reductive_monoids import Cone, ColoredCone, group
from reductive_monoids.classify import construct_monoid, decoloration, has_zero, is_affine
from reductive_monoids.errors import NotAMonoid

G = group("A1", central_rank=1)

# the two elementary embeddings: one boundary divisor, no color
for tau in [(0, 1)], [(0, -1)]:
    cc, cert = construct_monoid(G, tau)
    print(tau, "->", cc.to_json(), "chi =", cert.to_json()["chi"])

# a valuation leaning into the chamber pulls the color in: 2x2 matrices
cc, cert = construct_monoid(G, [(-1, -1)])
print("zero monoid:", cc.to_json(), "has zero:", has_zero(G, cc))

# dropping the color gives a non-affine embedding; the refusal is a Farkas combination
dec = ColoredCone(decoloration(G, cc), frozenset())
print("decoloration:", dec.to_json())
print("affine?", is_affine(G, dec).to_json())

# along the coroot direction the color closes a line
try:
    construct_monoid(G, [(-1, 0)])
except NotAMonoid as exc:
    print("(-1, 0):", exc.report())

"""
Splitting off the group part
============================

A monoid S factors as (G_1 x S_0)/Gamma with S_0 a monoid with zero.  The
span of the colored cone carries S_0; the colors outside the cone belong
to G_1.
"""

from reductive_monoids import group
from reductive_monoids.classify import central_witness, construct_monoid, quasi_direct_decompose
from reductive_monoids.rootsys import GroupSpec, build_group
from reductive_monoids import linalg as la

# (Sl(2) x k*)^2 with a matrix monoid in the second factor only
G = group("A1", "A1", central_rank=2)
cc, _ = construct_monoid(G, [(0, -1, 0, -1)])
d = quasi_direct_decompose(G, cc)
print("F:", sorted(cc.colors), "span:", [la.fmt_vec(v) for v in d.g2_span])
print("S_0:", d.s0_model.spec.to_json(), d.s0_colored_cone.to_json())
print("G_1:", d.g1_model.spec.to_json(), "Gamma index:", d.gamma_index)

# a lattice gluing the coroot to the center gives a nontrivial Gamma
glued = build_group(GroupSpec((("A", 1),), 2, la.mat([[1, 0, 0], ["1/2", "1/2", "1/2"], [0, 0, 1]])))
cc2, _ = construct_monoid(glued, [(-1, -1, 0)])
print("glued Gamma index:", quasi_direct_decompose(glued, cc2).gamma_index)

# the W-average of an interior valuation is central and nonzero
print("witness:", la.fmt_vec(central_witness(G, cc)))

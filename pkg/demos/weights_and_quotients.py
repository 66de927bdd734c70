"""
Weight monoids and central quotients
====================================

k[S] is spanned by V_chi (x) V_chi^* over the dominant characters chi that
are non-negative on the colored cone (characteristic 0).  Enlarging the
cocharacter lattice by a central element keeps the cone and shrinks the
character lattice.
"""

from reductive_monoids import group, linalg as la
from reductive_monoids.classify import (
    central_quotient,
    construct_monoid,
    dominant_weights,
    orbits,
    weight_monoid,
)

G = group("A1", central_rank=1)
cc, _ = construct_monoid(G, [(-1, -1)])

wm = weight_monoid(G, cc)
print("Sl(2) x k*:", [la.fmt_vec(h) for h in wm.hilbert_basis])
print("low weights:", [la.fmt_vec(w) for w in dominant_weights(G, cc, 2)][:6])

# Gl(2): (1/2, 1/2) becomes a cocharacter, characters need a + b even
GL2 = central_quotient(G, [[1, 0], ["1/2", "1/2"]])
print("dual lattice:", [la.fmt_vec(r) for r in GL2.dual_lattice])
print("Gl(2):", [la.fmt_vec(h) for h in weight_monoid(GL2, cc).hilbert_basis])

# the orbit structure does not see the quotient
print([o.dimension for o in orbits(G, cc)], [o.dimension for o in orbits(GL2, cc)])

"""Shared generators and brute-force oracles for the test suite."""

from __future__ import annotations

import itertools
import random
from fractions import Fraction

from reductive_monoids import linalg as la
from reductive_monoids.classify import construct_monoid
from reductive_monoids.errors import ClassificationError
from reductive_monoids.rootsys import group, valuation_cone

CRITERION_TYPES = [("A1",), ("A2",), ("A1", "A1"), ("B2",)]


def random_valuation(model, rng):
    """Random nonzero integer point of V(G): non-negative mix of its rays plus a central part."""
    V = valuation_cone(model)
    while True:
        v = la.zero(model.ambient_dim)
        for r in V.rays:
            v = la.add(v, la.scale(rng.randint(0, 2), r))
        for d in V.lineality_basis:
            v = la.add(v, la.scale(rng.randint(-2, 2), d))
        if not la.is_zero(v):
            return v


def random_tau_instances(count_per_model=13, seed=2024):
    """(model, tau generators, colored cone, certificate) over every type and z in {1, 2}."""
    rng = random.Random(seed)
    out = []
    for types in CRITERION_TYPES:
        for z in (1, 2):
            model = group(*types, central_rank=z)
            got = 0
            while got < count_per_model:
                gens = [random_valuation(model, rng) for _ in range(rng.randint(1, 3))]
                try:
                    cc, cert = construct_monoid(model, gens)
                except ClassificationError:
                    continue
                out.append((model, gens, cc, cert))
                got += 1
    return out


def in_simplicial_cone(gens, p):
    """Membership for a cone on linearly independent generators, by solving for coefficients."""
    t = la.coordinates([la.vec(g) for g in gens], la.vec(p))
    return t is not None and all(x >= 0 for x in t)


def brute_hilbert_basis(points):
    """Irreducible nonzero elements of a finite, sum-closed-enough set of monoid points."""
    pts = {tuple(p) for p in points if any(p)}
    return sorted(
        p for p in pts if not any(tuple(a - b for a, b in zip(p, q)) in pts for q in pts if q != p)
    )


def monoid_oracle(basis, limit, inside=None):
    """Membership in the monoid generated by ``basis``, by memoised depth-first search.

    ``limit`` is a linear form positive on the cone, so remainders shrink;
    ``inside`` optionally prunes remainders that have left the cone.  The
    memo is shared between queries.
    """
    basis = [tuple(Fraction(x) for x in b) for b in basis]
    known = {}

    def query(target):
        target = tuple(Fraction(x) for x in target)
        stack = [target]
        while stack:
            t = stack[-1]
            if t in known:
                stack.pop()
                continue
            if all(x == 0 for x in t):
                known[t] = True
            elif la.dot(limit, t) <= 0 or (inside is not None and not inside(t)):
                known[t] = False
            else:
                children = [tuple(a - b for a, b in zip(t, g)) for g in basis]
                if any(known.get(c) for c in children):
                    known[t] = True
                else:
                    pending = next((c for c in children if c not in known), None)
                    if pending is not None:
                        stack.append(pending)
                        continue
                    known[t] = False
            stack.pop()
        return known[target]

    return query


def box(n, h):
    return itertools.product(range(-h, h + 1), repeat=n)


def rank_stratum_dimension(size, r):
    """Dimension of rank <= r matrices of the given size, as the rank of the
    differential of (A, B) -> A B at a fixed generic rational point."""
    if r == 0:
        return 0
    rng = random.Random(7)
    a = [[Fraction(rng.randint(-5, 5)) for _ in range(r)] for _ in range(size)]
    b = [[Fraction(rng.randint(-5, 5)) for _ in range(size)] for _ in range(r)]
    rows = []
    for i in range(size):
        for j in range(r):
            # derivative along A_ij: E_ij B
            d = [[Fraction(0)] * size for _ in range(size)]
            for q in range(size):
                d[i][q] = b[j][q]
            rows.append([x for row in d for x in row])
    for i in range(r):
        for j in range(size):
            # derivative along B_ij: A E_ij
            d = [[Fraction(0)] * size for _ in range(size)]
            for p in range(size):
                d[p][j] = a[p][i]
            rows.append([x for row in d for x in row])
    return la.rank(rows)

"""Acceptance criteria 1-9.

Each test appends one ``PASS``/``FAIL`` line to ``RESULTS``; conftest.py
prints them in the terminal summary.  Run standalone with
``python3 tests/test_acceptance.py``.
"""

import functools
import io
import itertools
import random
import time
from pathlib import Path

from helpers import (
    CRITERION_TYPES,
    brute_hilbert_basis,
    monoid_oracle,
    random_tau_instances,
    random_valuation,
    rank_stratum_dimension,
)
from reductive_monoids import linalg as la
from reductive_monoids.classify import (
    AffineCertificate,
    AffineRefusal,
    ColoredCone,
    central_quotient,
    central_witness,
    certificate_holds,
    construct_monoid,
    decoloration,
    enumerate_affine_color_sets,
    has_zero,
    is_affine,
    kernel,
    orbits,
    validate_colored_cone,
    weight_monoid,
)
from reductive_monoids.cli import main
from reductive_monoids.cones import Cone, dual_cone, hilbert_basis, is_strictly_convex
from reductive_monoids.errors import ClassificationError, NotAMonoid
from reductive_monoids.rootsys import group

RESULTS: list[str] = []
GOLDEN = Path(__file__).parent / "golden"


def record(number, ok, detail):
    RESULTS.append(f"criterion {number}: {'PASS' if ok else 'FAIL'}  {detail}")
    assert ok, detail


@functools.lru_cache(maxsize=None)
def instances():
    return tuple(random_tau_instances())


def test_criterion_1_example_catalogue():
    start = time.perf_counter()
    m = group("A1", central_rank=1)
    ok = True
    for tau in ([(0, 1)], [(0, -1)]):
        cc, cert = construct_monoid(m, tau)
        ok &= cc.colors == frozenset() and certificate_holds(m, cc.cone, cc.colors, cert.chi)
    cc, cert = construct_monoid(m, [(-1, -1)])
    ok &= cc == ColoredCone(Cone([(-1, -1), (1, 0)]), frozenset({1}))
    ok &= has_zero(m, cc) and la.is_zero(cert.chi) and certificate_holds(m, cc.cone, cc.colors, (0, 0))
    dec = decoloration(m, cc)
    ok &= dec == Cone([(-1, -1), (0, -1)])
    ok &= isinstance(is_affine(m, ColoredCone(dec, frozenset())), AffineRefusal)
    elapsed = time.perf_counter() - start
    record(1, ok and elapsed < 1.0, f"Sl(2) x k* catalogue exact, {elapsed:.3f}s (< 1s)")


def test_criterion_2_unique_color_set():
    start = time.perf_counter()
    inst = instances()
    bad = [
        (m.spec, gens)
        for m, gens, cc, _ in inst
        if enumerate_affine_color_sets(m, gens) != [cc.colors]
    ]
    elapsed = time.perf_counter() - start
    kinds = {(m.spec.factors, m.central_rank) for m, *_ in inst}
    record(
        2,
        len(inst) >= 100 and len(kinds) == 8 and not bad and elapsed < 60,
        f"{len(inst)} instances over {len(kinds)} group types, {len(bad)} exceptions, {elapsed:.1f}s (< 60s)",
    )


def test_criterion_3_matrix_oracle():
    m = group("A1", central_rank=1)
    cc, _ = construct_monoid(m, [(-1, -1)])
    dims = sorted((o.dimension for o in orbits(m, cc)), reverse=True)
    oracle = sorted((rank_stratum_dimension(2, r) for r in range(3)), reverse=True)
    closed_form = [r * (4 - r) for r in (2, 1, 0)]
    record(3, dims == oracle == closed_form == [4, 3, 0], f"orbit dims {dims}, rank strata {oracle}")


def test_criterion_4_open_orbit_and_kernel():
    failures = 0
    for m, _, cc, _ in instances():
        ol = orbits(m, cc)
        opened = [o for o in ol if o.is_open]
        k = kernel(m, cc)
        ok = len(opened) == 1 and opened[0].dimension == m.semisimple_rank + m.central_rank + 2 * len(m.positive_roots)
        ok &= opened[0].dimension == m.dimension
        ok &= all(o.dimension > k.dimension for o in ol if o is not k and not o.is_closed)
        ok &= has_zero(m, cc) == (k.dimension == 0)
        # smaller face, larger orbit
        ok &= all(
            a.dimension >= b.dimension for a in ol for b in ol if b.face.contains_cone(a.face)
        )
        failures += not ok
    record(4, failures == 0, f"{len(instances())} instances, {failures} failures")


def test_criterion_5_decoloration_roundtrip():
    failures = 0
    for m, _, cc, _ in instances():
        again, _ = construct_monoid(m, decoloration(m, cc))
        failures += again != cc or again.cone.key() != cc.cone.key()
    record(5, failures == 0, f"{len(instances())} instances, {failures} mismatches")


def _random_cone(rng, n):
    gens, k = [], rng.randint(1, n + 2)
    while len(gens) < k:
        g = tuple(rng.randint(-3, 3) for _ in range(n))
        if any(g):
            gens.append(g)
    return Cone(gens, n)


def test_criterion_6_cone_kernel():
    start = time.perf_counter()
    rng = random.Random(6)
    dual_bad = 0
    for k in range(200):
        c = _random_cone(rng, 2 + k % 3)
        dual_bad += dual_cone(dual_cone(c)) != c
    hb_bad = checked = 0
    for n in (2, 3):
        count = 0
        while count < 10:
            c = _random_cone(rng, n)
            if not is_strictly_convex(c) or c.dim != n:
                continue
            count += 1
            hb = hilbert_basis(c)
            form = la.zero(n)
            for g in dual_cone(c).rays:
                form = la.add(form, g)
            member = monoid_oracle(hb, form, c.contains)
            for p in itertools.product(range(-6, 7), repeat=n):
                if any(p) and c.contains(p):
                    checked += 1
                    hb_bad += not member(p)
            hb_bad += any(a != b and c.contains(la.sub(b, a)) for a in hb for b in hb)
    elapsed = time.perf_counter() - start
    record(
        6,
        dual_bad == 0 and hb_bad == 0 and elapsed < 60,
        f"dual o dual on 200 cones ({dual_bad} bad); HB complete on {checked} points up to height 6 "
        f"({hb_bad} bad), {elapsed:.1f}s (< 60s)",
    )


def _brute_weight_basis(cone_gens, in_lattice, h=8):
    pts = [
        p
        for p in itertools.product(range(-h, h + 1), repeat=2)
        if in_lattice(p) and p[0] >= 0 and all(la.dot(p, g) >= 0 for g in cone_gens)
    ]
    return brute_hilbert_basis(pts)


def test_criterion_7_central_quotient():
    m = group("A1", central_rank=1)
    q = central_quotient(m, [[1, 0], ["1/2", "1/2"]])
    ok = True
    for gens, F in [([(-1, -1), (1, 0)], [1]), ([(0, 1)], []), ([(0, -1)], [])]:
        a, b = validate_colored_cone(m, Cone(gens), F), validate_colored_cone(q, Cone(gens), F)
        ok &= a == b
        ok &= [o.to_json() for o in orbits(m, a)] == [o.to_json() for o in orbits(q, b)]
        ok &= has_zero(m, a) == has_zero(q, b)
    zero = ColoredCone(Cone([(-1, -1), (1, 0)]), frozenset({1}))
    before = list(weight_monoid(m, zero).hilbert_basis)
    after = list(weight_monoid(q, zero).hilbert_basis)
    # characters pairing integrally with (1, 0), (0, 1) and (1/2, 1/2)
    oracle_before = _brute_weight_basis(zero.cone.generators, lambda p: True)
    oracle_after = _brute_weight_basis(zero.cone.generators, lambda p: (p[0] + p[1]) % 2 == 0)
    ok &= before == oracle_before == [(0, -1), (1, -1)]
    ok &= after == oracle_after == [(0, -2), (1, -1)]
    show = lambda hb: "{" + ", ".join("(" + ",".join(la.fmt_vec(h)) + ")" for h in hb) + "}"
    record(7, ok, f"(C, F), orbits, has_zero unchanged; HB {show(before)} -> {show(after)}")


def test_criterion_8_central_witness():
    bad = 0
    for m, _, cc, _ in instances():
        mu = central_witness(m, cc)
        bad += la.is_zero(mu) or any(mu[: m.semisimple_rank])
    rng = random.Random(8)
    attempts = survivors = valid_not_affine = 0
    for types in CRITERION_TYPES:
        m = group(*types)
        l = m.semisimple_rank
        for _ in range(60):
            attempts += 1
            gens = [
                random_valuation(m, rng) if rng.random() < 0.7 else tuple(rng.randint(-2, 2) for _ in range(l))
                for _ in range(rng.randint(1, 3))
            ]
            F = [i for i in range(1, l + 1) if rng.random() < 0.5]
            cone = Cone([g for g in gens if any(g)] + [la.unit(l, i - 1) for i in F], l)
            if cone.dim < 1:
                continue
            try:
                cc = validate_colored_cone(m, cone, F)
            except ClassificationError:
                continue
            valid_not_affine += 1
            if isinstance(is_affine(m, cc), AffineCertificate):
                survivors += 1
            try:
                construct_monoid(m, [random_valuation(m, rng)])
                survivors += 1
            except NotAMonoid:
                pass
    record(
        8,
        bad == 0 and survivors == 0,
        f"{len(instances())} witnesses nonzero and central ({bad} bad); z=0: {attempts} attempts, "
        f"{survivors} affine survivors ({valid_not_affine} valid colored cones, none affine)",
    )


def test_criterion_9_cli_golden():
    cases = [
        (["classify", "--cone", "tau_neg.json"], 0, "classify_tau_neg.out"),
        (["classify", "--cone", "tau_line.json"], 3, "classify_tau_line.out"),
        (["orbits", "--cone", "zero_monoid.json"], 0, "orbits_zero_monoid.out"),
        (["orbits", "--cone", "zero_monoid.json", "--format", "dot"], 0, "orbits_zero_monoid.dot"),
    ]
    ok = True
    for args, code, golden in cases:
        out = io.StringIO()
        argv = [args[0], "--group", str(GOLDEN / "a1z1.json")] + [
            str(GOLDEN / a) if a.endswith(".json") else a for a in args[1:]
        ]
        ok &= main(argv, out, io.StringIO()) == code and out.getvalue() == (GOLDEN / golden).read_text()
    record(9, ok, f"{len(cases)} reports byte-identical to tests/golden")


if __name__ == "__main__":
    for name, fn in sorted(globals().items()):
        if name.startswith("test_criterion"):
            try:
                fn()
            except AssertionError:
                pass
    print("\n".join(RESULTS))

"""Acceptance criteria 1-7.

Each criterion is one test marked ``criterion``; the terminal summary
prints one PASS/FAIL line per criterion.  Run directly with
``python3 tests/test_acceptance.py`` or through pytest.
"""

import itertools
import os
import random
import subprocess
import sys
import time
from fractions import Fraction
from pathlib import Path

import pytest

from corpus import corpus, monomials_of_degree, random_homogeneous
from oracles import minimal_monomial_count, monomial_betti
from solvres import (
    FreeModule,
    Presentation,
    buchberger,
    contains,
    is_groebner,
    min_gens_gb,
    minimal_free_resolution,
    minimize_presentation,
    polynomial_ring,
    quantum_plane,
    schreyer_syzygies,
    syzygies_of_generators,
    truncated_buchberger,
    verify_resolution,
)
from solvres.freemod import combine

ROOT = Path(__file__).resolve().parent.parent
crit = pytest.mark.criterion


def _membership_tests(A, L, U, G, n0, rng):
    """Homogeneous elements of degree <= n0: multiples of inputs, basis elements and random vectors."""
    tests = [g for g in G if g.degree() <= n0]
    for d in range(0, n0 + 1):
        for u in U:
            e = d - u.degree()
            if e < 0:
                continue
            mons = monomials_of_degree(A.n, e, A.weights)
            f = A.monomial(rng.choice(mons), rng.randint(1, 3)) + A.monomial(rng.choice(mons), 1)
            tests.append(f * u)
        if d > 0:
            tests.append(L.from_components([random_homogeneous(A, rng, d)]))
            # random vector plus a member: membership must follow the random part
            if tests:
                tests.append(tests[-1] + tests[0] if tests[0].degree() == d else tests[-1])
    return [t for t in tests if t.is_homogeneous()]


@crit("1", "Buchberger criterion on 200 random inputs")
def test_c1_buchberger_criterion():
    t0 = time.perf_counter()
    cases = corpus(200)
    labels = set()
    for label, A, L, U in cases:
        labels.add(label)
        G, _ = buchberger(U, track=False)
        assert is_groebner(G.elements), (label, [str(u) for u in U])
        for u in U:
            assert G.remainder(u) == L.zero
    assert labels == {"comm", "quantum3", "quantum3b", "mq2"}
    assert time.perf_counter() - t0 < 60


@crit("2", "truncated membership agrees with full membership")
def test_c2_truncation_consistency():
    t0 = time.perf_counter()
    rng = random.Random(7)
    decided = members = 0
    for label, A, L, U in corpus(200):
        G, _ = buchberger(U, track=False)
        top = max(u.degree() for u in U)
        for n0 in range(0, top + 3):
            T = truncated_buchberger(U, n0)
            assert all(g.degree() <= n0 for g in T)
            assert T.degrees() == sorted(T.degrees())
            for xi in _membership_tests(A, L, U, G, n0, rng):
                full, trunc = G.contains(xi), T.contains(xi)
                assert full == trunc, (label, n0, str(xi))
                decided += 1
                members += full
    assert 0 < members < decided
    assert time.perf_counter() - t0 < 60


def _redundant_inputs(A, U, rng):
    """Append multiples and combinations of the inputs, then shuffle."""
    extra = []
    for u in U:
        m = rng.choice(monomials_of_degree(A.n, 1, A.weights))
        extra.append(A.monomial(m, rng.randint(1, 3)) * u)
    if len(U) >= 2 and U[0].degree() == U[1].degree():
        extra.append(U[0] + U[1].scale(2))
    extra.append(U[0].scale(3))
    out = list(U) + extra
    rng.shuffle(out)
    return out


@crit("3", "minimal generating sets")
def test_c3_minimal_generators():
    t0 = time.perf_counter()
    rng = random.Random(11)
    for label, A, L, U in corpus(120, seed=333, maxdeg=3):
        W = _redundant_inputs(A, U, rng)
        U_min, G = min_gens_gb(W)
        assert len(U_min) <= len(U)
        keep = set(G.u_min)
        for k, xi in enumerate(W):
            if k not in keep:
                assert contains(U_min, xi), (label, str(xi))
        for k, xi in enumerate(U_min):
            assert not contains(U_min[:k] + U_min[k + 1:], xi), (label, str(xi))
    # commutative monomial instances against the predecessor test
    A = polynomial_ring(("x", "y", "z"))
    L = FreeModule(A, [0])
    for _ in range(60):
        gens = [tuple(rng.randint(0, 2) for _ in range(3)) for _ in range(rng.randint(1, 6))]
        gens = [g for g in gens if any(g)] or [(1, 0, 0)]
        gens += [tuple(a + b for a, b in zip(g, (0, 1, 0))) for g in gens[:2]] + gens[:1]
        U_min, _ = min_gens_gb([L.from_components([A.monomial(g)]) for g in gens])
        assert len(U_min) == minimal_monomial_count(gens)
    assert time.perf_counter() - t0 < 30


def _planted_presentation(A, rng):
    """A graded presentation whose planted pivots are independent.

    Returns ``(presentation, number of planted pivots)``.
    """
    s = rng.randint(2, 4)
    shifts = [rng.randint(0, 2) for _ in range(s)]
    L = FreeModule(A, shifts)
    p = rng.randint(1, s - 1)
    pivots = rng.sample(range(s), p)
    others = [k for k in range(s) if k not in pivots]
    rels = []
    for i in pivots:
        d = shifts[i]  # relation degree: the unit entry sits at e_i
        comps = [A.zero] * s
        comps[i] = A.constant(rng.choice([1, 2, -3, Fraction(1, 2)]))
        for k in others:
            e = d - shifts[k]
            if e > 0:
                comps[k] = random_homogeneous(A, rng, e)
        rels.append(L.from_components(comps))
    for _ in range(rng.randint(0, 2)):  # relations without units
        d = max(shifts) + rng.randint(1, 2)
        comps = [random_homogeneous(A, rng, d - b) if d - b > 0 else A.zero for b in shifts]
        rels.append(L.from_components(comps))
    # combinations of earlier relations with positive-degree coefficients
    if rels:
        r = rels[0]
        m = A.monomial(rng.choice(monomials_of_degree(A.n, 1, A.weights)))
        rels.append(m * r)
    rng.shuffle(rels)
    return Presentation(L, rels), p


@crit("4", "presentation minimization with planted pivots")
def test_c4_presentation():
    t0 = time.perf_counter()
    rng = random.Random(4)
    algebras = [polynomial_ring(("x", "y", "z")), quantum_plane(2)]
    for k in range(50):
        A = algebras[k % 2]
        P, p = _planted_presentation(A, rng)
        mp = minimize_presentation(P)
        assert len(mp.kept) == P.ambient.rank - p
        assert len(mp.log) == p
        for r in mp.relations:
            for h in r.components():
                assert not (h and h.is_constant())
        N, _ = buchberger([r for r in P.relations if r], P.ambient, track=False)
        for r in mp.relations:
            assert N.contains(mp.lift(r))
    assert time.perf_counter() - t0 < 10


@crit("5", "syzygy exactness and the Schreyer leading-monomial law")
def test_c5_syzygies():
    t0 = time.perf_counter()
    cases = corpus(100, seed=555, maxdeg=3)
    A = polynomial_ring(("x", "y", "z"))
    rng = random.Random(5)
    for order in ("TOP", "POT"):
        for _ in range(10):
            L = FreeModule(A, [0, 1], order=order)
            U = []
            for _ in range(3):
                d = rng.randint(2, 3)
                U.append(L.from_components([random_homogeneous(A, rng, d), random_homogeneous(A, rng, d - 1)]))
            cases.append(("module-" + order, A, L, U))
    for label, A, L, U in cases:
        G, T = buchberger(U, track=True)
        S = schreyer_syzygies(G)
        L1 = S[0].element.module if S else None
        for s in S:
            _, i, j = s.provenance
            (p, ai), (_, aj) = G[i].lm, G[j].lm
            gamma = tuple(max(a, b) for a, b in zip(ai, aj))
            assert tuple(s.element.lm) == (j, tuple(g - b for g, b in zip(gamma, aj)))
            assert not combine(s.row(), G.elements, L)
        if S:
            assert is_groebner([s.element for s in S]), label
            assert L1.order == "schreyer"
        for h in syzygies_of_generators(U, G, T):
            assert not combine(h.row(), U, L), label
    assert time.perf_counter() - t0 < 30


def _monomial_instance(rng):
    n = rng.choice([2, 3])
    A = polynomial_ring(("x", "y", "z")[:n])
    gens = []
    for _ in range(rng.randint(1, 4)):
        d = rng.randint(1, 3)
        gens.append(rng.choice(monomials_of_degree(n, d)))
    return A, gens


@crit("6", "minimal free resolutions and Betti tables")
def test_c6_resolutions():
    t0 = time.perf_counter()
    A = polynomial_ring(("x", "y", "z"))
    L = FreeModule(A, [0])
    R = minimal_free_resolution(Presentation(L, [L.from_components([v]) for v in A.gens()]))
    B = R.betti()
    assert B.ranks == [1, 3, 3, 1] and B.shifts == [[0], [1, 1, 1], [2, 2, 2], [3]] and R.length == 3
    assert verify_resolution(R).ok

    Q = quantum_plane(2)
    LQ = FreeModule(Q, [0])
    R = minimal_free_resolution(Presentation(LQ, [LQ.from_components([v]) for v in Q.gens()]))
    assert R.betti().ranks == [1, 2, 1] and R.length == 2
    assert verify_resolution(R).ok

    rng = random.Random(66)
    for _ in range(30):
        A, gens = _monomial_instance(rng)
        L = FreeModule(A, [0])
        R = minimal_free_resolution(Presentation(L, [L.from_components([A.monomial(g)]) for g in gens]))
        assert R.betti().graded() == monomial_betti(gens, A.n), gens
        rep = verify_resolution(R)
        assert rep.ok, (gens, rep.failures)
        assert R.length <= A.n
    assert time.perf_counter() - t0 < 120


@crit("7", "resolve --json is byte-identical across runs")
def test_c7_determinism():
    fixtures = sorted((ROOT / "fixtures").glob("*.spa"))
    assert len(fixtures) >= 5
    for fx in fixtures:
        outs = []
        for seed in ("0", "12345"):
            env = dict(os.environ, PYTHONHASHSEED=seed)
            r = subprocess.run([sys.executable, "-m", "solvres", "resolve", "--json", str(fx)],
                               capture_output=True, env=env, cwd=ROOT)
            outs.append((r.returncode, r.stdout, r.stderr))
        assert outs[0] == outs[1], fx.name


if __name__ == "__main__":
    sys.exit(pytest.main([__file__, "-q"]))

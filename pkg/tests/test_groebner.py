import itertools

import pytest
from hypothesis import given, settings, strategies as st

from corpus import algebras, monomials_of_degree
from oracles import sympy_reduced_gb
from solvres import (
    GF,
    FreeModule,
    buchberger,
    contains,
    is_groebner,
    min_gens_gb,
    polynomial_ring,
    quantum_plane,
    truncated_buchberger,
)
from solvres.errors import HomogeneityError
from solvres.freemod import combine
from strategies import homogeneous_elements, elements

YX = polynomial_ring(("x", "y"), precedence=(1, 0))  # y < x, matches ex.spa
L = FreeModule(YX, [0])
x, y = YX.gens()
X2, XYY = L.from_components([x ** 2]), L.from_components([x * y + y ** 2])
Y3 = L.from_components([y ** 3])


def vec(A, L, *polys):
    return L.from_components(list(polys))


def test_is_groebner_examples():
    assert is_groebner([X2])
    A = polynomial_ring(("x", "y"))
    LA = FreeModule(A, [0])
    assert is_groebner([LA.from_components([g]) for g in A.gens()])
    assert not is_groebner([X2, XYY])


def test_buchberger_examples():
    G, _ = buchberger([], module=L)
    assert len(G) == 0
    G, T = buchberger([X2, XYY])
    assert set(G.reduced()) == {X2, XYY, Y3}
    assert T.verify([X2, XYY], G.elements, L)

    Q = quantum_plane(2)
    LQ = FreeModule(Q, [0])
    U = [LQ.from_components([g]) for g in Q.gens()]
    G, _ = buchberger(U)
    assert list(G.reduced()) == U


def test_truncated_examples():
    assert set(truncated_buchberger([X2, XYY], 2).reduced()) == {X2, XYY}
    assert set(truncated_buchberger([X2, XYY], 3).reduced()) == {X2, XYY, Y3}
    assert len(truncated_buchberger([], 3, module=L)) == 0
    # below the smallest input degree nothing is decided yet
    assert len(truncated_buchberger([X2, XYY], 1)) == 0


def test_min_gens_examples():
    A = polynomial_ring(("x", "y"))
    LA = FreeModule(A, [0])
    xe, ye = (LA.from_components([g]) for g in A.gens())
    x2e = LA.from_components([A.gen(0) ** 2])
    assert min_gens_gb([xe, xe])[0] == [xe]
    assert min_gens_gb([xe, x2e])[0] == [xe]
    assert min_gens_gb([x2e, xe])[0] == [xe]
    assert min_gens_gb([xe, ye])[0] == [xe, ye]


def test_min_gens_early_stop():
    U_min, G = min_gens_gb([X2, XYY], early_stop=True)
    assert U_min == [X2, XYY] and G.kind == "truncated" and G.bound == 2
    U_min, G = min_gens_gb([X2, XYY])
    assert G.kind == "full" and Y3 in set(G.reduced())


def test_contains_examples():
    assert contains([X2, XYY], XYY)
    assert contains([X2, XYY], L.zero)
    assert contains([X2, XYY], Y3)
    assert not contains([X2, XYY], L.from_components([x * y]))


def test_truncated_requires_homogeneous_input():
    with pytest.raises(HomogeneityError):
        truncated_buchberger([L.from_components([x ** 2 + y])], 3)
    T = truncated_buchberger([X2], 3)
    with pytest.raises(HomogeneityError):
        T.contains(L.from_components([x ** 2 + y]))


def test_zero_inputs_dropped():
    G, T = buchberger([L.zero, X2, L.zero])
    assert list(G.reduced()) == [X2]
    assert T.verify([L.zero, X2, L.zero], G.elements, L)


def _dicts(G):
    return {frozenset(g.component(0).terms()) for g in G.reduced()}


ORACLE_CASES = []
for n in (2, 3):
    for fam in ("deglex", "degrevlex"):
        for prec in (tuple(range(n)), tuple(reversed(range(n)))):
            ORACLE_CASES.append((n, fam, prec))


@pytest.mark.parametrize("n,fam,prec", ORACLE_CASES)
@settings(max_examples=25, deadline=None)
@given(data=st.data())
def test_commutative_oracle(n, fam, prec, data):
    A = polynomial_ring(("x", "y", "z")[:n], order=fam, precedence=prec)
    LA = FreeModule(A, [0])
    U = []
    for _ in range(data.draw(st.integers(1, 3))):
        U.append(data.draw(homogeneous_elements(LA, data.draw(st.integers(1, 3)), max_terms=3)))
    G, _ = buchberger(U, track=False)
    want = sympy_reduced_gb([dict(u.component(0).terms()) for u in U], n, prec, fam)
    assert _dicts(G) == want


CORPUS_ALGEBRAS = [A for _, A in algebras()] + [A for _, A in algebras(GF(32003))]


@settings(max_examples=40, deadline=None)
@given(data=st.data())
def test_buchberger_properties(data):
    A = data.draw(st.sampled_from(CORPUS_ALGEBRAS))
    LA = FreeModule(A, [0, 1], order=data.draw(st.sampled_from(["TOP", "POT"])))
    U = [data.draw(homogeneous_elements(LA, data.draw(st.integers(1, 3)))) for _ in range(data.draw(st.integers(1, 3)))]
    G, T = buchberger(U)
    assert is_groebner(G.elements)
    assert all(not G.remainder(u) for u in U)
    assert G.homogeneous
    assert T.verify(U, G.elements, LA)
    for g, row in zip(G.elements, G.V_matrix()):
        assert combine(row, U, LA) == g
    red = G.reduced()
    assert is_groebner(red) and all(g.lc == 1 for g in red)


@settings(max_examples=30, deadline=None)
@given(data=st.data())
def test_nonhomogeneous_input(data):
    A = data.draw(st.sampled_from(CORPUS_ALGEBRAS[:3]))
    LA = FreeModule(A, [0])
    U = [data.draw(elements(LA, 2, 3)) for _ in range(data.draw(st.integers(1, 3)))]
    G, T = buchberger(U)
    assert is_groebner(G.elements)
    assert T.verify(U, G.elements, LA)


@settings(max_examples=30, deadline=None)
@given(data=st.data())
def test_truncation_and_minimality(data):
    A = data.draw(st.sampled_from(CORPUS_ALGEBRAS))
    LA = FreeModule(A, [0])
    U = [data.draw(homogeneous_elements(LA, data.draw(st.integers(1, 3)))) for _ in range(data.draw(st.integers(1, 4)))]
    G, _ = buchberger(U, track=False)
    n0 = data.draw(st.integers(0, 4))
    T = truncated_buchberger(U, n0)
    for g in G.elements:
        if g.degree() <= n0:
            assert T.contains(g)
    for d in range(1, n0 + 1):
        for m in monomials_of_degree(A.n, d, A.weights)[:4]:
            xi = LA.from_components([A.monomial(m)])
            assert T.contains(xi) == G.contains(xi)
    U_min, _ = min_gens_gb(U)
    for k, xi in enumerate(U_min):
        assert not contains(U_min[:k] + U_min[k + 1:], xi)
    for xi in U:
        assert contains(U_min, xi)

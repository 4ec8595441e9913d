import pytest
from hypothesis import given, settings, strategies as st

from solvres import (
    FreeModule,
    Presentation,
    buchberger,
    contains,
    minimize_presentation,
    polynomial_ring,
    quantum_plane,
)
from solvres.errors import HomogeneityError, ModuleMismatch
from strategies import homogeneous

A = polynomial_ring(("x", "y"))
x, y = A.gens()


def test_no_unit_entries():
    L = FreeModule(A, [0, 0])
    rels = [L.from_components([x, y]), L.from_components([y ** 2, 0])]
    mp = minimize_presentation(Presentation(L, rels))
    assert mp.kept == (0, 1) and [mp.lift(r) for r in mp.relations] == rels and not mp.log


def test_single_elimination():
    L = FreeModule(A, [1, 0])
    mp = minimize_presentation(Presentation(L, [L.from_components([1, x])]))
    assert mp.kept == (1,) and mp.relations == [] and mp.shifts == (0,)
    assert mp.log[0].relation == 0 and mp.log[0].component == 0


def test_dependent_relation_is_dropped():
    L = FreeModule(A, [1, 0])
    v1 = L.from_components([1, x])
    v2 = L.from_components([y, y * x])
    mp = minimize_presentation(Presentation(L, [v1, v2]))
    assert mp.kept == (1,) and mp.relations == []
    assert mp.log[0].dropped == [1]


def test_pivot_order_is_deterministic():
    L = FreeModule(A, [0, 0, 0])
    r = [L.from_components([0, 2, 1]), L.from_components([1, 0, 0])]
    mp = minimize_presentation(Presentation(L, r))
    assert [(p.relation, p.component) for p in mp.log] == [(0, 1), (1, 0)]
    assert mp.kept == (2,)


def test_rejects_bad_input():
    L = FreeModule(A, [0, 0])
    with pytest.raises(HomogeneityError):
        minimize_presentation(Presentation(L, [L.from_components([x + 1, 0])]))
    with pytest.raises(ModuleMismatch):
        Presentation(L, [FreeModule(A, [0, 0]).basis(0)])


@st.composite
def presentations(draw):
    R = draw(st.sampled_from([polynomial_ring(("x", "y", "z")), quantum_plane(2)]))
    s = draw(st.integers(1, 4))
    shifts = [draw(st.integers(0, 2)) for _ in range(s)]
    L = FreeModule(R, shifts)
    rels = []
    for _ in range(draw(st.integers(0, 4))):
        d = draw(st.integers(min(shifts), max(shifts) + 1))
        comps = []
        for b in shifts:
            e = d - b
            if e < 0:
                comps.append(R.zero)
            elif e == 0:
                comps.append(R.constant(draw(st.integers(-2, 2))))
            else:
                comps.append(draw(st.one_of(st.just(R.zero), homogeneous(R, e, 2))))
        rels.append(L.from_components(comps))
    return Presentation(L, rels)


@settings(max_examples=60, deadline=None)
@given(presentations())
def test_minimization_properties(P):
    mp = minimize_presentation(P)
    L0 = P.ambient
    assert len(mp.kept) == L0.rank - len(mp.log)
    nonzero = [r for r in P.relations if r]
    N = buchberger(nonzero, L0, track=False)[0] if nonzero else None
    for lab, r in zip(mp.labels, mp.relations):
        assert all(not (h and h.is_constant()) for h in r.components())
        assert r.is_homogeneous() and r.degree() == P.relations[lab].degree()
        assert N is not None and N.contains(mp.lift(r))
    # graded Nakayama: e_i is not in N + sum of the other kept A e_k + (positive degree) e_i
    R = L0.ring
    for i in mp.kept:
        others = nonzero + [L0.basis(k) for k in mp.kept if k != i]
        others += [g * L0.basis(i) for g in R.gens()]
        assert not contains(others, L0.basis(i))
    # every eliminated basis vector is redundant
    for p in mp.log:
        others = nonzero + [L0.basis(k) for k in mp.kept]
        assert contains(others, L0.basis(p.component))

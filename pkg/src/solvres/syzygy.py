"""Syzygies of Gröbner bases and of arbitrary generating sets.

For a Gröbner basis ``g_1..g_t`` every same-component pair ``i < j`` yields
``s_ij = sum_k f_k eps_k - ca a^ma eps_i + cb a^mb eps_j`` where
``S(g_i, g_j) = ca a^ma g_i - cb a^mb g_j = sum_k f_k g_k`` is the
representation logged while reducing the S-polynomial.  Under the Schreyer
ordering induced by the basis these elements form a Gröbner basis of the
syzygy module.

Syzygies of the original generators ``xi_1..xi_m`` are obtained by pushing
the ``s_ij`` through the matrix ``V`` and adding the rows of ``U V - E``.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .algebra import Polynomial
from .errors import MissingTrace, ShapeError
from .freemod import FreeModule, ModuleElement, reduce_terms, spair
from .groebner import GroebnerBasis, PairRecord, TransitionMatrices


@dataclass(frozen=True)
class SyzygyGenerator:
    """A syzygy together with where it came from.

    ``provenance`` is ``("schreyer", i, j)``, ``("transported", r)`` for the
    image of the ``r``-th Schreyer syzygy under ``V``, or ``("diagonal", r)``
    for row ``r`` of ``U V - E``.
    """

    element: ModuleElement
    provenance: tuple

    def row(self) -> list:
        return self.element.components()


def schreyer_module(G: GroebnerBasis | Sequence[ModuleElement]) -> FreeModule:
    """Free module ``sum A eps_k`` graded by ``deg(g_k)`` with the Schreyer ordering of ``G``."""
    elems = list(G.elements if isinstance(G, GroebnerBasis) else G)
    ring = elems[0].module.ring if elems else None
    if ring is None:
        raise ValueError("an empty basis has no syzygy module")
    return FreeModule(ring, [g.degree() for g in elems], order="schreyer", reference=elems)


def _record(G: GroebnerBasis, i, j, recompute):
    rec = G.reps.get((i, j))
    if rec is not None:
        return rec
    if not recompute:
        raise MissingTrace(f"no logged representation for the pair ({i + 1}, {j + 1})")
    terms, (ma, ca), (mb, cb) = spair(G.elements[i], G.elements[j])
    quots, rem = reduce_terms(G.module, terms, G.elements)
    if rem:
        raise MissingTrace(f"S-polynomial of pair ({i + 1}, {j + 1}) does not reduce to zero")
    return PairRecord(quots, None, ma, ca, mb, cb)


def schreyer_syzygies(G: GroebnerBasis | Sequence[ModuleElement], L1: FreeModule | None = None,
                      recompute: bool = False) -> list:
    """Generators ``s_ij`` of ``Syz(G)``, one per same-component pair.

    A bare list of elements (or ``recompute=True``) falls back to dividing
    each S-polynomial by ``G``; otherwise the engine's log is required.
    """
    if not isinstance(G, GroebnerBasis):
        elems = list(G)
        if not elems:
            return []
        G = GroebnerBasis(elems[0].module, elems, elems)
        recompute = True
    elems = G.elements
    if not elems:
        return []
    if L1 is None:
        L1 = schreyer_module(G)
    ring = L1.ring
    out = []
    for j in range(len(elems)):
        for i in range(j):
            if elems[i].lm.index != elems[j].lm.index:
                continue
            rec = _record(G, i, j, recompute)
            acc = {}
            for k, q in enumerate(rec.quotients):
                for m, c in q.items():
                    acc[(k, m)] = acc.get((k, m), 0) + c
            if rec.new is not None:
                t = (rec.new, ring.one_mono)
                acc[t] = acc.get(t, 0) + 1
            acc[(i, rec.ma)] = acc.get((i, rec.ma), 0) - rec.ca
            acc[(j, rec.mb)] = acc.get((j, rec.mb), 0) + rec.cb
            out.append(SyzygyGenerator(L1.element(acc), ("schreyer", i, j)))
    return out


def _check_shapes(m, t, U, V):
    if len(U) != m or any(len(r) != t for r in U):
        raise ShapeError(f"U must be {m} x {t}")
    if len(V) != t or any(len(r) != m for r in V):
        raise ShapeError(f"V must be {t} x {m}")


def _row_times(row, M, ring, cols):
    """``row * M`` for a row of polynomials and a matrix of polynomials with ``cols`` columns."""
    out = [ring.zero] * cols
    for k, f in enumerate(row):
        if not f:
            continue
        for l, h in enumerate(M[k]):
            if h:
                out[l] = out[l] + ring.multiply(f, h)
    return out


def syzygies_of_generators(U_in: Sequence[ModuleElement], G: GroebnerBasis,
                           T: TransitionMatrices | None = None, module: FreeModule | None = None,
                           schreyer: list | None = None) -> list:
    """Generators of ``Syz(U_in)`` inside ``module = sum A omega_i``.

    ``T`` defaults to ``G.transition()`` (which requires ``U_in`` to be the
    basis' own inputs).  Zero rows are left out.
    """
    m, t = len(U_in), len(G.elements)
    if T is None:
        T = G.transition()
    _check_shapes(m, t, T.U, T.V)
    if module is None:
        ring = G.module.ring
        module = FreeModule(ring, [u.degree() if u else 0 for u in U_in])
    ring = module.ring
    if module.rank != m:
        raise ShapeError(f"syzygy module has rank {module.rank}, expected {m}")
    if schreyer is None:
        schreyer = schreyer_syzygies(G)
    out = []
    for r, s in enumerate(schreyer):
        row = _row_times(s.row(), T.V, ring, m)
        xi = module.from_components(row)
        if xi:
            out.append(SyzygyGenerator(xi, ("transported", r)))
    D = [_row_times(T.U[r], T.V, ring, m) for r in range(m)]
    for r in range(m):
        D[r][r] = D[r][r] - ring.one
        xi = module.from_components(D[r])
        if xi:
            out.append(SyzygyGenerator(xi, ("diagonal", r)))
    return out


def annihilates(row: Sequence[Polynomial], gens: Sequence[ModuleElement], module=None) -> bool:
    """Does ``sum row[k] * gens[k]`` vanish exactly?"""
    from .freemod import combine

    if len(row) != len(gens):
        raise ShapeError("row length differs from the number of generators")
    if not gens:
        return True
    return not combine(list(row), list(gens), module)

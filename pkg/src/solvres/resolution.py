"""Minimal graded free resolutions.

Starting from a presentation ``M = L0 / N`` the pipeline

1. removes redundant basis vectors of ``L0`` (:func:`minimize_presentation`),
2. extracts a minimal generating set ``U_min`` of the relations together with
   a tracked Gröbner basis (:func:`min_gens_gb`),
3. computes generators of ``Syz(U_min)`` in ``L1 = sum A eps_k`` with
   ``deg(eps_k) = deg(U_min[k])``,

and repeats steps 2 and 3 on the syzygies until they vanish.  ``L_i`` for
``i >= 1`` carries the Schreyer ordering induced by the columns of ``phi_i``.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .algebra import ValidationReport
from .errors import IterationOverrun
from .freemod import FreeModule, combine
from .groebner import TransitionMatrices, buchberger, min_gens_gb
from .presentation import MinimalPresentation, Presentation, minimize_presentation
from .syzygy import syzygies_of_generators


@dataclass
class BettiTable:
    """Ranks and ascending shift lists of ``L_0, ..., L_d``."""

    ranks: list
    shifts: list

    @property
    def length(self) -> int:
        return len(self.ranks) - 1

    def graded(self) -> dict:
        """``{(i, j): number of copies of A(-j) in L_i}``."""
        out = {}
        for i, sh in enumerate(self.shifts):
            for j in sh:
                out[(i, j)] = out.get((i, j), 0) + 1
        return out

    def to_json(self) -> list:
        return [{"rank": r, "shifts": list(s)} for r, s in zip(self.ranks, self.shifts)]

    def __str__(self):
        return "\n".join(f"{i}: {r}  {list(s)}" for i, (r, s) in enumerate(zip(self.ranks, self.shifts)))


@dataclass
class Resolution:
    """``0 -> L_d -> ... -> L_1 -> L_0 -> M -> 0``.

    ``maps[i - 1]`` lists the images ``phi_i(eps_k)`` (elements of
    ``modules[i - 1]``), i.e. the columns of the matrix of ``phi_i``.
    """

    modules: list
    maps: list
    presentation: MinimalPresentation | None = None
    stats: dict = field(default_factory=dict)

    @property
    def ring(self):
        return self.modules[0].ring

    @property
    def length(self) -> int:
        return len(self.maps)

    def matrix(self, i: int) -> list:
        """Matrix of ``phi_i`` as rows of polynomials (``rank L_{i-1}`` x ``rank L_i``)."""
        cols = self.maps[i - 1]
        rows = self.modules[i - 1].rank
        comps = [c.components() for c in cols]
        return [[comps[q][k] for q in range(len(cols))] for k in range(rows)]

    def betti(self) -> BettiTable:
        return betti(self)


def _next_step(gens, module: FreeModule, stats: dict):
    """Minimal generators of ``sum A gens`` and generators of their syzygies."""
    U_min, G = min_gens_gb(gens, module=module, track=True)
    stats.setdefault("gb_sizes", []).append(len(G))
    if not U_min:
        return [], None, []
    ring = module.ring
    L = FreeModule(ring, [u.degree() for u in U_min], order="schreyer", reference=U_min)
    T = TransitionMatrices(G.U_matrix(U_min), G.V_matrix(G.u_min))
    syz = syzygies_of_generators(U_min, G, T, module=L)
    return U_min, L, [s.element for s in syz]


def minimal_free_resolution(P: Presentation) -> Resolution:
    mp = minimize_presentation(P)
    ring = P.ambient.ring
    modules = [mp.module]
    maps = []
    stats = {"pivots": len(mp.log)}
    gens, module = mp.relations, mp.module
    while gens:
        U_min, L, syz = _next_step(gens, module, stats)
        if not U_min:
            break
        if len(maps) >= ring.n:
            raise IterationOverrun(f"resolution longer than the number of generators ({ring.n})")
        maps.append(list(U_min))
        modules.append(L)
        gens, module = syz, L
    return Resolution(modules, maps, mp, stats)


def betti(R: Resolution) -> BettiTable:
    return BettiTable([L.rank for L in R.modules], [sorted(L.shifts) for L in R.modules])


def verify_resolution(R: Resolution) -> ValidationReport:
    """Independent checks of exactness, minimality and grading.

    Kernel coverage is certified by recomputing syzygies of every ``phi_i``
    from a fresh Gröbner basis and reducing them against a Gröbner basis of
    the columns of ``phi_{i+1}``.
    """
    rep = ValidationReport()
    ring = R.ring
    d = R.length
    if d > ring.n:
        rep.add(f"length {d} exceeds the number of generators {ring.n}")
    if len(R.modules) != d + 1:
        rep.add("number of modules does not match the number of maps")
        return rep
    for i in range(1, d + 1):
        cols, src, tgt = R.maps[i - 1], R.modules[i], R.modules[i - 1]
        if len(cols) != src.rank:
            rep.add(f"phi_{i}: {len(cols)} columns but L_{i} has rank {src.rank}")
            return rep
        for q, col in enumerate(cols):
            if col.module is not tgt:
                rep.add(f"phi_{i}: column {q + 1} does not live in L_{i - 1}")
                return rep
            for k, h in enumerate(col.components()):
                if not h:
                    continue
                if h.coefficient(ring.one_mono):
                    rep.add(f"phi_{i}: entry ({k + 1}, {q + 1}) has a nonzero constant term")
                if not h.is_homogeneous() or h.degree() + tgt.shifts[k] != src.shifts[q]:
                    rep.add(f"phi_{i}: entry ({k + 1}, {q + 1}) breaks degree-0 bookkeeping")
    for i in range(1, d):
        for q, col in enumerate(R.maps[i]):
            if combine(col.components(), R.maps[i - 1], R.modules[i - 1]):
                rep.add(f"phi_{i} o phi_{i + 1} is nonzero on column {q + 1}")
    if not rep.ok:
        return rep
    if R.presentation is not None:
        rels = R.presentation.relations
        if d == 0:
            if any(rels):
                rep.add("no maps but the presentation has nonzero relations")
        else:
            G, _ = buchberger(R.maps[0], track=False)
            N, _ = buchberger(rels, module=R.modules[0], track=False)
            if any(not G.contains(r) for r in rels):
                rep.add("phi_1 does not generate the relation module")
            if any(not N.contains(c) for c in R.maps[0]):
                rep.add("a column of phi_1 is not a relation")
    for i in range(1, d + 1):
        gens = R.maps[i - 1]
        G, T = buchberger(gens, track=True)
        syz = syzygies_of_generators(gens, G, T, module=R.modules[i])
        nxt = R.maps[i] if i < d else []
        H = buchberger(nxt, module=R.modules[i], track=False)[0] if nxt else None
        for s in syz:
            if H is None or not H.contains(s.element):
                rep.add(f"ker phi_{i} is not generated by the columns of phi_{i + 1}")
                break
    return rep

"""Minimizing graded presentations ``M = L0 / N``.

A relation with a nonzero constant in component ``i`` lets us solve for
``e_i``; substituting it into the other relations removes ``e_i`` from the
presentation without changing ``M`` up to graded isomorphism.  Repeating
until no relation has a constant entry leaves a presentation whose basis
vectors map to a minimal homogeneous generating set of ``M``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Sequence

from .errors import HomogeneityError, ModuleMismatch
from .freemod import FreeModule, ModuleElement


@dataclass
class Presentation:
    """``ambient`` is the free module ``L0``; ``relations`` generate ``N``."""

    ambient: FreeModule
    relations: list = field(default_factory=list)

    def __post_init__(self):
        self.relations = list(self.relations)
        for r in self.relations:
            if r.module is not self.ambient:
                raise ModuleMismatch("relation does not live in the ambient module")


@dataclass
class Pivot:
    """One elimination: relation ``relation`` had the constant ``coefficient`` at ``component``."""

    relation: int
    component: int
    coefficient: object
    substituted: list
    dropped: list


@dataclass
class MinimalPresentation:
    """Result of :func:`minimize_presentation`.

    ``kept`` lists the surviving original basis indices (in order);
    ``module`` is the free module on them and ``relations`` the new
    relations expressed in it.  ``labels[k]`` is the original index of
    ``relations[k]``.  ``log`` records every pivot.
    """

    kept: tuple
    module: FreeModule
    relations: list
    labels: list
    log: list
    source: Presentation

    @property
    def shifts(self):
        return self.module.shifts

    def lift(self, xi: ModuleElement) -> ModuleElement:
        """Embed an element of the reduced module back into ``L0``."""
        L0 = self.source.ambient
        return L0.element({(self.kept[i], m): c for (i, m), c in xi._terms.items()})


def _unit_entry(xi: ModuleElement, alive):
    """First component holding a nonzero constant, or ``None``."""
    ring = xi.module.ring
    zero = ring.one_mono
    best = None
    for (i, m), c in xi._terms.items():
        if m == zero and i in alive and (best is None or i < best[0]):
            best = (i, c)
    return best


def minimize_presentation(P: Presentation) -> MinimalPresentation:
    L0 = P.ambient
    ring = L0.ring
    for r in P.relations:
        if r and not r.is_homogeneous():
            raise HomogeneityError(f"relation {r} is not homogeneous")
    rels = [(k, r) for k, r in enumerate(P.relations) if r]
    alive = set(range(L0.rank))
    log = []
    while True:
        hit = None
        for pos, (label, v) in enumerate(rels):
            u = _unit_entry(v, alive)
            if u is not None:
                hit = pos, label, v, u
                break
        if hit is None:
            break
        pos, label, vj, (i, fij) = hit
        inv = ring.field.inv(fij)
        newrels, subst, dropped = [], [], []
        for lab, vl in rels:
            if lab == label:
                continue
            fil = vl.component(i)
            if fil:
                vl = vl - (fil * inv) * vj
                subst.append(lab)
            if vl:
                newrels.append((lab, vl))
            else:
                dropped.append(lab)
        log.append(Pivot(label, i, fij, subst, dropped))
        rels = newrels
        alive.discard(i)
    kept = tuple(sorted(alive))
    pos = {k: q for q, k in enumerate(kept)}
    ref = None
    if L0.order == "schreyer":
        ref = [L0.reference[k] for k in kept]
    L0p = FreeModule(ring, [L0.shifts[k] for k in kept], order=L0.order, reference=ref)
    out = [L0p.element({(pos[i], m): c for (i, m), c in v._terms.items()}) for _, v in rels]
    return MinimalPresentation(kept, L0p, out, [lab for lab, _ in rels], log, P)

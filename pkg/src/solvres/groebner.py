"""Left Gröbner bases of submodules of graded free modules.

Three engines share one state machine:

* :func:`buchberger` computes a full left Gröbner basis,
* :func:`truncated_buchberger` stops at a degree bound ``n0`` (graded input),
* :func:`min_gens_gb` additionally extracts a minimal homogeneous generating
  set from the input.

Pairs are processed in order of S-polynomial degree, first in first out
within a degree.  In the graded engines input generators of degree ``n`` are
reduced after all pairs of degree ``n``.  The engine logs, for every processed
pair, the quotients produced while reducing its S-polynomial, and optionally
tracks each basis element as a combination of the input generators.  Those
logs feed the syzygy computations.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from heapq import heappop, heappush
from typing import Sequence

from .algebra import Polynomial
from .errors import HomogeneityError, ModuleMismatch, ZeroElement
from .freemod import FreeModule, ModuleElement, divides, reduce_terms, spair, spair_degree


def _module_of(U: Sequence[ModuleElement], module: FreeModule | None) -> FreeModule:
    if module is None:
        if not U:
            raise ValueError("an empty input needs an explicit module")
        module = U[0].module
    for u in U:
        if u.module is not module:
            raise ModuleMismatch("input elements live in different modules")
    return module


@dataclass
class PairRecord:
    """What happened to one S-polynomial ``S(g_i, g_j)``.

    ``S = ca * a^ma g_i - cb * a^mb g_j = sum_k quotients[k] g_k + g_new``,
    where ``g_new`` (index ``new``) is absent when the remainder was zero.
    """

    quotients: list
    new: int | None
    ma: tuple
    ca: object
    mb: tuple
    cb: object


class _Engine:
    def __init__(self, module: FreeModule, ninputs: int, track: bool, bound=None):
        self.module = module
        self.ring = module.ring
        self.ninputs = ninputs
        self.track = track
        self.bound = bound
        self.G: list = []
        self.V: list | None = [] if track else None
        self.origin: list = []
        self.reps: dict = {}
        self.heap: list = []
        self.count = 0

    def push(self, deg, phase, item):
        heappush(self.heap, (deg, phase, self.count, item))
        self.count += 1

    def add(self, eta: ModuleElement, vrow, origin) -> int:
        k = len(self.G)
        comp = next(iter(eta._terms))[0]
        for i, g in enumerate(self.G):
            if next(iter(g._terms))[0] != comp:
                continue
            d = spair_degree(g, eta)
            if self.bound is None or d <= self.bound:
                self.push(d, 0, (i, k))
        self.G.append(eta)
        self.origin.append(origin)
        if self.track:
            self.V.append(vrow)
        return k

    # V rows are dicts {input index: Polynomial}
    def _vcombine(self, parts):
        acc = {}
        ring = self.ring
        for poly, row in parts:
            for idx, p in row.items():
                prod = ring.multiply(poly, p)
                acc[idx] = acc[idx] + prod if idx in acc else prod
        return {idx: p for idx, p in sorted(acc.items()) if p}

    def _quot_parts(self, quots):
        ring = self.ring
        return [
            (-Polynomial._raw(ring, ring._canon(q.items())), self.V[k])
            for k, q in enumerate(quots)
            if q
        ]

    def process_pair(self, i, j):
        terms, (ma, ca), (mb, cb) = spair(self.G[i], self.G[j])
        quots, rem = reduce_terms(self.module, terms, self.G)
        new = None
        if rem:
            vrow = None
            if self.track:
                ring = self.ring
                parts = [(ring.monomial(ma, ca), self.V[i]), (ring.monomial(mb, -cb), self.V[j])]
                vrow = self._vcombine(parts + self._quot_parts(quots))
            new = self.add(ModuleElement._raw(self.module, rem), vrow, ("pair", i, j))
        self.reps[(i, j)] = PairRecord(quots, new, ma, ca, mb, cb)

    def process_input(self, idx, xi: ModuleElement) -> bool:
        quots, rem = reduce_terms(self.module, xi._terms, self.G)
        if not rem:
            return False
        vrow = None
        if self.track:
            vrow = self._vcombine([(self.ring.one, {idx: self.ring.one})] + self._quot_parts(quots))
        self.add(ModuleElement._raw(self.module, rem), vrow, ("input", idx))
        return True

    def drain_pairs(self):
        while self.heap:
            _, _, _, (i, j) = heappop(self.heap)
            self.process_pair(i, j)


class GroebnerBasis:
    """Result of a Gröbner engine.

    ``elements`` is the basis exactly as produced (no interreduction);
    :meth:`reduced` gives the canonical reduced basis.  ``kind`` is
    ``"full"`` or ``"truncated"`` with ``bound`` the truncation degree.
    """

    def __init__(self, module, elements, inputs, kind="full", bound=None, V=None, reps=None,
                 origin=None, u_min=None):
        self.module = module
        self.elements = tuple(elements)
        self.inputs = tuple(inputs)
        self.kind = kind
        self.bound = bound
        self._V = V
        self.reps = reps if reps is not None else {}
        self.origin = tuple(origin or ())
        self.u_min = None if u_min is None else tuple(u_min)
        self._reduced = None

    @property
    def homogeneous(self) -> bool:
        return all(g.is_homogeneous() for g in self.elements)

    @property
    def tracked(self) -> bool:
        return self._V is not None

    def __len__(self):
        return len(self.elements)

    def __iter__(self):
        return iter(self.elements)

    def __getitem__(self, k):
        return self.elements[k]

    def degrees(self) -> list:
        return [g.degree() for g in self.elements]

    def reduced(self) -> tuple:
        """Interreduced, monic basis sorted by ascending leading monomial."""
        if self._reduced is not None:
            return self._reduced
        G = self.elements
        lms = [g.lm for g in G]
        keep = []
        for k, lm in enumerate(lms):
            if any(l != k and divides(lms[l], lm) and (lms[l] != lm or l < k) for l in range(len(G))):
                continue
            keep.append(G[k])
        out = []
        for k, g in enumerate(keep):
            _, rem = reduce_terms(self.module, g._terms, keep[:k] + keep[k + 1:])
            r = ModuleElement._raw(self.module, rem)
            out.append(r.scale(1 / r.lc))
        key = self.module.key
        out.sort(key=lambda g: key(*g.lm))
        self._reduced = tuple(out)
        return self._reduced

    def remainder(self, xi: ModuleElement) -> ModuleElement:
        if xi.module is not self.module:
            raise ModuleMismatch("element lives in a different module")
        _, rem = reduce_terms(self.module, xi._terms, self.elements)
        return ModuleElement._raw(self.module, rem)

    def contains(self, xi: ModuleElement) -> bool:
        """Membership test; truncated bases only decide homogeneous elements up to the bound."""
        if not xi:
            return True
        if self.kind == "truncated":
            if not xi.is_homogeneous():
                raise HomogeneityError("a truncated basis only decides homogeneous elements")
            if xi.degree() > self.bound:
                raise ValueError(f"degree {xi.degree()} exceeds the truncation bound {self.bound}")
        return not self.remainder(xi)

    def V_matrix(self, columns=None) -> list:
        """Matrix expressing the basis over the inputs (or over the inputs listed in ``columns``)."""
        if self._V is None:
            raise ValueError("this basis was computed without tracking")
        ring = self.module.ring
        cols = range(len(self.inputs)) if columns is None else list(columns)
        if columns is not None:
            allowed = set(cols)
            if any(i not in allowed for row in self._V for i in row):
                raise ValueError("the basis depends on inputs outside the requested columns")
        return [[row.get(i, ring.zero) for i in cols] for row in self._V]

    def U_matrix(self, elements=None) -> list:
        """Matrix expressing the inputs (or ``elements``) over the basis, by division."""
        ring = self.module.ring
        rows = []
        for xi in self.inputs if elements is None else elements:
            quots, rem = reduce_terms(self.module, xi._terms, self.elements)
            if rem:
                raise ValueError("an input does not reduce to zero (beyond the truncation bound?)")
            rows.append([Polynomial._raw(ring, ring._canon(q.items())) for q in quots])
        return rows

    def transition(self) -> TransitionMatrices:
        return TransitionMatrices(self.U_matrix(), self.V_matrix())

    def __repr__(self):
        tag = self.kind if self.bound is None else f"{self.kind}({self.bound})"
        return f"GroebnerBasis({len(self.elements)} elements, {tag})"


@dataclass
class TransitionMatrices:
    """``inputs = U * G`` and ``G = V * inputs`` (generators are columns)."""

    U: list = field(default_factory=list)
    V: list = field(default_factory=list)

    def verify(self, inputs: Sequence[ModuleElement], G: Sequence[ModuleElement], module=None) -> bool:
        from .freemod import combine

        if module is None:
            module = (list(inputs) + list(G))[0].module if (inputs or G) else None
        for row, xi in zip(self.U, inputs):
            if combine(row, G, module) != xi:
                return False
        for row, g in zip(self.V, G):
            if combine(row, inputs, module) != g:
                return False
        return len(self.U) == len(inputs) and len(self.V) == len(G)


def _nonzero_indexed(U):
    return [(i, u) for i, u in enumerate(U) if u]


def buchberger(U: Sequence[ModuleElement], module: FreeModule | None = None, track: bool = True):
    """Full left Gröbner basis of the submodule generated by ``U``.

    Returns ``(G, T)`` where ``T`` holds the transition matrices, or ``None``
    when ``track`` is false.
    """
    module = _module_of(U, module)
    eng = _Engine(module, len(U), track)
    ring = module.ring
    for idx, u in _nonzero_indexed(U):
        eng.add(u, {idx: ring.one} if track else None, ("input", idx))
    eng.drain_pairs()
    G = GroebnerBasis(module, eng.G, U, "full", None, eng.V, eng.reps, eng.origin)
    return G, (G.transition() if track else None)


def _graded_run(U, module, bound, track, input_bound=None):
    for u in U:
        if not u.is_homogeneous():
            raise HomogeneityError(f"input element {u} is not homogeneous")
    eng = _Engine(module, len(U), track, bound)
    for idx, u in _nonzero_indexed(U):
        d = u.degree()
        if input_bound is None or d <= input_bound:
            eng.push(d, 1, ("in", idx))
    used = []
    while eng.heap:
        _, phase, _, item = heappop(eng.heap)
        if phase == 0:
            eng.process_pair(*item)
        elif eng.process_input(item[1], U[item[1]]):
            used.append(item[1])
    return eng, used


def truncated_buchberger(U: Sequence[ModuleElement], n0: int, module: FreeModule | None = None,
                         track: bool = False) -> GroebnerBasis:
    """``n0``-truncated left Gröbner basis of a graded submodule.

    Only pairs whose S-polynomial has degree at most ``n0`` are queued, and
    generators above ``n0`` are ignored.
    """
    module = _module_of(U, module)
    eng, _ = _graded_run(U, module, n0, track, input_bound=n0)
    return GroebnerBasis(module, eng.G, U, "truncated", n0, eng.V, eng.reps, eng.origin)


def min_gens_gb(U: Sequence[ModuleElement], module: FreeModule | None = None, early_stop: bool = False,
                track: bool = False):
    """Minimal homogeneous generating subset of ``U`` together with a Gröbner basis.

    With ``early_stop`` the engine halts after the largest input degree and
    the basis is only truncated at that degree.  Returns ``(U_min, G)``;
    ``G.u_min`` holds the input indices of ``U_min``.
    """
    module = _module_of(U, module)
    bound = max((u.degree() for u in U if u), default=0) if early_stop else None
    eng, used = _graded_run(U, module, bound, track)
    kind = "truncated" if early_stop else "full"
    G = GroebnerBasis(module, eng.G, U, kind, bound, eng.V, eng.reps, eng.origin, used)
    return [U[i] for i in used], G


def is_groebner(G: Sequence[ModuleElement]) -> bool:
    """Buchberger criterion: every same-component S-polynomial reduces to zero."""
    G = list(G)
    if not G:
        return True
    for g in G:
        if not g:
            raise ZeroElement("a Gröbner basis has no zero elements")
    module = _module_of(G, None)
    for j in range(len(G)):
        for i in range(j):
            data = spair(G[i], G[j])
            if data is None:
                continue
            _, rem = reduce_terms(module, data[0], G)
            if rem:
                return False
    return True


def contains(gens, xi: ModuleElement) -> bool:
    """Is ``xi`` in the submodule generated by ``gens``?

    ``gens`` may be a :class:`GroebnerBasis` or a list of generators.  For
    homogeneous data a truncated basis at ``deg(xi)`` suffices.
    """
    if not xi:
        return True
    if isinstance(gens, GroebnerBasis):
        return gens.contains(xi)
    gens = [g for g in gens if g]
    if not gens:
        return False
    module = _module_of(gens + [xi], None)
    if xi.is_homogeneous() and all(g.is_homogeneous() for g in gens):
        G = truncated_buchberger(gens, xi.degree(), module)
    else:
        G, _ = buchberger(gens, module, track=False)
    return not G.remainder(xi)

"""Graded free left modules ``L = A e_1 + ... + A e_s``.

Module monomials are pairs ``(i, mono)`` standing for ``a^mono e_i``.  Three
module orderings are available: ``"TOP"`` (monomial first, then index),
``"POT"`` (index first) and ``"schreyer"``, which compares ``a^m e_i`` through
the leading monomial of ``a^m g_i`` for a fixed list of reference elements
``g_i`` of another module, breaking ties by index.
"""

from __future__ import annotations

from heapq import heapify, heappop, heappush
from typing import NamedTuple, Sequence

from .algebra import SCALAR_TYPES, Cmp, Polynomial, SolvableAlgebra, render_terms
from .errors import ArityError, ModuleMismatch, ZeroElement


class ModuleMonomial(NamedTuple):
    index: int
    mono: tuple


class FreeModule:
    """Free module of finite rank over a solvable algebra.

    ``shifts[i]`` is the degree of the basis vector ``e_i``.  For the
    Schreyer ordering pass the nonzero reference elements (one per basis
    vector) as ``reference``.
    """

    ORDERS = ("TOP", "POT", "schreyer")

    def __init__(self, ring: SolvableAlgebra, shifts=None, rank=None, order="TOP", reference=None):
        if shifts is None:
            shifts = (0,) * (rank or 0)
        self.ring = ring
        self.shifts = tuple(int(b) for b in shifts)
        self.rank = len(self.shifts)
        if rank is not None and rank != self.rank:
            raise ArityError("rank and number of shifts disagree")
        order = "schreyer" if order.lower() == "schreyer" else order.upper()
        if order not in self.ORDERS:
            raise ValueError(f"unknown module ordering {order!r}")
        self.order = order
        self.reference = None
        if order == "schreyer":
            if reference is None or len(reference) != self.rank:
                raise ValueError("the Schreyer ordering needs one reference element per basis vector")
            if any(not g for g in reference):
                raise ZeroElement("Schreyer reference elements must be nonzero")
            self.reference = tuple(reference)
            self._ref_lm = [g.lm for g in self.reference]
            self._base = self.reference[0].module if self.reference else None
        self._keys: dict = {}
        self._nkeys: dict = {}

    # ---- ordering -----------------------------------------------------

    def key(self, i, m) -> tuple:
        t = (i, m)
        k = self._keys.get(t)
        if k is not None:
            return k
        if self.order == "TOP":
            k = self.ring.key(m) + (i,)
        elif self.order == "POT":
            k = (i,) + self.ring.key(m)
        else:
            p, alpha = self._ref_lm[i]
            k = self._base.key(p, tuple(a + b for a, b in zip(m, alpha))) + (i,)
        self._keys[t] = k
        return k

    def nkey(self, t) -> tuple:
        k = self._nkeys.get(t)
        if k is None:
            k = self._nkeys[t] = tuple(-x for x in self.key(*t))
        return k

    def compare(self, u, v) -> Cmp:
        ku, kv = self.key(*u), self.key(*v)
        return Cmp.LT if ku < kv else Cmp.GT if ku > kv else Cmp.EQ

    def mono_degree(self, i, m) -> int:
        return self.ring.mono_degree(m) + self.shifts[i]

    def _canon(self, items) -> dict:
        acc = {}
        for t, c in items:
            acc[t] = acc.get(t, 0) + c
        key = self.key
        return {t: acc[t] for t in sorted(acc, key=lambda t: key(*t), reverse=True) if acc[t]}

    # ---- constructors ---------------------------------------------------

    def element(self, terms=()) -> ModuleElement:
        """Build from ``{(i, mono): coeff}`` or an iterable of such pairs."""
        items = terms.items() if hasattr(terms, "items") else terms
        f = self.ring.field
        n = self.ring.n
        clean = []
        for (i, m), c in items:
            m = tuple(m)
            if not 0 <= i < self.rank:
                raise ArityError(f"component index {i} outside rank {self.rank}")
            if len(m) != n:
                raise ArityError(f"monomial {m} has wrong length")
            clean.append(((i, m), f(c)))
        return ModuleElement._raw(self, self._canon(clean))

    def from_components(self, polys: Sequence) -> ModuleElement:
        if len(polys) != self.rank:
            raise ArityError(f"expected {self.rank} components, got {len(polys)}")
        items = []
        for i, p in enumerate(polys):
            if isinstance(p, SCALAR_TYPES):
                p = self.ring.constant(p)
            if p.ring is not self.ring:
                raise ModuleMismatch("component from a different algebra")
            items.extend(((i, m), c) for m, c in p._terms.items())
        return ModuleElement._raw(self, self._canon(items))

    def basis(self, i) -> ModuleElement:
        return ModuleElement._raw(self, {(i, self.ring.one_mono): self.ring.field.one})

    @property
    def zero(self) -> ModuleElement:
        return ModuleElement._raw(self, {})

    def convert(self, xi: ModuleElement) -> ModuleElement:
        """Re-home an element of a module with the same rank (re-sorting its terms)."""
        if xi.module.rank != self.rank or xi.module.ring is not self.ring:
            raise ModuleMismatch("modules differ in rank or algebra")
        return ModuleElement._raw(self, self._canon(xi._terms.items()))

    def __repr__(self):
        return f"FreeModule(rank={self.rank}, shifts={list(self.shifts)}, order={self.order!r})"


class ModuleElement:
    """Vector in a free module, sparse terms sorted descending by the module ordering."""

    __slots__ = ("module", "_terms", "_lmul")

    @classmethod
    def _raw(cls, module: FreeModule, terms: dict) -> ModuleElement:
        e = object.__new__(cls)
        e.module = module
        e._terms = terms
        e._lmul = None
        return e

    # ---- inspection ---------------------------------------------------

    def __bool__(self):
        return bool(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def terms(self):
        return [(ModuleMonomial(i, m), c) for (i, m), c in self._terms.items()]

    def leading(self):
        for (i, m), c in self._terms.items():
            return c, ModuleMonomial(i, m)
        raise ZeroElement("the zero element has no leading term")

    @property
    def lm(self) -> ModuleMonomial:
        return self.leading()[1]

    @property
    def lc(self):
        return self.leading()[0]

    def component(self, i) -> Polynomial:
        return Polynomial._raw(self.module.ring, {m: c for (j, m), c in self._terms.items() if j == i})

    def components(self) -> list:
        comps = [{} for _ in range(self.module.rank)]
        for (i, m), c in self._terms.items():
            comps[i][m] = c
        return [Polynomial._raw(self.module.ring, d) for d in comps]

    def support(self) -> set:
        return {i for i, _ in self._terms}

    def degree(self) -> int:
        """Graded degree (the maximum over terms for non-homogeneous elements)."""
        if not self._terms:
            raise ZeroElement("degree of the zero element")
        md = self.module.mono_degree
        return max(md(i, m) for i, m in self._terms)

    def is_homogeneous(self) -> bool:
        md = self.module.mono_degree
        return len({md(i, m) for i, m in self._terms}) <= 1

    # ---- arithmetic ---------------------------------------------------

    def _check(self, other):
        if not isinstance(other, ModuleElement):
            return False
        if other.module is not self.module:
            raise ModuleMismatch("elements live in different modules")
        return True

    def __add__(self, other):
        if not self._check(other):
            return NotImplemented
        acc = dict(self._terms)
        for t, c in other._terms.items():
            acc[t] = acc.get(t, 0) + c
        return ModuleElement._raw(self.module, self.module._canon(acc.items()))

    def __sub__(self, other):
        if not self._check(other):
            return NotImplemented
        return self + (-other)

    def __neg__(self):
        return ModuleElement._raw(self.module, {t: -c for t, c in self._terms.items()})

    def scale(self, c) -> ModuleElement:
        c = self.module.ring.field(c)
        if not c:
            return self.module.zero
        return ModuleElement._raw(self.module, {t: c * v for t, v in self._terms.items()})

    def left_mul_monomial(self, mono) -> dict:
        """Terms of ``a^mono * self`` (cached; do not mutate the result)."""
        cache = self._lmul
        if cache is None:
            cache = self._lmul = {}
        r = cache.get(mono)
        if r is not None:
            return r
        mono_mul = self.module.ring.mono_mul
        acc = {}
        for (i, m), c in self._terms.items():
            for m2, c2 in mono_mul(mono, m):
                t = (i, m2)
                acc[t] = acc.get(t, 0) + c * c2
        r = cache[mono] = self.module._canon(acc.items())
        return r

    def left_mul(self, f: Polynomial) -> ModuleElement:
        if f.ring is not self.module.ring:
            raise ModuleMismatch("polynomial from a different algebra")
        acc = {}
        for mf, cf in f._terms.items():
            for t, c in self.left_mul_monomial(mf).items():
                acc[t] = acc.get(t, 0) + cf * c
        return ModuleElement._raw(self.module, self.module._canon(acc.items()))

    def __mul__(self, other):
        if isinstance(other, SCALAR_TYPES):
            return self.scale(other)
        return NotImplemented

    def __rmul__(self, other):
        if isinstance(other, SCALAR_TYPES):
            return self.scale(other)
        if isinstance(other, Polynomial):
            return self.left_mul(other)
        return NotImplemented

    def __eq__(self, other):
        if isinstance(other, ModuleElement):
            return self.module is other.module and self._terms == other._terms
        if isinstance(other, int) and other == 0:
            return not self._terms
        return NotImplemented

    def __hash__(self):
        return hash(tuple(self._terms.items()))

    def __str__(self):
        return render_element(self)

    def __repr__(self):
        return f"ModuleElement({render_element(self)!r})"


def render_element(xi: ModuleElement) -> str:
    ring = xi.module.ring
    comps = [[] for _ in range(xi.module.rank)]
    for (i, m), c in xi._terms.items():
        comps[i].append((m, c))
    # components render in the algebra's own term order
    parts = []
    for items in comps:
        items.sort(key=lambda mc: ring.key(mc[0]), reverse=True)
        parts.append(render_terms(ring.field, ring.names, items))
    return "[" + ", ".join(parts) + "]"


# ---- operations ----------------------------------------------------------


def module_compare(u, v, L: FreeModule) -> Cmp:
    return L.compare(tuple(u), tuple(v))


def divides(u, v) -> bool:
    """``a^alpha e_i | a^beta e_j`` iff ``i == j`` and ``alpha <= beta`` componentwise."""
    return u[0] == v[0] and all(a <= b for a, b in zip(u[1], v[1]))


def combine(polys: Sequence[Polynomial], elems: Sequence[ModuleElement], module: FreeModule | None = None):
    """``sum_k polys[k] * elems[k]``."""
    if len(polys) != len(elems):
        raise ArityError("coefficient and element lists differ in length")
    if module is None:
        if not elems:
            raise ValueError("module required for an empty combination")
        module = elems[0].module
    acc = {}
    for f, xi in zip(polys, elems):
        if xi.module is not module:
            raise ModuleMismatch("elements live in different modules")
        for mf, cf in f._terms.items():
            for t, c in xi.left_mul_monomial(mf).items():
                acc[t] = acc.get(t, 0) + cf * c
    return ModuleElement._raw(module, module._canon(acc.items()))


def _same_module(xi, U):
    for u in U:
        if u.module is not xi.module:
            raise ModuleMismatch("dividend and divisors live in different modules")
        if not u:
            raise ZeroElement("cannot divide by zero")


def reduce_terms(module: FreeModule, terms: dict, U: Sequence[ModuleElement]):
    """Full left division of ``terms`` by ``U``.

    Returns ``(quotients, remainder)`` where ``quotients[j]`` is a dict
    ``{mono: coeff}`` and ``remainder`` a canonical terms dict.  When several
    divisors apply, the lowest index wins.
    """
    nkey = module.nkey
    work = dict(terms)
    heap = [(nkey(t), t) for t in work]
    heapify(heap)
    lms = [next(iter(u._terms)) for u in U]
    quots = [{} for _ in U]
    rem = {}
    last = None
    while heap:
        nk, t = heappop(heap)
        c = work.pop(t, None)
        if c is None:
            continue
        if last is not None and nk <= last:
            raise AssertionError("division failed to decrease the leading monomial")
        last = nk
        i, m = t
        for j, (ui, um) in enumerate(lms):
            if ui == i and all(a >= b for a, b in zip(m, um)):
                break
        else:
            rem[t] = c
            continue
        gamma = tuple(a - b for a, b in zip(m, um))
        prod = U[j].left_mul_monomial(gamma)
        f = c / prod[t]
        q = quots[j]
        q[gamma] = q.get(gamma, 0) + f
        for t2, c2 in prod.items():
            if t2 == t:
                continue
            v = work.get(t2)
            if v is None:
                work[t2] = -f * c2
                heappush(heap, (nkey(t2), t2))
            else:
                v = v - f * c2
                if v:
                    work[t2] = v
                else:
                    del work[t2]
    return quots, rem


def divide(xi: ModuleElement, U: Sequence[ModuleElement]):
    """Left division algorithm: ``xi = sum_j q_j U_j + r`` with ``r`` normal mod ``U``."""
    _same_module(xi, U)
    quots, rem = reduce_terms(xi.module, xi._terms, U)
    ring = xi.module.ring
    qpolys = [Polynomial._raw(ring, ring._canon(q.items())) for q in quots]
    return qpolys, ModuleElement._raw(xi.module, rem)


def remainder(xi: ModuleElement, U: Sequence[ModuleElement]) -> ModuleElement:
    return divide(xi, U)[1]


def spair(a: ModuleElement, b: ModuleElement):
    """S-polynomial data of ``a, b``.

    Returns ``None`` when the leading monomials sit in different components,
    otherwise ``(terms, (mono_a, c_a), (mono_b, c_b))`` with
    ``S = c_a a^mono_a a - c_b a^mono_b b``.
    """
    (p, al), (q, be) = next(iter(a._terms)), next(iter(b._terms))
    if p != q:
        return None
    gamma = tuple(max(x, y) for x, y in zip(al, be))
    ma = tuple(g - x for g, x in zip(gamma, al))
    mb = tuple(g - y for g, y in zip(gamma, be))
    pa, pb = a.left_mul_monomial(ma), b.left_mul_monomial(mb)
    t = (p, gamma)
    ca, cb = 1 / pa[t], 1 / pb[t]
    acc = {}
    for t2, c in pa.items():
        acc[t2] = ca * c
    for t2, c in pb.items():
        acc[t2] = acc.get(t2, 0) - cb * c
    return a.module._canon(acc.items()), (ma, ca), (mb, cb)


def spair_degree(a: ModuleElement, b: ModuleElement):
    """Graded degree ``d(a^gamma) + b_t`` of the S-polynomial, or ``None`` across components."""
    (p, al), (q, be) = next(iter(a._terms)), next(iter(b._terms))
    if p != q:
        return None
    gamma = tuple(max(x, y) for x, y in zip(al, be))
    return a.module.mono_degree(p, gamma)


def s_polynomial(a: ModuleElement, b: ModuleElement) -> ModuleElement:
    if not a or not b:
        raise ZeroElement("S-polynomial of a zero element")
    if a.module is not b.module:
        raise ModuleMismatch("elements live in different modules")
    data = spair(a, b)
    if data is None:
        return a.module.zero
    return ModuleElement._raw(a.module, data[0])

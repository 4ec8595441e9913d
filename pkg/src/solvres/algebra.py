"""Weighted graded solvable polynomial algebras.

An algebra ``A = K[a_1, ..., a_n]`` is described by generator weights and a
commutation table: for every pair ``i < j``

    a_j a_i = lam_ji * a_i a_j + f_ji

with ``lam_ji`` a nonzero scalar and ``f_ji`` a polynomial whose leading
monomial is smaller than ``a_i a_j``.  Elements are kept in the PBW basis of
ordered monomials ``a_1^e_1 ... a_n^e_n``; monomials are exponent tuples.

Indices are 0-based throughout the library.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from fractions import Fraction
from numbers import Integral
from typing import Iterable, Mapping

from .errors import ArityError, NormalizationDiverged, ZeroPolynomial
from .scalar import MPQ, QQ, Field, Residue

Monomial = tuple  # tuple[int, ...]

SCALAR_TYPES = (Fraction, MPQ, Residue, Integral)


class Cmp(enum.IntEnum):
    LT = -1
    EQ = 0
    GT = 1


class MonomialOrder:
    """Weighted degree-compatible ordering on exponent vectors.

    ``precedence`` lists variable indices from smallest to largest, so the
    default ``(0, 1, ..., n-1)`` makes ``a_1`` the smallest generator.
    Ties in weighted degree are broken lexicographically starting from the
    largest variable (``deglex``) or reverse-lexicographically starting from
    the smallest one (``degrevlex``).
    """

    FAMILIES = ("deglex", "degrevlex")

    def __init__(self, family: str, weights, precedence=None):
        if family not in self.FAMILIES:
            raise ValueError(f"unknown ordering family {family!r}")
        n = len(weights)
        if precedence is None:
            precedence = tuple(range(n))
        precedence = tuple(precedence)
        if sorted(precedence) != list(range(n)):
            raise ValueError(f"precedence {precedence} is not a permutation of 0..{n - 1}")
        self.family = family
        self.weights = tuple(weights)
        self.precedence = precedence
        self.nvars = n
        if family == "deglex":
            self._perm = tuple(reversed(precedence))
        else:
            self._perm = precedence

    def degree(self, m) -> int:
        return sum(w * e for w, e in zip(self.weights, m))

    def key(self, m) -> tuple:
        """Sort key: ``key(a) < key(b)`` iff ``a`` precedes ``b``."""
        if len(m) != self.nvars:
            raise ArityError(f"monomial {m} has {len(m)} exponents, expected {self.nvars}")
        d = sum(w * e for w, e in zip(self.weights, m))
        if self.family == "deglex":
            return (d,) + tuple(m[v] for v in self._perm)
        return (d,) + tuple(-m[v] for v in self._perm)

    def compare(self, a, b) -> Cmp:
        ka, kb = self.key(a), self.key(b)
        return Cmp.LT if ka < kb else Cmp.GT if ka > kb else Cmp.EQ

    def __eq__(self, other):
        return (
            isinstance(other, MonomialOrder)
            and self.family == other.family
            and self.weights == other.weights
            and self.precedence == other.precedence
        )

    def __hash__(self):
        return hash((self.family, self.weights, self.precedence))

    def __repr__(self):
        return f"MonomialOrder({self.family!r}, weights={self.weights}, precedence={self.precedence})"


def compare(m1, m2, order: MonomialOrder) -> Cmp:
    if len(m1) != len(m2):
        raise ArityError("monomials of different length")
    return order.compare(m1, m2)


@dataclass
class ValidationReport:
    failures: list = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.failures

    def __bool__(self):
        return self.ok

    def add(self, msg: str):
        self.failures.append(msg)

    def __str__(self):
        if self.ok:
            return "ok"
        return "\n".join(self.failures)


class _Budget:
    __slots__ = ("left",)

    def __init__(self, n):
        self.left = n

    def spend(self):
        self.left -= 1
        if self.left < 0:
            raise NormalizationDiverged("product normalization exceeded its rewrite budget")


class SolvableAlgebra:
    """A solvable polynomial algebra with a positive-degree function.

    ``relations`` maps ``(j, i)`` with ``j > i`` to ``(lam, tail)``, meaning
    ``a_j a_i = lam a_i a_j + tail``; ``tail`` is ``None``, a mapping
    ``{exponent tuple: coefficient}`` or a :class:`Polynomial` of this algebra.
    Missing pairs commute.
    """

    def __init__(
        self,
        names: Iterable[str],
        weights=None,
        relations: Mapping | None = None,
        field: Field = QQ,
        order: str = "deglex",
        precedence=None,
        max_rewrites: int | None = None,
    ):
        self.names = tuple(names)
        n = self.n = len(self.names)
        if len(set(self.names)) != n:
            raise ValueError("generator names must be distinct")
        self.weights = tuple(weights) if weights is not None else (1,) * n
        if len(self.weights) != n:
            raise ArityError("one weight per generator is required")
        if any(int(w) != w or w <= 0 for w in self.weights):
            raise ValueError("weights must be positive integers")
        self.field = field
        self.order = MonomialOrder(order, self.weights, precedence)
        self.max_rewrites = max_rewrites
        self._keys: dict = {}
        self._mono_cache: dict = {}
        self._pow_cache: dict = {}
        self.one_mono = (0,) * n
        self._lam: dict = {}
        self._tail: dict = {}
        for (j, i), (lam, tail) in (relations or {}).items():
            if not (0 <= i < j < n):
                raise ValueError(f"relation index pair ({j}, {i}) must satisfy 0 <= i < j < n")
            self._lam[(j, i)] = field(lam)
            if tail is None or (not isinstance(tail, Polynomial) and not tail):
                self._tail[(j, i)] = {}
            elif isinstance(tail, Polynomial):
                self._tail[(j, i)] = self._canon((m, field(c)) for m, c in tail._terms.items())
            else:
                self._tail[(j, i)] = self._canon(((tuple(m), field(c)) for m, c in tail.items()))
        for j in range(n):
            for i in range(j):
                self._lam.setdefault((j, i), field.one)
                self._tail.setdefault((j, i), {})

    # ---- basic data -------------------------------------------------

    def key(self, m) -> tuple:
        k = self._keys.get(m)
        if k is None:
            k = self._keys[m] = self.order.key(m)
        return k

    def mono_degree(self, m) -> int:
        return sum(w * e for w, e in zip(self.weights, m))

    def relation(self, j: int, i: int):
        """``(lam, tail)`` with ``a_j a_i = lam a_i a_j + tail`` for ``j > i``."""
        return self._lam[(j, i)], Polynomial._raw(self, self._tail[(j, i)])

    def relations(self):
        """All non-commuting relations as ``{(j, i): (lam, tail)}``."""
        out = {}
        for (j, i), lam in sorted(self._lam.items()):
            if lam != self.field.one or self._tail[(j, i)]:
                out[(j, i)] = self.relation(j, i)
        return out

    def is_commutative(self) -> bool:
        return not self.relations()

    def _canon(self, items) -> dict:
        acc = {}
        for m, c in items:
            acc[m] = acc.get(m, 0) + c
        key = self.key
        return {m: acc[m] for m in sorted(acc, key=key, reverse=True) if acc[m]}

    # ---- element constructors ---------------------------------------

    def poly(self, terms: Mapping | Iterable = ()) -> Polynomial:
        items = terms.items() if isinstance(terms, Mapping) else terms
        f = self.field
        return Polynomial._raw(self, self._canon((tuple(m), f(c)) for m, c in items))

    def monomial(self, exps, coeff=1) -> Polynomial:
        exps = tuple(exps)
        if len(exps) != self.n:
            raise ArityError(f"monomial {exps} has wrong length")
        return self.poly({exps: coeff})

    def constant(self, c) -> Polynomial:
        return self.poly({self.one_mono: c})

    @property
    def zero(self) -> Polynomial:
        return Polynomial._raw(self, {})

    @property
    def one(self) -> Polynomial:
        return self.constant(1)

    def gen(self, i) -> Polynomial:
        if isinstance(i, str):
            i = self.names.index(i)
        return self.monomial(unit(self.n, i))

    def gens(self) -> list:
        return [self.gen(i) for i in range(self.n)]

    # ---- multiplication ---------------------------------------------

    def _budget(self, a, b) -> _Budget:
        if self.max_rewrites is not None:
            return _Budget(self.max_rewrites)
        td = sum(a) + sum(b)
        return _Budget(2000 * (1 + td) ** 3)

    def mono_mul(self, a, b) -> tuple:
        """PBW normal form of ``a^a * a^b`` as a tuple of ``(mono, coeff)`` items."""
        r = self._mono_cache.get((a, b))
        if r is not None:
            return r
        try:
            return self._mono_mul(a, b, self._budget(a, b))
        except RecursionError as exc:
            raise NormalizationDiverged("product normalization recursed too deeply") from exc

    def _mono_mul(self, a, b, budget) -> tuple:
        r = self._mono_cache.get((a, b))
        if r is not None:
            return r
        n = self.n
        last = n - 1
        while last >= 0 and a[last] == 0:
            last -= 1
        first = 0
        while first < n and b[first] == 0:
            first += 1
        if last <= first:
            r = ((tuple(x + y for x, y in zip(a, b)), self.field.one),)
            self._mono_cache[(a, b)] = r
            return r
        budget.spend()
        k, l = a[last], b[first]
        a_rest = a[:last] + (0,) + a[last + 1:]
        b_rest = b[:first] + (0,) + b[first + 1:]
        acc = {}
        for m, c in self._pow_pow(last, k, first, l, budget):
            for m2, c2 in self._mono_mul(a_rest, m, budget):
                cc = c * c2
                for m3, c3 in self._mono_mul(m2, b_rest, budget):
                    acc[m3] = acc.get(m3, 0) + cc * c3
        r = tuple(self._canon(acc.items()).items())
        self._mono_cache[(a, b)] = r
        return r

    def _pow_pow(self, j, k, i, l, budget) -> tuple:
        """Normal form of ``a_j^k a_i^l`` for ``j > i``."""
        key = (j, i, k, l)
        r = self._pow_cache.get(key)
        if r is not None:
            return r
        budget.spend()
        n = self.n
        if k == 1 and l == 1:
            lam = self._lam[(j, i)]
            ij = [0] * n
            ij[i] = ij[j] = 1
            items = [(tuple(ij), lam)] + list(self._tail[(j, i)].items())
        elif k == 1:
            ei = unit(n, i)
            items = []
            for m, c in self._pow_pow(j, 1, i, l - 1, budget):
                items.extend((m2, c * c2) for m2, c2 in self._mono_mul(m, ei, budget))
        else:
            ej = unit(n, j)
            items = []
            for m, c in self._pow_pow(j, k - 1, i, l, budget):
                items.extend((m2, c * c2) for m2, c2 in self._mono_mul(ej, m, budget))
        r = tuple(self._canon(items).items())
        self._pow_cache[key] = r
        return r

    def normalize_product(self, a, b) -> Polynomial:
        a, b = tuple(a), tuple(b)
        if len(a) != self.n or len(b) != self.n:
            raise ArityError("monomial length does not match the algebra")
        return Polynomial._raw(self, dict(self.mono_mul(a, b)))

    def multiply(self, f: Polynomial, g: Polynomial) -> Polynomial:
        acc = {}
        mono_mul = self.mono_mul
        for ma, ca in f._terms.items():
            for mb, cb in g._terms.items():
                cab = ca * cb
                for m, c in mono_mul(ma, mb):
                    acc[m] = acc.get(m, 0) + cab * c
        return Polynomial._raw(self, self._canon(acc.items()))

    def __repr__(self):
        return f"SolvableAlgebra({list(self.names)}, weights={list(self.weights)}, field={self.field})"


def unit(n: int, i: int) -> tuple:
    e = [0] * n
    e[i] = 1
    return tuple(e)


class Polynomial:
    """Element of a solvable algebra, kept as terms sorted in descending order."""

    __slots__ = ("ring", "_terms")

    def __init__(self, ring: SolvableAlgebra, terms: Mapping | Iterable = ()):
        self.ring = ring
        self._terms = ring.poly(terms)._terms

    @classmethod
    def _raw(cls, ring, terms: dict) -> Polynomial:
        p = object.__new__(cls)
        p.ring = ring
        p._terms = terms
        return p

    # ---- inspection ---------------------------------------------------

    def terms(self):
        """``(monomial, coefficient)`` pairs, largest monomial first."""
        return list(self._terms.items())

    def monomials(self):
        return list(self._terms)

    def coefficient(self, m):
        return self._terms.get(tuple(m), self.ring.field.zero)

    def __len__(self):
        return len(self._terms)

    def __bool__(self):
        return bool(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def leading(self):
        """``(LC, LM)``."""
        for m, c in self._terms.items():
            return c, m
        raise ZeroPolynomial("the zero polynomial has no leading term")

    @property
    def lm(self):
        return self.leading()[1]

    @property
    def lc(self):
        return self.leading()[0]

    def degree(self) -> int:
        if not self._terms:
            raise ZeroPolynomial("degree of the zero polynomial")
        return max(self.ring.mono_degree(m) for m in self._terms)

    def is_homogeneous(self) -> bool:
        return len({self.ring.mono_degree(m) for m in self._terms}) <= 1

    def is_constant(self) -> bool:
        return all(not any(m) for m in self._terms)

    def is_unit(self) -> bool:
        """True for nonzero constants (the units of a graded algebra's degree-0 part)."""
        return bool(self._terms) and self.is_constant()

    # ---- arithmetic ---------------------------------------------------

    def _coerce(self, other):
        if isinstance(other, Polynomial):
            if other.ring is not self.ring:
                raise ValueError("polynomials belong to different algebras")
            return other
        if isinstance(other, SCALAR_TYPES):
            return self.ring.constant(other)
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        acc = dict(self._terms)
        for m, c in o._terms.items():
            acc[m] = acc.get(m, 0) + c
        return Polynomial._raw(self.ring, self.ring._canon(acc.items()))

    __radd__ = __add__

    def __neg__(self):
        return Polynomial._raw(self.ring, {m: -c for m, c in self._terms.items()})

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o + (-self)

    def scale(self, c) -> Polynomial:
        c = self.ring.field(c)
        if not c:
            return self.ring.zero
        return Polynomial._raw(self.ring, {m: c * v for m, v in self._terms.items()})

    def __mul__(self, other):
        if isinstance(other, Polynomial):
            if other.ring is not self.ring:
                raise ValueError("polynomials belong to different algebras")
            return self.ring.multiply(self, other)
        if isinstance(other, SCALAR_TYPES):
            return self.scale(other)
        return NotImplemented

    def __rmul__(self, other):
        if isinstance(other, SCALAR_TYPES):
            return self.scale(other)
        return NotImplemented

    def __truediv__(self, other):
        if isinstance(other, SCALAR_TYPES):
            return self.scale(self.ring.field.inv(self.ring.field(other)))
        return NotImplemented

    def __pow__(self, e: int):
        if e < 0:
            raise ValueError("negative powers of polynomials are not defined")
        r = self.ring.one
        for _ in range(e):
            r = r * self
        return r

    def __eq__(self, other):
        if isinstance(other, Polynomial):
            return self.ring is other.ring and self._terms == other._terms
        if isinstance(other, SCALAR_TYPES):
            o = self._coerce(other)
            return self._terms == o._terms
        return NotImplemented

    def __hash__(self):
        return hash(tuple(self._terms.items()))

    def __str__(self):
        return render_polynomial(self)

    def __repr__(self):
        return f"Polynomial({render_polynomial(self)!r})"


def render_monomial(names, m) -> str:
    parts = []
    for name, e in zip(names, m):
        if e == 1:
            parts.append(name)
        elif e > 1:
            parts.append(f"{name}^{e}")
    return "*".join(parts)


def render_terms(field, names, items) -> str:
    """Render ``(monomial, coeff)`` items as ``2*x^2*y - 1/3*y^3``."""
    out = []
    for m, c in items:
        s = field.render(c)
        neg = s.startswith("-")
        if neg:
            s = s[1:]
        mono = render_monomial(names, m)
        if mono:
            body = mono if s == "1" else f"{s}*{mono}"
        else:
            body = s
        if not out:
            out.append(("-" if neg else "") + body)
        else:
            out.append((" - " if neg else " + ") + body)
    return "".join(out) if out else "0"


def render_polynomial(f: Polynomial) -> str:
    return render_terms(f.ring.field, f.ring.names, f._terms.items())


# ---- functional surface ------------------------------------------------


def normalize_product(a, b, A: SolvableAlgebra) -> Polynomial:
    return A.normalize_product(a, b)


def multiply(f: Polynomial, g: Polynomial, A: SolvableAlgebra | None = None) -> Polynomial:
    return (A or f.ring).multiply(f, g)


def leading(f: Polynomial):
    return f.leading()


def degree(f: Polynomial, A: SolvableAlgebra | None = None) -> int:
    return f.degree()


def is_homogeneous(f: Polynomial) -> bool:
    return f.is_homogeneous()


def check_solvable(A: SolvableAlgebra) -> ValidationReport:
    """Check nonzero scalars, leading-monomial condition and triple overlaps."""
    rep = ValidationReport()
    nm = A.names
    basic_ok = True
    for j in range(A.n):
        for i in range(j):
            lam, tail = A._lam[(j, i)], A._tail[(j, i)]
            tag = f"relation {nm[j]}*{nm[i]}"
            if not lam:
                rep.add(f"{tag}: λ_ji must be nonzero")
                basic_ok = False
            if tail:
                lm = next(iter(tail))
                ij = [0] * A.n
                ij[i] = ij[j] = 1
                if A.key(lm) >= A.key(tuple(ij)):
                    rep.add(
                        f"{tag}: leading monomial {render_monomial(nm, lm) or '1'} of the tail "
                        f"is not below {nm[i]}*{nm[j]}"
                    )
                    basic_ok = False
    if not basic_ok:
        return rep
    for k in range(A.n):
        for j in range(k):
            for i in range(j):
                try:
                    lam_kj, tail_kj = A.relation(k, j)
                    lam_ji, tail_ji = A.relation(j, i)
                    akaj = A.monomial(_two(A.n, j, k), lam_kj) + tail_kj
                    ajai = A.monomial(_two(A.n, i, j), lam_ji) + tail_ji
                    left = akaj * A.gen(i)
                    right = A.gen(k) * ajai
                except NormalizationDiverged as exc:
                    rep.add(f"overlap {nm[k]}*{nm[j]}*{nm[i]}: {exc}")
                    continue
                if left != right:
                    rep.add(
                        f"overlap {nm[k]}*{nm[j]}*{nm[i]} is not resolvable: "
                        f"({nm[k]}*{nm[j]})*{nm[i]} = {left} but {nm[k]}*({nm[j]}*{nm[i]}) = {right}"
                    )
    return rep


def _two(n, i, j):
    e = [0] * n
    e[i] += 1
    e[j] += 1
    return tuple(e)


def check_graded(A: SolvableAlgebra) -> ValidationReport:
    """Every tail monomial of ``a_j a_i`` must have degree ``d(a_i) + d(a_j)``."""
    rep = ValidationReport()
    for (j, i), tail in sorted(A._tail.items()):
        want = A.weights[i] + A.weights[j]
        for m in tail:
            d = A.mono_degree(m)
            if d != want:
                rep.add(
                    f"relation {A.names[j]}*{A.names[i]}: tail monomial "
                    f"{render_monomial(A.names, m) or '1'} has degree {d}, expected {want}"
                )
    return rep

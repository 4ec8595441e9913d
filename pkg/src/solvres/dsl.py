"""Problem files (``.spa``).

A problem file is a list of statements, each ended by ``;`` or by a line
break outside brackets.  ``#`` starts a comment.  Example::

    field QQ
    gens x:1 y:1
    rel y*x = 2*x*y
    order deglex x<y
    module rank 2 shifts [0,1] order TOP
    elems [x^2, 0] [x*y + y^2, 0]
    truncate 3

Statements may appear in any order after ``gens``, except that ``elems``
needs the algebra and module to be fully described first.  Relations rewrite
``a_j*a_i`` with ``j > i`` (generators are numbered in ``gens`` order); the
right-hand side must be written with monomials in generator order.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field

from .algebra import Polynomial, SolvableAlgebra, check_graded, check_solvable, render_terms
from .errors import DSLSyntaxError, UnknownSymbol, ValidationFailed
from .freemod import FreeModule, ModuleElement
from .scalar import QQ, Field

KEYWORDS = ("field", "param", "gens", "rel", "order", "module", "elems", "truncate")

_TOKEN = re.compile(
    r"(?P<ws>[ \t\r]+)|(?P<comment>#[^\n]*)|(?P<nl>\n)|(?P<name>[A-Za-z_][A-Za-z0-9_]*)"
    r"|(?P<int>\d+)|(?P<sym>[;:=*^+\-/()\[\],<])|(?P<bad>.)"
)


@dataclass(frozen=True)
class Token:
    kind: str
    text: str
    line: int
    col: int


def tokenize(text: str) -> list:
    toks = []
    line, start = 1, 0
    for m in _TOKEN.finditer(text):
        kind = m.lastgroup
        col = m.start() - start + 1
        if kind == "nl":
            toks.append(Token("nl", "\n", line, col))
            line += 1
            start = m.end()
        elif kind == "bad":
            raise DSLSyntaxError(f"unexpected character {m.group()!r}", line, col)
        elif kind not in ("ws", "comment"):
            toks.append(Token(kind, m.group(), line, col))
    toks.append(Token("eof", "", line, len(text) - start + 1))
    return toks


def _statements(toks):
    """Split tokens into statements, joining lines inside brackets or when the next line is not a keyword."""
    stmts, cur, depth = [], [], 0
    for k, t in enumerate(toks):
        if t.kind == "eof":
            break
        if t.text in "([" and t.kind == "sym":
            depth += 1
        elif t.text in ")]" and t.kind == "sym":
            depth -= 1
        if t.kind == "sym" and t.text == ";" and depth == 0:
            if cur:
                stmts.append(cur)
            cur = []
            continue
        if t.kind == "nl":
            if depth > 0 or not cur:
                continue
            nxt = next((u for u in toks[k + 1:] if u.kind != "nl"), None)
            if nxt is None or nxt.kind == "eof" or (nxt.kind == "name" and nxt.text in KEYWORDS) or (
                nxt.kind == "sym" and nxt.text == ";"
            ):
                stmts.append(cur)
                cur = []
            continue
        cur.append(t)
    if cur:
        stmts.append(cur)
    return stmts


@dataclass
class ProblemFile:
    """A parsed and validated problem."""

    field: Field
    names: tuple
    weights: tuple
    relations: dict
    order: str
    precedence: tuple | None
    rank: int
    shifts: tuple
    module_order: str
    elems: list
    truncate: int | None = None
    params: dict = field(default_factory=dict)
    algebra: SolvableAlgebra | None = None
    module: FreeModule | None = None

    def canonical(self) -> tuple:
        rels = tuple(sorted((p, lam, tuple(tail.items())) for p, (lam, tail) in self.relations.items()))
        return (
            str(self.field), self.names, self.weights, rels, self.order,
            self.precedence or tuple(range(len(self.names))), self.rank, self.shifts, self.module_order,
            tuple(tuple(e._terms.items()) for e in self.elems), self.truncate,
            tuple(sorted(self.params.items())),
        )

    def __eq__(self, other):
        return isinstance(other, ProblemFile) and self.canonical() == other.canonical()


class _Cursor:
    def __init__(self, toks, stmt_start):
        self.toks = toks
        self.i = 0
        self.start = stmt_start

    def peek(self):
        return self.toks[self.i] if self.i < len(self.toks) else None

    def at_end(self):
        return self.i >= len(self.toks)

    def where(self):
        t = self.peek()
        if t is None:
            last = self.toks[-1] if self.toks else self.start
            return last.line, last.col + len(last.text)
        return t.line, t.col

    def next(self, what="a token"):
        t = self.peek()
        if t is None:
            raise DSLSyntaxError(f"expected {what}, found end of statement", *self.where())
        self.i += 1
        return t

    def accept(self, text):
        t = self.peek()
        if t is not None and t.kind in ("sym", "name") and t.text == text:
            self.i += 1
            return t
        return None

    def expect(self, text):
        t = self.peek()
        if t is None or t.text != text:
            found = "end of statement" if t is None else repr(t.text)
            raise DSLSyntaxError(f"expected {text!r}, found {found}", *self.where())
        self.i += 1
        return t

    def name(self, what="a name"):
        t = self.next(what)
        if t.kind != "name":
            raise DSLSyntaxError(f"expected {what}, found {t.text!r}", t.line, t.col)
        return t

    def integer(self, what="an integer"):
        neg = self.accept("-")
        t = self.next(what)
        if t.kind != "int":
            raise DSLSyntaxError(f"expected {what}, found {t.text!r}", t.line, t.col)
        return -int(t.text) if neg else int(t.text)

    def done(self):
        if not self.at_end():
            t = self.peek()
            raise DSLSyntaxError(f"unexpected {t.text!r}", t.line, t.col)


class _Expr:
    """Recursive-descent evaluator for polynomial expressions.

    With ``strict`` set (relation right-hand sides) products must already be
    standard words: every variable of the left factor precedes every variable
    of the right factor.
    """

    def __init__(self, ring: SolvableAlgebra, params: dict, strict=False):
        self.ring = ring
        self.params = params
        self.strict = strict
        self.index = {n: i for i, n in enumerate(ring.names)}

    def parse(self, cur: _Cursor) -> Polynomial:
        return self._poly(self.expr(cur))

    def _poly(self, v):
        return v if isinstance(v, Polynomial) else self.ring.constant(v)

    def expr(self, cur):
        if cur.accept("-"):
            v = -self.term(cur)
        else:
            cur.accept("+")
            v = self.term(cur)
        while True:
            if cur.accept("+"):
                v = self._add(v, self.term(cur))
            elif cur.accept("-"):
                v = self._add(v, -self.term(cur))
            else:
                return v

    def _add(self, a, b):
        if isinstance(a, Polynomial) or isinstance(b, Polynomial):
            return self._poly(a) + self._poly(b)
        return a + b

    def term(self, cur):
        v = self.power(cur)
        while True:
            t = cur.peek()
            if cur.accept("*"):
                v = self._mul(v, self.power(cur), t)
            elif cur.accept("/"):
                d = self.power(cur)
                if isinstance(d, Polynomial):
                    if not d.is_constant():
                        raise DSLSyntaxError("division by a non-constant", t.line, t.col)
                    d = d.coefficient(self.ring.one_mono)
                if not d:
                    raise DSLSyntaxError("division by zero", t.line, t.col)
                v = v * self.ring.field.inv(d) if isinstance(v, Polynomial) else v / self.ring.field(d)
            else:
                return v

    def _mul(self, a, b, tok):
        if not isinstance(a, Polynomial) or not isinstance(b, Polynomial):
            return a * b
        if self.strict:
            for ma in a._terms:
                hi = max((k for k, e in enumerate(ma) if e), default=-1)
                for mb in b._terms:
                    lo = min((k for k, e in enumerate(mb) if e), default=len(mb))
                    if hi > lo:
                        raise DSLSyntaxError(
                            "write right-hand side monomials in generator order", tok.line, tok.col
                        )
        return a * b

    def power(self, cur):
        v = self.atom(cur)
        t = cur.peek()
        if cur.accept("^"):
            e = cur.integer("an exponent")
            if e < 0:
                raise DSLSyntaxError("negative exponent", t.line, t.col)
            if isinstance(v, Polynomial):
                if self.strict and len([k for m in v._terms for k, x in enumerate(m) if x]) > 1:
                    raise DSLSyntaxError("only single generators may be raised to powers here", t.line, t.col)
                return v ** e
            return v ** e
        return v

    def atom(self, cur):
        t = cur.next("an expression")
        if t.kind == "int":
            return self.ring.field(int(t.text))
        if t.kind == "name":
            if t.text in self.index:
                return self.ring.gen(self.index[t.text])
            if t.text in self.params:
                return self.params[t.text]
            raise UnknownSymbol(f"unknown symbol {t.text!r}", t.line, t.col)
        if t.text == "(":
            v = self.expr(cur)
            cur.expect(")")
            return v
        raise DSLSyntaxError(f"unexpected {t.text!r} in expression", t.line, t.col)


class _Builder:
    def __init__(self):
        self.field = None
        self.params = {}
        self.names = None
        self.weights = None
        self.rels = {}
        self.rel_at = {}
        self.order = None
        self.precedence = None
        self.rank = None
        self.shifts = None
        self.module_order = None
        self.elem_stmt = None
        self.truncate = None
        self.seen = {}

    def once(self, kw, tok):
        if kw in self.seen and kw not in ("param", "rel"):
            raise DSLSyntaxError(f"duplicate {kw!r} statement", tok.line, tok.col)
        self.seen[kw] = tok

    def need_gens(self, tok):
        if self.names is None:
            raise DSLSyntaxError("'gens' must come before this statement", tok.line, tok.col)

    # ---- statements -----------------------------------------------------

    def st_field(self, cur, kw):
        t = cur.name("a field")
        if t.text == "QQ":
            f = QQ
        elif t.text == "GF":
            cur.expect("(")
            p = cur.integer("a prime")
            cur.expect(")")
            try:
                f = Field("GF", p)
            except ValueError as e:
                raise ValidationFailed(str(e), t.line, t.col) from None
        else:
            raise UnknownSymbol(f"unknown field {t.text!r}", t.line, t.col)
        if self.params or self.names is not None:
            raise DSLSyntaxError("'field' must come first", kw.line, kw.col)
        self.field = f

    def _field(self):
        if self.field is None:
            self.field = QQ
        return self.field

    def st_param(self, cur, kw):
        t = cur.name("a parameter name")
        if t.text in KEYWORDS or t.text in self.params:
            raise DSLSyntaxError(f"parameter name {t.text!r} is taken", t.line, t.col)
        if self.names is not None and t.text in self.names:
            raise DSLSyntaxError(f"parameter {t.text!r} clashes with a generator", t.line, t.col)
        cur.expect("=")
        ring = SolvableAlgebra((), (), field=self._field())
        v = _Expr(ring, self.params).parse(cur)
        self.params[t.text] = v.coefficient(())
        cur.done()

    def st_gens(self, cur, kw):
        names, weights = [], []
        while not cur.at_end():
            t = cur.name("a generator name")
            if t.text in KEYWORDS or t.text in self.params or t.text in ("QQ", "GF"):
                raise DSLSyntaxError(f"{t.text!r} cannot be used as a generator name", t.line, t.col)
            if t.text in names:
                raise DSLSyntaxError(f"duplicate generator {t.text!r}", t.line, t.col)
            w = 1
            if cur.accept(":"):
                wt = cur.peek()
                w = cur.integer("a weight")
                if w <= 0:
                    raise ValidationFailed(f"weight of {t.text!r} must be positive", wt.line, wt.col)
            names.append(t.text)
            weights.append(w)
        if not names:
            raise DSLSyntaxError("'gens' needs at least one generator", kw.line, kw.col)
        self.names, self.weights = tuple(names), tuple(weights)
        self._field()

    def st_rel(self, cur, kw):
        self.need_gens(kw)
        idx = {n: i for i, n in enumerate(self.names)}
        tj = cur.name("a generator")
        cur.expect("*")
        ti = cur.name("a generator")
        for t in (tj, ti):
            if t.text not in idx:
                raise UnknownSymbol(f"unknown generator {t.text!r}", t.line, t.col)
        j, i = idx[tj.text], idx[ti.text]
        if j <= i:
            raise DSLSyntaxError(
                f"relations rewrite a_j*a_i with j > i; write {ti.text}*{tj.text} instead"
                if j < i else "a generator does not need a relation with itself",
                tj.line, tj.col,
            )
        if (j, i) in self.rels:
            raise DSLSyntaxError(f"duplicate relation for {tj.text}*{ti.text}", tj.line, tj.col)
        cur.expect("=")
        ring = SolvableAlgebra(self.names, self.weights, field=self.field)
        rhs = _Expr(ring, self.params, strict=True).parse(cur)
        cur.done()
        m = tuple(1 if k in (i, j) else 0 for k in range(len(self.names)))
        lam = rhs.coefficient(m)
        tail = {mm: c for mm, c in rhs._terms.items() if mm != m}
        self.rels[(j, i)] = (lam, tail)
        self.rel_at[(j, i)] = tj

    def st_order(self, cur, kw):
        self.need_gens(kw)
        t = cur.name("an ordering")
        if t.text not in ("deglex", "degrevlex"):
            raise UnknownSymbol(f"unknown ordering {t.text!r}", t.line, t.col)
        self.order = t.text
        if cur.at_end():
            return
        idx = {n: i for i, n in enumerate(self.names)}
        chain = []
        while True:
            g = cur.name("a generator")
            if g.text not in idx:
                raise UnknownSymbol(f"unknown generator {g.text!r}", g.line, g.col)
            if idx[g.text] in chain:
                raise DSLSyntaxError(f"{g.text!r} appears twice in the ordering", g.line, g.col)
            chain.append(idx[g.text])
            if not cur.accept("<"):
                break
        cur.done()
        if len(chain) != len(self.names):
            raise DSLSyntaxError("the precedence chain must list every generator", t.line, t.col)
        self.precedence = tuple(chain)

    def _int_list(self, cur):
        cur.expect("[")
        out = []
        if cur.accept("]"):
            return out
        while True:
            out.append(cur.integer())
            if cur.accept("]"):
                return out
            cur.expect(",")

    def st_module(self, cur, kw):
        while not cur.at_end():
            t = cur.name("'rank', 'shifts' or 'order'")
            if t.text == "rank":
                self.rank = cur.integer("a rank")
                if self.rank < 0:
                    raise ValidationFailed("rank must be non-negative", t.line, t.col)
            elif t.text == "shifts":
                st = cur.peek()
                self.shifts = tuple(self._int_list(cur))
                self.shift_tok = st
            elif t.text == "order":
                o = cur.name("TOP or POT")
                if o.text.upper() not in ("TOP", "POT"):
                    raise UnknownSymbol(f"unknown module ordering {o.text!r}", o.line, o.col)
                self.module_order = o.text.upper()
            else:
                raise DSLSyntaxError(f"unexpected {t.text!r} in module statement", t.line, t.col)
        if self.rank is None:
            self.rank = len(self.shifts) if self.shifts is not None else 1
        if self.shifts is not None and len(self.shifts) != self.rank:
            st = self.shift_tok
            raise ValidationFailed(
                f"expected {self.rank} shifts, got {len(self.shifts)}", st.line, st.col
            )

    def st_elems(self, cur, kw):
        self.elem_stmt = cur

    def st_truncate(self, cur, kw):
        t = cur.peek()
        self.truncate = cur.integer("a degree")
        if self.truncate < 0:
            raise ValidationFailed("truncation degree must be non-negative", t.line, t.col)
        cur.done()

    # ---- assembly -------------------------------------------------------

    def build(self, first) -> ProblemFile:
        if self.names is None:
            raise DSLSyntaxError("missing 'gens' statement", first.line, first.col)
        order = self.order or "deglex"
        try:
            A = SolvableAlgebra(self.names, self.weights, self.rels, field=self.field, order=order,
                                precedence=self.precedence)
        except ValueError as e:
            raise ValidationFailed(str(e), first.line, first.col) from None
        for rep in (check_solvable(A), check_graded(A)):
            if not rep.ok:
                at = next(iter(self.rel_at.values()), first)
                for pair, tok in self.rel_at.items():
                    nm = f"{self.names[pair[0]]}*{self.names[pair[1]]}"
                    if any(nm in msg for msg in rep.failures):
                        at = tok
                        break
                raise ValidationFailed("; ".join(rep.failures), at.line, at.col)
        rank = self.rank if self.rank is not None else 1
        shifts = self.shifts if self.shifts is not None else (0,) * rank
        morder = self.module_order or "TOP"
        L = FreeModule(A, shifts, order=morder)
        elems = []
        if self.elem_stmt is not None:
            elems = self._elements(self.elem_stmt, A, L)
        return ProblemFile(self.field, self.names, self.weights, _relations_of(A), order, self.precedence,
                           rank, tuple(shifts), morder, elems, self.truncate, dict(self.params), A, L)

    def _elements(self, cur, A, L):
        ev = _Expr(A, self.params)
        out = []
        while not cur.at_end():
            t = cur.peek()
            cur.expect("[")
            comps = []
            if not cur.accept("]"):
                while True:
                    comps.append(ev.parse(cur))
                    if cur.accept("]"):
                        break
                    cur.expect(",")
            if len(comps) != L.rank:
                raise ValidationFailed(f"element has {len(comps)} components, module rank is {L.rank}",
                                       t.line, t.col)
            out.append(L.from_components(comps))
        return out


def _relations_of(A: SolvableAlgebra) -> dict:
    return {p: (A._lam[p], dict(A._tail[p])) for p in A.relations()}


def parse_problem(text: str) -> ProblemFile:
    """Parse and validate a problem file; errors carry 1-based line and column."""
    toks = tokenize(text)
    b = _Builder()
    first = toks[0]
    for stmt in _statements(toks):
        kw = stmt[0]
        if kw.kind != "name" or kw.text not in KEYWORDS:
            raise DSLSyntaxError(f"expected a statement keyword, found {kw.text!r}", kw.line, kw.col)
        b.once(kw.text, kw)
        if kw.text not in ("field", "param", "gens") and b.names is None:
            raise DSLSyntaxError("'gens' must come before this statement", kw.line, kw.col)
        getattr(b, "st_" + kw.text)(_Cursor(stmt[1:], kw), kw)
    return b.build(first)


def _render_poly(ring, terms) -> str:
    items = sorted(terms.items(), key=lambda mc: ring.key(mc[0]), reverse=True)
    return render_terms(ring.field, ring.names, items)


def render_problem(P: ProblemFile) -> str:
    """Canonical text form; parsing it gives back an equal problem."""
    A = P.algebra
    lines = [f"field {P.field}"]
    for name, v in P.params.items():
        lines.append(f"param {name} = {P.field.render(v)}")
    lines.append("gens " + " ".join(f"{n}:{w}" for n, w in zip(P.names, P.weights)))
    n = len(P.names)
    for (j, i), (lam, tail) in sorted(P.relations.items(), key=lambda kv: (kv[0][1], kv[0][0])):
        m = tuple(1 if k in (i, j) else 0 for k in range(n))
        terms = dict(tail)
        terms[m] = lam
        lines.append(f"rel {P.names[j]}*{P.names[i]} = {_render_poly(A, terms)}")
    prec = P.precedence or tuple(range(n))
    lines.append(f"order {P.order} " + "<".join(P.names[k] for k in prec))
    shifts = ",".join(str(b) for b in P.shifts)
    lines.append(f"module rank {P.rank} shifts [{shifts}] order {P.module_order}")
    if P.elems:
        vecs = []
        for e in P.elems:
            vecs.append("[" + ", ".join(_render_poly(A, c._terms) for c in e.components()) + "]")
        lines.append("elems " + " ".join(vecs))
    if P.truncate is not None:
        lines.append(f"truncate {P.truncate}")
    return "\n".join(lines) + "\n"


def element_json(xi: ModuleElement) -> list:
    A = xi.module.ring
    return [_render_poly(A, c._terms) for c in xi.components()]

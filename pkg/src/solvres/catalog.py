"""Ready-made algebras used throughout the tests and demos."""

from __future__ import annotations

from fractions import Fraction

from .algebra import SolvableAlgebra
from .scalar import QQ, Field


def polynomial_ring(names=("x", "y", "z"), weights=None, field: Field = QQ, order="deglex", precedence=None):
    """Commutative polynomial ring."""
    return SolvableAlgebra(names, weights, {}, field=field, order=order, precedence=precedence)


def quantum_space(names, lams, weights=None, field: Field = QQ, order="deglex", precedence=None):
    """Coordinate ring of quantum affine space: ``a_j a_i = lams[(j, i)] a_i a_j``."""
    rels = {pair: (lam, None) for pair, lam in lams.items()}
    return SolvableAlgebra(names, weights, rels, field=field, order=order, precedence=precedence)


def quantum_plane(q=2, field: Field = QQ, names=("x", "y"), weights=None, order="deglex"):
    """``y x = q x y``."""
    return quantum_space(names, {(1, 0): q}, weights=weights, field=field, order=order)


def mq2(q=2, field: Field = QQ, order="deglex", literal=False):
    """Quantum 2x2 matrices ``M_q(2) = K[a, b, c, d]``, all generators of degree 1.

    Written in the ``a_j a_i = lam a_i a_j + f`` form::

        b a = 1/q a b,  c a = a c,  d a = q a d,
        c b = q b c,    d b = b d - (q - 1/q) a c,  d c = q c d.

    With ``literal=True`` the first relation is ``b a = q a b`` instead; that
    table fails the overlap check on ``d*b*a`` unless ``q^2 = 1``.
    """
    q = field(Fraction(q) if field.kind == "QQ" else q)
    qinv = field.inv(q)
    a, b, c, d = range(4)
    ac = (1, 0, 1, 0)
    rels = {
        (b, a): (q if literal else qinv, None),
        (c, a): (1, None),
        (d, a): (q, None),
        (c, b): (q, None),
        (d, b): (1, {ac: -(q - qinv)}),
        (d, c): (q, None),
    }
    return SolvableAlgebra("abcd", (1, 1, 1, 1), rels, field=field, order=order)


def weyl(n=1, field: Field = QQ, weights=None):
    """Weyl algebra ``K[x_1..x_n, D_1..D_n]`` with ``D_i x_i = x_i D_i + 1`` (not graded)."""
    names = [f"x{i + 1}" for i in range(n)] + [f"D{i + 1}" for i in range(n)]
    one = (0,) * (2 * n)
    rels = {(n + i, i): (1, {one: 1}) for i in range(n)}
    return SolvableAlgebra(names, weights, rels, field=field)

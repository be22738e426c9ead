"""Brute-force reference computations built on sympy matrices.

Nothing here calls liestruct's own linear algebra; algebras are read only
through their raw structure constants.
"""

from fractions import Fraction

import sympy as sp


def S(M):
    """QMatrix or nested lists -> sympy Matrix."""
    rows = M.rows if hasattr(M, "rows") and not isinstance(M, sp.MatrixBase) else M
    return sp.Matrix([[sp.Rational(a.numerator, a.denominator) if isinstance(a, Fraction) else sp.Rational(a) for a in r] for r in rows])


def frac(x):
    x = sp.Rational(x)
    return Fraction(int(x.p), int(x.q))


def to_fracs(M):
    return [[frac(a) for a in M.row(i)] for i in range(M.rows)]


class Table:
    """Raw structure constants ``[e_i, e_j] = sum_k c e_k`` as sympy rationals, keyed by ``(i, j)``."""

    def __init__(self, n, terms):
        self.n = n
        self.pairs = {}
        for i, j, k, c in terms:
            self.pairs.setdefault((i, j), []).append((k, c))

    def __len__(self):
        return self.n


def bracket_table(L):
    terms = [(i, j, k, sp.Rational(c.numerator, c.denominator)) for i, j, k, c in L.constants]
    return Table(L.dim, terms)


def bracket(t, x, y):
    xs = [(i, a) for i, a in enumerate(x) if a]
    ys = [(j, b) for j, b in enumerate(y) if b]
    out = [sp.Integer(0)] * t.n
    for i, a in xs:
        for j, b in ys:
            for k, c in t.pairs.get((i, j), ()):
                out[k] += a * b * c
    return sp.Matrix([out])


def ad(t, x):
    """Row ``i`` is ``[e_i, x]``."""
    n = len(t)
    return sp.Matrix.vstack(*[bracket(t, sp.eye(n).row(i), x) for i in range(n)])


def killing(L):
    """``tr(ad e_i ad e_j)`` summed entry by entry, skipping zeros."""
    t = bracket_table(L)
    n = L.dim
    ads = [ad(t, sp.eye(n).row(i)).tolist() for i in range(n)]
    nonzero = [[(a, b, v) for a, row in enumerate(M) for b, v in enumerate(row) if v] for M in ads]
    K = sp.zeros(n, n)
    for i in range(n):
        for j in range(i, n):
            Mj = ads[j]
            K[i, j] = K[j, i] = sum((v * Mj[b][a] for a, b, v in nonzero[i]), sp.Integer(0))
    return K


def span_rank(rows, n):
    if not rows:
        return 0
    return sp.Matrix.vstack(*rows).rank()


def basis_of(rows, n):
    if not rows:
        return []
    M = sp.Matrix.vstack(*rows)
    R, piv = M.rref()
    return [R.row(i) for i in range(len(piv))]


def derived_dims(L):
    """Dimensions along the derived series until it repeats."""
    t = bracket_table(L)
    n = L.dim
    cur = [sp.eye(n).row(i) for i in range(n)]
    dims = [n]
    while True:
        nxt = basis_of([bracket(t, a, b) for a in cur for b in cur], n)
        if len(nxt) == len(cur):
            return dims
        dims.append(len(nxt))
        cur = nxt
        if not cur:
            return dims


def is_solvable(L):
    return derived_dims(L)[-1] == 0


def left_kernel(M):
    """Basis of ``{x : x M = 0}`` as sympy row vectors."""
    return [v.T for v in M.T.nullspace()]


def same_span(vectors_a, vectors_b, n):
    """Equality of spans of two lists of vectors (any sequences of rationals)."""
    A = [sp.Matrix([[sp.Rational(str(x)) for x in v]]) for v in vectors_a]
    B = [sp.Matrix([[sp.Rational(str(x)) for x in v]]) for v in vectors_b]
    ra, rb = span_rank(A, n), span_rank(B, n)
    return ra == rb == span_rank(A + B, n)

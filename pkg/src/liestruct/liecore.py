"""Lie algebras given by rational structure constants.

Convention: ``ad(x)`` is the right action ``y -> [y, x]`` on row vectors, so
``ad([x, y]) == ad(x) @ ad(y) - ad(y) @ ad(x)`` with ``@`` meaning "first, then".
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import lcm
from typing import Optional, Sequence

from .errors import DimensionMismatch, NotSubalgebra
from .exactla import QMatrix, Subspace, kernel, solve_linear, to_rational, vecmat

__all__ = [
    "LieAlgebra",
    "ValidationReport",
    "validate_algebra",
    "ad",
    "bracket_subspaces",
    "series",
    "is_subalgebra",
    "is_ideal",
    "is_solvable",
    "is_nilpotent",
    "ideal_closure",
    "generated_subalgebra",
    "centre",
    "direct_sum",
    "change_basis",
    "subalgebra",
    "quotient",
    "DerivationAnalysis",
    "derivation_analyze",
]

ZERO = Fraction(0)


class LieAlgebra:
    """Finite-dimensional algebra with basis ``e_0..e_{n-1}`` over Q.

    ``constants`` lists ``(i, j, k, c)`` meaning ``[e_i, e_j]`` has ``c`` on ``e_k``.
    Entries are taken literally; use :meth:`from_brackets` for the usual
    upper-triangle-plus-antisymmetry input.  Nothing is validated here, see
    :func:`validate_algebra`.
    """

    def __init__(self, dim: int, constants=(), basis_labels: Optional[Sequence[str]] = None):
        self.dim = dim
        if basis_labels is None:
            basis_labels = [f"e{i}" for i in range(dim)]
        if len(basis_labels) != dim:
            raise DimensionMismatch(f"{len(basis_labels)} labels for dimension {dim}")
        self.basis_labels = tuple(basis_labels)
        table = [[[ZERO] * dim for _ in range(dim)] for _ in range(dim)]
        for i, j, k, c in constants:
            for idx in (i, j, k):
                if not 0 <= idx < dim:
                    raise DimensionMismatch(f"basis index {idx} out of range for dimension {dim}")
            table[i][j][k] += to_rational(c)
        self._table = tuple(tuple(tuple(v) for v in row) for row in table)
        self._nonzero = tuple(
            (i, j, self._table[i][j])
            for i in range(dim)
            for j in range(dim)
            if any(self._table[i][j])
        )
        den = lcm(*(c.denominator for _, _, v in self._nonzero for c in v))
        self._int_nonzero = tuple(
            (i, j, [c.numerator * (den // c.denominator) for c in v]) for i, j, v in self._nonzero
        )
        self._den = den

    @classmethod
    def from_brackets(cls, dim, brackets, basis_labels=None) -> "LieAlgebra":
        """Build from ``{(i, j): {k: c}}`` (or an iterable of ``(i, j, [(k, c), ...])``) with i < j."""
        items = brackets.items() if isinstance(brackets, dict) else (((i, j), terms) for i, j, terms in brackets)
        constants = []
        for (i, j), terms in items:
            if i == j:
                raise ValueError(f"bracket [e{i}, e{i}] must not be listed")
            terms = terms.items() if isinstance(terms, dict) else terms
            for k, c in terms:
                c = to_rational(c)
                constants.append((i, j, k, c))
                constants.append((j, i, k, -c))
        return cls(dim, constants, basis_labels)

    @property
    def constants(self) -> list:
        """Sparse ``(i, j, k, c)`` list of every nonzero structure constant."""
        return [(i, j, k, c) for i, j, v in self._nonzero for k, c in enumerate(v) if c]

    def upper_brackets(self) -> list:
        """``(i, j, [(k, c), ...])`` for i < j, the file-format listing."""
        return [
            (i, j, [(k, c) for k, c in enumerate(v) if c])
            for i, j, v in self._nonzero
            if i < j
        ]

    def structure(self, i: int, j: int) -> tuple:
        """Coordinates of ``[e_i, e_j]``."""
        return self._table[i][j]

    def basis_vector(self, i: int) -> tuple:
        v = [ZERO] * self.dim
        v[i] = Fraction(1)
        return tuple(v)

    def bracket(self, x, y) -> tuple:
        if len(x) != self.dim or len(y) != self.dim:
            raise DimensionMismatch("bracket of vectors of the wrong length")
        # integer arithmetic on cleared denominators, one division at the end
        dx = lcm(*(a.denominator for a in x))
        dy = lcm(*(b.denominator for b in y))
        out = [0] * self.dim
        for i, j, v in self._int_nonzero:
            a = x[i]
            if a:
                b = y[j]
                if b:
                    s = a.numerator * (dx // a.denominator) * b.numerator * (dy // b.denominator)
                    out = [o + s * c if c else o for o, c in zip(out, v)]
        d = dx * dy * self._den
        return tuple(Fraction(o, d) if o else ZERO for o in out)

    def full(self) -> Subspace:
        return Subspace.full(self.dim)

    def zero(self) -> Subspace:
        return Subspace.zero(self.dim)

    def span(self, vectors) -> Subspace:
        return Subspace(self.dim, list(vectors))

    def span_labels(self, labels) -> Subspace:
        return self.span(self.basis_vector(self.basis_labels.index(name)) for name in labels)

    def element(self, **coeffs) -> tuple:
        """Vector from label keywords, e.g. ``L.element(h=1, e=2)``."""
        v = [ZERO] * self.dim
        for name, c in coeffs.items():
            v[self.basis_labels.index(name)] = to_rational(c)
        return tuple(v)

    def __eq__(self, other):
        if not isinstance(other, LieAlgebra):
            return NotImplemented
        return self.dim == other.dim and self._table == other._table

    def __hash__(self):
        return hash((self.dim, self._table))

    def __repr__(self):
        return f"LieAlgebra(dim={self.dim}, basis={list(self.basis_labels)})"


@dataclass
class ValidationReport:
    antisymmetry_failures: list = field(default_factory=list)
    jacobi_failures: list = field(default_factory=list)

    @property
    def valid(self) -> bool:
        return not self.antisymmetry_failures and not self.jacobi_failures

    def __bool__(self):
        return self.valid

    def summary(self) -> str:
        if self.valid:
            return "valid"
        parts = [f"antisymmetry fails at {p}" for p in self.antisymmetry_failures]
        parts += [f"Jacobi fails at {t}" for t in self.jacobi_failures]
        return "; ".join(parts)


def validate_algebra(L: LieAlgebra) -> ValidationReport:
    """Check antisymmetry and the Jacobi identity on all basis pairs and triples."""
    report = ValidationReport()
    n = L.dim
    for i in range(n):
        if any(L.structure(i, i)):
            report.antisymmetry_failures.append((i, i))
        for j in range(i + 1, n):
            if any(a + b for a, b in zip(L.structure(i, j), L.structure(j, i))):
                report.antisymmetry_failures.append((i, j))
    basis = [L.basis_vector(i) for i in range(n)]
    for i in range(n):
        for j in range(i + 1, n):
            eij = L.structure(i, j)
            for k in range(j + 1, n):
                total = [
                    a + b + c
                    for a, b, c in zip(
                        L.bracket(eij, basis[k]),
                        L.bracket(L.structure(j, k), basis[i]),
                        L.bracket(L.structure(k, i), basis[j]),
                    )
                ]
                if any(total):
                    report.jacobi_failures.append((i, j, k))
    return report


def ad(L: LieAlgebra, x) -> QMatrix:
    """Matrix of ``y -> [y, x]``; row i holds ``[e_i, x]``."""
    if len(x) != L.dim:
        raise DimensionMismatch(f"element of length {len(x)} in an algebra of dimension {L.dim}")
    rows = [[ZERO] * L.dim for _ in range(L.dim)]
    for i, j, v in L._nonzero:
        a = x[j]
        if a:
            rows[i] = [r + a * c if c else r for r, c in zip(rows[i], v)]
    return QMatrix._trusted(rows, L.dim)


def _check(L, *spaces):
    for U in spaces:
        if U.ambient_dim != L.dim:
            raise DimensionMismatch(f"subspace of ambient dimension {U.ambient_dim} in algebra of dimension {L.dim}")


def bracket_subspaces(L: LieAlgebra, U: Subspace, V: Subspace) -> Subspace:
    """Span of ``[u, v]`` over basis pairs."""
    _check(L, U, V)
    return L.span(L.bracket(u, v) for u in U.basis for v in V.basis)


def is_subalgebra(L: LieAlgebra, U: Subspace) -> bool:
    return bracket_subspaces(L, U, U) <= U


def is_ideal(L: LieAlgebra, U: Subspace) -> bool:
    return bracket_subspaces(L, L.full(), U) <= U


def series(L: LieAlgebra, start: Subspace, kind: str = "derived") -> list:
    """Derived (``S -> [S, S]``) or lower central (``S -> [start, S]``) series.

    The list ends with the first repeated term, so ``result[-1] == result[-2]``
    unless the chain reaches 0 first (then it ends with the zero subspace).
    """
    _check(L, start)
    if kind not in ("derived", "lower_central"):
        raise ValueError(f"unknown series kind {kind!r}")
    if not is_subalgebra(L, start):
        raise NotSubalgebra("series needs a subalgebra as its first term")
    chain = [start]
    for _ in range(L.dim + 1):
        cur = chain[-1]
        if cur.is_zero():
            break
        nxt = bracket_subspaces(L, cur, cur) if kind == "derived" else bracket_subspaces(L, start, cur)
        chain.append(nxt)
        if nxt == cur:
            break
    return chain


def is_solvable(L: LieAlgebra, U: Optional[Subspace] = None) -> bool:
    """Derived-series oracle."""
    return series(L, L.full() if U is None else U, "derived")[-1].is_zero()


def is_nilpotent(L: LieAlgebra, U: Optional[Subspace] = None) -> bool:
    """Lower-central-series oracle."""
    return series(L, L.full() if U is None else U, "lower_central")[-1].is_zero()


def ideal_closure(L: LieAlgebra, seed: Subspace) -> Subspace:
    """Smallest ideal containing ``seed``."""
    _check(L, seed)
    basis = [L.basis_vector(i) for i in range(L.dim)]
    cur = seed
    frontier = list(seed.basis)
    # only brackets with newly added vectors can enlarge the span
    while frontier:
        added = []
        for v in frontier:
            for e in basis:
                w = L.bracket(e, v)
                if any(w) and not cur.contains(w):
                    cur = cur + Subspace(L.dim, [w])
                    added.append(w)
        frontier = added
    return cur


def generated_subalgebra(L: LieAlgebra, vectors) -> Subspace:
    cur = L.span(vectors)
    while True:
        nxt = cur + bracket_subspaces(L, cur, cur)
        if nxt == cur:
            return cur
        cur = nxt


def centre(L: LieAlgebra) -> Subspace:
    """``{x : [e_i, x] = 0 for all i}``, the common kernel of the ``ad(e_i)``."""
    return kernel(QMatrix.hstack([ad(L, L.basis_vector(i)) for i in range(L.dim)], nrows=L.dim))


def direct_sum(L1: LieAlgebra, L2: LieAlgebra) -> LieAlgebra:
    n = L1.dim
    constants = list(L1.constants) + [(i + n, j + n, k + n, c) for i, j, k, c in L2.constants]
    labels = list(L1.basis_labels) + list(L2.basis_labels)
    if len(set(labels)) != len(labels):
        labels = [f"{a}_1" for a in L1.basis_labels] + [f"{a}_2" for a in L2.basis_labels]
    return LieAlgebra(n + L2.dim, constants, labels)


def change_basis(L: LieAlgebra, P: QMatrix, labels=None) -> LieAlgebra:
    """Algebra whose ``i``-th basis vector is row ``i`` of the invertible matrix ``P``.

    A subspace ``U`` of ``L`` corresponds to ``U.image(P.inverse())`` in the result.
    """
    Pinv = P.inverse()
    n = L.dim
    constants = []
    for i in range(n):
        for j in range(i + 1, n):
            new = vecmat(L.bracket(P.rows[i], P.rows[j]), Pinv)
            for k, c in enumerate(new):
                if c:
                    constants.append((i, j, k, c))
                    constants.append((j, i, k, -c))
    return LieAlgebra(n, constants, labels)


def subalgebra(L: LieAlgebra, U: Subspace, labels=None) -> LieAlgebra:
    """Structure constants of the subalgebra ``U`` in its canonical basis."""
    if not is_subalgebra(L, U):
        raise NotSubalgebra("subspace is not closed under the bracket")
    constants = []
    for i, u in enumerate(U.basis):
        for j in range(i + 1, U.dim):
            coords = U.coordinates(L.bracket(u, U.basis[j]))
            for k, c in enumerate(coords):
                if c:
                    constants.append((i, j, k, c))
                    constants.append((j, i, k, -c))
    return LieAlgebra(U.dim, constants, labels)


def quotient(L: LieAlgebra, I: Subspace) -> LieAlgebra:
    """``L / I`` on the standard basis vectors outside the pivot columns of ``I``."""
    if not is_ideal(L, I):
        raise NotSubalgebra("quotient by a subspace that is not an ideal")
    keep = [k for k in range(L.dim) if k not in set(I.pivots)]
    pos = {k: idx for idx, k in enumerate(keep)}

    def reduce(v):
        # subtract the I-component so that pivot coordinates vanish
        v = list(v)
        for b, p in zip(I.basis, I.pivots):
            c = v[p]
            if c:
                v = [a - c * x for a, x in zip(v, b)]
        return v

    constants = []
    for a, i in enumerate(keep):
        for b, j in enumerate(keep):
            if a < b:
                red = reduce(L.structure(i, j))
                for k, c in enumerate(red):
                    if c:
                        constants.append((a, b, pos[k], c))
                        constants.append((b, a, pos[k], -c))
    return LieAlgebra(len(keep), constants, [L.basis_labels[k] for k in keep])


@dataclass(frozen=True)
class DerivationAnalysis:
    is_derivation: bool
    inner_witness: Optional[tuple]
    leibniz_failures: tuple = ()


def derivation_analyze(L: LieAlgebra, D: QMatrix) -> DerivationAnalysis:
    """Leibniz check on basis pairs, then solve ``ad(a) == D`` for ``a``."""
    n = L.dim
    if D.shape != (n, n):
        raise DimensionMismatch(f"derivation matrix of shape {D.shape} for dimension {n}")
    images = [D.rows[i] for i in range(n)]
    failures = []
    for i in range(n):
        for j in range(i + 1, n):
            lhs = vecmat(L.structure(i, j), D)
            rhs = [
                a + b
                for a, b in zip(
                    L.bracket(images[i], L.basis_vector(j)), L.bracket(L.basis_vector(i), images[j])
                )
            ]
            if list(lhs) != rhs:
                failures.append((i, j))
    # ad is linear in a: ad(a) = sum_k a_k ad(e_k)
    system = QMatrix._trusted([ad(L, L.basis_vector(k)).vec() for k in range(n)], n * n)
    witness = solve_linear(system, D.vec())
    return DerivationAnalysis(not failures, witness, tuple(failures))

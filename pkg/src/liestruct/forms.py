"""Trace forms, the Killing form, and the Cartan criteria built on them."""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from fractions import Fraction
from typing import Optional

from .errors import DegenerateSubspace, DimensionMismatch, PreconditionFailure
from .exactla import QMatrix, Subspace, kernel, solve_linear, vecmat
from .liecore import LieAlgebra, bracket_subspaces, is_solvable
from .weights import Representation, adjoint_representation, fitting_trace

__all__ = [
    "BilinearForm",
    "trace_form",
    "killing_form",
    "invariance_violations",
    "perp",
    "GramSplit",
    "gram_split",
    "SolvabilityVerdict",
    "cartan_solvable",
    "SemisimpleVerdict",
    "semisimple_check",
    "radical",
]

ZERO = Fraction(0)


class BilinearForm:
    """Symmetric form given by its Gram matrix on the algebra's basis."""

    def __init__(self, gram: QMatrix):
        if not gram.is_symmetric():
            raise ValueError("Gram matrix must be symmetric")
        self.gram = gram
        self.dim = gram.nrows

    def __call__(self, a, b) -> Fraction:
        return sum((x * y for x, y in zip(vecmat(a, self.gram), b)), ZERO)

    def restricted(self, U: Subspace) -> QMatrix:
        """Gram matrix on the canonical basis of ``U``."""
        B = U.as_matrix()
        return B @ self.gram @ B.T

    def between(self, U: Subspace, V: Subspace) -> QMatrix:
        """Matrix of ``f(u_i, v_j)`` over the canonical bases."""
        return U.as_matrix() @ self.gram @ V.as_matrix().T

    def determinant(self) -> Fraction:
        return self.gram.det()

    def is_zero(self) -> bool:
        return self.gram.is_zero()

    def __eq__(self, other):
        if not isinstance(other, BilinearForm):
            return NotImplemented
        return self.gram == other.gram

    def __hash__(self):
        return hash(self.gram)

    def __repr__(self):
        return f"BilinearForm({self.gram!r})"


def trace_form(rep: Representation) -> BilinearForm:
    """``f(a, b) = tr(rho(a) rho(b))`` on basis pairs, traces taken through the Fitting split."""
    n = rep.algebra.dim
    g = [[ZERO] * n for _ in range(n)]
    for i in range(n):
        for j in range(i, n):
            t = fitting_trace(rep.operators[i] @ rep.operators[j])
            g[i][j] = g[j][i] = t
    return BilinearForm(QMatrix(g, n))


@lru_cache(maxsize=512)
def killing_form(L: LieAlgebra) -> BilinearForm:
    return trace_form(adjoint_representation(L))


def invariance_violations(f: BilinearForm, L: LieAlgebra) -> list:
    """Basis triples where ``f([a, c], b) + f(a, [b, c]) != 0``."""
    bad = []
    e = [L.basis_vector(i) for i in range(L.dim)]
    for a in range(L.dim):
        for b in range(L.dim):
            for c in range(L.dim):
                if f(L.structure(a, c), e[b]) + f(e[a], L.structure(b, c)):
                    bad.append((a, b, c))
    return bad


def perp(f: BilinearForm, U: Subspace) -> Subspace:
    """``{b : f(u, b) = 0 for all u in U}``."""
    if U.ambient_dim != f.dim:
        raise DimensionMismatch("subspace and form have different dimensions")
    # b G u^T = 0 for each basis vector u
    M = f.gram @ U.as_matrix().T if U.dim else QMatrix.hstack([], nrows=f.dim)
    return kernel(M)


@dataclass(frozen=True)
class GramSplit:
    subspace: Subspace
    complement: Subspace
    coefficients: QMatrix  # row c: coordinates x_k of the A-part of e_c in A's canonical basis

    def parts(self, c: int):
        """``(a, a_perp)`` with ``e_c = a + a_perp``."""
        a = self.subspace.combine(self.coefficients.rows[c])
        e = [ZERO] * self.subspace.ambient_dim
        e[c] = Fraction(1)
        return a, tuple(x - y for x, y in zip(e, a))


def gram_split(f: BilinearForm, A: Subspace) -> GramSplit:
    """Split the ambient space as ``A + A_perp`` by solving the Gram system for every basis vector."""
    if A.ambient_dim != f.dim:
        raise DimensionMismatch("subspace and form have different dimensions")
    G = f.restricted(A)
    if A.dim and G.det() == 0:
        raise DegenerateSubspace("Gram determinant of the subspace is zero")
    AG = [vecmat(a, f.gram) for a in A.basis]
    coeffs = []
    perp_parts = []
    for c in range(f.dim):
        # f(a_i, e_c) = sum_k x_k f(a_i, a_k)
        rhs = [row[c] for row in AG]
        x = solve_linear(G, rhs) if A.dim else ()
        coeffs.append(x)
        a = A.combine(x)
        perp_parts.append(tuple(u - v for u, v in zip(_unit(f.dim, c), a)))
    complement = Subspace(f.dim, perp_parts)
    return GramSplit(A, complement, QMatrix._trusted(coeffs, A.dim))


def _unit(n, c):
    v = [ZERO] * n
    v[c] = Fraction(1)
    return v


@dataclass(frozen=True)
class SolvabilityVerdict:
    solvable: bool
    witness: Optional[tuple]
    witness_value: Optional[Fraction]
    oracle_agreement: bool

    @property
    def verdict(self) -> str:
        return "solvable" if self.solvable else "not_solvable"


def cartan_solvable(L: LieAlgebra, rep: Optional[Representation] = None) -> SolvabilityVerdict:
    """Cartan's criterion: solvable iff the trace form vanishes on ``L' x L'``.

    A non-adjoint representation is accepted when its kernel is solvable.
    When not solvable, the witness ``x`` in ``L'`` has ``tr(rho(x)^2) != 0``.
    """
    if rep is None:
        f = killing_form(L)
    elif rep.algebra != L:
        raise PreconditionFailure("representation belongs to a different algebra")
    else:
        K = rep.kernel()
        if not is_solvable(L, K):
            raise PreconditionFailure("kernel of the representation is not solvable")
        f = trace_form(rep)
    derived = bracket_subspaces(L, L.full(), L.full())
    G = f.restricted(derived)
    solvable = G.is_zero()
    witness = value = None
    if not solvable:
        k = derived.dim
        diag = [i for i in range(k) if G.rows[i][i]]
        if diag:
            witness = derived.basis[diag[0]]
        else:
            i, j = next((i, j) for i in range(k) for j in range(k) if G.rows[i][j])
            witness = tuple(a + b for a, b in zip(derived.basis[i], derived.basis[j]))
        value = f(witness, witness)
    return SolvabilityVerdict(solvable, witness, value, solvable == is_solvable(L))


@dataclass(frozen=True)
class SemisimpleVerdict:
    semisimple: bool
    killing_det: Fraction


def semisimple_check(L: LieAlgebra) -> SemisimpleVerdict:
    det = killing_form(L).determinant()
    return SemisimpleVerdict(det != 0, det)


def radical(L: LieAlgebra) -> Subspace:
    """Solvable radical as the Killing-orthogonal complement of ``[L, L]``."""
    derived = bracket_subspaces(L, L.full(), L.full())
    return perp(killing_form(L), derived)

"""Representations, Fitting splits and weight-space decompositions.

Operators act on row vectors from the right.  A :class:`Representation` is a
homomorphism in that convention:
``rho([e_i, e_j]) == rho(e_i) @ rho(e_j) - rho(e_j) @ rho(e_i)``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Sequence

from .errors import DimensionMismatch, NotAWeight, NotNilpotent, NotSplit, NotSubalgebra, PreconditionFailure
from .exactla import (
    Polynomial,
    QMatrix,
    Subspace,
    char_poly_with_rational_roots,
    kernel,
    vecmat,
)
from .liecore import LieAlgebra, ad, is_nilpotent, is_subalgebra

__all__ = [
    "Representation",
    "adjoint_representation",
    "zero_representation",
    "FittingSplit",
    "fitting_decompose",
    "fitting_trace",
    "mu_component",
    "WeightFunction",
    "weight_decomposition",
    "weight_string",
    "weight_string_identity",
    "weight_shift_violations",
]

ZERO = Fraction(0)


class Representation:
    def __init__(self, algebra: LieAlgebra, operators: Sequence[QMatrix], module_dim: Optional[int] = None):
        operators = [op if isinstance(op, QMatrix) else QMatrix(op) for op in operators]
        if len(operators) != algebra.dim:
            raise DimensionMismatch(f"{len(operators)} operators for an algebra of dimension {algebra.dim}")
        if module_dim is None:
            if not operators:
                raise DimensionMismatch("module dimension is ambiguous without operators")
            module_dim = operators[0].nrows
        for op in operators:
            if op.shape != (module_dim, module_dim):
                raise DimensionMismatch(f"operator of shape {op.shape} on a module of dimension {module_dim}")
        self.algebra = algebra
        self.module_dim = module_dim
        self.operators = tuple(operators)

    def rho(self, x) -> QMatrix:
        """Operator of the element with coordinates ``x``."""
        if len(x) != self.algebra.dim:
            raise DimensionMismatch("element has the wrong length")
        acc = QMatrix.zeros(self.module_dim)
        for c, op in zip(x, self.operators):
            if c:
                acc = acc + op * c
        return acc

    def homomorphism_failures(self) -> list:
        """Basis pairs ``(i, j)`` where the bracket is not sent to the commutator."""
        L = self.algebra
        bad = []
        for i in range(L.dim):
            for j in range(i + 1, L.dim):
                lhs = self.rho(L.structure(i, j))
                if lhs != self.operators[i].commutator(self.operators[j]):
                    bad.append((i, j))
        return bad

    def is_valid(self) -> bool:
        return not self.homomorphism_failures()

    def kernel(self) -> Subspace:
        """Elements of the algebra acting as zero."""
        m2 = self.module_dim * self.module_dim
        return kernel(QMatrix._trusted([op.vec() for op in self.operators], m2))

    def __repr__(self):
        return f"Representation(algebra={self.algebra!r}, module_dim={self.module_dim})"


def adjoint_representation(L: LieAlgebra) -> Representation:
    return Representation(L, [ad(L, L.basis_vector(i)) for i in range(L.dim)], L.dim)


def zero_representation(L: LieAlgebra, module_dim: int) -> Representation:
    return Representation(L, [QMatrix.zeros(module_dim)] * L.dim, module_dim)


@dataclass(frozen=True)
class FittingSplit:
    null_component: Subspace
    one_component: Subspace


def _stable_image(A: QMatrix):
    """``(M A^k, k)`` for the first ``k`` where the image chain ``M A^k`` stops shrinking."""
    image = Subspace.full(A.nrows)
    k = 0
    while True:
        nxt = image.image(A)
        if nxt.dim == image.dim:
            return image, k
        image, k = nxt, k + 1


def fitting_decompose(A: QMatrix) -> FittingSplit:
    """``M_0 = ker A^k`` and ``M_1 = im A^k`` where the image chain ``M A^k`` stops shrinking.

    The chain stabilizes by ``k = dim M``, so this agrees with using ``A^dim``.
    """
    if not A.is_square:
        raise DimensionMismatch("Fitting decomposition of a non-square matrix")
    image, k = _stable_image(A)
    null = kernel(A**k) if k else Subspace.zero(A.nrows)
    return FittingSplit(null, image)


def fitting_trace(A: QMatrix) -> Fraction:
    """Trace of the map induced on ``M / M_0``, i.e. of ``A`` restricted to ``M_1``."""
    if not A.is_square:
        raise DimensionMismatch("Fitting trace of a non-square matrix")
    M1, _ = _stable_image(A)
    if M1.is_zero():
        return ZERO
    return M1.restrict(A).trace()


def mu_component(A: QMatrix, mu: Polynomial) -> Subspace:
    """``{x : x mu(A)^d = 0}``."""
    if mu.degree < 1:
        raise ValueError("mu must be nonconstant")
    return kernel(mu.at_matrix(A) ** A.nrows)


@dataclass(frozen=True)
class WeightFunction:
    """Linear functional on ``subalgebra`` given by its values on the canonical basis."""

    subalgebra: Subspace
    values: tuple

    def __call__(self, h) -> Fraction:
        coords = self.subalgebra.coordinates(h)
        if coords is None:
            raise ValueError("element lies outside the subalgebra the weight is defined on")
        return sum((c * v for c, v in zip(coords, self.values)), ZERO)

    def __add__(self, other: "WeightFunction") -> "WeightFunction":
        if self.subalgebra != other.subalgebra:
            raise ValueError("weights on different subalgebras")
        return WeightFunction(self.subalgebra, tuple(a + b for a, b in zip(self.values, other.values)))

    def __mul__(self, k) -> "WeightFunction":
        return WeightFunction(self.subalgebra, tuple(k * a for a in self.values))

    __rmul__ = __mul__

    def __neg__(self):
        return self * -1

    def __sub__(self, other):
        return self + (-other)

    def is_zero(self) -> bool:
        return not any(self.values)

    def __str__(self):
        return "(" + ", ".join(str(v) for v in self.values) + ")"


def weight_decomposition(rep: Representation, H: Subspace) -> list:
    """Split the module into generalized weight spaces of the nilpotent subalgebra ``H``.

    The canonical basis of ``H`` is processed in order.  Each current piece is
    split into generalized eigenspaces of the next operator; pieces stay
    invariant because ``H`` is nilpotent.  Returns ``[(weight, space)]``
    sorted by weight values.
    """
    L = rep.algebra
    if H.ambient_dim != L.dim:
        raise DimensionMismatch("subalgebra lives in the wrong ambient space")
    if not is_subalgebra(L, H):
        raise NotSubalgebra("H is not closed under the bracket")
    if not is_nilpotent(L, H):
        raise NotNilpotent("H fails the lower-central-series test")
    parts = [((), Subspace.full(rep.module_dim))]
    for h in H.basis:
        A = rep.rho(h)
        refined = []
        for vals, S in parts:
            B = S.restrict(A)
            _, roots, cofactor = char_poly_with_rational_roots(B)
            if cofactor.degree > 0:
                raise NotSplit(
                    f"operator of ({', '.join(str(a) for a in h)}) has characteristic factor {cofactor} without rational roots"
                )
            ident = QMatrix.identity(B.nrows)
            for r, mult in roots:
                K = kernel((B - ident * r) ** mult)
                refined.append((vals + (r,), S.lift(K)))
        parts = refined
    parts.sort(key=lambda p: p[0])
    return [(WeightFunction(H, vals), S) for vals, S in parts]


def _find(decomp, weight):
    for w, S in decomp:
        if w == weight:
            return S
    return None


def weight_string(decomp, rho: WeightFunction, alpha: WeightFunction) -> list:
    """``[(i, weight, space)]`` for every weight of ``decomp`` equal to ``rho + i*alpha``."""
    if alpha.is_zero():
        raise ValueError("the string direction must be a nonzero weight")
    k = next(idx for idx, a in enumerate(alpha.values) if a)
    out = []
    for w, S in decomp:
        diff = w - rho
        i = diff.values[k] / alpha.values[k]
        if i.denominator == 1 and diff == alpha * i:
            out.append((int(i), w, S))
    out.sort(key=lambda t: t[0])
    return out


def weight_string_identity(
    rep: Representation,
    H: Subspace,
    rho: WeightFunction,
    alpha: WeightFunction,
    h_alpha,
    decomposition=None,
    root_decomposition=None,
) -> Fraction:
    """``sum_i dim M_{rho+i alpha} * (rho + i alpha)(h_alpha)`` over the alpha-string through rho.

    The sum is the trace of ``h_alpha`` on the string, so it vanishes when
    ``h_alpha = [e_alpha, e_-alpha]`` for root vectors ``e_alpha, e_-alpha``.
    """
    if decomposition is None:
        decomposition = weight_decomposition(rep, H)
    if root_decomposition is None:
        root_decomposition = weight_decomposition(adjoint_representation(rep.algebra), H)
    if _find(decomposition, rho) is None:
        raise NotAWeight(f"{rho} is not a weight of the module")
    if alpha.is_zero() or _find(root_decomposition, alpha) is None:
        raise NotAWeight(f"{alpha} is not a nonzero root")
    if not H.contains(h_alpha):
        raise PreconditionFailure("h_alpha must lie in H")
    return sum(
        (S.dim * w(h_alpha) for _, w, S in weight_string(decomposition, rho, alpha)), ZERO
    )


def weight_shift_violations(rep: Representation, H: Subspace, decomposition=None, root_decomposition=None) -> list:
    """Pairs where ``M_rho * rho(L_alpha)`` escapes ``M_{rho+alpha}`` (or is nonzero when that is not a weight)."""
    L = rep.algebra
    if decomposition is None:
        decomposition = weight_decomposition(rep, H)
    if root_decomposition is None:
        root_decomposition = weight_decomposition(adjoint_representation(L), H)
    bad = []
    for rho, M in decomposition:
        for alpha, La in root_decomposition:
            target = _find(decomposition, rho + alpha)
            for v in La.basis:
                op = rep.rho(v)
                for x in M.basis:
                    y = vecmat(x, op)
                    ok = (not any(y)) if target is None else target.contains(y)
                    if not ok:
                        bad.append((rho, alpha, v, x))
    return bad

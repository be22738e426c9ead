"""Ideals from subalgebras, stable annihilators/images, and splitting semisimple algebras."""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

import sympy as sp

from .errors import (
    DegenerateSubspace,
    Inconclusive,
    NoWitnessWithinCap,
    NotSemisimple,
    NotSubalgebra,
    PreconditionFailure,
)
from .exactla import Polynomial, QMatrix, Subspace, char_poly, kernel
from .forms import gram_split, killing_form, semisimple_check
from .liecore import (
    LieAlgebra,
    ad,
    bracket_subspaces,
    generated_subalgebra,
    ideal_closure,
    is_ideal,
    is_subalgebra,
    series,
)
from .weights import Representation

__all__ = [
    "Condition3Witness",
    "ad_chain_exponent",
    "condition3_witness",
    "a_omega",
    "stable_annihilator",
    "rep_stable_image",
    "centroid",
    "SimpleDecomposition",
    "decompose_semisimple",
]

COEFF_RANGE = (-9, 9)
DEFAULT_TRIAL_BUDGET = 32


@dataclass(frozen=True)
class Condition3Witness:
    subalgebra: Subspace
    exponent: int
    escalated: bool = False


def ad_chain_exponent(L: LieAlgebra, A: Subspace) -> Optional[int]:
    """Smallest ``n >= 1`` with ``L (ad A)^n`` inside ``A``, or None if the chain stalls outside."""
    S = L.full()
    for n in range(1, max(L.dim, 1) + 1):
        nxt = bracket_subspaces(L, S, A)
        if nxt <= A:
            return n
        if nxt == S:
            return None
        S = nxt
    return None


def condition3_witness(L: LieAlgebra, generators, dim_cap: int) -> Condition3Witness:
    """Finite-dimensional ``A`` containing ``generators`` with ``L (ad A)^n`` inside ``A``.

    Tries the generated subalgebra first, then falls back to the ideal the
    generators span (where ``n = 1``).  Both candidates must fit in ``dim_cap``.
    """
    generators = list(generators)
    A = generated_subalgebra(L, generators)
    if A.dim <= dim_cap:
        n = ad_chain_exponent(L, A)
        if n is not None:
            return Condition3Witness(A, n)
    closure = ideal_closure(L, L.span(generators))
    if closure.dim > dim_cap:
        raise NoWitnessWithinCap(
            f"smallest candidate has dimension {min(A.dim, closure.dim)} > cap {dim_cap}"
        )
    return Condition3Witness(closure, 1, escalated=True)


def a_omega(L: LieAlgebra, A: Subspace, witness: Optional[Condition3Witness] = None) -> Subspace:
    """Stable term of the lower central series of ``A``; an ideal of ``L``."""
    if not is_subalgebra(L, A):
        raise NotSubalgebra("A is not a subalgebra")
    if witness is not None:
        if witness.subalgebra != A:
            raise PreconditionFailure("witness is for a different subalgebra")
        S = L.full()
        for _ in range(witness.exponent):
            S = bracket_subspaces(L, S, A)
        if not S <= A:
            raise PreconditionFailure(f"L (ad A)^{witness.exponent} is not inside A")
    elif ad_chain_exponent(L, A) is None:
        raise PreconditionFailure("no n with L (ad A)^n inside A")
    omega = series(L, A, "lower_central")[-1]
    if not is_ideal(L, omega):
        raise PreconditionFailure("stable lower central term is not an ideal")
    return omega


def _products(ops, n):
    prods = {QMatrix.identity(ops[0].nrows)} if ops else set()
    for _ in range(n):
        prods = {P @ B for P in prods for B in ops}
    return prods


def stable_annihilator(rep: Representation, A: Subspace, n: int) -> Subspace:
    """Vectors killed by every product of ``n`` operators from a basis of ``A``."""
    if not is_subalgebra(rep.algebra, A):
        raise NotSubalgebra("A is not a subalgebra")
    m = rep.module_dim
    ops = [rep.rho(z) for z in A.basis]
    if not ops:
        return Subspace.zero(m) if n == 0 else Subspace.full(m)
    prods = sorted(_products(ops, n), key=lambda P: P.rows)
    return kernel(QMatrix.hstack(prods, nrows=m))


def rep_stable_image(rep: Representation, A: Subspace):
    """``(n, M A^n)`` for the smallest ``n >= 1`` with ``M A^n == M A^(n+1)``."""
    if not is_subalgebra(rep.algebra, A):
        raise NotSubalgebra("A is not a subalgebra")
    ops = [rep.rho(z) for z in A.basis]
    m = rep.module_dim

    def step(S):
        return Subspace(m, [v for B in ops for v in S.image(B).basis])

    cur = step(Subspace.full(m))
    n = 1
    while True:
        nxt = step(cur)
        if nxt == cur:
            return n, cur
        cur, n = nxt, n + 1


def centroid(L: LieAlgebra, P: Subspace, elements=None) -> Subspace:
    """Maps of ``P`` commuting with ``ad`` of the given elements (default: a basis of ``P``).

    Returned as a subspace of flattened ``P.dim x P.dim`` matrices.  For a
    semisimple ideal it has dimension 1 exactly when ``P`` is absolutely simple.
    """
    d = P.dim
    if elements is None:
        elements = P.basis
    mats = [P.restrict(ad(L, y)) for y in elements]
    rows = []
    for a in range(d):
        for b in range(d):
            E = QMatrix.unit(d, a, b)
            rows.append(sum((E.commutator(M).vec() for M in mats), ()))
    return kernel(QMatrix._trusted(rows, d * d * len(mats)))


@dataclass(frozen=True)
class SimpleDecomposition:
    ideals: tuple
    seed: int
    trial_budget: int = DEFAULT_TRIAL_BUDGET


def _random_element(P, rng):
    lo, hi = COEFF_RANGE
    return P.combine([rng.randint(lo, hi) for _ in P.basis])


def _primary_components(B: QMatrix):
    """Kernels of ``f(B)^m`` for the irreducible factors ``f^m`` of the characteristic polynomial."""
    return [kernel(f.at_matrix(B) ** m) for f, m in _irreducible_factors(char_poly(B))]


def _ideal_order(S):
    return (S.dim, S.pivots, S.basis)


def _smallest(cands):
    return min(cands, key=_ideal_order)


def _proper_ideal(L: LieAlgebra, P: Subspace, rng: random.Random, trial_budget: int):
    """A proper nonzero ideal inside ``P``, or None once ``P`` is certified simple."""
    if bracket_subspaces(L, P, P).is_zero():
        raise Inconclusive(f"abelian part of dimension {P.dim} in a semisimple algebra")

    def closures(vectors):
        out = []
        for v in vectors:
            C = ideal_closure(L, L.span([v]))
            if 0 < C.dim < P.dim:
                out.append(C)
        return out

    found = closures(P.basis)
    if found:
        return _smallest(found)

    def ad_trials(count):
        for _ in range(count):
            x = _random_element(P, rng)
            if not any(x):
                continue
            B = P.restrict(ad(L, x))
            for comp in _primary_components(B):
                found = closures(P.combine(c) for c in comp.basis)
                if found:
                    return _smallest(found)
        return None

    # a few cheap attempts before the centroid, which is costly in high dimension
    early = min(4, trial_budget)
    I = ad_trials(early)
    if I is not None:
        return I
    # a centroid equal to Q rules out a splitting into several simple ideals
    gens = [_random_element(P, rng) for _ in range(2)]
    if generated_subalgebra(L, gens) != P:
        gens = None
    C = centroid(L, P, gens)
    if C.dim == 1:
        return None
    # the centroid of a semisimple ideal is a product of fields, one per simple summand
    d = P.dim
    for _ in range(trial_budget):
        coeffs = [rng.randint(*COEFF_RANGE) for _ in C.basis]
        flat = C.combine(coeffs)
        T = QMatrix._trusted([flat[i * d:(i + 1) * d] for i in range(d)], d)
        factors = _irreducible_factors(char_poly(T))
        if len(factors) > 1:
            found = [P.lift(kernel(f.at_matrix(T) ** m)) for f, m in factors]
            return _smallest([S for S in found if 0 < S.dim < d])
        ((f, _),) = factors
        if f.degree == C.dim and f.at_matrix(T).is_zero():
            # Q[T] is a field filling the centroid, so P is simple (not absolutely)
            return None
    I = ad_trials(trial_budget - early)
    if I is not None:
        return I
    raise Inconclusive(
        f"part of dimension {P.dim} has a centroid of dimension {C.dim} that no trial split or certified as a field"
    )


def _irreducible_factors(p: Polynomial) -> list:
    """``(f, m)`` for the monic irreducible factors ``f^m`` of ``p`` over Q, sorted by ``f``."""
    lam = sp.Symbol("lam")
    expr = sum(sp.Rational(c.numerator, c.denominator) * lam**i for i, c in enumerate(p.coeffs))
    _, factors = sp.factor_list(expr, lam)
    out = []
    for g, m in factors:
        coeffs = sp.Poly(g, lam).all_coeffs()[::-1]
        out.append((Polynomial([Fraction(int(sp.Rational(c).p), int(sp.Rational(c).q)) for c in coeffs]).monic(), m))
    return sorted(out, key=lambda t: (t[0].degree, t[0].coeffs))


def decompose_semisimple(L: LieAlgebra, seed: int = 0, trial_budget: int = DEFAULT_TRIAL_BUDGET) -> SimpleDecomposition:
    """Peel a semisimple algebra into simple ideals.

    Each part is split as ``I + perp(I)`` using the Killing form, where ``I``
    is the ideal closure of a vector taken from the basis or from a primary
    component of ``ad x`` for seeded random ``x``.  A part is declared simple
    once its centroid is Q, or once the centroid is certified to be a field
    (simple but not absolutely simple).
    """
    verdict = semisimple_check(L)
    if not verdict.semisimple:
        raise NotSemisimple("Killing form is degenerate")
    K = killing_form(L)
    rng = random.Random(seed)
    work = [L.full()]
    simple = []
    while work:
        P = work.pop()
        I = _proper_ideal(L, P, rng, trial_budget)
        if I is None:
            simple.append(P)
            continue
        try:
            split = gram_split(K, I)
        except DegenerateSubspace:
            raise Inconclusive(f"ideal of dimension {I.dim} is Killing-degenerate") from None
        rest = split.complement.intersect(P)
        if I.dim + rest.dim != P.dim:
            raise Inconclusive("Killing complement does not split the part")
        work.extend([I, rest])
    simple.sort(key=_ideal_order)
    return SimpleDecomposition(tuple(simple), seed, trial_budget)

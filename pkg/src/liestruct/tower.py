"""Finite chains of embedded Lie algebras standing in for a locally finite algebra.

Nothing here sees the direct limit itself; every "locally ..." verdict only
speaks for the levels that were supplied.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional

from .errors import DataError, DimensionMismatch, Inconclusive, NotSemisimple, PreconditionFailure
from .exactla import QMatrix, Subspace, vecmat
from .forms import killing_form, perp, radical, semisimple_check
from .liecore import LieAlgebra, centre, derivation_analyze, is_solvable, validate_algebra
from .structure import DEFAULT_TRIAL_BUDGET, decompose_semisimple

__all__ = [
    "Tower",
    "TowerDerivation",
    "TowerValidation",
    "validate_tower",
    "LevelVerdict",
    "TowerVerdicts",
    "tower_verdicts",
    "TowerDecomposition",
    "tower_decompose",
    "InnernessVerdict",
    "tower_derivation_inner",
]

HORIZON_NOTE = "verdict covers only the supplied levels"


@dataclass(frozen=True)
class Tower:
    levels: tuple
    embeddings: tuple  # embeddings[k] maps level-k row vectors into level k+1

    def __post_init__(self):
        object.__setattr__(self, "levels", tuple(self.levels))
        object.__setattr__(self, "embeddings", tuple(self.embeddings))

    def embed(self, k: int, x) -> tuple:
        return vecmat(x, self.embeddings[k])

    def embed_subspace(self, k: int, U: Subspace) -> Subspace:
        return U.image(self.embeddings[k])


@dataclass(frozen=True)
class TowerDerivation:
    per_level: tuple
    declared_support: Optional[frozenset] = None

    def __post_init__(self):
        object.__setattr__(self, "per_level", tuple(self.per_level))


@dataclass
class TowerValidation:
    algebra_failures: list = field(default_factory=list)
    shape_failures: list = field(default_factory=list)
    injectivity_failures: list = field(default_factory=list)
    homomorphism_failures: list = field(default_factory=list)

    @property
    def valid(self) -> bool:
        return not (
            self.algebra_failures
            or self.shape_failures
            or self.injectivity_failures
            or self.homomorphism_failures
        )

    def __bool__(self):
        return self.valid

    def summary(self) -> str:
        if self.valid:
            return "valid"
        out = [f"level {k}: {msg}" for k, msg in self.algebra_failures]
        out += [f"embedding {k}: {msg}" for k, msg in self.shape_failures]
        out += [f"embedding {k} is not injective" for k in self.injectivity_failures]
        out += [
            f"embedding {k} breaks [{a}, {b}]" for k, a, b in self.homomorphism_failures
        ]
        return "; ".join(out)


def validate_tower(T: Tower) -> TowerValidation:
    """Check each level and each embedding (shape, injectivity, bracket compatibility)."""
    report = TowerValidation()
    for k, L in enumerate(T.levels):
        v = validate_algebra(L)
        if not v:
            report.algebra_failures.append((k, v.summary()))
    if len(T.embeddings) != max(len(T.levels) - 1, 0):
        report.shape_failures.append(
            (None, f"{len(T.embeddings)} embeddings for {len(T.levels)} levels")
        )
        return report
    for k, phi in enumerate(T.embeddings):
        src, dst = T.levels[k], T.levels[k + 1]
        if phi.shape != (src.dim, dst.dim):
            report.shape_failures.append((k, f"shape {phi.shape}, expected {(src.dim, dst.dim)}"))
            continue
        if phi.rank() != src.dim:
            report.injectivity_failures.append(k)
        for i in range(src.dim):
            for j in range(i + 1, src.dim):
                lhs = vecmat(src.structure(i, j), phi)
                rhs = dst.bracket(phi.rows[i], phi.rows[j])
                if lhs != rhs:
                    report.homomorphism_failures.append(
                        (k, src.basis_labels[i], src.basis_labels[j])
                    )
    return report


@dataclass(frozen=True)
class LevelVerdict:
    level: int
    dim: int
    radical: Subspace
    killing_det: Fraction
    solvable: bool
    semisimple: bool


@dataclass(frozen=True)
class TowerVerdicts:
    levels: tuple
    radical_monotone: tuple  # one flag per embedding
    limit: str  # "locally_solvable" | "semisimple" | "inconclusive"
    violated_level: Optional[int] = None
    note: str = HORIZON_NOTE


def tower_verdicts(T: Tower) -> TowerVerdicts:
    levels = []
    for k, L in enumerate(T.levels):
        ss = semisimple_check(L)
        levels.append(LevelVerdict(k, L.dim, radical(L), ss.killing_det, is_solvable(L), ss.semisimple))
    monotone = tuple(
        T.embed_subspace(k, levels[k].radical) <= levels[k + 1].radical
        for k in range(len(T.embeddings))
    )
    if all(v.solvable for v in levels):
        return TowerVerdicts(tuple(levels), monotone, "locally_solvable")
    if all(v.radical.is_zero() for v in levels) and all(monotone):
        return TowerVerdicts(tuple(levels), monotone, "semisimple")
    bad = next(
        (v.level for v in levels if not v.solvable and not v.radical.is_zero()),
        None,
    )
    if bad is None:
        bad = next((k + 1 for k, ok in enumerate(monotone) if not ok), None)
    if bad is None:
        # mixture of solvable and semisimple levels
        bad = next(v.level for v in levels if not v.solvable)
    return TowerVerdicts(tuple(levels), monotone, "inconclusive", bad)


@dataclass(frozen=True)
class TowerDecomposition:
    per_level: tuple  # SimpleDecomposition per level
    matching: tuple  # matching[k][i] = index at level k+1 of the ideal containing ideal i of level k
    complement_intersections: tuple  # dimension of the intersection of all M^perp, per level
    coherent: bool


def tower_decompose(T: Tower, seed: int = 0, trial_budget: int = DEFAULT_TRIAL_BUDGET) -> TowerDecomposition:
    """Decompose every level and match simple ideals along the embeddings."""
    decomps = []
    intersections = []
    for k, L in enumerate(T.levels):
        try:
            d = decompose_semisimple(L, seed, trial_budget)
        except NotSemisimple as exc:
            raise NotSemisimple(f"level {k}: {exc}", level=k) from None
        except Inconclusive as exc:
            raise Inconclusive(f"level {k}: {exc}", level=k) from None
        decomps.append(d)
        K = killing_form(L)
        N = L.full()
        for M in d.ideals:
            N = N.intersect(perp(K, M))
        intersections.append(N.dim)
    matching = []
    coherent = all(n == 0 for n in intersections)
    for k in range(len(T.embeddings)):
        K_next = killing_form(T.levels[k + 1])
        upper = decomps[k + 1].ideals
        for a in range(len(upper)):
            for b in range(a + 1, len(upper)):
                if not K_next.between(upper[a], upper[b]).is_zero():
                    coherent = False
        row = []
        for M in decomps[k].ideals:
            image = T.embed_subspace(k, M)
            hits = [j for j, J in enumerate(upper) if image <= J]
            if len(hits) != 1:
                coherent = False
                row.append(None)
            else:
                row.append(hits[0])
        if len([j for j in row if j is not None]) != len(set(j for j in row if j is not None)):
            coherent = False
        matching.append(tuple(row))
    return TowerDecomposition(tuple(decomps), tuple(matching), tuple(intersections), coherent)


@dataclass(frozen=True)
class InnernessVerdict:
    verdict: str  # "inner" | "not_inner_within_horizon"
    witness: Optional[tuple]
    witness_level: Optional[int]
    level_witnesses: tuple
    note: str = HORIZON_NOTE

    @property
    def inner(self) -> bool:
        return self.verdict == "inner"


def tower_derivation_inner(T: Tower, D: TowerDerivation) -> InnernessVerdict:
    """Solve ``D_k = ad(a_k)`` per level and test whether the witnesses stabilize.

    Inner means there is ``m`` below the top level with ``phi_k(a_k) == a_{k+1}``
    for every ``k >= m``; the witness is ``a_m`` at level ``m``.
    """
    if len(D.per_level) != len(T.levels):
        raise DimensionMismatch(f"{len(D.per_level)} derivation matrices for {len(T.levels)} levels")
    for k, L in enumerate(T.levels):
        if not centre(L).is_zero():
            raise PreconditionFailure(f"level {k} has a nonzero centre")
    for k, phi in enumerate(T.embeddings):
        if D.per_level[k] @ phi != phi @ D.per_level[k + 1]:
            raise DataError(f"derivations at levels {k} and {k + 1} are not compatible with the embedding")
    witnesses = []
    for k, (L, Dk) in enumerate(zip(T.levels, D.per_level)):
        res = derivation_analyze(L, Dk)
        if not res.is_derivation:
            raise DataError(f"level {k}: matrix is not a derivation (Leibniz fails at {res.leibniz_failures[0]})")
        if res.inner_witness is None:
            raise DataError(f"level {k}: derivation is not inner")
        witnesses.append(res.inner_witness)
    top = len(T.levels) - 1
    m = top
    while m > 0 and T.embed(m - 1, witnesses[m - 1]) == witnesses[m]:
        m -= 1
    if top == 0 or m < top:
        return InnernessVerdict("inner", witnesses[m], m, tuple(witnesses))
    return InnernessVerdict("not_inner_within_horizon", None, None, tuple(witnesses))

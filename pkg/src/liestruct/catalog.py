"""Named fixture algebras, representations and towers with construction-known facts.

Bases and conventions::

    sl2   (e, h, f)   [h,e] = 2e, [h,f] = -2f, [e,f] = h
    so3   (x, y, z)   [x,y] = z, [y,z] = x, [z,x] = y
    r2    (x, y)      [x,y] = y
    h3    (x, y, z)   [x,y] = z
    n(k)  E_ij, i<j   strictly upper triangular k x k matrices, (i, j) in lexicographic order
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from .exactla import QMatrix, Subspace, solve_linear
from .liecore import LieAlgebra, ad, change_basis, direct_sum
from .tower import Tower, TowerDerivation
from .weights import Representation, adjoint_representation

ZERO = Fraction(0)


def sl2() -> LieAlgebra:
    return LieAlgebra.from_brackets(
        3, {(0, 1): {0: -2}, (0, 2): {1: 1}, (1, 2): {2: -2}}, ["e", "h", "f"]
    )


def so3() -> LieAlgebra:
    return LieAlgebra.from_brackets(
        3, {(0, 1): {2: 1}, (1, 2): {0: 1}, (0, 2): {1: -1}}, ["x", "y", "z"]
    )


def r2() -> LieAlgebra:
    return LieAlgebra.from_brackets(2, {(0, 1): {1: 1}}, ["x", "y"])


def h3() -> LieAlgebra:
    return LieAlgebra.from_brackets(3, {(0, 1): {2: 1}}, ["x", "y", "z"])


def sl2_gaussian() -> LieAlgebra:
    """sl2 over Q(i) seen as a 6-dimensional algebra over Q: basis e, h, f, ie, ih, if.

    Simple over Q but not absolutely simple (its centroid is Q(i)).
    """
    base = sl2()
    constants = []
    # (u, s) with s in {1, i}; [(u, s), (v, t)] = s t [u, v] and i*i = -1
    for i, j, k, c in base.constants:
        constants.append((i, j, k, c))
        constants.append((i + 3, j, k + 3, c))
        constants.append((i, j + 3, k + 3, c))
        constants.append((i + 3, j + 3, k, -c))
    return LieAlgebra(6, constants, ["e", "h", "f", "ie", "ih", "if"])


def abelian(n: int) -> LieAlgebra:
    return LieAlgebra(n, (), [f"a{i}" for i in range(n)])


def sl2_natural_rep() -> Representation:
    E12 = QMatrix([[0, 1], [0, 0]])
    E21 = QMatrix([[0, 0], [1, 0]])
    H = QMatrix.diag([1, -1])
    return Representation(sl2(), [E12, H, E21], 2)


def matrix_lie_algebra(matrices, labels=None):
    """Lie algebra spanned by bracket-closed, linearly independent matrices, with its natural rep."""
    matrices = [m if isinstance(m, QMatrix) else QMatrix(m) for m in matrices]
    n = len(matrices)
    size = matrices[0].nrows if matrices else 0
    span = QMatrix._trusted([m.vec() for m in matrices], size * size)
    if span.rank() != n:
        raise ValueError("matrices are linearly dependent")
    constants = []
    for i in range(n):
        for j in range(i + 1, n):
            c = solve_linear(span, matrices[i].commutator(matrices[j]).vec())
            if c is None:
                raise ValueError(f"commutator of matrices {i} and {j} leaves the span")
            for k, v in enumerate(c):
                if v:
                    constants.append((i, j, k, v))
                    constants.append((j, i, k, -v))
    L = LieAlgebra(n, constants, labels)
    return L, Representation(L, matrices, size)


def strictly_upper(k: int) -> LieAlgebra:
    return strictly_upper_with_rep(k)[0]


def strictly_upper_with_rep(k: int):
    pairs = [(i, j) for i in range(k) for j in range(i + 1, k)]
    mats = [QMatrix.unit(k, i, j) for i, j in pairs]
    return matrix_lie_algebra(mats, [f"E{i + 1}{j + 1}" for i, j in pairs])


def n3() -> LieAlgebra:
    return strictly_upper(3)


def n3_natural_rep() -> Representation:
    return strictly_upper_with_rep(3)[1]


def gl2() -> LieAlgebra:
    mats = [QMatrix.unit(2, 0, 1), QMatrix.diag([1, -1]), QMatrix.unit(2, 1, 0), QMatrix.identity(2)]
    return matrix_lie_algebra(mats, ["e", "h", "f", "c"])[0]


def semidirect(rep: Representation, module_labels=None) -> LieAlgebra:
    """``S + V`` with ``V`` abelian and ``[v, s] = v rho(s)``."""
    S = rep.algebra
    n, m = S.dim, rep.module_dim
    constants = list(S.constants)
    for s in range(n):
        op = rep.operators[s]
        for a in range(m):
            for b, c in enumerate(op.rows[a]):
                if c:
                    constants.append((n + a, s, n + b, c))
                    constants.append((s, n + a, n + b, -c))
    labels = list(S.basis_labels) + list(module_labels or [f"v{a}" for a in range(m)])
    return LieAlgebra(n + m, constants, labels)


def direct_sum_of(*algebras) -> LieAlgebra:
    L = algebras[0]
    for M in algebras[1:]:
        L = direct_sum(L, M)
    return L


def summand(total_dim: int, offset: int, dim: int) -> Subspace:
    """Coordinate subspace spanned by basis vectors ``offset .. offset+dim-1``."""
    I = QMatrix.identity(total_dim)
    return Subspace(total_dim, I.rows[offset:offset + dim])


def sl2_sum(k: int) -> LieAlgebra:
    return direct_sum_of(*[_labelled_sl2(i) for i in range(k)])


def _labelled_sl2(i):
    return LieAlgebra(3, sl2().constants, [f"e{i + 1}", f"h{i + 1}", f"f{i + 1}"])


def _inclusion(m: int, n: int) -> QMatrix:
    return QMatrix._trusted([[Fraction(int(i == j)) for j in range(n)] for i in range(m)], n)


def sl2_sum_tower(levels: int = 5) -> Tower:
    """Level ``k`` (0-based) is the sum of ``k+1`` copies of sl2, embedded as the first summands."""
    algs = [sl2_sum(k + 1) for k in range(levels)]
    embs = [_inclusion(algs[k].dim, algs[k + 1].dim) for k in range(levels - 1)]
    return Tower(algs, embs)


def strictly_upper_tower(start: int = 3, levels: int = 4) -> Tower:
    """``n(start) < n(start+1) < ...`` with ``E_ij`` sent to ``E_ij``."""
    algs = [strictly_upper(start + k) for k in range(levels)]
    embs = []
    for k in range(levels - 1):
        src, dst = algs[k], algs[k + 1]
        rows = []
        for label in src.basis_labels:
            rows.append(dst.basis_vector(dst.basis_labels.index(label)))
        embs.append(QMatrix._trusted(rows, dst.dim))
    return Tower(algs, embs)


def single_level_tower(L: LieAlgebra) -> Tower:
    return Tower([L], [])


def _ad_h_in_summands(L: LieAlgebra, summands):
    x = [ZERO] * L.dim
    for s in summands:
        x[3 * s + 1] += 1
    return ad(L, x)


def summand_derivation(tower: Tower, summand_index: int = 0) -> TowerDerivation:
    """``ad(h)`` of one fixed summand at every level of an sl2-sum tower."""
    return TowerDerivation(
        [_ad_h_in_summands(L, [summand_index]) for L in tower.levels], frozenset({summand_index})
    )


def fresh_derivation(tower: Tower) -> TowerDerivation:
    """At level ``k``, ``ad(h_1 + ... + h_{k+1})``: a new summand joins at every level."""
    return TowerDerivation(
        [_ad_h_in_summands(L, range(L.dim // 3)) for L in tower.levels]
    )


def zero_derivation(tower: Tower) -> TowerDerivation:
    return TowerDerivation([QMatrix.zeros(L.dim) for L in tower.levels], frozenset())


# -- random corpus -------------------------------------------------------------------------


@dataclass(frozen=True)
class CorpusEntry:
    """An algebra together with facts known from how it was built."""

    name: str
    algebra: LieAlgebra
    solvable: bool
    radical: Subspace

    @property
    def semisimple(self) -> bool:
        return self.radical.is_zero()


def random_unimodular(n: int, rng: random.Random, steps: Optional[int] = None) -> QMatrix:
    """Product of random elementary row operations with small integer multipliers."""
    rows = [[Fraction(int(i == j)) for j in range(n)] for i in range(n)]
    if n < 2:
        return QMatrix._trusted(rows, n)
    for _ in range(steps if steps is not None else 3 * n):
        i, j = rng.sample(range(n), 2)
        c = rng.choice([-2, -1, 1, 2])
        rows[i] = [a + c * b for a, b in zip(rows[i], rows[j])]
    perm = list(range(n))
    rng.shuffle(perm)
    return QMatrix._trusted([rows[p] for p in perm], n)


def scramble(entry: CorpusEntry, rng: random.Random) -> CorpusEntry:
    """Same algebra in a random integral basis; the known radical is carried along."""
    P = random_unimodular(entry.algebra.dim, rng)
    L = change_basis(entry.algebra, P, entry.algebra.basis_labels)
    return CorpusEntry(entry.name + "~", L, entry.solvable, entry.radical.image(P.inverse()))


def random_upper_triangular(size: int, rng: random.Random, strict: bool = False) -> QMatrix:
    rows = []
    for i in range(size):
        rows.append([
            Fraction(rng.randint(-3, 3)) if (j > i or (j == i and not strict)) else ZERO
            for j in range(size)
        ])
    return QMatrix._trusted(rows, size)


def random_solvable(rng: random.Random, max_dim: int = 8):
    """Subalgebra of upper triangular matrices generated by random elements, optionally
    extended by its natural module.  Returns ``(algebra, natural rep or None)``."""
    while True:
        size = rng.choice([2, 3, 3, 4])
        gens = [random_upper_triangular(size, rng, strict=rng.random() < 0.3) for _ in range(rng.randint(1, 3))]
        # span of the generated matrix algebra
        vecs = [g.vec() for g in gens]
        span = Subspace(size * size, vecs)
        while True:
            mats = [QMatrix._trusted([b[r * size:(r + 1) * size] for r in range(size)], size) for b in span.basis]
            new = span + Subspace(size * size, [a.commutator(b).vec() for a in mats for b in mats])
            if new == span:
                break
            span = new
        if span.dim == 0:
            continue
        L, rep = matrix_lie_algebra(mats)
        if rng.random() < 0.5 and L.dim + size <= max_dim:
            return semidirect(rep), None
        if L.dim <= max_dim:
            return L, rep


def _simple_pieces():
    return [("sl2", sl2()), ("so3", so3())]


def corpus(seed: int = 0, size: int = 220, max_dim: int = 8) -> list:
    """Catalog fixtures plus seeded random solvable algebras and sums involving simples."""
    rng = random.Random(seed)
    full = lambda L: L.full()
    zero = lambda L: L.zero()
    sl2_v = semidirect(sl2_natural_rep())
    sl2_ad = semidirect(adjoint_representation(sl2()))
    entries = [
        CorpusEntry("sl2", sl2(), False, zero(sl2())),
        CorpusEntry("so3", so3(), False, zero(so3())),
        CorpusEntry("r2", r2(), True, full(r2())),
        CorpusEntry("h3", h3(), True, full(h3())),
        CorpusEntry("n3", n3(), True, full(n3())),
        CorpusEntry("n4", strictly_upper(4), True, full(strictly_upper(4))),
        CorpusEntry("abelian1", abelian(1), True, full(abelian(1))),
        CorpusEntry("abelian4", abelian(4), True, full(abelian(4))),
        CorpusEntry("gl2", gl2(), False, gl2().span([gl2().element(c=1)])),
        CorpusEntry("sl2+sl2", sl2_sum(2), False, zero(sl2_sum(2))),
        CorpusEntry("sl2+so3", direct_sum(sl2(), so3()), False, zero(direct_sum(sl2(), so3()))),
        CorpusEntry("sl2+r2", direct_sum(sl2(), r2()), False, summand(5, 3, 2)),
        CorpusEntry("sl2+h3", direct_sum(sl2(), h3()), False, summand(6, 3, 3)),
        CorpusEntry("so3+r2", direct_sum(so3(), r2()), False, summand(5, 3, 2)),
        CorpusEntry("sl2|V2", sl2_v, False, summand(5, 3, 2)),
        CorpusEntry("sl2|V3", sl2_ad, False, summand(6, 3, 3)),
    ]
    while len(entries) < size:
        roll = rng.random()
        if roll < 0.5:
            L, _ = random_solvable(rng, max_dim)
            entry = CorpusEntry(f"solv{len(entries)}", L, True, full(L))
        elif roll < 0.8:
            name, S = rng.choice(_simple_pieces())
            R, _ = random_solvable(rng, max_dim - 3)
            L = direct_sum(S, R)
            entry = CorpusEntry(f"{name}+solv{len(entries)}", L, False, summand(L.dim, 3, R.dim))
        else:
            picks = [rng.choice(_simple_pieces()) for _ in range(rng.randint(1, 2))]
            L = direct_sum_of(*[S for _, S in picks])
            entry = CorpusEntry("+".join(n for n, _ in picks), L, False, zero(L))
        entries.append(scramble(entry, rng) if rng.random() < 0.7 else entry)
    return entries

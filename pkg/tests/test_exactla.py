from fractions import Fraction

import pytest
import sympy as sp
from hypothesis import given
from hypothesis import strategies as st

from liestruct.errors import DimensionMismatch
from liestruct.exactla import (
    Polynomial,
    QMatrix,
    Subspace,
    char_poly,
    char_poly_with_rational_roots,
    kernel,
    rational_roots,
    rowspace,
    solve_linear,
    to_rational,
    vecmat,
)

from oracles import S, frac, left_kernel, same_span

small = st.fractions(min_value=-5, max_value=5, max_denominator=4)


def matrices(n=None, m=None, max_dim=5):
    def build(shape):
        r, c = shape
        return st.lists(st.lists(small, min_size=c, max_size=c), min_size=r, max_size=r).map(
            lambda rows: QMatrix(rows, c)
        )

    dims = st.tuples(
        st.just(n) if n else st.integers(1, max_dim), st.just(m) if m else st.integers(1, max_dim)
    )
    return dims.flatmap(build)


square = st.integers(1, 5).flatmap(lambda n: matrices(n, n))


# -- rational coercion ---------------------------------------------------------------------


@pytest.mark.parametrize(
    "text, expected",
    [("3", Fraction(3)), ("-1/2", Fraction(-1, 2)), (" 4/6 ", Fraction(2, 3)), (7, Fraction(7))],
)
def test_to_rational_accepts_exact_forms(text, expected):
    assert to_rational(text) == expected


def test_to_rational_rejects_floats_and_zero_denominators():
    with pytest.raises(TypeError):
        to_rational(0.5)
    with pytest.raises(ValueError, match="zero denominator"):
        to_rational("1/0")
    with pytest.raises(ValueError):
        to_rational("one half")


# -- matrices ------------------------------------------------------------------------------


def test_matrix_shape_checks():
    with pytest.raises(DimensionMismatch):
        QMatrix([[1, 2], [3]])
    with pytest.raises(DimensionMismatch):
        QMatrix.identity(2) @ QMatrix.identity(3)


@given(matrices(3, 4), matrices(4, 2))
def test_product_matches_sympy(A, B):
    assert S(A @ B) == S(A) * S(B)


@given(square)
def test_rank_det_match_sympy(A):
    assert A.rank() == S(A).rank()
    assert A.det() == frac(S(A).det())


@given(square)
def test_inverse_when_invertible(A):
    if A.det() == 0:
        with pytest.raises(ZeroDivisionError):
            A.inverse()
    else:
        assert A @ A.inverse() == QMatrix.identity(A.nrows)


def test_powers_and_commutator():
    N = QMatrix([[0, 1, 0], [0, 0, 1], [0, 0, 0]])
    assert (N**2).rows[0] == (0, 0, 1)
    assert (N**3).is_zero()
    assert N**0 == QMatrix.identity(3)
    E, F = QMatrix.unit(2, 0, 1), QMatrix.unit(2, 1, 0)
    assert E.commutator(F) == QMatrix.diag([1, -1])


def test_vecmat_is_row_times_matrix():
    A = QMatrix([[1, 2], [3, 4]])
    assert vecmat((Fraction(1, 2), 1), A) == (Fraction(7, 2), 5)


def test_block_diag_multiplies_blockwise():
    A, B = QMatrix([[1, 2], [0, 1]]), QMatrix([[3]])
    C, D = QMatrix([[0, 1], [1, 0]]), QMatrix([[-1]])
    assert QMatrix.block_diag(A, B) @ QMatrix.block_diag(C, D) == QMatrix.block_diag(A @ C, B @ D)


# -- subspaces -----------------------------------------------------------------------------


@given(matrices(max_dim=5))
def test_rowspace_and_kernel_match_sympy(A):
    R = rowspace(A)
    assert R.dim == S(A).rank()
    assert same_span(R.basis, [list(r) for r in A.rows], A.ncols)
    K = kernel(A)
    assert K.dim == len(left_kernel(S(A)))
    for v in K.basis:
        assert not any(vecmat(v, A))


@given(matrices(max_dim=4))
def test_canonical_basis_is_unique(A):
    # any spanning set of the same space gives the same canonical basis
    R = rowspace(A)
    shuffled = list(reversed([tuple(2 * a for a in r) for r in A.rows]))
    assert Subspace(A.ncols, shuffled) == R


@given(matrices(3, 5), matrices(3, 5))
def test_sum_intersection_dimension_formula(A, B):
    U, V = rowspace(A), rowspace(B)
    assert (U + V).dim + U.intersect(V).dim == U.dim + V.dim
    assert U.intersect(V) <= U and U.intersect(V) <= V
    assert U <= U + V and V <= U + V


def test_coordinates_and_membership():
    U = Subspace(3, [(1, 1, 0), (0, 1, 1)])
    v = (2, 5, 3)
    c = U.coordinates(v)
    assert c is not None and U.combine(c) == tuple(Fraction(a) for a in v)
    assert U.coordinates((1, 0, 0)) is None
    assert (1, 0, 0) not in U


def test_restrict_and_lift_roundtrip():
    A = QMatrix([[2, 1, 0], [0, 2, 0], [0, 0, 5]])
    U = Subspace(3, [(1, 0, 0), (0, 1, 0)])
    assert U.is_invariant(A)
    B = U.restrict(A)
    assert S(B).charpoly().as_expr() == sp.expand((sp.Symbol("lambda") - 2) ** 2)
    assert U.lift(Subspace.full(2)) == U
    with pytest.raises(ValueError):
        Subspace(3, [(0, 0, 1), (1, 0, 0)]).restrict(QMatrix.unit(3, 2, 1))


@given(square, st.lists(small, min_size=5, max_size=5))
def test_solve_linear(A, coeffs):
    x = tuple(coeffs[: A.nrows])
    b = vecmat(x, A)
    y = solve_linear(A, b)
    assert y is not None and vecmat(y, A) == b


def test_solve_linear_reports_inconsistency():
    assert solve_linear(QMatrix([[1, 1], [2, 2]]), (1, 0)) is None


# -- polynomials ---------------------------------------------------------------------------


def test_polynomial_arithmetic():
    x = Polynomial.x()
    p = (x - 1) * (x + 2)
    assert p == Polynomial((-2, 1, 1))
    q, r = divmod(p, x - 1)
    assert q == x + 2 and r.is_zero()
    assert p(Fraction(1, 2)) == Fraction(-5, 4)
    assert ((x - 1) ** 2).gcd(p) == x - 1
    assert str(x**2 - 1) == "λ^2 - 1"


@given(square, small)
def test_char_poly_matches_determinant_at_sample_points(A, t):
    # det(t I - A) evaluated independently
    p = char_poly(A)
    M = sp.Rational(t.numerator, t.denominator) * sp.eye(A.nrows) - S(A)
    assert p(t) == frac(M.det())
    assert p.degree == A.nrows and p.leading == 1


@given(square)
def test_char_poly_is_similarity_invariant(A):
    P = QMatrix([[1, 2, 0, 0, 1], [0, 1, 3, 0, 0], [0, 0, 1, -1, 0], [0, 0, 0, 1, 2], [0, 0, 0, 0, 1]])
    n = A.nrows
    P = QMatrix([r[:n] for r in P.rows[:n]])
    assert char_poly(P.inverse() @ A @ P) == char_poly(A)


def test_matrix_satisfies_its_characteristic_polynomial():
    A = QMatrix([[1, 2, 0], [3, -1, 4], [0, 1, 1]])
    assert char_poly(A).at_matrix(A).is_zero()


@given(st.lists(st.fractions(min_value=-6, max_value=6, max_denominator=3), min_size=1, max_size=5))
def test_rational_roots_recovers_constructed_roots(roots):
    x = Polynomial.x()
    irreducible = x**2 + 2  # no rational roots
    p = irreducible
    for r in roots:
        p = p * (x - Polynomial.constant(r))
    found, cofactor = rational_roots(p)
    expected = sorted({r: roots.count(r) for r in roots}.items())
    assert found == expected
    assert cofactor == irreducible


def test_rational_roots_of_companion_matrix():
    # lambda^3 - 3 lambda - 2 = (lambda - 2)(lambda + 1)^2
    A = QMatrix([[0, 1, 0], [0, 0, 1], [2, 3, 0]])
    _, roots, cofactor = char_poly_with_rational_roots(A)
    assert roots == [(-1, 2), (2, 1)]
    assert cofactor.degree == 0

"""Exact rational linear algebra.

Everything here works over :class:`fractions.Fraction`.  Vectors are rows and
matrices act on the right (``x -> x A``), so ``A @ B`` means "first A, then B".

The objects are immutable once built:

* :class:`QMatrix` -- dense rational matrix.
* :class:`Subspace` -- a subspace of ``Q^n`` held by its reduced row-echelon
  basis, so equal subspaces compare (and hash) equal.
* :class:`Polynomial` -- univariate polynomial, lowest degree coefficient first.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd, lcm
from typing import Iterable, Optional, Sequence

from sympy import divisors

from .errors import DimensionMismatch

Rational = Fraction

__all__ = [
    "Rational",
    "to_rational",
    "format_rational",
    "QMatrix",
    "Subspace",
    "Polynomial",
    "vecmat",
    "canonicalize",
    "solve_linear",
    "kernel",
    "rowspace",
    "char_poly",
    "rational_roots",
    "char_poly_with_rational_roots",
]

ZERO = Fraction(0)
ONE = Fraction(1)


def to_rational(value) -> Fraction:
    """Coerce ints, Fractions and ``"p/q"`` strings; floats are rejected."""
    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool) or isinstance(value, float):
        raise TypeError(f"refusing inexact value {value!r}")
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        text = value.strip()
        num, sep, den = text.partition("/")
        try:
            n = int(num)
            d = int(den) if sep else 1
        except ValueError:
            raise ValueError(f"not a rational literal: {value!r}") from None
        if d == 0:
            raise ValueError(f"zero denominator in {value!r}")
        return Fraction(n, d)
    raise TypeError(f"cannot interpret {value!r} as a rational")


def format_rational(q: Fraction) -> str:
    return str(q)


def _common_denominator(values) -> int:
    return lcm(*(x.denominator for x in values))


def _integer_form(A: "QMatrix"):
    """``(integer rows, d)`` with ``A == rows / d``; cached on the matrix."""
    if A._ints is None:
        d = _common_denominator(x for r in A.rows for x in r)
        A._ints = ([[x.numerator * (d // x.denominator) for x in r] for r in A.rows], d)
    return A._ints


def vecmat(v: Sequence[Fraction], A: "QMatrix") -> tuple:
    """Row vector times matrix."""
    if len(v) != A.nrows:
        raise DimensionMismatch(f"vector of length {len(v)} against {A.nrows} rows")
    rows, da = _integer_form(A)
    dv = _common_denominator(v)
    acc = [0] * A.ncols
    for vi, row in zip(v, rows):
        if vi:
            k = vi.numerator * (dv // vi.denominator)
            for j, a in enumerate(row):
                if a:
                    acc[j] += k * a
    d = dv * da
    return tuple(Fraction(x, d) if x else ZERO for x in acc)


def _axpy(a, x, y):
    """Return y + a*x for equal-length sequences."""
    return [yi + a * xi if xi else yi for xi, yi in zip(x, y)]


class QMatrix:
    __slots__ = ("rows", "nrows", "ncols", "_ints")

    def __init__(self, rows: Iterable[Iterable], ncols: Optional[int] = None):
        rows = tuple(tuple(to_rational(v) for v in r) for r in rows)
        if ncols is None:
            if not rows:
                raise DimensionMismatch("column count is ambiguous for a matrix with no rows")
            ncols = len(rows[0])
        for i, r in enumerate(rows):
            if len(r) != ncols:
                raise DimensionMismatch(f"row {i} has {len(r)} entries, expected {ncols}")
        self.rows = rows
        self.nrows = len(rows)
        self.ncols = ncols
        self._ints = None

    @classmethod
    def _trusted(cls, rows, ncols):
        m = cls.__new__(cls)
        m.rows = tuple(tuple(r) for r in rows)
        m.nrows = len(m.rows)
        m.ncols = ncols
        m._ints = None
        return m

    @classmethod
    def zeros(cls, nrows: int, ncols: Optional[int] = None) -> "QMatrix":
        ncols = nrows if ncols is None else ncols
        return cls._trusted([[ZERO] * ncols for _ in range(nrows)], ncols)

    @classmethod
    def identity(cls, n: int) -> "QMatrix":
        return cls.diag([ONE] * n)

    @classmethod
    def diag(cls, entries) -> "QMatrix":
        entries = [to_rational(e) for e in entries]
        n = len(entries)
        rows = [[ZERO] * n for _ in range(n)]
        for i, e in enumerate(entries):
            rows[i][i] = e
        return cls._trusted(rows, n)

    @classmethod
    def unit(cls, n: int, i: int, j: int) -> "QMatrix":
        """Matrix unit E_ij (0-based)."""
        rows = [[ZERO] * n for _ in range(n)]
        rows[i][j] = ONE
        return cls._trusted(rows, n)

    @classmethod
    def block_diag(cls, *blocks: "QMatrix") -> "QMatrix":
        n = sum(b.nrows for b in blocks)
        m = sum(b.ncols for b in blocks)
        rows = []
        off = 0
        for b in blocks:
            for r in b.rows:
                rows.append([ZERO] * off + list(r) + [ZERO] * (m - off - b.ncols))
            off += b.ncols
        return cls._trusted(rows, m)

    @classmethod
    def hstack(cls, mats: Sequence["QMatrix"], nrows: Optional[int] = None) -> "QMatrix":
        if not mats:
            if nrows is None:
                raise DimensionMismatch("empty hstack needs an explicit row count")
            return cls._trusted([() for _ in range(nrows)], 0)
        n = mats[0].nrows
        if any(m.nrows != n for m in mats):
            raise DimensionMismatch("hstack of matrices with different row counts")
        rows = [sum((m.rows[i] for m in mats), ()) for i in range(n)]
        return cls._trusted(rows, sum(m.ncols for m in mats))

    @classmethod
    def vstack(cls, mats: Sequence["QMatrix"], ncols: Optional[int] = None) -> "QMatrix":
        if not mats:
            if ncols is None:
                raise DimensionMismatch("empty vstack needs an explicit column count")
            return cls._trusted([], ncols)
        c = mats[0].ncols
        if any(m.ncols != c for m in mats):
            raise DimensionMismatch("vstack of matrices with different column counts")
        return cls._trusted([r for m in mats for r in m.rows], c)

    @property
    def shape(self):
        return (self.nrows, self.ncols)

    @property
    def is_square(self) -> bool:
        return self.nrows == self.ncols

    @property
    def T(self) -> "QMatrix":
        return QMatrix._trusted(zip(*self.rows) if self.nrows else [() for _ in range(self.ncols)], self.nrows)

    def __getitem__(self, idx):
        if isinstance(idx, tuple):
            i, j = idx
            return self.rows[i][j]
        return self.rows[idx]

    def __eq__(self, other):
        if not isinstance(other, QMatrix):
            return NotImplemented
        return self.shape == other.shape and self.rows == other.rows

    def __hash__(self):
        return hash((self.nrows, self.ncols, self.rows))

    def __repr__(self):
        body = ", ".join("[" + ", ".join(str(x) for x in r) + "]" for r in self.rows)
        return f"QMatrix([{body}])"

    def _check_same(self, other):
        if self.shape != other.shape:
            raise DimensionMismatch(f"shapes {self.shape} and {other.shape} differ")

    def __add__(self, other: "QMatrix") -> "QMatrix":
        self._check_same(other)
        return QMatrix._trusted(
            ([a + b for a, b in zip(r, s)] for r, s in zip(self.rows, other.rows)), self.ncols
        )

    def __sub__(self, other: "QMatrix") -> "QMatrix":
        self._check_same(other)
        return QMatrix._trusted(
            ([a - b for a, b in zip(r, s)] for r, s in zip(self.rows, other.rows)), self.ncols
        )

    def __neg__(self) -> "QMatrix":
        return QMatrix._trusted(([-a for a in r] for r in self.rows), self.ncols)

    def __mul__(self, scalar) -> "QMatrix":
        if isinstance(scalar, QMatrix):
            raise TypeError("use @ for matrix products")
        s = to_rational(scalar)
        return QMatrix._trusted(([s * a for a in r] for r in self.rows), self.ncols)

    __rmul__ = __mul__

    def __matmul__(self, other: "QMatrix") -> "QMatrix":
        if self.ncols != other.nrows:
            raise DimensionMismatch(f"cannot multiply {self.shape} by {other.shape}")
        return QMatrix._trusted((vecmat(r, other) for r in self.rows), other.ncols)

    def __pow__(self, k: int) -> "QMatrix":
        if not self.is_square or k < 0:
            raise ValueError("matrix power needs a square matrix and k >= 0")
        result = QMatrix.identity(self.nrows)
        base = self
        while k:
            if k & 1:
                result = result @ base
            k >>= 1
            if k:
                base = base @ base
        return result

    def commutator(self, other: "QMatrix") -> "QMatrix":
        return self @ other - other @ self

    def trace(self) -> Fraction:
        if not self.is_square:
            raise DimensionMismatch("trace of a non-square matrix")
        return sum((self.rows[i][i] for i in range(self.nrows)), ZERO)

    def is_zero(self) -> bool:
        return all(not a for r in self.rows for a in r)

    def is_symmetric(self) -> bool:
        return self.is_square and self == self.T

    def rank(self) -> int:
        return len(_rref(self.rows, self.ncols)[1])

    def det(self) -> Fraction:
        if not self.is_square:
            raise DimensionMismatch("determinant of a non-square matrix")
        m = [list(r) for r in self.rows]
        n = self.nrows
        det = ONE
        for c in range(n):
            p = next((i for i in range(c, n) if m[i][c]), None)
            if p is None:
                return ZERO
            if p != c:
                m[c], m[p] = m[p], m[c]
                det = -det
            pivot = m[c][c]
            det *= pivot
            for i in range(c + 1, n):
                f = m[i][c]
                if f:
                    m[i] = _axpy(-f / pivot, m[c], m[i])
        return det

    def inverse(self) -> "QMatrix":
        n = self.nrows
        if not self.is_square:
            raise DimensionMismatch("inverse of a non-square matrix")
        aug = [list(r) + [ONE if i == j else ZERO for j in range(n)] for i, r in enumerate(self.rows)]
        red, piv = _rref(aug, 2 * n)
        if piv[:n] != list(range(n)) or len(piv) < n:
            raise ZeroDivisionError("matrix is singular")
        return QMatrix._trusted((r[n:] for r in red[:n]), n)

    def vec(self) -> tuple:
        """Row-major flattening."""
        return tuple(a for r in self.rows for a in r)

    def tolist(self) -> list:
        return [list(r) for r in self.rows]


def _integer_row(r):
    """Clear denominators; returns a primitive integer row (all-zero stays zero)."""
    den = 1
    for x in r:
        d = x.denominator
        if d != 1:
            den = den * d // gcd(den, d)
    out = [x.numerator * (den // x.denominator) for x in r]
    g = gcd(*out)
    if g > 1:
        out = [x // g for x in out]
    return out


def _rref(rows, ncols):
    """Gauss-Jordan elimination; returns (nonzero reduced rows, pivot columns).

    Works fraction-free on integer rows (kept primitive) and only divides by
    the pivots at the end.
    """
    m = [_integer_row(r) for r in rows]
    m = [r for r in m if any(r)]
    pivots = []
    r = 0
    nrows = len(m)
    for c in range(ncols):
        if r == nrows:
            break
        p = next((i for i in range(r, nrows) if m[i][c]), None)
        if p is None:
            continue
        m[r], m[p] = m[p], m[r]
        pr = m[r]
        lead = pr[c]
        for i in range(nrows):
            if i != r:
                row = m[i]
                f = row[c]
                if f:
                    g = gcd(lead, f)
                    a, b = lead // g, f // g
                    row = [a * x - b * y for x, y in zip(row, pr)]
                    h = gcd(*row)
                    if h > 1:
                        row = [x // h for x in row]
                    m[i] = row
        pivots.append(c)
        r += 1
    out = []
    for row, c in zip(m[:r], pivots):
        lead = row[c]
        out.append(tuple(Fraction(x, lead) if x else ZERO for x in row))
    return out, pivots


class Subspace:
    """Subspace of ``Q^ambient_dim`` stored by its reduced row-echelon basis."""

    __slots__ = ("ambient_dim", "basis", "pivots", "_mat")

    def __init__(self, ambient_dim: int, basis=(), *, _canonical=False):
        if _canonical:
            self.ambient_dim = ambient_dim
            self.basis = tuple(basis)
            self.pivots = tuple(next(j for j, a in enumerate(b) if a) for b in self.basis)
            self._mat = None
            return
        vectors = [tuple(to_rational(a) for a in v) for v in basis]
        for v in vectors:
            if len(v) != ambient_dim:
                raise DimensionMismatch(f"vector of length {len(v)} in ambient dimension {ambient_dim}")
        red, piv = _rref(vectors, ambient_dim)
        self.ambient_dim = ambient_dim
        self.basis = tuple(red)
        self.pivots = tuple(piv)
        self._mat = None

    @classmethod
    def zero(cls, n: int) -> "Subspace":
        return cls(n, (), _canonical=True)

    @classmethod
    def full(cls, n: int) -> "Subspace":
        return cls(n, QMatrix.identity(n).rows, _canonical=True)

    @property
    def dim(self) -> int:
        return len(self.basis)

    def is_zero(self) -> bool:
        return not self.basis

    def is_full(self) -> bool:
        return self.dim == self.ambient_dim

    def __len__(self):
        return self.dim

    def __iter__(self):
        return iter(self.basis)

    def __eq__(self, other):
        if not isinstance(other, Subspace):
            return NotImplemented
        return self.ambient_dim == other.ambient_dim and self.basis == other.basis

    def __hash__(self):
        return hash((self.ambient_dim, self.basis))

    def __repr__(self):
        vecs = ", ".join("(" + ", ".join(str(a) for a in b) + ")" for b in self.basis)
        return f"Subspace({self.ambient_dim}, [{vecs}])"

    def _check(self, other: "Subspace"):
        if self.ambient_dim != other.ambient_dim:
            raise DimensionMismatch(
                f"ambient dimensions {self.ambient_dim} and {other.ambient_dim} differ"
            )

    def coordinates(self, v) -> Optional[tuple]:
        """Coordinates of ``v`` in the canonical basis, or None if v is outside."""
        if len(v) != self.ambient_dim:
            raise DimensionMismatch(f"vector of length {len(v)} in ambient dimension {self.ambient_dim}")
        coords = tuple(to_rational(v[p]) for p in self.pivots)
        if self.combine(coords) != tuple(to_rational(a) for a in v):
            return None
        return coords

    def combine(self, coords) -> tuple:
        """The vector with the given coordinates in the canonical basis."""
        if not self.basis:
            return (ZERO,) * self.ambient_dim
        return vecmat(coords, self.as_matrix())

    def contains(self, v) -> bool:
        return self.coordinates(v) is not None

    __contains__ = contains

    def __le__(self, other: "Subspace") -> bool:
        self._check(other)
        return all(other.contains(b) for b in self.basis)

    def __ge__(self, other: "Subspace") -> bool:
        return other <= self

    def __lt__(self, other: "Subspace") -> bool:
        return self.dim < other.dim and self <= other

    def __add__(self, other: "Subspace") -> "Subspace":
        self._check(other)
        return Subspace(self.ambient_dim, self.basis + other.basis)

    def intersect(self, other: "Subspace") -> "Subspace":
        self._check(other)
        if self.is_zero() or other.is_zero():
            return Subspace.zero(self.ambient_dim)
        # (a, b) with a.U = b.V
        stacked = QMatrix._trusted(
            list(self.basis) + [[-x for x in v] for v in other.basis], self.ambient_dim
        )
        k = kernel(stacked)
        return Subspace(self.ambient_dim, [self.combine(w[: self.dim]) for w in k.basis])

    def as_matrix(self) -> QMatrix:
        if self._mat is None:
            self._mat = QMatrix._trusted(self.basis, self.ambient_dim)
        return self._mat

    def image(self, A: QMatrix) -> "Subspace":
        """Span of ``u A`` over the basis."""
        if A.nrows != self.ambient_dim:
            raise DimensionMismatch("operator does not act on this ambient space")
        return Subspace(A.ncols, [vecmat(b, A) for b in self.basis])

    def is_invariant(self, A: QMatrix) -> bool:
        return all(self.contains(vecmat(b, A)) for b in self.basis)

    def restrict(self, A: QMatrix) -> QMatrix:
        """Matrix of ``A`` restricted to this (A-invariant) subspace, in the canonical basis."""
        rows = []
        for b in self.basis:
            c = self.coordinates(vecmat(b, A))
            if c is None:
                raise ValueError("subspace is not invariant under the operator")
            rows.append(c)
        return QMatrix._trusted(rows, self.dim)

    def lift(self, sub: "Subspace") -> "Subspace":
        """Map a subspace given in this subspace's coordinates back to the ambient space."""
        if sub.ambient_dim != self.dim:
            raise DimensionMismatch("coordinate subspace has the wrong ambient dimension")
        return Subspace(self.ambient_dim, [self.combine(c) for c in sub.basis])


def canonicalize(vectors, ambient_dim: int) -> Subspace:
    """Reduced row-echelon canonical form of the span of ``vectors``."""
    return Subspace(ambient_dim, list(vectors))


def rowspace(A: QMatrix) -> Subspace:
    return Subspace(A.ncols, A.rows)


def kernel(A: QMatrix) -> Subspace:
    """Left null space ``{x : x A = 0}``."""
    n = A.nrows
    red, piv = _rref(A.T.rows, n)
    pivset = set(piv)
    free = [j for j in range(n) if j not in pivset]
    basis = []
    for f in free:
        x = [ZERO] * n
        x[f] = ONE
        for row, p in zip(red, piv):
            x[p] = -row[f]
        basis.append(x)
    return Subspace(n, basis)


def solve_linear(A: QMatrix, b) -> Optional[tuple]:
    """One solution ``x`` of ``x A = b``, or None if the system is inconsistent."""
    b = [to_rational(v) for v in b]
    if len(b) != A.ncols:
        raise DimensionMismatch(f"right-hand side of length {len(b)} for a {A.shape} system")
    n = A.nrows
    aug = [list(col) + [rhs] for col, rhs in zip(A.T.rows if n else [()] * A.ncols, b)]
    red, piv = _rref(aug, n + 1)
    if piv and piv[-1] == n:
        return None
    x = [ZERO] * n
    for row, p in zip(red, piv):
        x[p] = row[n]
    return tuple(x)


class Polynomial:
    """Univariate rational polynomial; ``coeffs[i]`` multiplies ``lambda**i``."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable = ()):
        c = [to_rational(a) for a in coeffs]
        while c and not c[-1]:
            c.pop()
        self.coeffs = tuple(c)

    @classmethod
    def x(cls) -> "Polynomial":
        return cls((0, 1))

    @classmethod
    def constant(cls, a) -> "Polynomial":
        return cls((a,))

    @classmethod
    def linear_factor(cls, root) -> "Polynomial":
        """``lambda - root``."""
        return cls((-to_rational(root), 1))

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def leading(self) -> Fraction:
        return self.coeffs[-1] if self.coeffs else ZERO

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = Polynomial.constant(other)
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __repr__(self):
        return f"Polynomial({self})"

    def __str__(self):
        if not self.coeffs:
            return "0"
        terms = []
        for i in range(self.degree, -1, -1):
            c = self.coeffs[i]
            if not c:
                continue
            mono = "" if i == 0 else ("λ" if i == 1 else f"λ^{i}")
            if mono and c == 1:
                s = mono
            elif mono and c == -1:
                s = "-" + mono
            elif mono:
                s = f"{c}*{mono}" if c.denominator == 1 else f"({c})*{mono}"
            else:
                s = str(c)
            terms.append(s)
        out = terms[0]
        for t in terms[1:]:
            out += " - " + t[1:] if t.startswith("-") else " + " + t
        return out

    def __add__(self, other):
        other = _as_poly(other)
        n = max(len(self.coeffs), len(other.coeffs))
        a = self.coeffs + (ZERO,) * (n - len(self.coeffs))
        b = other.coeffs + (ZERO,) * (n - len(other.coeffs))
        return Polynomial(x + y for x, y in zip(a, b))

    __radd__ = __add__

    def __neg__(self):
        return Polynomial(-a for a in self.coeffs)

    def __sub__(self, other):
        return self + (-_as_poly(other))

    def __rsub__(self, other):
        return _as_poly(other) - self

    def __mul__(self, other):
        other = _as_poly(other)
        if self.is_zero() or other.is_zero():
            return Polynomial()
        out = [ZERO] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
        return Polynomial(out)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        result = Polynomial.constant(1)
        for _ in range(k):
            result = result * self
        return result

    def __divmod__(self, other):
        other = _as_poly(other)
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self.coeffs)
        q = [ZERO] * max(len(rem) - len(other.coeffs) + 1, 0)
        lead = other.leading
        d = other.degree
        for i in range(len(q) - 1, -1, -1):
            c = rem[i + d] / lead
            q[i] = c
            if c:
                for j, b in enumerate(other.coeffs):
                    rem[i + j] -= c * b
        return Polynomial(q), Polynomial(rem[:d] if d > 0 else [])

    def __floordiv__(self, other):
        return divmod(self, other)[0]

    def __mod__(self, other):
        return divmod(self, other)[1]

    def __call__(self, value):
        if isinstance(value, QMatrix):
            return self.at_matrix(value)
        v = to_rational(value)
        acc = ZERO
        for c in reversed(self.coeffs):
            acc = acc * v + c
        return acc

    def at_matrix(self, A: QMatrix) -> QMatrix:
        """Evaluate at a square matrix by Horner's scheme."""
        n = A.nrows
        if not A.is_square:
            raise DimensionMismatch("polynomial evaluated at a non-square matrix")
        acc = QMatrix.zeros(n)
        ident = QMatrix.identity(n)
        for c in reversed(self.coeffs):
            acc = acc @ A + ident * c
        return acc

    def monic(self) -> "Polynomial":
        if self.is_zero():
            return self
        lead = self.leading
        return Polynomial(a / lead for a in self.coeffs)

    def derivative(self) -> "Polynomial":
        return Polynomial(i * a for i, a in enumerate(self.coeffs) if i)

    def gcd(self, other: "Polynomial") -> "Polynomial":
        a, b = self, _as_poly(other)
        while not b.is_zero():
            a, b = b, a % b
        return a.monic()

    def primitive_integer_coeffs(self) -> list:
        """Coprime integer coefficients proportional to ``coeffs`` (positive leading term)."""
        if self.is_zero():
            return []
        den = lcm(*(a.denominator for a in self.coeffs))
        ints = [int(a * den) for a in self.coeffs]
        g = 0
        for v in ints:
            g = gcd(g, v)
        ints = [v // g for v in ints]
        if ints[-1] < 0:
            ints = [-v for v in ints]
        return ints


def _as_poly(p) -> Polynomial:
    if isinstance(p, Polynomial):
        return p
    return Polynomial.constant(p)


def char_poly(A: QMatrix) -> Polynomial:
    """``det(lambda I - A)`` via reduction to upper Hessenberg form."""
    if not A.is_square:
        raise DimensionMismatch("characteristic polynomial of a non-square matrix")
    n = A.nrows
    H = [list(r) for r in A.rows]
    for m in range(1, n - 1):
        piv = next((i for i in range(m, n) if H[i][m - 1]), None)
        if piv is None:
            continue
        if piv != m:
            H[piv], H[m] = H[m], H[piv]
            for row in H:
                row[piv], row[m] = row[m], row[piv]
        t = H[m][m - 1]
        for i in range(m + 1, n):
            u = H[i][m - 1] / t
            if u:
                H[i] = _axpy(-u, H[m], H[i])
                for row in H:
                    if row[i]:
                        row[m] += u * row[i]
    polys = [Polynomial.constant(1)]
    for m in range(1, n + 1):
        pm = Polynomial((-H[m - 1][m - 1], 1)) * polys[m - 1]
        prod = ONE
        for i in range(m - 1, 0, -1):
            prod *= H[i][i - 1]
            if not prod:
                break
            h = H[i - 1][m - 1]
            if h:
                pm = pm - polys[i - 1] * (h * prod)
        polys.append(pm)
    return polys[n]


def _int_eval_zero(ints, p, q) -> bool:
    """Is p/q a root of the integer polynomial ``ints``?  (exact, integer-only)"""
    deg = len(ints) - 1
    acc = 0
    for i, a in enumerate(ints):
        acc += a * p**i * q ** (deg - i)
    return acc == 0


def rational_roots(poly: Polynomial):
    """Rational roots with multiplicities, and the cofactor free of rational roots.

    Returns ``(roots, cofactor)`` where ``roots`` is a list of ``(root, multiplicity)``
    sorted by root and ``poly == cofactor * prod (lambda - r)**m``.
    """
    if poly.is_zero():
        raise ValueError("the zero polynomial has every number as a root")
    roots = []
    rest = poly
    zeros = next(i for i, a in enumerate(rest.coeffs) if a)
    if zeros:
        roots.append((ZERO, zeros))
        rest = Polynomial(rest.coeffs[zeros:])
    if rest.degree >= 1:
        # roots of the squarefree part coincide and its coefficients are smaller
        squarefree = rest // rest.gcd(rest.derivative())
        ints = squarefree.primitive_integer_coeffs()
        a0, an = ints[0], ints[-1]
        found = []
        for q in divisors(abs(an)):
            for p in divisors(abs(a0)):
                if gcd(p, q) != 1:
                    continue
                for s in (p, -p):
                    if _int_eval_zero(ints, s, q):
                        found.append(Fraction(s, q))
        for r in sorted(found):
            lin = Polynomial.linear_factor(r)
            mult = 0
            while True:
                quo, rem = divmod(rest, lin)
                if not rem.is_zero():
                    break
                rest = quo
                mult += 1
            roots.append((r, mult))
    roots.sort()
    return roots, rest


def char_poly_with_rational_roots(A: QMatrix):
    """``(char_poly, [(root, multiplicity)], rootless_cofactor)`` for square ``A``."""
    p = char_poly(A)
    roots, cofactor = rational_roots(p)
    return p, roots, cofactor

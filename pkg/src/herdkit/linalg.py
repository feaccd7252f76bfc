"""Exact linear algebra over the rationals and prime fields.

Vectors are column vectors; a linear map V -> W is a (dim W) x (dim V) matrix.
Tensor index convention: basis element (i, j) of M (x) N sits at i*dim(N) + j,
and longer products nest to the left, which makes the index lexicographic.
"""

from __future__ import annotations

import itertools
import math
import re
from dataclasses import dataclass
from fractions import Fraction

from .errors import InputError


def _is_prime(p: int) -> bool:
    if p < 2:
        return False
    if p % 2 == 0:
        return p == 2
    for d in range(3, math.isqrt(p) + 1, 2):
        if p % d == 0:
            return False
    return True


def _norm(x):
    if type(x) is Fraction and x.denominator == 1:
        return x.numerator
    return x


@dataclass(frozen=True)
class Field:
    """The rationals (p = 0) or the prime field F_p."""

    p: int = 0

    def __post_init__(self):
        if self.p and (not _is_prime(self.p) or self.p >= 2**31):
            raise InputError(f"characteristic {self.p} is not a prime below 2^31")

    @classmethod
    def rationals(cls) -> Field:
        return cls(0)

    @classmethod
    def prime(cls, p: int) -> Field:
        return cls(int(p))

    @classmethod
    def parse(cls, text) -> Field:
        if isinstance(text, Field):
            return text
        s = str(text).strip()
        if s.upper() in ("Q", "QQ", "RATIONALS"):
            return cls.rationals()
        m = re.fullmatch(r"(?:F_?|GF\()(\d+)\)?", s, flags=re.IGNORECASE)
        if m:
            return cls.prime(int(m.group(1)))
        raise InputError(f"unknown field {text!r}; use 'Q' or 'F<p>'")

    @property
    def kind(self) -> str:
        return "prime-field" if self.p else "rationals"

    @property
    def characteristic(self) -> int:
        return self.p

    @property
    def name(self) -> str:
        return f"F{self.p}" if self.p else "Q"

    def __str__(self):
        return self.name

    def __call__(self, x):
        """Coerce an int, Fraction or string like '3/4' into the field."""
        if isinstance(x, bool):
            raise InputError(f"not a field element: {x!r}")
        if isinstance(x, str):
            try:
                x = Fraction(x.strip())
            except (ValueError, ZeroDivisionError):
                raise InputError(f"not a field element: {x!r}") from None
        if isinstance(x, int):
            return x % self.p if self.p else x
        if isinstance(x, Fraction):
            if self.p:
                den = x.denominator % self.p
                if den == 0:
                    raise InputError(f"{x} has no image in {self.name}")
                return x.numerator * pow(den, -1, self.p) % self.p
            return _norm(x)
        raise InputError(f"not a field element: {x!r}")

    def inv(self, x):
        if not x:
            raise ZeroDivisionError("inverse of zero")
        if self.p:
            return pow(x, -1, self.p)
        return _norm(Fraction(1) / x)

    def div(self, x, y):
        return self.mul(x, self.inv(y))

    def mul(self, x, y):
        return x * y % self.p if self.p else _norm(x * y)

    def add(self, x, y):
        return (x + y) % self.p if self.p else _norm(x + y)

    def sub(self, x, y):
        return (x - y) % self.p if self.p else _norm(x - y)

    def neg(self, x):
        return -x % self.p if self.p else -x

    def fmt(self, x) -> str:
        return str(_norm(x)) if not self.p else str(x)

    def elements(self):
        if not self.p:
            raise InputError("the rationals cannot be enumerated")
        return range(self.p)

    def sqrt(self, x):
        """A square root of x in the field, or None."""
        if self.p:
            for y in range(self.p):
                if y * y % self.p == x % self.p:
                    return y
            return None
        x = Fraction(x)
        if x < 0:
            return None
        n, d = math.isqrt(x.numerator), math.isqrt(x.denominator)
        if n * n == x.numerator and d * d == x.denominator:
            return _norm(Fraction(n, d))
        return None


class Matrix:
    """Dense immutable matrix with exact entries."""

    __slots__ = ("field", "nrows", "ncols", "rows")

    def __init__(self, field: Field, rows, ncols: int | None = None):
        self.field = field
        self.rows = tuple(tuple(r) for r in rows)
        self.nrows = len(self.rows)
        if ncols is None:
            ncols = len(self.rows[0]) if self.rows else 0
        self.ncols = ncols
        for r in self.rows:
            if len(r) != ncols:
                raise InputError("ragged matrix rows")

    # constructors

    @classmethod
    def from_rows(cls, field: Field, rows, ncols: int | None = None) -> Matrix:
        return cls(field, [[field(x) for x in r] for r in rows], ncols)

    @classmethod
    def from_columns(cls, field: Field, cols, nrows: int) -> Matrix:
        cols = [tuple(c) for c in cols]
        return cls(field, [[c[i] for c in cols] for i in range(nrows)], len(cols))

    @classmethod
    def zeros(cls, field: Field, nrows: int, ncols: int) -> Matrix:
        return cls(field, [(0,) * ncols] * nrows, ncols)

    @classmethod
    def identity(cls, field: Field, n: int) -> Matrix:
        return cls(field, [tuple(1 if i == j else 0 for j in range(n)) for i in range(n)], n)

    @classmethod
    def column(cls, field: Field, vec) -> Matrix:
        return cls(field, [(x,) for x in vec], 1)

    @classmethod
    def unit_column(cls, field: Field, n: int, i: int) -> Matrix:
        return cls(field, [((1,) if j == i else (0,)) for j in range(n)], 1)

    # basic access

    @property
    def shape(self):
        return (self.nrows, self.ncols)

    @property
    def entries(self):
        return tuple(x for r in self.rows for x in r)

    def col(self, j: int) -> tuple:
        return tuple(r[j] for r in self.rows)

    def columns(self):
        return [self.col(j) for j in range(self.ncols)]

    def row(self, i: int) -> tuple:
        return self.rows[i]

    def __getitem__(self, ij):
        i, j = ij
        return self.rows[i][j]

    def __eq__(self, other):
        if not isinstance(other, Matrix):
            return NotImplemented
        return self.shape == other.shape and self.rows == other.rows

    def __hash__(self):
        return hash((self.shape, self.rows))

    def __repr__(self):
        body = "; ".join(" ".join(self.field.fmt(x) for x in r) for r in self.rows)
        return f"Matrix<{self.field.name} {self.nrows}x{self.ncols}>[{body}]"

    def to_strings(self):
        return [[self.field.fmt(x) for x in r] for r in self.rows]

    def is_zero(self) -> bool:
        return not any(x for r in self.rows for x in r)

    def is_identity(self) -> bool:
        return self.nrows == self.ncols and self == Matrix.identity(self.field, self.nrows)

    # arithmetic

    def _check_same(self, other):
        if self.shape != other.shape:
            raise InputError(f"shape mismatch {self.shape} vs {other.shape}")

    def __add__(self, other: Matrix) -> Matrix:
        self._check_same(other)
        p = self.field.p
        if p:
            rows = [[(a + b) % p for a, b in zip(r, s)] for r, s in zip(self.rows, other.rows)]
        else:
            rows = [[_norm(a + b) for a, b in zip(r, s)] for r, s in zip(self.rows, other.rows)]
        return Matrix(self.field, rows, self.ncols)

    def __neg__(self) -> Matrix:
        p = self.field.p
        return Matrix(self.field, [[(-a) % p if p else -a for a in r] for r in self.rows], self.ncols)

    def __sub__(self, other: Matrix) -> Matrix:
        return self + (-other)

    def scale(self, c) -> Matrix:
        f = self.field
        return Matrix(f, [[f.mul(c, a) for a in r] for r in self.rows], self.ncols)

    def __matmul__(self, other: Matrix) -> Matrix:
        if self.ncols != other.nrows:
            raise InputError(f"shape mismatch {self.shape} @ {other.shape}")
        p = self.field.p
        n = other.ncols
        sparse = [[(j, y) for j, y in enumerate(row) if y] for row in other.rows]
        out = []
        for r in self.rows:
            acc = [0] * n
            for k, a in enumerate(r):
                if a:
                    for j, y in sparse[k]:
                        acc[j] += a * y
            if p:
                acc = [x % p for x in acc]
            else:
                acc = [_norm(x) for x in acc]
            out.append(acc)
        return Matrix(self.field, out, n)

    def apply(self, vec) -> tuple:
        return (self @ Matrix.column(self.field, vec)).col(0)

    @property
    def T(self) -> Matrix:
        if self.nrows:
            return Matrix(self.field, list(zip(*self.rows)), self.nrows)
        return Matrix(self.field, [()] * self.ncols, 0)

    def transpose(self) -> Matrix:
        return self.T

    def submatrix(self, rows=None, cols=None) -> Matrix:
        rows = range(self.nrows) if rows is None else rows
        cols = list(range(self.ncols)) if cols is None else list(cols)
        return Matrix(self.field, [[self.rows[i][j] for j in cols] for i in rows], len(cols))

    def hstack(self, *others: Matrix) -> Matrix:
        mats = (self,) + others
        for m in others:
            if m.nrows != self.nrows:
                raise InputError("hstack row mismatch")
        rows = [sum((m.rows[i] for m in mats), ()) for i in range(self.nrows)]
        return Matrix(self.field, rows, sum(m.ncols for m in mats))

    def vstack(self, *others: Matrix) -> Matrix:
        for m in others:
            if m.ncols != self.ncols:
                raise InputError("vstack column mismatch")
        rows = list(self.rows)
        for m in others:
            rows.extend(m.rows)
        return Matrix(self.field, rows, self.ncols)

    def rank(self) -> int:
        return len(rref(self)[1])


def kron(a: Matrix, b: Matrix) -> Matrix:
    """Kronecker product under the lexicographic index convention."""
    p = a.field.p
    zero_b = (0,) * b.ncols
    out = []
    for ra in a.rows:
        for rb in b.rows:
            row = []
            for x in ra:
                if x:
                    if p:
                        row.extend([x * y % p for y in rb])
                    else:
                        row.extend([_norm(x * y) for y in rb])
                else:
                    row.extend(zero_b)
            out.append(row)
    return Matrix(a.field, out, a.ncols * b.ncols)


def kron_all(*mats: Matrix) -> Matrix:
    out = mats[0]
    for m in mats[1:]:
        out = kron(out, m)
    return out


def identity(field: Field, n: int) -> Matrix:
    return Matrix.identity(field, n)


def tensor_permutation(field: Field, dims, perm) -> Matrix:
    """Matrix sending v_0 (x) ... (x) v_{n-1} to v_{perm[0]} (x) ... (x) v_{perm[-1]}."""
    dims = list(dims)
    total = math.prod(dims)
    new_dims = [dims[i] for i in perm]
    rows = [[0] * total for _ in range(total)]
    for idx in itertools.product(*[range(d) for d in dims]):
        src = 0
        for i, d in zip(idx, dims):
            src = src * d + i
        dst = 0
        for j, d in zip(perm, new_dims):
            dst = dst * d + idx[j]
        rows[dst][src] = 1
    return Matrix(field, rows, total)


# row reduction


def _rref_rows(field: Field, rows, ncols: int, stop_col: int | None = None):
    """Row reduce a list of row lists in place style; returns (rows, pivots)."""
    p = field.p
    rows = [list(r) for r in rows]
    pivots = []
    r = 0
    limit = ncols if stop_col is None else stop_col
    nrows = len(rows)
    for c in range(limit):
        if r == nrows:
            break
        piv = None
        for i in range(r, nrows):
            if rows[i][c]:
                piv = i
                break
        if piv is None:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        inv = field.inv(rows[r][c])
        if p:
            pr = [x * inv % p for x in rows[r]]
        else:
            pr = [_norm(x * inv) for x in rows[r]]
        rows[r] = pr
        for i in range(nrows):
            if i != r:
                f = rows[i][c]
                if f:
                    if p:
                        rows[i] = [(a - f * b) % p for a, b in zip(rows[i], pr)]
                    else:
                        rows[i] = [_norm(a - f * b) for a, b in zip(rows[i], pr)]
        pivots.append(c)
        r += 1
    return rows, pivots


def rref(m: Matrix):
    """Reduced row echelon form and pivot columns."""
    rows, pivots = _rref_rows(m.field, m.rows, m.ncols)
    return Matrix(m.field, rows, m.ncols), pivots


class Subspace:
    """Subspace of k^n stored by an RREF basis (rows)."""

    __slots__ = ("field", "ambient_dim", "basis", "pivots")

    def __init__(self, field: Field, ambient_dim: int, basis: Matrix, pivots):
        self.field = field
        self.ambient_dim = ambient_dim
        self.basis = basis
        self.pivots = tuple(pivots)

    @classmethod
    def span(cls, field: Field, ambient_dim: int, vectors) -> Subspace:
        rows, pivots = _rref_rows(field, [list(v) for v in vectors], ambient_dim)
        rows = rows[: len(pivots)]
        return cls(field, ambient_dim, Matrix(field, rows, ambient_dim), pivots)

    @classmethod
    def column_space(cls, m: Matrix) -> Subspace:
        return cls.span(m.field, m.nrows, m.columns())

    @classmethod
    def whole(cls, field: Field, n: int) -> Subspace:
        return cls(field, n, Matrix.identity(field, n), range(n))

    @classmethod
    def zero(cls, field: Field, n: int) -> Subspace:
        return cls(field, n, Matrix(field, [], n), ())

    @property
    def dim(self) -> int:
        return len(self.pivots)

    def vectors(self):
        return list(self.basis.rows)

    def inclusion(self) -> Matrix:
        """Columns are the basis vectors."""
        return Matrix.from_columns(self.field, self.basis.rows, self.ambient_dim)

    def coordinates(self, vec):
        """Coordinates of vec in the basis, or None if vec is not in the subspace."""
        coords = tuple(vec[c] for c in self.pivots)
        recon = [0] * self.ambient_dim
        for a, row in zip(coords, self.basis.rows):
            if a:
                recon = [x + a * y for x, y in zip(recon, row)]
        f = self.field
        if any(f(x) != f(v) for x, v in zip(recon, vec)):
            return None
        return coords

    def coordinate_matrix(self, m: Matrix) -> Matrix | None:
        """Coordinates of each column of m, or None if some column is outside."""
        cols = []
        for c in m.columns():
            co = self.coordinates(c)
            if co is None:
                return None
            cols.append(co)
        return Matrix.from_columns(self.field, cols, self.dim)

    def contains(self, vec) -> bool:
        return self.coordinates(vec) is not None

    def contains_subspace(self, other: Subspace) -> bool:
        return all(self.contains(v) for v in other.basis.rows)

    def __eq__(self, other):
        if not isinstance(other, Subspace):
            return NotImplemented
        return self.ambient_dim == other.ambient_dim and self.basis == other.basis

    def __hash__(self):
        return hash((self.ambient_dim, self.basis))

    def __add__(self, other: Subspace) -> Subspace:
        return Subspace.span(self.field, self.ambient_dim, self.vectors() + other.vectors())

    def __repr__(self):
        return f"Subspace(dim={self.dim}, ambient={self.ambient_dim})"


def kernel_basis(m: Matrix) -> Subspace:
    """Subspace of column vectors v with m v = 0."""
    rows, pivots = _rref_rows(m.field, m.rows, m.ncols)
    pivot_set = set(pivots)
    vecs = []
    for f in range(m.ncols):
        if f in pivot_set:
            continue
        v = [0] * m.ncols
        v[f] = 1
        for i, c in enumerate(pivots):
            v[c] = m.field.neg(rows[i][f])
        vecs.append(v)
    return Subspace.span(m.field, m.ncols, vecs)


def _quotient_from_rows(field: Field, n: int, relation_rows):
    rows, pivots = _rref_rows(field, relation_rows, n)
    pivot_set = set(pivots)
    free = [c for c in range(n) if c not in pivot_set]
    pos = {c: i for i, c in enumerate(free)}
    proj = [[0] * n for _ in free]
    for c in free:
        proj[pos[c]][c] = 1
    for i, c in enumerate(pivots):
        row = rows[i]
        for f in free:
            if row[f]:
                proj[pos[f]][c] = field.neg(row[f])
    sec = [[0] * len(free) for _ in range(n)]
    for c in free:
        sec[c][pos[c]] = 1
    relations = Subspace(field, n, Matrix(field, rows[: len(pivots)], n), pivots)
    return Matrix(field, proj, n), Matrix(field, sec, len(free)), relations


def cokernel(m: Matrix):
    """Projection onto codomain / image(m) and a section of it."""
    proj, sec, _ = _quotient_from_rows(m.field, m.nrows, m.columns())
    return proj, sec


def quotient(subspace: Subspace):
    """Projection, section for the quotient of the ambient space by a subspace."""
    proj, sec, _ = _quotient_from_rows(subspace.field, subspace.ambient_dim, subspace.vectors())
    return proj, sec


def solve_matrix(m: Matrix, b: Matrix) -> Matrix | None:
    """Pivot solution X of m X = b, or None if infeasible."""
    if m.nrows != b.nrows:
        raise InputError(f"shape mismatch {m.shape} vs {b.shape}")
    aug = [list(r) + list(s) for r, s in zip(m.rows, b.rows)]
    rows, pivots = _rref_rows(m.field, aug, m.ncols + b.ncols, stop_col=m.ncols)
    npiv = len(pivots)
    for r in rows[npiv:]:
        if any(r[m.ncols:]):
            return None
    out = [[0] * b.ncols for _ in range(m.ncols)]
    for i, c in enumerate(pivots):
        out[c] = rows[i][m.ncols:]
    return Matrix(m.field, out, b.ncols)


def solve(m: Matrix, b) -> tuple | None:
    """Pivot particular solution of m x = b, or None."""
    b = tuple(b)
    if len(b) != m.nrows:
        raise InputError(f"shape mismatch {m.shape} vs vector of length {len(b)}")
    x = solve_matrix(m, Matrix.column(m.field, b))
    return None if x is None else x.col(0)


def inverse(m: Matrix) -> Matrix | None:
    if m.nrows != m.ncols:
        raise InputError(f"inverse of non-square {m.shape}")
    n = m.nrows
    aug = [list(r) + [1 if i == j else 0 for j in range(n)] for i, r in enumerate(m.rows)]
    rows, pivots = _rref_rows(m.field, aug, 2 * n, stop_col=n)
    if len(pivots) < n:
        return None
    return Matrix(m.field, [r[n:] for r in rows], n)


def intersect(u: Subspace, v: Subspace) -> Subspace:
    if u.ambient_dim != v.ambient_dim:
        raise InputError("intersect: ambient dimensions differ")
    f = u.field
    n = u.ambient_dim
    cu = kernel_basis(u.basis if u.dim else Matrix(f, [], n)).vectors()
    cv = kernel_basis(v.basis if v.dim else Matrix(f, [], n)).vectors()
    constraints = cu + cv
    if not constraints:
        return Subspace.whole(f, n)
    return kernel_basis(Matrix(f, constraints, n))


def rank(m: Matrix) -> int:
    return m.rank()


class MapSpace:
    """Affine space of matrices: particular + span(directions)."""

    def __init__(self, shape, particular: Matrix, directions):
        self.shape = shape
        self.particular = particular
        self.directions = list(directions)

    @property
    def dim(self) -> int:
        return len(self.directions)

    def point(self, coeffs) -> Matrix:
        out = self.particular
        for c, d in zip(coeffs, self.directions):
            if c:
                out = out + d.scale(c)
        return out

    def __repr__(self):
        return f"MapSpace(shape={self.shape}, dim={self.dim})"


def _vec_rows(m: Matrix):
    return [x for r in m.rows for x in r]


def matrix_solution_space(field: Field, shape, constraints) -> MapSpace | None:
    """All X of the given shape with sum_t P_t X Q_t = K for every constraint.

    Each constraint is (terms, rhs). A term is a pair (P, Q), where None stands for
    an identity, or a callable that is linear in X. rhs is a Matrix or None (zero).
    Returns None if the inhomogeneous system is infeasible.
    """
    m, n = shape
    nvar = m * n
    coeff_rows = []
    rhs_vals = []
    basis = None
    for terms, rhs in constraints:
        block = None
        for term in terms:
            if callable(term):
                if basis is None:
                    basis = []
                    for i in range(m):
                        for j in range(n):
                            e = [[0] * n for _ in range(m)]
                            e[i][j] = 1
                            basis.append(Matrix(field, e, n))
                cols = [_vec_rows(term(e)) for e in basis]
                part = Matrix.from_columns(field, cols, len(cols[0]) if cols else 0)
            else:
                p, q = term
                p = Matrix.identity(field, m) if p is None else p
                q = Matrix.identity(field, n) if q is None else q
                part = kron(p, q.T)
            block = part if block is None else block + part
        if block is None:
            continue
        coeff_rows.extend(block.rows)
        rhs_vals.extend(_vec_rows(rhs) if rhs is not None else [0] * block.nrows)
    if not coeff_rows:
        zero = Matrix.zeros(field, m, n)
        dirs = []
        for i in range(m):
            for j in range(n):
                e = [[0] * n for _ in range(m)]
                e[i][j] = 1
                dirs.append(Matrix(field, e, n))
        return MapSpace(shape, zero, dirs)
    a = Matrix(field, coeff_rows, nvar)
    x = solve(a, rhs_vals)
    if x is None:
        return None
    part = Matrix(field, [x[i * n:(i + 1) * n] for i in range(m)], n)
    dirs = [Matrix(field, [v[i * n:(i + 1) * n] for i in range(m)], n) for v in kernel_basis(a).vectors()]
    return MapSpace(shape, part, dirs)

"""Finite-dimensional unital associative algebras and their morphisms."""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import cached_property

from .errors import InputError
from .linalg import Field, Matrix, matrix_solution_space
from .report import Report


@dataclass(frozen=True, eq=False)
class FinDimAlgebra:
    """Algebra with e_i e_j = sum_k mul[i][j][k] e_k."""

    field: Field
    dim: int
    mul: tuple
    unit: tuple
    name: str = ""

    def __post_init__(self):
        f = self.field
        mul = tuple(tuple(tuple(f(x) for x in mul_ij) for mul_ij in mul_i) for mul_i in self.mul)
        if len(mul) != self.dim or any(len(r) != self.dim or any(len(v) != self.dim for v in r) for r in mul):
            raise InputError(f"structure constants of {self.name or 'algebra'} are not {self.dim}^3")
        if len(self.unit) != self.dim:
            raise InputError("unit vector has the wrong length")
        object.__setattr__(self, "mul", mul)
        object.__setattr__(self, "unit", tuple(f(x) for x in self.unit))

    def __repr__(self):
        return f"FinDimAlgebra({self.name or '?'}, dim={self.dim}, {self.field})"

    def same_as(self, other: FinDimAlgebra) -> bool:
        return self is other or (
            self.field == other.field and self.dim == other.dim
            and self.mul == other.mul and self.unit == other.unit
        )

    @cached_property
    def left_mult(self):
        """left_mult[i] is the matrix of x -> e_i x."""
        n = self.dim
        return tuple(
            Matrix(self.field, [[self.mul[i][j][k] for j in range(n)] for k in range(n)], n)
            for i in range(n)
        )

    @cached_property
    def right_mult(self):
        """right_mult[i] is the matrix of x -> x e_i."""
        n = self.dim
        return tuple(
            Matrix(self.field, [[self.mul[j][i][k] for j in range(n)] for k in range(n)], n)
            for i in range(n)
        )

    @cached_property
    def mult_matrix(self) -> Matrix:
        """The multiplication A (x) A -> A on the tensor index convention."""
        n = self.dim
        return Matrix(self.field, [[self.mul[i][j][k] for i in range(n) for j in range(n)]
                                   for k in range(n)], n * n)

    @cached_property
    def unit_column(self) -> Matrix:
        return Matrix.column(self.field, self.unit)

    def basis_vector(self, i: int) -> tuple:
        return tuple(1 if j == i else 0 for j in range(self.dim))

    def multiply(self, x, y) -> tuple:
        f = self.field
        out = [0] * self.dim
        for i, a in enumerate(x):
            if not a:
                continue
            for j, b in enumerate(y):
                if not b:
                    continue
                ab = a * b
                for k, c in enumerate(self.mul[i][j]):
                    if c:
                        out[k] += ab * c
        return tuple(f(v) for v in out)

    def left_by(self, x) -> Matrix:
        out = Matrix.zeros(self.field, self.dim, self.dim)
        for a, m in zip(x, self.left_mult):
            if a:
                out = out + m.scale(a)
        return out

    def right_by(self, x) -> Matrix:
        out = Matrix.zeros(self.field, self.dim, self.dim)
        for a, m in zip(x, self.right_mult):
            if a:
                out = out + m.scale(a)
        return out

    @cached_property
    def is_commutative(self) -> bool:
        n = self.dim
        return all(self.mul[i][j] == self.mul[j][i] for i in range(n) for j in range(n))


@dataclass(frozen=True, eq=False)
class AlgebraMorphism:
    source: FinDimAlgebra
    target: FinDimAlgebra
    matrix: Matrix

    def __post_init__(self):
        if self.matrix.shape != (self.target.dim, self.source.dim):
            raise InputError(
                f"morphism matrix has shape {self.matrix.shape}, expected "
                f"{(self.target.dim, self.source.dim)}")

    def image(self, i: int) -> tuple:
        return self.matrix.col(i)

    def validate(self) -> Report:
        rep = Report("algebra morphism")
        s, t = self.source, self.target
        for i in range(s.dim):
            for j in range(s.dim):
                lhs = self.matrix.apply(s.mul[i][j])
                rhs = t.multiply(self.image(i), self.image(j))
                if lhs != rhs:
                    rep.failed_check("multiplicative", "", f"basis pair ({i}, {j})",
                                     {"pair": [i, j]})
                    return rep
        if self.matrix.apply(s.unit) != t.unit:
            rep.failed_check("unital", "", "unit not preserved")
        return rep


def identity_morphism(a: FinDimAlgebra) -> AlgebraMorphism:
    return AlgebraMorphism(a, a, Matrix.identity(a.field, a.dim))


def compose_morphisms(g: AlgebraMorphism, f: AlgebraMorphism) -> AlgebraMorphism:
    return AlgebraMorphism(f.source, g.target, g.matrix @ f.matrix)


def validate_algebra(a: FinDimAlgebra) -> Report:
    """Failed associativity/unit identities with witness triples; empty means valid."""
    rep = Report(f"algebra {a.name}")
    n = a.dim
    for i in range(n):
        for j in range(n):
            # (e_i e_j) e_k against e_i (e_j e_k), all k at once
            prod_ij = Matrix.zeros(a.field, n, n)
            for k, c in enumerate(a.mul[i][j]):
                if c:
                    prod_ij = prod_ij + a.left_mult[k].scale(c)
            lhs = prod_ij
            rhs = a.left_mult[i] @ a.left_mult[j]
            if lhs != rhs:
                k = next(c for c in range(n) if lhs.col(c) != rhs.col(c))
                rep.failed_check("associativity", "", f"(e{i} e{j}) e{k} != e{i} (e{j} e{k})",
                                 {"triple": [i, j, k],
                                  "lhs": [a.field.fmt(x) for x in lhs.col(k)],
                                  "rhs": [a.field.fmt(x) for x in rhs.col(k)]})
    ident = Matrix.identity(a.field, n)
    if a.left_by(a.unit) != ident:
        rep.failed_check("left unit", "", "1 x != x")
    if a.right_by(a.unit) != ident:
        rep.failed_check("right unit", "", "x 1 != x")
    return rep


def group_algebra(field: Field, cyclic_orders, name: str | None = None) -> FinDimAlgebra:
    """Group algebra of a product of cyclic groups; basis ordered lexicographically."""
    orders = [int(o) for o in cyclic_orders] or [1]
    if any(o < 1 for o in orders):
        raise InputError("cyclic orders must be positive")
    elems = list(itertools.product(*[range(o) for o in orders]))
    index = {g: i for i, g in enumerate(elems)}
    n = len(elems)
    mul = []
    for g in elems:
        row = []
        for h in elems:
            gh = tuple((x + y) % o for x, y, o in zip(g, h, orders))
            v = [0] * n
            v[index[gh]] = 1
            row.append(tuple(v))
        mul.append(tuple(row))
    unit = tuple(1 if i == 0 else 0 for i in range(n))
    if name is None:
        name = "k" if n == 1 else "k[" + "x".join(f"C{o}" for o in orders) + "]"
    return FinDimAlgebra(field, n, tuple(mul), unit, name)


def ground_field(field: Field) -> FinDimAlgebra:
    return group_algebra(field, [1], name="k")


def matrix_algebra(field: Field, n: int) -> FinDimAlgebra:
    """M_n(k) with basis E_ij at index i*n + j."""
    dim = n * n
    mul = []
    for i in range(n):
        for j in range(n):
            row = []
            for k in range(n):
                for l in range(n):
                    v = [0] * dim
                    if j == k:
                        v[i * n + l] = 1
                    row.append(tuple(v))
            mul.append(tuple(row))
    unit = tuple(1 if i // n == i % n else 0 for i in range(dim))
    return FinDimAlgebra(field, dim, tuple(mul), unit, f"M{n}")


def opposite(a: FinDimAlgebra) -> FinDimAlgebra:
    n = a.dim
    mul = tuple(tuple(a.mul[j][i] for j in range(n)) for i in range(n))
    return FinDimAlgebra(a.field, n, mul, a.unit, a.name + "^op")


def unit_morphism(a: FinDimAlgebra, ground: FinDimAlgebra | None = None) -> AlgebraMorphism:
    """The unit map k -> a."""
    ground = ground or ground_field(a.field)
    return AlgebraMorphism(ground, a, a.unit_column)


def is_split_extension(f: AlgebraMorphism) -> Matrix | None:
    """A source-bimodule retraction of f (pivot solution), or None."""
    k, l = f.source, f.target
    field = k.field
    constraints = [([(None, f.matrix)], Matrix.identity(field, k.dim))]
    for r in range(k.dim):
        fr = f.image(r)
        constraints.append(([(None, l.left_by(fr)), (k.left_mult[r].scale(-1), None)], None))
        constraints.append(([(None, l.right_by(fr)), (k.right_mult[r].scale(-1), None)], None))
    space = matrix_solution_space(field, (k.dim, l.dim), constraints)
    if space is None:
        return None
    pi = space.particular
    # exact recomputation of the defining identities
    assert pi @ f.matrix == Matrix.identity(field, k.dim)
    for r in range(k.dim):
        for s in range(k.dim):
            twist = l.left_by(f.image(r)) @ l.right_by(f.image(s))
            assert pi @ twist == k.left_mult[r] @ k.right_mult[s] @ pi
    return pi

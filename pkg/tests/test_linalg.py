from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from helpers import F5, FIELDS, Q, matrices, sized_matrices
from herdkit import Field, InputError, Matrix
from herdkit.linalg import (
    Subspace, cokernel, intersect, inverse, kernel_basis, kron, quotient, rank, rref, solve_matrix,
    tensor_permutation,
)


def M(field, rows):
    return Matrix.from_rows(field, rows)


def test_field_parsing():
    assert Field.parse("Q") == Q
    assert Field.parse("F5") == F5
    assert Field.parse("GF(7)").p == 7
    with pytest.raises(InputError):
        Field.parse("F6")
    with pytest.raises(InputError):
        Field.parse("R")


def test_field_coercion():
    assert Q("3/4") == Fraction(3, 4)
    assert Q("4/2") == 2 and type(Q("4/2")) is int
    assert F5("1/2") == 3
    assert F5(-1) == 4
    with pytest.raises(InputError):
        F5("1/5")
    with pytest.raises(InputError):
        Q("x")
    with pytest.raises(InputError):
        Q(True)


@pytest.mark.parametrize("field", FIELDS)
def test_rref_examples(field):
    r, piv = rref(Matrix.identity(field, 2))
    assert r == Matrix.identity(field, 2) and list(piv) == [0, 1]
    r, piv = rref(Matrix.zeros(field, 3, 3))
    assert r.is_zero() and list(piv) == []


def test_rref_hand_reduction():
    r, piv = rref(M(Q, [[1, 2], [2, 4]]))
    assert r == M(Q, [[1, 2], [0, 0]]) and list(piv) == [0]


def test_kernel_examples():
    assert kernel_basis(Matrix.identity(Q, 3)).dim == 0
    assert kernel_basis(Matrix.zeros(Q, 3, 3)).dim == 3
    k = kernel_basis(M(Q, [[1, 2], [2, 4]]))
    assert k.dim == 1 and k.contains((-2, 1))


def test_cokernel_examples():
    proj, _ = cokernel(Matrix.identity(Q, 2))
    assert proj.nrows == 0
    proj, sec = cokernel(Matrix.zeros(Q, 2, 2))
    assert proj == Matrix.identity(Q, 2) and sec == Matrix.identity(Q, 2)
    proj, sec = cokernel(M(Q, [[1], [1]]))
    assert proj.nrows == 1 and proj @ sec == Matrix.identity(Q, 1)


def test_inverse_kron_intersect():
    assert inverse(Matrix.identity(Q, 3)) == Matrix.identity(Q, 3)
    m = M(Q, [[1, 2], [3, 4]])
    assert kron(Matrix.identity(Q, 1), m) == m
    e = [(1, 0, 0), (0, 1, 0), (0, 0, 1)]
    u = Subspace.span(Q, 3, [e[0], e[1]])
    v = Subspace.span(Q, 3, [e[1], e[2]])
    assert intersect(u, v) == Subspace.span(Q, 3, [e[1]])
    assert inverse(M(Q, [[1, 2], [2, 4]])) is None


def test_tensor_permutation_swaps_factors():
    x, y = Matrix.column(Q, [1, 2]), Matrix.column(Q, [3, 5, 7])
    assert tensor_permutation(Q, [2, 3], [1, 0]) @ kron(x, y) == kron(y, x)


@pytest.mark.parametrize("field", FIELDS)
@given(data=st.data())
def test_rank_nullity(field, data):
    m = data.draw(sized_matrices(field))
    assert rank(m) + kernel_basis(m).dim == m.ncols
    for v in kernel_basis(m).vectors():
        assert not any(m.apply(v))


@pytest.mark.parametrize("field", FIELDS)
@given(data=st.data())
def test_rref_idempotent_and_row_equivalent(field, data):
    m = data.draw(sized_matrices(field))
    r, piv = rref(m)
    assert rref(r)[0] == r
    assert len(piv) == rank(m)
    assert Subspace.span(field, m.ncols, m.rows) == Subspace.span(field, m.ncols, r.rows)


@pytest.mark.parametrize("field", FIELDS)
@given(data=st.data())
def test_inverse_and_solve(field, data):
    n = data.draw(st.integers(1, 4))
    m = data.draw(matrices(field, n, n))
    inv = inverse(m)
    assert (inv is None) == (rank(m) < n)
    if inv is not None:
        assert inv @ m == Matrix.identity(field, n) == m @ inv
    x = data.draw(matrices(field, n, 2))
    sol = solve_matrix(m, m @ x)
    assert sol is not None and m @ sol == m @ x


@pytest.mark.parametrize("field", FIELDS)
@given(data=st.data())
def test_kron_mixed_product(field, data):
    a, c = data.draw(matrices(field, 2, 3)), data.draw(matrices(field, 3, 2))
    b, d = data.draw(matrices(field, 2, 2)), data.draw(matrices(field, 2, 1))
    assert kron(a, b) @ kron(c, d) == kron(a @ c, b @ d)


@pytest.mark.parametrize("field", FIELDS)
@given(data=st.data())
def test_quotient_contracts(field, data):
    m = data.draw(sized_matrices(field, 4, 3))
    sub = Subspace.column_space(m)
    proj, sec = quotient(sub)
    assert proj.nrows == m.nrows - sub.dim
    assert proj @ sec == Matrix.identity(field, proj.nrows)
    assert (proj @ m).is_zero()


@pytest.mark.parametrize("field", FIELDS)
@given(data=st.data())
def test_intersection_dimension_formula(field, data):
    a, b = data.draw(matrices(field, 4, 2)), data.draw(matrices(field, 4, 3))
    u, v = Subspace.column_space(a), Subspace.column_space(b)
    w = intersect(u, v)
    assert u.contains_subspace(w) and v.contains_subspace(w)
    assert u.dim + v.dim == (u + v).dim + w.dim

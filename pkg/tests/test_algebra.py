import pytest
from hypothesis import given, strategies as st

from helpers import F5, FIELDS, Q
from herdkit import (
    AlgebraMorphism, FinDimAlgebra, InputError, Matrix, ground_field, group_algebra, identity_morphism,
    matrix_algebra, unit_morphism, validate_algebra,
)
from herdkit.algebra import compose_morphisms, is_split_extension, opposite


@pytest.mark.parametrize("field", FIELDS)
def test_standard_algebras_are_valid(field):
    assert validate_algebra(ground_field(field)).ok
    assert ground_field(field).dim == 1
    assert validate_algebra(matrix_algebra(field, 2)).ok


def test_perturbed_group_algebra_gives_associativity_witness():
    a = group_algebra(Q, [2])
    mul = [[list(v) for v in row] for row in a.mul]
    mul[0][0][0] = 2
    bad = FinDimAlgebra(Q, 2, mul, a.unit, "bad")
    rep = validate_algebra(bad)
    assert not rep.ok
    assoc = [c for c in rep.failures if c.name == "associativity"]
    assert assoc and len(assoc[0].witness["triple"]) == 3
    i, j, k = assoc[0].witness["triple"]
    lhs = bad.multiply(bad.multiply(bad.basis_vector(i), bad.basis_vector(j)), bad.basis_vector(k))
    rhs = bad.multiply(bad.basis_vector(i), bad.multiply(bad.basis_vector(j), bad.basis_vector(k)))
    assert lhs != rhs


def test_group_algebra_examples():
    k = group_algebra(Q, [1])
    assert k.dim == 1 and k.same_as(ground_field(Q))
    c2 = group_algebra(Q, [2])
    assert c2.dim == 2 and c2.multiply((0, 1), (0, 1)) == (1, 0)
    v4 = group_algebra(Q, [2, 2])
    assert v4.dim == 4 and v4.is_commutative and validate_algebra(v4).ok


def test_shape_errors():
    with pytest.raises(InputError):
        FinDimAlgebra(Q, 2, [[[1, 0]]], (1, 0))
    with pytest.raises(InputError):
        AlgebraMorphism(ground_field(Q), group_algebra(Q, [2]), Matrix.identity(Q, 2))


def test_split_extensions():
    c2 = group_algebra(Q, [2])
    assert is_split_extension(identity_morphism(c2)) == Matrix.identity(Q, 2)
    pi = is_split_extension(unit_morphism(c2))
    assert pi is not None and pi @ unit_morphism(c2).matrix == Matrix.identity(Q, 1)
    m2 = matrix_algebra(F5, 2)
    pi = is_split_extension(unit_morphism(m2))
    assert pi is not None and pi @ unit_morphism(m2).matrix == Matrix.identity(F5, 1)


def test_morphism_validation():
    c2 = group_algebra(Q, [2])
    assert identity_morphism(c2).validate().ok
    assert unit_morphism(c2).validate().ok
    swap = AlgebraMorphism(c2, c2, Matrix.from_rows(Q, [[0, 1], [1, 0]]))
    assert not swap.validate().ok
    sign = AlgebraMorphism(c2, c2, Matrix.from_rows(Q, [[1, 0], [0, -1]]))
    assert sign.validate().ok
    assert compose_morphisms(sign, sign).matrix == Matrix.identity(Q, 2)


@pytest.mark.parametrize("field", FIELDS)
@given(orders=st.lists(st.integers(1, 3), min_size=1, max_size=2))
def test_group_algebras_valid_and_commutative(field, orders):
    a = group_algebra(field, orders)
    assert validate_algebra(a).ok and a.is_commutative


@pytest.mark.parametrize("field", FIELDS)
@given(x=st.lists(st.integers(-3, 3), min_size=4, max_size=4),
       y=st.lists(st.integers(-3, 3), min_size=4, max_size=4))
def test_left_regular_representation_is_multiplicative(field, x, y):
    a = matrix_algebra(field, 2)
    x, y = tuple(field(v) for v in x), tuple(field(v) for v in y)
    assert a.left_by(x) @ a.left_by(y) == a.left_by(a.multiply(x, y))
    assert a.right_by(y) @ a.right_by(x) == a.right_by(a.multiply(x, y))


@given(x=st.lists(st.integers(-3, 3), min_size=4, max_size=4),
       y=st.lists(st.integers(-3, 3), min_size=4, max_size=4))
def test_matrix_algebra_multiplies_matrices(x, y):
    a = matrix_algebra(F5, 2)
    prod = Matrix.from_rows(F5, [x[:2], x[2:]]) @ Matrix.from_rows(F5, [y[:2], y[2:]])
    assert a.multiply(tuple(F5(v) for v in x), tuple(F5(v) for v in y)) == prod.entries


def test_opposite_reverses_products():
    a = matrix_algebra(Q, 2)
    op = opposite(a)
    x, y = (1, 2, 0, 1), (0, 1, 1, 0)
    assert op.multiply(x, y) == a.multiply(y, x)
    assert validate_algebra(op).ok

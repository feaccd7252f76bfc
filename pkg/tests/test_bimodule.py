import random

import pytest
from hypothesis import given, strategies as st

from helpers import F5, FIELDS, Q, orbit_count, random_linear_endo, random_tensor_instance
from herdkit import Bimodule, BimoduleMap, Matrix, comatrix_herd, ground_field, group_algebra, tensor, tensor_maps
from herdkit.bimodule import (
    TensorProduct, coequalizer, equalizer, induced_map, map_solution_space, regular_bimodule,
)
from herdkit.errors import NotBalancedError
from herdkit.linalg import kron


def tensor_contracts_hold(tp: TensorProduct) -> bool:
    f = tp.field
    n = tp.dim
    return (tp.projection @ tp.section == Matrix.identity(f, n)
            and (tp.projection @ tp.relation_matrix()).is_zero()
            and n == tp.ambient_dim - tp.relations.dim)


@pytest.mark.parametrize("field", FIELDS)
def test_tensor_over_ground_field_is_bijective(field):
    k = ground_field(field)
    m = Bimodule(k, k, 3, [Matrix.identity(field, 3)], [Matrix.identity(field, 3)], "M")
    tp = tensor([regular_bimodule(k), m], [k])
    assert tp.dim == 3 and tp.projection.rank() == 3


def test_row_space_tensor_column_space_is_one_dimensional():
    d = comatrix_herd(F5).dual
    assert d.ThT.dim == 1
    assert d.ThT.relations.dim == 3


def test_group_algebra_over_itself():
    c2 = group_algebra(Q, [2])
    r = regular_bimodule(c2)
    tp = tensor([r, r], [c2])
    assert tp.dim == 2 and tensor_contracts_hold(tp)


def test_tensor_maps_identity_and_zero():
    d = comatrix_herd(F5).dual
    tp = d.TThT
    ids = [(1, 1, m.identity()) for m in tp.factors]
    assert tensor_maps(tp, tp, ids) == Matrix.identity(F5, tp.dim)
    zero = [(1, 1, Matrix.zeros(F5, tp.factors[0].dim, tp.factors[0].dim))] + ids[1:]
    assert tensor_maps(tp, tp, zero).is_zero()


def test_evaluation_descends_and_matches_representatives():
    d = comatrix_herd(F5).dual
    src = tensor([d.Th_AS, d.T_SR, d.Th_RB], [d.S, d.R])
    dst = tensor([d.A_AR, d.Th_RB], [d.R])
    via_blocks = tensor_maps(src, dst, [(2, 1, d.ev_q), (1, 1, d.Tdual.identity())])
    direct = dst.projection @ kron(d.ev, d.Tdual.identity()) @ src.section
    assert via_blocks == direct


def test_unbalanced_map_is_rejected():
    d = comatrix_herd(F5).dual
    flat = Matrix.from_rows(F5, [[1, 0, 0, 0]])
    with pytest.raises(NotBalancedError) as err:
        tensor_maps(d.ThT, tensor([d.A_mod], []), [(2, 1, flat, True)])
    assert err.value.witness["relation"]


def test_equalizer_and_coequalizer_examples():
    c2 = group_algebra(Q, [2])
    r = regular_bimodule(c2)
    ident = BimoduleMap(r, r, r.identity())
    zero = BimoduleMap(r, r, Matrix.zeros(Q, 2, 2))
    sub, _ = equalizer(ident, ident)
    assert sub.dim == 2
    sub, _ = equalizer(ident, zero)
    assert sub.dim == 0
    q, proj = coequalizer(ident, ident)
    assert q.dim == 2 and proj.matrix == Matrix.identity(Q, 2)
    q, _ = coequalizer(ident, zero)
    assert q.dim == 0


def test_solution_space_examples():
    one = map_solution_space(Q, (2, 2), [([(None, None)], Matrix.identity(Q, 2))])
    assert one.dim == 0 and one.particular == Matrix.identity(Q, 2)
    free = map_solution_space(Q, (2, 2), [])
    assert free.dim == 4
    bad = map_solution_space(Q, (1, 1), [([(None, None)], Matrix.identity(Q, 1)),
                                         ([(None, None)], Matrix.zeros(Q, 1, 1))])
    assert bad is None


@pytest.mark.parametrize("field", FIELDS)
@given(seed=st.integers(0, 10**6))
def test_random_tensor_contracts_and_dimension(field, seed):
    m, n, _ = random_tensor_instance(field, seed)
    tp = tensor([m.bimodule, n.bimodule], [m.alg])
    assert tensor_contracts_hold(tp)
    assert tp.dim == orbit_count(m, n)


@pytest.mark.parametrize("field", FIELDS)
@given(seed=st.integers(0, 10**6))
def test_induced_maps_are_functorial(field, seed):
    m, n, rng = random_tensor_instance(field, seed)
    tp = tensor([m.bimodule, n.bimodule], [m.alg])
    f1, f2 = random_linear_endo(m.bimodule, rng, "right"), random_linear_endo(m.bimodule, rng, "right")
    g1, g2 = random_linear_endo(n.bimodule, rng, "left"), random_linear_endo(n.bimodule, rng, "left")
    whole = induced_map(f2.compose(f1), g2.compose(g1), tp, tp).matrix
    assert whole == induced_map(f2, g2, tp, tp).matrix @ induced_map(f1, g1, tp, tp).matrix
    ident = induced_map(BimoduleMap(m.bimodule, m.bimodule, m.bimodule.identity()),
                        BimoduleMap(n.bimodule, n.bimodule, n.bimodule.identity()), tp, tp)
    assert ident.matrix == Matrix.identity(field, tp.dim)
    assert induced_map(f1, g1, tp, tp).matrix == tp.projection @ kron(f1.matrix, g1.matrix) @ tp.section


@pytest.mark.parametrize("field", FIELDS)
@given(seed=st.integers(0, 10**6))
def test_regular_factor_is_absorbed(field, seed):
    m, n, _ = random_tensor_instance(field, seed)
    a = m.alg
    tp = tensor([regular_bimodule(a), n.bimodule], [a])
    assert tp.dim == n.bimodule.dim
    for i in range(a.dim):
        lhs = tp.projection @ kron(a.left_mult[i], n.bimodule.identity())
        assert lhs == tp.result.left_action[i] @ tp.projection


def test_cached_constructor_shares_quotient_basis():
    rng = random.Random(3)
    m, n, _ = random_tensor_instance(Q, rng.randint(0, 99))
    a = tensor([m.bimodule, n.bimodule], [m.alg])
    b = tensor([m.bimodule, n.bimodule], [m.alg])
    assert a is b
    c = TensorProduct([m.bimodule, n.bimodule], [m.alg])
    assert c.projection == a.projection and c.section == a.section

import pytest
from hypothesis import given, settings, strategies as st

from helpers import F5, Q
from herdkit import (
    Field, Matrix, PreconditionError, check_composition_theorem, check_equaliser_coalgebra, compose_coobjects,
    find_coobject_iso, group_hopf, herd_from_coobject, quadratic_coobject, smash_sigma, trivial_coobject,
    validate_herd,
)
from herdkit.bimodule import map_solution_space
from herdkit.hopf import ISO, NONE, check_cotranslation, delta_map, is_galois_coobject
from herdkit.linalg import kron


@pytest.fixture(scope="module")
def f5():
    h = group_hopf(F5, [2])
    return h, trivial_coobject(h), {a: quadratic_coobject(F5, a, h) for a in range(1, 5)}


@pytest.fixture(scope="module")
def rat():
    h = group_hopf(Q, [2])
    return h, trivial_coobject(h), {a: quadratic_coobject(Q, a, h) for a in (1, 2, 3, 6)}


@pytest.mark.parametrize("field,orders", [(Q, [1]), (Q, [2]), (F5, [3]), (F5, [2, 2])])
def test_group_hopf_algebras(field, orders):
    h = group_hopf(field, orders)
    assert h.validate().ok
    assert h.dim == len(h.alg.unit)


def test_trivial_coobject_is_galois(rat):
    _, t, _ = rat
    assert t.validate().ok and is_galois_coobject(t)
    assert check_cotranslation(t).ok


def test_delta_of_quadratic_coobject_is_invertible(rat):
    _, _, cs = rat
    m = delta_map(cs[2]).matrix
    assert m.shape == (4, 4) and m.rank() == 4
    assert check_cotranslation(cs[2]).ok


def test_degenerate_parameter_is_rejected():
    with pytest.raises(PreconditionError):
        quadratic_coobject(Q, 0)
    with pytest.raises(PreconditionError):
        quadratic_coobject(Field.prime(2), 1)


@pytest.mark.parametrize("field", [Q, F5])
def test_coobject_herds_pass(field):
    h = group_hopf(field, [2])
    for c in (trivial_coobject(h), quadratic_coobject(field, 2, h)):
        assert validate_herd(herd_from_coobject(c)).ok


@pytest.mark.parametrize("field,values", [(Q, [1, 2]), (F5, [1, 2, 3, 4])])
def test_equaliser_coalgebra_recovers_the_coobject(field, values):
    h = group_hopf(field, [2])
    for a in values:
        rep = check_equaliser_coalgebra(quadratic_coobject(field, a, h))
        assert rep.ok and rep.data["dim E"] == 2 == rep.data["dim F"]
    assert check_equaliser_coalgebra(trivial_coobject(h)).ok


def test_colinear_linear_endomorphisms_are_scalars(rat):
    _, _, cs = rat
    c = cs[2]
    ident = Matrix.identity(Q, 2)
    cons = [([(None, a), (a.scale(-1), None)], None) for a in c.bimodule.right_action]
    cons.append(([(c.comul, None), lambda x: (kron(x, ident) @ c.comul).scale(-1)], None))
    space = map_solution_space(Q, (2, 2), cons)
    assert space.dim == 1
    d = space.directions[0]
    assert d == ident.scale(d[0, 0])


def test_isomorphism_search_over_the_rationals(rat):
    _, t, cs = rat
    assert find_coobject_iso(cs[1], t).status == ISO
    assert find_coobject_iso(cs[2], t).status == NONE
    assert find_coobject_iso(compose_coobjects(cs[2], cs[2]), t).status == ISO
    assert find_coobject_iso(compose_coobjects(cs[2], cs[3]), cs[6]).status == ISO


def test_isomorphisms_to_the_trivial_coobject_over_f5(f5):
    _, t, cs = f5
    status = {a: find_coobject_iso(cs[a], t) for a in cs}
    assert {a for a in cs if status[a].status == ISO} == {1, 4}
    assert status[2].status == NONE and "exhaustive" in status[2].detail


def test_found_isomorphism_is_a_coobject_map(f5):
    _, t, cs = f5
    res = find_coobject_iso(cs[4], t)
    phi = res.iso
    assert phi.rank() == 2
    assert t.comul @ phi == kron(phi, phi) @ cs[4].comul
    assert t.counit @ phi == cs[4].counit
    for x, y in zip(cs[4].action, t.action):
        assert phi @ x == y @ phi


def test_group_law_over_f5(f5):
    _, _, cs = f5
    for a in cs:
        for b in cs:
            assert find_coobject_iso(compose_coobjects(cs[a], cs[b]), cs[a * b % 5]).status == ISO


def test_composition_is_associative_up_to_isomorphism(f5):
    _, _, cs = f5
    for a, b, c in [(2, 3, 4), (2, 2, 2), (3, 4, 1)]:
        left = compose_coobjects(compose_coobjects(cs[a], cs[b]), cs[c])
        right = compose_coobjects(cs[a], compose_coobjects(cs[b], cs[c]))
        assert find_coobject_iso(left, right).status == ISO


def test_unit_of_composition(rat):
    _, t, cs = rat
    tc = compose_coobjects(t, cs[2])
    assert tc.dim == 2 and find_coobject_iso(tc, cs[2]).status == ISO
    assert compose_coobjects(cs[2], cs[2]).dim == 2


def test_smash_sigma_for_the_trivial_pair_is_a_reindexing(rat):
    _, t, _ = rat
    s = smash_sigma(t, t)
    assert s.report.ok
    cols = [c for c in s.sigma.columns()]
    assert all(sorted(c) == [0] * (len(c) - 1) + [1] for c in cols)
    assert sorted(c.index(1) for c in cols) == list(range(len(cols)))


def test_smash_sigma_shapes(f5, rat):
    _, _, cs = f5
    s = smash_sigma(cs[2], cs[2])
    assert s.report.ok and s.sigma.shape == (8, 8)
    assert smash_sigma(rat[2][2], rat[2][3]).report.ok


@pytest.mark.parametrize("which", ["f5", "rat"])
def test_composition_theorem(which, f5, rat):
    if which == "f5":
        _, _, cs = f5
        rep = check_composition_theorem(cs[2], cs[2])
    else:
        _, _, cs = rat
        rep = check_composition_theorem(cs[2], cs[3])
    assert rep.ok
    assert rep["extracted sigma equals smash sigma"].status == "pass"


@settings(max_examples=10)
@given(a=st.integers(1, 4), b=st.integers(1, 4))
def test_squares_decide_isomorphism_to_the_trivial_coobject(a, b):
    h = group_hopf(F5, [2])
    cd = compose_coobjects(quadratic_coobject(F5, a, h), quadratic_coobject(F5, b, h))
    is_square = (a * b) % 5 in (1, 4)
    assert (find_coobject_iso(cd, trivial_coobject(h)).status == ISO) == is_square

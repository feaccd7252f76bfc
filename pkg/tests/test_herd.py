import pytest
from hypothesis import given, strategies as st

from helpers import F5, Q, random_invertible
from herdkit import (
    Bimodule, FormalDualPair, HerdData, InputError, Matrix, check_progenerator, check_tame, comatrix_herd,
    coring_from_herd_left, coring_from_herd_right, ground_field, identity_morphism, tensor, trivial_herd,
    validate_formal_dual, validate_herd,
)
from herdkit.herd import check_theta
from herdkit.linalg import kron

HERDS = ("trivial", "comatrix", "quadratic_q", "quadratic_f5")


def failed(rep):
    return {(c.name, c.anchor) for c in rep.failures}


@pytest.mark.parametrize("name", HERDS)
def test_fixture_herds_pass(herds, name):
    h = herds[name]
    assert validate_formal_dual(h.dual).ok
    assert validate_herd(h).ok


def test_doubled_ev_breaks_the_compatibility_squares(herds):
    d = herds["comatrix"].dual
    rep = validate_formal_dual(d.with_maps(ev=d.ev.scale(2)))
    assert {a for _, a in failed(rep)} == {"diag.A", "diag.B"}
    assert all(c.witness for c in rep.failures)


def test_doubled_gamma_breaks_both_counit_laws(herds):
    h = herds["comatrix"]
    bad = h.with_gamma(h.gamma.scale(2))
    rep = validate_herd(bad)
    assert {a for _, a in failed(rep)} == {"eq.coev", "eq.ev"}
    # re-evaluate the witnessed column independently
    check = next(c for c in rep.failures if c.anchor == "eq.ev")
    d = bad.dual
    ta = tensor([d.T_BR, d.A_RA], [d.R])
    j = check.witness["basis_index"]
    col = (ta.projection @ kron(d.T.identity(), d.ev) @ bad.gamma).col(j)
    assert [F5.fmt(x) for x in col] == check.witness["lhs"]
    assert check.witness["lhs"] != check.witness["rhs"]


@pytest.mark.parametrize("which,anchor", [("ev", "eq.ev"), ("hatev", "eq.coev")])
def test_single_map_perturbations_of_the_quadratic_herd(herds, which, anchor):
    h = herds["quadratic_q"]
    d = h.dual
    pert = d.with_maps(**{which: getattr(d, which).scale(3)})
    assert {a for _, a in failed(validate_herd(h.with_dual(pert)))} == {anchor}
    assert {a for _, a in failed(validate_formal_dual(pert))} == {"diag.A", "diag.B"}


def test_progenerator_data(herds):
    rep = check_progenerator(herds["trivial"].dual)
    assert rep.data["ev_surjective"] and rep.data["lambda_bijective"]
    rep = check_progenerator(herds["comatrix"].dual)
    assert rep.data["ev_surjective"] and rep.data["hatev_surjective"] and rep.data["morita"]
    d = herds["comatrix"].dual
    rep = check_progenerator(d.with_maps(ev=d.ev.scale(0)))
    assert not rep.data["ev_surjective"] and not rep.data["lambda_bijective"]


def test_tameness(herds):
    assert check_tame(herds["trivial"]).ok
    assert check_tame(herds["comatrix"]).ok
    assert check_tame(herds["quadratic_f5"]).ok
    k = ground_field(Q)
    z = Matrix.zeros(Q, 0, 0)
    t = Bimodule(k, k, 0, [z], [z], "0")
    idk = identity_morphism(k)
    empty = FormalDualPair(t, Bimodule(k, k, 0, [z], [z], "0^"), idk, idk,
                           Matrix.zeros(Q, 1, 0), Matrix.zeros(Q, 1, 0))
    rep = check_tame(HerdData(empty, z))
    assert not rep.ok
    assert ("T faithfully flat over R", "def.tame") in failed(rep)


def test_shape_checks():
    h = trivial_herd(Q)
    with pytest.raises(InputError):
        HerdData(h.dual, Matrix.zeros(Q, 2, 1))
    with pytest.raises(InputError):
        h.dual.with_maps(ev=Matrix.zeros(Q, 2, 1))


@pytest.mark.parametrize("name,dim_c,dim_d", [
    ("trivial", 1, 1), ("comatrix", 1, 4), ("quadratic_q", 4, 4), ("quadratic_f5", 4, 4)])
def test_corings_of_a_herd(herds, name, dim_c, dim_d):
    h = herds[name]
    cc, tc = coring_from_herd_right(h)
    dd, td = coring_from_herd_left(h)
    assert (cc.dim, dd.dim) == (dim_c, dim_d)
    for rep in (cc.validate(), tc.validate(), dd.validate(), td.validate(), check_theta(h)):
        assert rep.ok, rep.failures


@given(rows=st.lists(st.lists(st.integers(0, 4), min_size=2, max_size=2), min_size=2, max_size=2))
def test_comatrix_herd_in_any_dual_basis(rows):
    p = Matrix.from_rows(F5, rows)
    if p.rank() < 2:
        with pytest.raises(InputError):
            comatrix_herd(F5, 2, p)
        return
    h = comatrix_herd(F5, 2, p)
    assert validate_herd(h).ok
    assert h.gamma_q == comatrix_herd(F5).gamma_q


def test_three_dimensional_comatrix_herd():
    import random
    p, _ = random_invertible(Q, 3, random.Random(1))
    h = comatrix_herd(Q, 3, p)
    assert validate_formal_dual(h.dual).ok and validate_herd(h).ok and check_tame(h).ok

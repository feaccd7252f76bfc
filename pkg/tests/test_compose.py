import pytest

from helpers import F5, Q
from herdkit import (
    Matrix, SmashData, check_torsor_compatibility, comatrix_herd, compose_duals, compose_herds,
    composition_report, extract_sigma, group_hopf, herd_from_coobject, quadratic_coobject, smash_sigma,
    tensor, trivial_herd, validate_formal_dual, validate_herd,
)
from herdkit.compose import herd_corings


def identity_smash(t, p):
    c, e = herd_corings(t, p)
    n = tensor([c.carrier, e.carrier], [t.dual.A]).dim
    return SmashData(c, e, Matrix.identity(t.dual.field, n))


@pytest.fixture(scope="module")
def quad_f5():
    h = group_hopf(F5, [2])
    c = quadratic_coobject(F5, 2, h)
    s = smash_sigma(c, c)
    return c, s, s.herds


def test_trivial_composed_with_trivial():
    t = trivial_herd(Q)
    rep = composition_report(t, t, identity_smash(t, t))
    assert rep.ok and rep.data["dim V"] == 1
    assert rep.data["herd"].gamma_q == t.gamma_q


def test_composing_with_the_trivial_herd_is_the_identity():
    cm, t = comatrix_herd(F5), trivial_herd(F5)
    rep = composition_report(cm, t, identity_smash(cm, t))
    assert rep.ok and rep.data["dim V"] == 2
    assert rep.data["herd"].gamma_q == cm.gamma_q


def test_composed_formal_dual_of_coobjects():
    h = group_hopf(Q, [2])
    hc = herd_from_coobject(quadratic_coobject(Q, 2, h))
    hd = herd_from_coobject(quadratic_coobject(Q, 3, h))
    v = compose_duals(hc.dual, hd.dual)
    assert v.T.dim == 2 and v.Tdual.dim == 2
    assert validate_formal_dual(v).ok


def test_smash_data_passes_and_round_trips(quad_f5):
    _, s, (hc, hd) = quad_f5
    assert s.validate().ok
    v = compose_herds(hc, hd, s)
    assert validate_herd(v).ok
    assert check_torsor_compatibility(v).ok
    assert extract_sigma(v, hc, hd).sigma == s.sigma


def test_recomposing_the_extracted_sigma_reproduces_the_shepherd():
    h = group_hopf(Q, [2])
    c, d = quadratic_coobject(Q, 2, h), quadratic_coobject(Q, 3, h)
    s = smash_sigma(c, d)
    hc, hd = s.herds
    v = compose_herds(hc, hd, s)
    again = compose_herds(hc, hd, extract_sigma(v, hc, hd))
    assert again.gamma_q == v.gamma_q


def test_scaled_sigma_fails_and_breaks_the_composite(quad_f5):
    _, s, (hc, hd) = quad_f5
    bad = SmashData(s.corC, s.corE, s.sigma.scale(2))
    rep = bad.validate()
    assert {c.anchor for c in rep.failures} == {"eq.sigmaE", "eq.varepsilonE"}
    assert all(c.witness is not None for c in rep.failures)
    v = compose_herds(hc, hd, bad, check=False)
    assert not validate_herd(v).ok


def test_composition_report_collects_everything(quad_f5):
    _, s, (hc, hd) = quad_f5
    rep = composition_report(hc, hd, s)
    assert rep.ok
    anchors = {c.anchor for c in rep.checks}
    assert {"eq.sigmaE", "eq.varepsilonE", "eq.torsorV"} <= anchors
    assert rep.data["dim V"] == 2

"""One test per acceptance criterion; each prints a PASS/FAIL line and records it for the summary."""

import json

from helpers import ACCEPTANCE, F5, FIELDS, FIXTURES, Q, orbit_count, random_linear_endo, random_tensor_instance
from herdkit import (
    BimoduleMap, Matrix, TensorProduct, affine_herd, base_coring_C, basepoint_report, canonical_map,
    check_composition_theorem, check_equaliser_coalgebra, check_tame, check_theta_iso, coherd_from_tame_herd,
    compare_rings, compose_coobjects, coring_from_herd_left, coring_from_herd_right, entwining_from_herd,
    find_coobject_iso, group_hopf, herd_from_coobject, left_entwining_from_herd, quadratic_coobject,
    reconstruct_group, reconstruct_rings, shepherd_from_galois, smash_sigma, tensor, trivial_coobject,
    validate_coherd, validate_formal_dual, validate_herd, validate_set_herd,
)
from herdkit.bimodule import induced_map
from herdkit.cli import load_scenario
from herdkit.hopf import ISO, NONE
from herdkit.linalg import kron
from herdkit.setherd import check_group, cyclic_group, find_group_isomorphism, klein_group, product_group

HERDS = ("trivial", "comatrix", "quadratic_q", "quadratic_f5")


def record(n, ok, text):
    ACCEPTANCE[n] = (ok, text)
    print(f"{'PASS' if ok else 'FAIL'} criterion {n}: {text}")
    assert ok, text


def anchors(rep):
    return {c.anchor for c in rep.failures}


def witnessed(rep):
    return bool(rep.failures) and all(c.witness is not None for c in rep.failures)


def test_criterion_01_herd_axioms_and_perturbations(herds):
    passing = all(validate_formal_dual(herds[k].dual).ok and validate_herd(herds[k]).ok for k in HERDS)
    predicted = True
    for k in HERDS:
        h = herds[k]
        d = h.dual
        for which, herd_anchor in (("ev", "eq.ev"), ("hatev", "eq.coev")):
            pert = d.with_maps(**{which: getattr(d, which).scale(2)})
            fd, hr = validate_formal_dual(pert), validate_herd(h.with_dual(pert))
            predicted &= anchors(fd) == {"diag.A", "diag.B"} and witnessed(fd)
            predicted &= anchors(hr) == {herd_anchor} and witnessed(hr)
        hr = validate_herd(h.with_gamma(h.gamma.scale(2)))
        predicted &= anchors(hr) == {"eq.coev", "eq.ev"} and witnessed(hr)
    from_file = validate_herd(load_scenario(FIXTURES / "comatrix_f5_perturbed.json").herd)
    predicted &= anchors(from_file) == {"eq.coev", "eq.ev"} and witnessed(from_file)
    record(1, passing and predicted,
           "fixtures pass the formal dual and herd diagrams; ev, hatev and shepherd perturbations "
           "fail exactly the predicted diagrams with witnesses")


def test_criterion_02_derived_corings_and_comodules(herds):
    ok = True
    for k in HERDS:
        cc, tc = coring_from_herd_right(herds[k])
        dd, td = coring_from_herd_left(herds[k])
        ok &= all(r.ok for r in (cc.validate(), dd.validate(), tc.validate(), td.validate()))
    record(2, ok, "corings T^(x)T and T(x)T^ are coassociative and counital; T is a comodule over both")


def test_criterion_03_tame_herds_entwine(herds):
    ok = True
    for k in HERDS:
        h = herds[k]
        ok &= check_tame(h).ok
        ok &= base_coring_C(h).validate().ok
        right, left = entwining_from_herd(h), left_entwining_from_herd(h)
        ok &= right.validate().ok and left.validate().ok and right.module.validate().ok
        theta = check_theta_iso(h)
        ok &= theta.ok and theta.data["dim_ThT"] == theta.data["dim_A"] * theta.data["dim_C"]
    q = check_theta_iso(herds["quadratic_q"]).data
    ok &= (q["dim_ThT"], q["dim_A"], q["dim_C"]) == (4, 2, 2)
    record(3, ok, "equaliser coring, both entwinings and the entwined module pass; theta bijective, 4 = 2*2")


def test_criterion_04_galois_round_trip(herds):
    ok = True
    for k in HERDS:
        h = herds[k]
        g = canonical_map(h)
        ok &= g.galois and g.report.ok
        back = shepherd_from_galois(h.dual, entwining_from_herd(h).module)
        ok &= back.gamma_q == h.gamma_q
    record(4, ok, "canonical map bijective; shepherd -> (psi, tau) -> shepherd is exact")


def test_criterion_05_coherds(herds):
    ok = True
    for k in HERDS:
        rep = validate_coherd(coherd_from_tame_herd(herds[k]))
        ok &= rep.ok and any(c.anchor == "cunit" and c.status == "pass" for c in rep.checks)
    record(5, ok, "coherds of tame fixtures pass every diagram including the C-unit law")


def test_criterion_06_reconstructed_rings():
    ok = True
    for field in FIELDS:
        h = herd_from_coobject(quadratic_coobject(field, 2))
        c = coherd_from_tame_herd(h)
        rings = reconstruct_rings(c)
        ok &= all(r.unital and r.dim == 2 and r.report.ok for r in rings)
        rep = compare_rings(c, h, rings)
        ok &= rep.ok
        for side, ring, target in (("A", rings[0], h.dual.A), ("B", rings[1], h.dual.B)):
            nu, inv = rep.data[f"nu_{side}"], rep.data[f"nu_prime_{side}"]
            ok &= nu @ inv == Matrix.identity(field, 2) and inv @ nu == Matrix.identity(field, 2)
            alg = ring.algebra
            for i in range(2):
                for j in range(2):
                    lhs = nu.apply(alg.multiply(alg.basis_vector(i), alg.basis_vector(j)))
                    ok &= tuple(lhs) == tuple(target.multiply(nu.col(i), nu.col(j)))
    record(6, ok, "A' and B' are unital of dimension 2 and nu_A, nu_B are ring isomorphisms onto H over Q and F5")


def test_criterion_07_equaliser_coalgebras():
    ok = True
    for field, values in ((Q, (1, 2)), (F5, (1, 2, 3, 4))):
        h = group_hopf(field, [2])
        for a in values:
            rep = check_equaliser_coalgebra(quadratic_coobject(field, a, h))
            ok &= rep.ok and rep.data["dim E"] == 2
    record(7, ok, "nu_C: C_a -> E is a bijective coalgebra map for a in {1,2} over Q and a in F5*")


def test_criterion_08_group_law_over_f5():
    h = group_hopf(F5, [2])
    cs = {a: quadratic_coobject(F5, a, h) for a in range(1, 5)}
    law = all(find_coobject_iso(compose_coobjects(cs[a], cs[b]), cs[a * b % 5]).status == ISO
              for a in cs for b in cs)
    t = trivial_coobject(h)
    res = {a: find_coobject_iso(cs[a], t) for a in cs}
    squares = {a for a in cs if res[a].status == ISO} == {1, 4}
    exhaustive = res[2].status == NONE and "exhaustive" in res[2].detail
    record(8, law and squares and exhaustive,
           "C_a (x)_H C_b = C_ab for all 16 pairs; C_a = H iff a in {1,4}; C_2 != H exhaustively")


def test_criterion_09_composition_theorem():
    ok = True
    for field, a, b in ((F5, 2, 2), (Q, 2, 3)):
        h = group_hopf(field, [2])
        c, d = quadratic_coobject(field, a, h), quadratic_coobject(field, b, h)
        s = smash_sigma(c, d)
        sv = s.validate()
        ok &= sv.ok and {"eq.sigmaE", "eq.varepsilonE"} <= {x.anchor for x in sv.checks}
        rep = check_composition_theorem(c, d)
        ok &= rep.ok and rep["extracted sigma equals smash sigma"].status == "pass"
        ok &= rep["(V (x) tau (x) V) Delta^2 equals the composed shepherd"].status == "pass"
    record(9, ok, "sigma passes its two diagrams; composed shepherd equals Delta^2 under the twist; "
                  "sigma extraction round trips for (C_2,C_2)/F5 and (C_2,C_3)/Q")


def test_criterion_10_set_herds():
    ok = True
    groups = [cyclic_group(n) for n in range(1, 13)] + [klein_group()]
    for g in groups:
        h = affine_herd(g)
        ok &= validate_set_herd(h).ok
        back, rep = reconstruct_group(h, 0)
        ok &= rep.ok and check_group(back).ok and find_group_isomorphism(back, g) is not None
        ok &= basepoint_report(h).ok
    for orders in ((24,), (2, 12), (2, 2, 6), (3, 6), (4, 4), (2, 2, 2, 2)):
        rep = basepoint_report(affine_herd(product_group(*orders)))
        ok &= all(c.status == "pass" for c in rep.checks)
    record(10, ok, "affine herds on Z/n (n <= 12) and the Klein four group pass; "
                   "reconstructed groups verified; basepoint independence up to order 24")


def test_criterion_11_randomised_infrastructure():
    ok = True
    for field in FIELDS:
        for seed in range(100):
            m, n, rng = random_tensor_instance(field, seed)
            tp = tensor([m.bimodule, n.bimodule], [m.alg])
            ok &= tp.projection @ tp.section == Matrix.identity(field, tp.dim)
            ok &= (tp.projection @ tp.relation_matrix()).is_zero()
            ok &= tp.dim == orbit_count(m, n) == tp.ambient_dim - tp.relations.dim
            f1, f2 = random_linear_endo(m.bimodule, rng, "right"), random_linear_endo(m.bimodule, rng, "right")
            g1, g2 = random_linear_endo(n.bimodule, rng, "left"), random_linear_endo(n.bimodule, rng, "left")
            ok &= (induced_map(f2.compose(f1), g2.compose(g1), tp, tp).matrix
                   == induced_map(f2, g2, tp, tp).matrix @ induced_map(f1, g1, tp, tp).matrix)
            ok &= induced_map(f1, g1, tp, tp).matrix == tp.projection @ kron(f1.matrix, g1.matrix) @ tp.section
            again = TensorProduct([m.bimodule, n.bimodule], [m.alg])
            ok &= again.projection == tp.projection and again.section == tp.section
            rep = lambda: BimoduleMap(m.bimodule, m.bimodule, f1.matrix, {"left", "right"}).check("def.herd")
            ok &= json.dumps(rep().to_dict(), sort_keys=True) == json.dumps(rep().to_dict(), sort_keys=True)
    record(11, ok, "tensor contracts, orbit dimensions, functoriality and report determinism "
                   "over 100 random instances per field")


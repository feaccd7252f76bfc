"""Composition of herds along a common middle algebra, through smash coproducts."""

from __future__ import annotations

from .bimodule import BOTH, BimoduleMap, ambient_map, flat_map, tensor, tensor_maps
from .coring import Coring, absorb_left, absorb_right
from .errors import InconsistencyError, InputError, NotBalancedError, PreconditionError
from .herd import FormalDualPair, HerdData, coring_from_herd_left, coring_from_herd_right, validate_formal_dual
from .herd import validate_herd
from .linalg import Matrix, kron, kron_all
from .report import Report, compare


class SmashData:
    """sigma: C (x)_A E -> E (x)_A C for two A-corings C and E."""

    def __init__(self, corC: Coring, corE: Coring, sigma: Matrix, name: str = "sigma"):
        if not corC.base.same_as(corE.base):
            raise InputError("smash data needs two corings over the same algebra")
        self.corC, self.corE = corC, corE
        self.sigma = sigma
        self.name = name
        if sigma.shape != (self.EC.dim, self.CE.dim):
            raise PreconditionError(f"{name} has shape {sigma.shape}, expected {(self.EC.dim, self.CE.dim)}")

    @property
    def base(self):
        return self.corC.base

    @property
    def CE(self):
        return tensor([self.corC.carrier, self.corE.carrier], [self.base])

    @property
    def EC(self):
        return tensor([self.corE.carrier, self.corC.carrier], [self.base])

    def validate(self) -> Report:
        rep = Report(f"smash coproduct {self.name}")
        C, E, a = self.corC, self.corE, self.base
        c, e, s = C.carrier, E.carrier, self.sigma
        ic, ie = C.identity(), E.identity()
        t = lambda *fs: tensor(list(fs), [a] * (len(fs) - 1))
        rep.extend(BimoduleMap(self.CE.result, self.EC.result, s, BOTH, self.name).check("eq.sigmaE"))

        def pent_left():
            lhs = tensor_maps(t(e, c), t(e, c, c), [(1, 1, ie), (1, 2, C.comul)]) @ s
            rhs = (tensor_maps(t(c, e, c), t(e, c, c), [(2, 2, s), (1, 1, ic)])
                   @ tensor_maps(t(c, c, e), t(c, e, c), [(1, 1, ic), (2, 2, s)])
                   @ tensor_maps(t(c, e), t(c, c, e), [(1, 2, C.comul), (1, 1, ie)]))
            return lhs, rhs

        def pent_right():
            lhs = tensor_maps(t(e, c), t(e, e, c), [(1, 2, E.comul), (1, 1, ic)]) @ s
            rhs = (tensor_maps(t(e, c, e), t(e, e, c), [(1, 1, ie), (2, 2, s)])
                   @ tensor_maps(t(c, e, e), t(e, c, e), [(2, 2, s), (1, 1, ie)])
                   @ tensor_maps(t(c, e), t(c, e, e), [(1, 1, ic), (1, 2, E.comul)]))
            return lhs, rhs

        am = C.base_module

        def counit_e():
            lhs = absorb_left(c, am) @ tensor_maps(t(e, c), t(am, c), [(1, 1, E.counit), (1, 1, ic)]) @ s
            rhs = absorb_right(c, am) @ tensor_maps(self.CE, t(c, am), [(1, 1, ic), (1, 1, E.counit)])
            return lhs, rhs

        def counit_c():
            lhs = absorb_right(e, am) @ tensor_maps(t(e, c), t(e, am), [(1, 1, ie), (1, 1, C.counit)]) @ s
            rhs = absorb_left(e, am) @ tensor_maps(self.CE, t(am, e), [(1, 1, C.counit), (1, 1, ie)])
            return lhs, rhs

        for name, anchor, fn in (("left pentagon", "eq.sigmaE", pent_left),
                                 ("right pentagon", "eq.sigmaE", pent_right),
                                 ("counit of E through sigma", "eq.varepsilonE", counit_e),
                                 ("counit of C through sigma", "eq.varepsilonE", counit_c)):
            try:
                lhs, rhs = fn()
            except NotBalancedError as err:
                rep.failed_check(name, anchor, str(err), err.witness)
                continue
            rep.add(compare(name, anchor, lhs, rhs))
        return rep


def _check_kills(name: str, flat: Matrix, rel: Matrix):
    out = flat @ rel
    for j in range(out.ncols):
        if any(out.col(j)):
            raise NotBalancedError(f"{name} is not balanced over the middle algebra",
                                   {"relation_index": j, "image": [flat.field.fmt(x) for x in out.col(j)]})


def compose_duals(t: FormalDualPair, p: FormalDualPair) -> FormalDualPair:
    """V = T (x)_A P with dual P^ (x)_A T^."""
    A = t.A
    if not p.B.same_as(A):
        raise InputError(f"cannot compose: {t.name} is right {A.name}, {p.name} is left {p.B.name}")
    f = t.field
    T, P, Th, Ph = t.T, p.T, t.Tdual, p.Tdual
    vt = tensor([T, P], [A])
    vh = tensor([Ph, Th], [A])
    V = vt.result.as_leaf(f"{T.name} (x) {P.name}")
    Vh = vh.result.as_leaf(f"{Ph.name} (x) {Th.name}")
    # ev_V(p^ (x) t^ (x) t (x) p) = ev_P(p^ (x) ev_T(t^ (x) t) p)
    ev_flat = p.ev @ kron(Ph.identity(), P.act_left_matrix() @ kron(t.ev, P.identity()))
    # hatev_V(t (x) p (x) p^ (x) t^) = hatev_T(t hatev_P(p (x) p^) (x) t^)
    hatev_flat = t.hatev @ kron(T.act_right_matrix() @ kron(T.identity(), p.hatev), Th.identity())
    _check_kills("ev_V", ev_flat, kron(vh.relation_matrix(), Matrix.identity(f, vt.ambient_dim)))
    _check_kills("ev_V", ev_flat, kron(Matrix.identity(f, vh.ambient_dim), vt.relation_matrix()))
    _check_kills("hatev_V", hatev_flat, kron(vt.relation_matrix(), Matrix.identity(f, vh.ambient_dim)))
    _check_kills("hatev_V", hatev_flat, kron(Matrix.identity(f, vt.ambient_dim), vh.relation_matrix()))
    ev = ev_flat @ kron(vh.section, vt.section)
    hatev = hatev_flat @ kron(vt.section, vh.section)
    out = FormalDualPair(V, Vh, p.R_map, t.S_map, ev, hatev, f"{t.name} o {p.name}")
    out.factors = (t, p)
    out.tensors = (vt, vh)
    return out


def herd_corings(t: HerdData, p: HerdData):
    """The A-corings T^ (x)_S T of t and P (x)_Z P^ of p."""
    return coring_from_herd_right(t)[0], coring_from_herd_left(p)[0]


def _six(t: HerdData, p: HerdData):
    dt, dp = t.dual, p.dual
    x1 = tensor([dt.T, dt.Th_AS, dt.T_SA, dp.T_BR, dp.Th_RB, dp.T], [dt.A, dt.S, dt.A, dp.R, dt.A])
    x2 = tensor([dt.T, dp.T_BR, dp.Th_RB, dt.Th_AS, dt.T_SA, dp.T], [dt.A, dp.R, dt.A, dt.S, dt.A])
    return x1, x2


def compose_herds(t: HerdData, p: HerdData, s: SmashData, check: bool = True) -> HerdData:
    """gamma_V = (T (x) sigma (x) P)(gamma_T,A (x) gamma_P,A) on V = T (x)_A P."""
    if check:
        rep = s.validate()
        if not rep.ok:
            raise PreconditionError(f"smash data invalid: {rep.failures[0].name}")
    dual = compose_duals(t.dual, p.dual)
    vt, vh = dual.tensors
    x1, x2 = _six(t, p)
    first = tensor_maps(vt, x1, [(1, 3, t.gamma_A), (1, 3, p.gamma_B)], name="gamma_T (x) gamma_P")
    sig_amb = s.EC.result.flat_section() @ s.sigma @ s.CE.result.flat_projection()
    it, ip = t.dual.T.identity(), p.dual.T.identity()
    mid = tensor_maps(x1, x2, [(1, 1, it), (4, 4, sig_amb, True), (1, 1, ip)], name="T (x) sigma (x) P")
    target = dual.TThT
    regroup = tensor_maps(x2, target, [(2, 1, dual.T.identity()), (2, 1, dual.Tdual.identity()),
                                       (2, 1, dual.T.identity())], name="regroup")
    gamma_q = regroup @ mid @ first
    v = HerdData(dual, target.section @ gamma_q, dual.name)
    v.smash = s
    v.factors = (t, p)
    return v


def check_torsor_compatibility(v: HerdData) -> Report:
    """Both compatibilities of gamma_V with gamma_T,A (x) P and T (x) gamma_P,A."""
    t, p = v.factors
    dt, dp = t.dual, p.dual
    rep = Report("compatibility of the composed shepherd")
    vt, _ = v.dual.tensors
    _, x2 = _six(t, p)
    T, P, Th, Ph = dt.T, dp.T, dt.Tdual, dp.Tdual
    expand = tensor_maps(v.dual.TThT, x2, [(1, 2, v.dual.T.identity()), (1, 2, v.dual.Tdual.identity()),
                                           (1, 2, v.dual.T.identity())], name="expand")
    g6 = expand @ v.gamma_q
    y = tensor([T, dt.Th_AS, dt.T_SA, P], [dt.A, dt.S, dt.A])
    z = tensor([T, dp.T_BR, dp.Th_RB, P], [dt.A, dp.R, dt.A])
    try:
        lhs = tensor_maps(vt, y, [(1, 3, t.gamma_A), (1, 1, P.identity())])
        flat = kron_all(T.act_right_matrix() @ kron(T.identity(), dp.hatev), Th.identity(), T.identity(), P.identity())
        rep.add(compare("hatev_P applied to gamma_V", "eq.torsorV", lhs, ambient_map(x2, y, flat) @ g6))
        lhs = tensor_maps(vt, z, [(1, 1, T.identity()), (1, 3, p.gamma_B)])
        flat = kron_all(T.identity(), P.identity(), Ph.identity(), P.act_left_matrix() @ kron(dt.ev, P.identity()))
        rep.add(compare("ev_T applied to gamma_V", "eq.torsorV", lhs, ambient_map(x2, z, flat) @ g6))
    except NotBalancedError as e:
        rep.failed_check("compatibility maps balanced", "eq.torsorV", str(e), e.witness)
    return rep


def extract_sigma(v: HerdData, t: HerdData, p: HerdData, check: bool = True) -> SmashData:
    """sigma = (ev_T (x) E (x) C (x) hatev_P)(T^ (x) gamma_V (x) P^) for V presented as T (x)_A P."""
    dt, dp = t.dual, p.dual
    T, P, Th, Ph = dt.T, dp.T, dt.Tdual, dp.Tdual
    dual = v.dual
    vt, vh = getattr(dual, "tensors", (tensor([T, P], [dt.A]), tensor([Ph, Th], [dt.A])))
    if dual.T.dim != vt.dim or dual.Tdual.dim != vh.dim:
        raise InputError("the herd is not presented as the given tensor product")
    g6 = kron_all(vt.section, vh.section, vt.section) @ v.gamma_rep @ vt.projection
    flat_eval = kron_all(P.act_left_matrix() @ kron(dt.ev, P.identity()), Ph.identity(), Th.identity(),
                         T.act_right_matrix() @ kron(T.identity(), dp.hatev))
    flat = flat_eval @ kron_all(Th.identity(), g6, Ph.identity())
    corC, corE = herd_corings(t, p)
    ce = tensor([corC.carrier, corE.carrier], [dt.A])
    ec = tensor([corE.carrier, corC.carrier], [dt.A])
    sigma = flat_map(ce, ec, flat, name="extracted sigma")
    s = SmashData(corC, corE, sigma, "extracted sigma")
    if check:
        rep = s.validate()
        if not rep.ok:
            bad = rep.failures[0]
            raise InconsistencyError(f"{bad.anchor}: {bad.name} fails for the extracted sigma", bad.witness)
        s.report = rep
    return s


def composition_report(t: HerdData, p: HerdData, s: SmashData) -> Report:
    """Validate sigma, compose, validate the composite and round-trip sigma."""
    rep = Report(f"composition of {t.name} and {p.name}")
    srep = s.validate()
    rep.extend(srep)
    if not srep.ok:
        return rep
    v = compose_herds(t, p, s, check=False)
    rep.extend(validate_formal_dual(v.dual))
    rep.extend(validate_herd(v))
    rep.extend(check_torsor_compatibility(v))
    try:
        back = extract_sigma(v, t, p)
        rep.add(compare("extracted sigma equals sigma", "thm.composition", back.sigma, s.sigma))
        again = compose_herds(t, p, back, check=False)
        rep.add(compare("recomposed shepherd equals gamma_V", "thm.composition", again.gamma_q, v.gamma_q))
    except InconsistencyError as e:
        rep.failed_check("sigma extracted from gamma_V", "thm.composition", str(e), e.witness)
    rep.data["herd"] = v
    rep.data["dim V"] = v.dual.T.dim
    return rep

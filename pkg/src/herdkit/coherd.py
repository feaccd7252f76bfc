"""Bicomodule coherds, the coherd of a tame herd, and the rings it reconstructs."""

from __future__ import annotations

from functools import cached_property

from .algebra import FinDimAlgebra, validate_algebra
from .bimodule import (
    BOTH, LEFT, RIGHT, Bimodule, ambient_map, corestrict, map_solution_space, quotient_module, submodule,
    tensor, tensor_maps,
)
from .coring import Comodule, Coring, absorb_left, absorb_right, base_coring_C, base_coring_D
from .errors import InconsistencyError, NotBalancedError, PreconditionError
from .linalg import Matrix, Subspace, intersect, inverse, kernel_basis, kron, kron_all, rank, solve_matrix
from .report import Report, compare


class CoherdData:
    """X a D-C bicomodule (S-R bimodule), Xbar a C-D bicomodule (R-S bimodule).

    rho_XC: X -> X (x)_R C, rho_DX: X -> D (x)_S X, rho_CXbar: Xbar -> C (x)_R Xbar,
    rho_XbarD: Xbar -> Xbar (x)_S D, cov: C -> Xbar (x)_S X, covbar: D -> X (x)_R Xbar,
    chi: X (x)_R Xbar (x)_S X -> X.
    """

    def __init__(self, corC: Coring, corD: Coring, X: Bimodule, Xbar: Bimodule,
                 rho_XC: Matrix, rho_DX: Matrix, rho_CXbar: Matrix, rho_XbarD: Matrix,
                 cov: Matrix, covbar: Matrix, chi: Matrix, name: str = ""):
        self.corC, self.corD = corC, corD
        self.X, self.Xbar = X, Xbar
        self.rho_XC, self.rho_DX = rho_XC, rho_DX
        self.rho_CXbar, self.rho_XbarD = rho_CXbar, rho_XbarD
        self.cov, self.covbar, self.chi = cov, covbar, chi
        self.name = name
        shapes = {
            "rho_XC": (rho_XC, self.t(X, corC.carrier), X),
            "rho_DX": (rho_DX, self.t(corD.carrier, X), X),
            "rho_CXbar": (rho_CXbar, self.t(corC.carrier, Xbar), Xbar),
            "rho_XbarD": (rho_XbarD, self.t(Xbar, corD.carrier), Xbar),
            "cov": (cov, self.t(Xbar, X), corC.carrier),
            "covbar": (covbar, self.t(X, Xbar), corD.carrier),
            "chi": (chi, X, self.t(X, Xbar, X)),
        }
        for label, (m, dst, src) in shapes.items():
            exp = (dst.dim, src.dim)
            if m.shape != exp:
                raise PreconditionError(f"coherd {name}: {label} has shape {m.shape}, expected {exp}")

    @property
    def R(self) -> FinDimAlgebra:
        return self.corC.base

    @property
    def S(self) -> FinDimAlgebra:
        return self.corD.base

    def t(self, *factors):
        """Tensor product of the given factors, the junction algebra read off each factor."""
        return tensor(list(factors), [f.right_alg for f in factors[:-1]])

    @property
    def field(self):
        return self.X.field

    def comodules(self):
        c, d = self.corC, self.corD
        return [Comodule(c, self.X, self.rho_XC, RIGHT, "X"), Comodule(d, self.X, self.rho_DX, LEFT, "X"),
                Comodule(c, self.Xbar, self.rho_CXbar, LEFT, "Xbar"),
                Comodule(d, self.Xbar, self.rho_XbarD, RIGHT, "Xbar")]

    @cached_property
    def mu_X(self) -> Matrix:
        """Xbar (x) X (x) Xbar (x) X -> Xbar (x) X, x^ (x) chi."""
        t = self.t
        return tensor_maps(t(self.Xbar, self.X, self.Xbar, self.X), t(self.Xbar, self.X),
                           [(1, 1, self.Xbar.identity()), (3, 1, self.chi)], name="Xbar (x) chi")

    @cached_property
    def mu_Xbar(self) -> Matrix:
        """X (x) Xbar (x) X (x) Xbar -> X (x) Xbar, chi (x) x^."""
        t = self.t
        return tensor_maps(t(self.X, self.Xbar, self.X, self.Xbar), t(self.X, self.Xbar),
                           [(3, 1, self.chi), (1, 1, self.Xbar.identity())], name="chi (x) Xbar")


def _check(rep, name, anchor, fn):
    try:
        lhs, rhs = fn()
    except NotBalancedError as e:
        rep.failed_check(name, anchor, str(e), e.witness)
        return
    rep.add(compare(name, anchor, lhs, rhs))


def validate_coherd(c: CoherdData) -> Report:
    rep = Report(f"coherd {c.name}")
    t = c.t
    X, Xb, C, D = c.X, c.Xbar, c.corC.carrier, c.corD.carrier
    ix, ixb, ic, id_ = X.identity(), Xb.identity(), C.identity(), D.identity()
    for m in c.comodules():
        sub = m.validate()
        for ch in sub.checks:
            rep.add(type(ch)(f"{m.name} {m.side} {ch.name}", ch.anchor, ch.status, ch.witness, ch.detail))
    _check(rep, "coactions of X commute", "bicomod", lambda: (
        tensor_maps(t(D, X), t(D, X, C), [(1, 1, id_), (1, 2, c.rho_XC)]) @ c.rho_DX,
        tensor_maps(t(X, C), t(D, X, C), [(1, 2, c.rho_DX), (1, 1, ic)]) @ c.rho_XC))
    _check(rep, "coactions of Xbar commute", "bicomod", lambda: (
        tensor_maps(t(C, Xb), t(C, Xb, D), [(1, 1, ic), (1, 2, c.rho_XbarD)]) @ c.rho_CXbar,
        tensor_maps(t(Xb, D), t(C, Xb, D), [(1, 2, c.rho_CXbar), (1, 1, id_)]) @ c.rho_XbarD))
    # cov is C-bicolinear, covbar D-bicolinear
    _check(rep, "cov left colinear", "companion", lambda: (
        tensor_maps(t(C, C), t(C, Xb, X), [(1, 1, ic), (1, 2, c.cov)]) @ c.corC.comul,
        tensor_maps(t(Xb, X), t(C, Xb, X), [(1, 2, c.rho_CXbar), (1, 1, ix)]) @ c.cov))
    _check(rep, "cov right colinear", "companion", lambda: (
        tensor_maps(t(C, C), t(Xb, X, C), [(1, 2, c.cov), (1, 1, ic)]) @ c.corC.comul,
        tensor_maps(t(Xb, X), t(Xb, X, C), [(1, 1, ixb), (1, 2, c.rho_XC)]) @ c.cov))
    _check(rep, "covbar left colinear", "companion", lambda: (
        tensor_maps(t(D, D), t(D, X, Xb), [(1, 1, id_), (1, 2, c.covbar)]) @ c.corD.comul,
        tensor_maps(t(X, Xb), t(D, X, Xb), [(1, 2, c.rho_DX), (1, 1, ixb)]) @ c.covbar))
    _check(rep, "covbar right colinear", "companion", lambda: (
        tensor_maps(t(D, D), t(X, Xb, D), [(1, 2, c.covbar), (1, 1, id_)]) @ c.corD.comul,
        tensor_maps(t(X, Xb), t(X, Xb, D), [(1, 1, ix), (1, 2, c.rho_XbarD)]) @ c.covbar))
    _check(rep, "companion diagram for X", "diag.X", lambda: (
        tensor_maps(t(X, C), t(X, Xb, X), [(1, 1, ix), (1, 2, c.cov)]) @ c.rho_XC,
        tensor_maps(t(D, X), t(X, Xb, X), [(1, 2, c.covbar), (1, 1, ix)]) @ c.rho_DX))
    _check(rep, "companion diagram for Xbar", "diag.oX", lambda: (
        tensor_maps(t(C, Xb), t(Xb, X, Xb), [(1, 2, c.cov), (1, 1, ixb)]) @ c.rho_CXbar,
        tensor_maps(t(Xb, D), t(Xb, X, Xb), [(1, 1, ixb), (1, 2, c.covbar)]) @ c.rho_XbarD))
    r_mod, s_mod = c.corC.base_module, c.corD.base_module
    _check(rep, "chi after cov is the counit of C", "diag.C", lambda: (
        c.chi @ tensor_maps(t(X, C), t(X, Xb, X), [(1, 1, ix), (1, 2, c.cov)]),
        absorb_right(X, r_mod) @ tensor_maps(t(X, C), t(X, r_mod), [(1, 1, ix), (1, 1, c.corC.counit)])))
    _check(rep, "chi after covbar is the counit of D", "diag.D", lambda: (
        c.chi @ tensor_maps(t(D, X), t(X, Xb, X), [(1, 2, c.covbar), (1, 1, ix)]),
        absorb_left(X, s_mod) @ tensor_maps(t(D, X), t(s_mod, X), [(1, 1, c.corD.counit), (1, 1, ix)])))
    five = t(X, Xb, X, Xb, X)
    _check(rep, "chi coassociative", "diag.coass", lambda: (
        c.chi @ tensor_maps(five, t(X, Xb, X), [(3, 1, c.chi), (1, 1, ixb), (1, 1, ix)]),
        c.chi @ tensor_maps(five, t(X, Xb, X), [(1, 1, ix), (1, 1, ixb), (3, 1, c.chi)])))
    # C-unit law on Xbar (x) X
    xbx = t(Xb, X)
    _check(rep, "cov is a left C-unit", "cunit", lambda: (
        c.mu_X @ tensor_maps(t(C, Xb, X), t(Xb, X, Xb, X), [(1, 2, c.cov), (2, 2, xbx.result.identity())])
        @ tensor_maps(xbx, t(C, Xb, X), [(1, 2, c.rho_CXbar), (1, 1, ix)]),
        xbx.result.identity()))
    _check(rep, "cov is a right C-unit", "cunit", lambda: (
        c.mu_X @ tensor_maps(t(Xb, X, C), t(Xb, X, Xb, X), [(2, 2, xbx.result.identity()), (1, 2, c.cov)])
        @ tensor_maps(xbx, t(Xb, X, C), [(1, 1, ixb), (1, 2, c.rho_XC)]),
        xbx.result.identity()))
    return rep


def coherd_from_tame_herd(h, check: bool = True) -> CoherdData:
    from .herd import check_tame
    d = h.dual
    tame = check_tame(h)
    if not tame.ok:
        raise PreconditionError(f"herd {h.name} is not tame: {tame.failures[0].name}")
    corC, corD = base_coring_C(h), base_coring_D(h)
    R, S = d.R, d.S
    Cc, Dc = corC.carrier, corD.carrier
    ith, it = d.Tdual.identity(), d.T.identity()
    ambient = d.ThTTh
    c_th = tensor([Cc, d.Th_RS], [R])
    th_d = tensor([d.Th_RS, Dc], [S])
    emb_c = tensor_maps(c_th, ambient, [(1, 2, corC.inclusion), (1, 1, ith)], name="C (x) T^")
    emb_d = tensor_maps(th_d, ambient, [(1, 1, ith), (1, 2, corD.inclusion)], name="T^ (x) D")
    u, v = Subspace.column_space(emb_c), Subspace.column_space(emb_d)
    sub = intersect(u, v)
    Xbar = submodule(ambient.result.restrict(left=d.R_map, right=d.S_map), sub, BOTH, "Tbar")
    incl = sub.inclusion() if sub.dim else Matrix.zeros(d.field, ambient.dim, 0)
    X = d.T_SR
    # the same formula x^ (x) gamma(y) (x) y^ gives both coactions on Tbar
    five = tensor([d.Th_RS, d.T_SR, d.Th_RS, d.T_SR, d.Th_RS], [S, R, S, R])
    vals = ambient_map(ambient, five, kron_all(ith, h.gamma_rep, ith), name="T^ (x) gamma (x) T^") @ incl
    t = lambda *fs: tensor(list(fs), [f.right_alg for f in fs[:-1]])
    rho_cxb = corestrict(vals, tensor_maps(t(Cc, Xbar), five, [(1, 2, corC.inclusion), (1, 3, incl)]),
                         "left coaction on Tbar")
    rho_xbd = corestrict(vals, tensor_maps(t(Xbar, Dc), five, [(1, 3, incl), (1, 2, corD.inclusion)]),
                         "right coaction on Tbar")
    g = h.gamma_q
    rho_xc = corestrict(g, tensor_maps(t(X, Cc), d.TThT, [(1, 1, it), (1, 2, corC.inclusion)]), "coaction T -> T C")
    rho_dx = corestrict(g, tensor_maps(t(Dc, X), d.TThT, [(1, 2, corD.inclusion), (1, 1, it)]), "coaction T -> D T")
    four_c = tensor([d.Th_RS, d.T_SR, d.Th_RS, d.T_SR], [S, R, S])
    vc = ambient_map(d.ThT, four_c, kron(ith, h.gamma_rep)) @ corC.inclusion
    cov = corestrict(vc, tensor_maps(t(Xbar, X), four_c, [(1, 3, incl), (1, 1, it)]), "cov")
    four_d = tensor([d.T_SR, d.Th_RS, d.T_SR, d.Th_RS], [R, S, R])
    vd = ambient_map(d.TTh, four_d, kron(h.gamma_rep, ith)) @ corD.inclusion
    covbar = corestrict(vd, tensor_maps(t(X, Xbar), four_d, [(1, 1, it), (1, 3, incl)]), "covbar")
    # chi(x (x) x^ (x) y (x) y^ (x) z) = hatev(x (x) x^) y ev(y^ (x) z)
    T = d.T
    chi_flat = (T.act_right_matrix() @ kron(T.act_left_matrix(), Matrix.identity(d.field, d.A.dim))
                @ kron_all(d.hatev, it, d.ev))
    five_t = tensor([d.T_SR, d.Th_RS, d.T_SR, d.Th_RS, d.T_SR], [R, S, R, S])
    chi5 = ambient_map(five_t, X, chi_flat, name="chi")
    chi = chi5 @ tensor_maps(t(X, Xbar, X), five_t, [(1, 1, it), (1, 3, incl), (1, 1, it)])
    c = CoherdData(corC, corD, X, Xbar, rho_xc, rho_dx, rho_cxb, rho_xbd, cov, covbar, chi,
                   f"coherd of {h.name}")
    c.inclusion = incl
    c.herd = h
    c.tbar_c = u
    c.tbar_d = v
    c.tbar = sub
    if check:
        rep = validate_coherd(c)
        if not rep.ok:
            bad = rep.failures[0]
            raise InconsistencyError(f"{bad.anchor}: {bad.name} fails", bad.witness)
        c.report = rep
    return c


class ReconstructedRing:
    def __init__(self, carrier, mul, unit, projection, section, algebra, report):
        self.carrier = carrier
        self.mul = mul
        self.unit = unit
        self.projection = projection
        self.section = section
        self.algebra = algebra
        self.report = report

    @property
    def dim(self) -> int:
        return self.carrier.dim

    @property
    def unital(self) -> bool:
        return self.unit is not None


def _reconstruct(c: CoherdData, left: bool) -> ReconstructedRing:
    t = c.t
    X, Xb = c.X, c.Xbar
    if left:
        cor, base_ring, label = c.corC, c.R, "A'"
        pair = t(Xb, X)
        src = t(cor.carrier, Xb, X)
        leg1 = c.mu_X @ tensor_maps(src, t(Xb, X, Xb, X), [(1, 2, c.cov), (2, 2, pair.result.identity())])
        leg2 = absorb_left(pair.result, cor.base_module) @ tensor_maps(
            src, t(cor.base_module, pair.result), [(1, 1, cor.counit), (2, 1, pair.result.identity())])
        mu_pair = c.mu_X
        quad = t(Xb, X, Xb, X)
        cov = c.cov
    else:
        cor, base_ring, label = c.corD, c.S, "B'"
        pair = t(X, Xb)
        src = t(X, Xb, cor.carrier)
        leg1 = c.mu_Xbar @ tensor_maps(src, t(X, Xb, X, Xb), [(2, 2, pair.result.identity()), (1, 2, c.covbar)])
        leg2 = absorb_right(pair.result, cor.base_module) @ tensor_maps(
            src, t(pair.result, cor.base_module), [(2, 1, pair.result.identity()), (1, 1, cor.counit)])
        mu_pair = c.mu_Xbar
        quad = t(X, Xb, X, Xb)
        cov = c.covbar
    rep = Report(f"reconstructed ring {label}")
    omega = leg1 - leg2
    rel = Subspace.column_space(omega)
    q, proj, sec = quotient_module(pair.result, rel, label)
    qq = t(q, q)
    mul = proj @ mu_pair @ tensor_maps(qq, quad, [(1, 2, sec), (1, 2, sec)], name=f"{label} (x) {label}")
    try:
        pp = tensor_maps(quad, qq, [(2, 1, proj), (2, 1, proj)], name="pi (x) pi")
        rep.add(compare("multiplication well defined", "ring.mul", mul @ pp, proj @ mu_pair))
    except NotBalancedError as e:
        rep.failed_check("multiplication well defined", "ring.mul", str(e), e.witness)
    qqq = t(q, q, q)
    iq = q.identity()
    rep.add(compare("multiplication associative", "ring.mul",
                    mul @ tensor_maps(qqq, qq, [(2, 1, mul), (1, 1, iq)]),
                    mul @ tensor_maps(qqq, qq, [(1, 1, iq), (2, 1, mul)])))
    # unit: pi cov = unit eps
    target = proj @ cov
    space = map_solution_space(q.field, (q.dim, base_ring.dim), [([(None, cor.counit)], target)])
    unit = None
    algebra = None
    if space is None:
        rep.warn("unit exists", "ring.unit", "no unit map solves pi cov = unit eps; ring is not unital")
    else:
        unit = space.particular
        if space.dim:
            rep.warn("unit unique", "ring.unit", f"{space.dim} free parameters; pivot solution used")
        u = unit @ base_ring.unit_column
        lu = mul @ tensor_maps(tensor([q], []), qq, [(0, 1, u), (1, 1, iq)])
        ru = mul @ tensor_maps(tensor([q], []), qq, [(1, 1, iq), (0, 1, u)])
        rep.add(compare("left unit law", "ring.unit", lu, iq))
        rep.add(compare("right unit law", "ring.unit", ru, iq))
        n = q.dim
        consts = []
        for i in range(n):
            row = []
            for j in range(n):
                v = qq.projection @ kron(Matrix.unit_column(q.field, n, i), Matrix.unit_column(q.field, n, j))
                row.append((mul @ v).col(0))
            consts.append(row)
        algebra = FinDimAlgebra(q.field, n, consts, u.col(0), label)
        sub = validate_algebra(algebra)
        rep.expect("structure constants define an algebra", "ring.mul", sub.ok)
    rep.data.update({"dim": q.dim, "unital": unit is not None})
    ring = ReconstructedRing(q, mul, unit, proj, sec, algebra, rep)
    ring.pair = pair
    ring.omega = omega
    return ring


def reconstruct_rings(c: CoherdData):
    return _reconstruct(c, True), _reconstruct(c, False)


def compute_h_maps(h, c: CoherdData) -> Report:
    """h: Tbar -> T^ and h1: Tbar -> Hom^C(T, C (x)_R A), with bijectivity."""
    from .coring import entwining_from_herd
    d = h.dual
    f = d.field
    rep = Report("maps out of Tbar")
    ith = d.Tdual.identity()
    flat_tbar = d.ThTTh.section @ c.inclusion
    via_ev = d.Tdual.act_left_matrix() @ kron(d.ev, ith) @ flat_tbar
    via_hatev = d.Tdual.act_right_matrix() @ kron(ith, d.hatev) @ flat_tbar
    rep.add(compare("h via ev equals h via hatev", "thm.barT", via_ev, via_hatev))
    hb = via_ev.nrows == via_ev.ncols and inverse(via_ev) is not None
    rep.data["h"] = via_ev
    rep.data["h_bijective"] = hb
    # Hom^C(T, C (x)_R A): right A-linear, right C-colinear
    ent = entwining_from_herd(h, c.corC)
    cor = c.corC
    ca = ent.CA
    ia, ic = Matrix.identity(f, d.A.dim), cor.identity()
    cca = tensor([cor.carrier, cor.carrier, ent.A_RR], [d.R, d.R])
    cac = tensor([cor.carrier, ent.A_RR, cor.carrier], [d.R, d.R])
    rho_ca = (tensor_maps(cca, cac, [(1, 1, ic), (2, 2, ent.psi)])
              @ tensor_maps(ca, cca, [(1, 2, cor.comul), (1, 1, ia)]))
    tc = tensor([d.T_SR, cor.carrier], [d.R])
    rho_t = ent.module.coaction
    cons = []
    for i in range(d.A.dim):
        act_ca = tensor_maps(ca, ca, [(1, 1, ic), (1, 1, d.A.right_mult[i])], name="right A-action")
        cons.append(([(None, d.T.right_action[i]), (act_ca.scale(-1), None)], None))

    def colinear(phi, _=None):
        return tensor_maps(tc, cac, [(1, 2, phi), (1, 1, ic)], check=False) @ rho_t

    cons.append(([(rho_ca, None), lambda phi: colinear(phi).scale(-1)], None))
    space = map_solution_space(f, (ca.dim, d.T.dim), cons)
    vecs = [[x for r in m.rows for x in r] for m in space.directions]
    hom = Subspace.span(f, ca.dim * d.T.dim, vecs)
    # h1(xbar)(y) = x^ (x) x (x) ev(y^ (x) y)
    tta = tensor([d.Th_RS, d.T_SR, ent.A_RR], [d.S, d.R])
    emb = tensor_maps(ca, tta, [(1, 2, cor.inclusion), (1, 1, ia)])
    flat = tta.projection @ kron_all(ith, d.T.identity(), d.ev)
    cols = []
    inside = True
    for j in range(c.inclusion.ncols):
        val = flat @ kron(flat_tbar.submatrix(cols=[j]), d.T.identity())
        try:
            m = corestrict(val, emb, "h1 value")
        except InconsistencyError:
            inside = False
            break
        v = [x for r in m.rows for x in r]
        if not hom.contains(v):
            inside = False
            break
        cols.append(hom.coordinates(v))
    rep.expect("h1 lands in colinear maps", "thm.barT", inside)
    h1 = Matrix.from_columns(f, cols, hom.dim) if inside else None
    h1b = inside and h1.nrows == h1.ncols and inverse(h1) is not None
    rep.expect("h1 bijective", "thm.barT", h1b,
               detail=f"dim Tbar = {c.inclusion.ncols}, dim Hom = {hom.dim}")
    rep.data.update({"h1": h1, "h1_bijective": h1b, "hom_dim": hom.dim, "tbar_dim": c.inclusion.ncols})
    return rep


def _flat_pair(c: CoherdData, ring: ReconstructedRing, left: bool) -> Matrix:
    d = c.herd.dual
    flat_tbar = d.ThTTh.section @ c.inclusion
    it = d.T.identity()
    lift = kron(flat_tbar, it) if left else kron(it, flat_tbar)
    return lift @ ring.pair.section


def _compare_one(c: CoherdData, ring: ReconstructedRing, left: bool, rep: Report):
    d = c.herd.dual
    f = d.field
    side = "A" if left else "B"
    alg = d.A if left else d.B
    base_map = d.R_map if left else d.S_map
    pair_ev = (alg.mult_matrix @ kron(d.ev, d.ev) if left
               else alg.mult_matrix @ kron(d.hatev, d.hatev)) @ _flat_pair(c, ring, left)
    rep.add(compare(f"evbar kills the relations ({side}')", "thm.reconstr", pair_ev @ ring.omega,
                    Matrix.zeros(f, alg.dim, ring.omega.ncols)))
    nu = pair_ev @ ring.section
    rep.data[f"nu_{side}"] = nu
    qq = tensor([ring.carrier, ring.carrier], [ring.carrier.right_alg])
    rep.add(compare(f"nu_{side} multiplicative", "thm.reconstr", nu @ ring.mul,
                    alg.mult_matrix @ kron(nu, nu) @ qq.section))
    if ring.unit is not None:
        rep.add(compare(f"nu_{side} preserves units", "thm.reconstr", nu @ ring.unit, base_map.matrix))
    injective = rank(nu) == nu.ncols
    surjective = rank(nu) == nu.nrows
    rep.data[f"nu_{side}_injective"] = injective
    rep.data[f"nu_{side}_surjective"] = surjective
    if not surjective:
        rep.warn(f"nu_{side} bijective", "thm.reconstr", "evbar is not surjective; no inverse built")
        return
    pre = solve_matrix(pair_ev, Matrix.identity(f, alg.dim))
    if pre is None:
        raise InconsistencyError(f"no preimage under evbar for {side}")
    ker = kernel_basis(pair_ev)
    inv = ring.projection @ pre
    if ker.dim:
        shift = ker.inclusion() @ Matrix.from_rows(f, [[1] * alg.dim for _ in range(ker.dim)])
        other = ring.projection @ (pre + shift)
    else:
        other = inv
    rep.add(compare(f"nu'_{side} independent of the preimage", "thm.reconstr", inv, other))
    rep.add(compare(f"nu_{side} nu'_{side} = id", "thm.reconstr", nu @ inv, Matrix.identity(f, alg.dim)))
    rep.add(compare(f"nu'_{side} nu_{side} = id", "thm.reconstr", inv @ nu, ring.carrier.identity()))
    rep.data[f"nu_prime_{side}"] = inv


def compare_rings(c: CoherdData, h=None, rings=None) -> Report:
    """The ring maps nu_A: A' -> A and nu_B: B' -> B, with inverses built from evbar-preimages."""
    h = h or c.herd
    a_ring, b_ring = rings or reconstruct_rings(c)
    rep = Report("comparison with the base rings")
    c.herd = h
    rep.data["tbar_is_C_tensor"] = c.tbar == c.tbar_c
    rep.data["tbar_is_D_tensor"] = c.tbar == c.tbar_d
    _compare_one(c, a_ring, True, rep)
    _compare_one(c, b_ring, False, rep)
    return rep

"""Corings, comodules and entwinings; the equaliser corings of a herd and the Galois map."""

from __future__ import annotations

from functools import cached_property

from .algebra import FinDimAlgebra
from .bimodule import (
    BOTH, LEFT, RIGHT, Bimodule, BimoduleMap, ambient_map, corestrict, regular_bimodule,
    submodule, tensor, tensor_maps,
)
from .errors import InconsistencyError, NotBalancedError, PreconditionError
from .linalg import Matrix, Subspace, inverse, kernel_basis, kron, kron_all, matrix_solution_space, rank
from .report import Report, compare


def _base_modules(alg: FinDimAlgebra):
    # one regular bimodule per algebra object, so tensor products get cached consistently
    cache = _base_modules.cache
    if id(alg) not in cache:
        cache[id(alg)] = (alg, regular_bimodule(alg))
    return cache[id(alg)][1]


_base_modules.cache = {}


def base_module(alg: FinDimAlgebra) -> Bimodule:
    return _base_modules(alg)


def absorb_left(m: Bimodule, alg_module: Bimodule) -> Matrix:
    """alg (x)_alg M -> M."""
    tp = tensor([alg_module, m], [m.left_alg])
    return ambient_map(tp, m, m.act_left_matrix(), name=f"absorb into {m.name}")


def absorb_right(m: Bimodule, alg_module: Bimodule) -> Matrix:
    """M (x)_alg alg -> M."""
    tp = tensor([m, alg_module], [m.right_alg])
    return ambient_map(tp, m, m.act_right_matrix(), name=f"absorb into {m.name}")


class Coring:
    """A coalgebra in base-bimodules."""

    def __init__(self, base: FinDimAlgebra, carrier: Bimodule, comul: Matrix, counit: Matrix,
                 name: str = ""):
        self.base = base
        self.carrier = carrier
        self.comul = comul
        self.counit = counit
        self.name = name or carrier.name
        self.base_module = base_module(base)
        if comul.shape != (self.CC.dim, carrier.dim):
            raise PreconditionError(f"coring {self.name}: comultiplication has shape {comul.shape}")
        if counit.shape != (base.dim, carrier.dim):
            raise PreconditionError(f"coring {self.name}: counit has shape {counit.shape}")

    def __repr__(self):
        return f"Coring({self.name}, dim={self.carrier.dim}, over {self.base.name})"

    @property
    def dim(self) -> int:
        return self.carrier.dim

    @cached_property
    def CC(self):
        return tensor([self.carrier, self.carrier], [self.base])

    @cached_property
    def CCC(self):
        return tensor([self.carrier] * 3, [self.base] * 2)

    def identity(self) -> Matrix:
        return self.carrier.identity()

    def validate(self) -> Report:
        rep = Report(f"coring {self.name}")
        c, b, base = self.carrier, self.base_module, self.base
        rep.extend(BimoduleMap(c, self.CC.result, self.comul, BOTH, "comultiplication").check("coring"))
        rep.extend(BimoduleMap(c, b, self.counit, BOTH, "counit").check("coring"))
        ident = self.identity()
        try:
            lhs = tensor_maps(self.CC, self.CCC, [(1, 2, self.comul), (1, 1, ident)]) @ self.comul
            rhs = tensor_maps(self.CC, self.CCC, [(1, 1, ident), (1, 2, self.comul)]) @ self.comul
            rep.add(compare("coassociative", "coring.coass", lhs, rhs))
            bc, cb = tensor([b, c], [base]), tensor([c, b], [base])
            left = absorb_left(c, b) @ tensor_maps(self.CC, bc, [(1, 1, self.counit), (1, 1, ident)]) @ self.comul
            right = absorb_right(c, b) @ tensor_maps(self.CC, cb, [(1, 1, ident), (1, 1, self.counit)]) @ self.comul
            rep.add(compare("left counit", "coring.counit", left, ident))
            rep.add(compare("right counit", "coring.counit", right, ident))
        except NotBalancedError as e:
            rep.failed_check("structure maps balanced", "coring", str(e), e.witness)
        return rep


class Comodule:
    """A right (side=RIGHT: M -> M (x) C) or left (M -> C (x) M) comodule."""

    def __init__(self, coring: Coring, carrier: Bimodule, coaction: Matrix, side: str = RIGHT,
                 name: str = ""):
        self.coring = coring
        self.carrier = carrier
        self.coaction = coaction
        self.side = side
        self.name = name or carrier.name
        if coaction.shape != (self.MC.dim, carrier.dim):
            raise PreconditionError(f"comodule {self.name}: coaction has shape {coaction.shape}")

    @cached_property
    def MC(self):
        c = self.coring
        if self.side == RIGHT:
            return tensor([self.carrier, c.carrier], [c.base])
        return tensor([c.carrier, self.carrier], [c.base])

    @cached_property
    def MCC(self):
        c = self.coring
        if self.side == RIGHT:
            return tensor([self.carrier, c.carrier, c.carrier], [c.base, c.base])
        return tensor([c.carrier, c.carrier, self.carrier], [c.base, c.base])

    def validate(self) -> Report:
        rep = Report(f"{self.side} comodule {self.name}")
        c, m, rho = self.coring, self.carrier, self.coaction
        im, ic = m.identity(), c.identity()
        rep.extend(BimoduleMap(m, self.MC.result, rho, {self.side}, "coaction").check("comodule"))
        try:
            if self.side == RIGHT:
                lhs = tensor_maps(self.MC, self.MCC, [(1, 2, rho), (1, 1, ic)]) @ rho
                rhs = tensor_maps(self.MC, self.MCC, [(1, 1, im), (1, 2, c.comul)]) @ rho
                mb = tensor([m, c.base_module], [c.base])
                counit = absorb_right(m, c.base_module) @ tensor_maps(self.MC, mb, [(1, 1, im), (1, 1, c.counit)]) @ rho
            else:
                lhs = tensor_maps(self.MC, self.MCC, [(1, 1, ic), (1, 2, rho)]) @ rho
                rhs = tensor_maps(self.MC, self.MCC, [(1, 2, c.comul), (1, 1, im)]) @ rho
                bm = tensor([c.base_module, m], [c.base])
                counit = absorb_left(m, c.base_module) @ tensor_maps(self.MC, bm, [(1, 1, c.counit), (1, 1, im)]) @ rho
            rep.add(compare("coassociative", "comodule.coass", lhs, rhs))
            rep.add(compare("counital", "comodule.counit", counit, im))
        except NotBalancedError as e:
            rep.failed_check("structure maps balanced", "comodule", str(e), e.witness)
        return rep


def _identity_check(rep: Report, name: str, anchor: str, fn):
    try:
        lhs, rhs = fn()
    except NotBalancedError as e:
        rep.failed_check(name, anchor, str(e), e.witness)
        return
    rep.add(compare(name, anchor, lhs, rhs))


class Entwining:
    """psi: C (x)_R A -> A (x)_R C (side RIGHT) or phi: A (x)_R C -> C (x)_R A (side LEFT).

    alg_map is the algebra map R -> A; the coring C is over R.
    """

    def __init__(self, alg_map, cor: Coring, psi: Matrix, side: str = RIGHT, name: str = ""):
        self.alg_map = alg_map
        self.alg = alg_map.target
        self.cor = cor
        self.psi = psi
        self.side = side
        self.name = name or ("psi" if side == RIGHT else "phi")
        a_reg = base_module(self.alg)
        self.A_RR = a_reg.restrict(left=alg_map, right=alg_map)
        r = cor.base
        a, c = self.A_RR, cor.carrier
        self.CA = tensor([c, a], [r])
        self.AC = tensor([a, c], [r])
        src, dst = (self.CA, self.AC) if side == RIGHT else (self.AC, self.CA)
        if psi.shape != (dst.dim, src.dim):
            raise PreconditionError(f"{self.name} has shape {psi.shape}, expected {(dst.dim, src.dim)}")

    @cached_property
    def mu(self) -> Matrix:
        aa = tensor([self.A_RR, self.A_RR], [self.cor.base])
        return ambient_map(aa, self.A_RR, self.alg.mult_matrix, name="multiplication")

    def validate(self) -> Report:
        if self.side == RIGHT:
            return self._validate_right()
        return self._validate_left()

    def _validate_right(self) -> Report:
        rep = Report(f"entwining {self.name}")
        r, a, c, psi, mu = self.cor.base, self.A_RR, self.cor.carrier, self.psi, self.mu
        ia, ic = a.identity(), c.identity()
        t = lambda *fs: tensor(list(fs), [r] * (len(fs) - 1))
        unit = self.alg.unit_column
        eps_a = self.alg_map.matrix @ self.cor.counit
        delta = self.cor.comul

        def i_():
            caa, ca, aca, aac, ac = t(c, a, a), t(c, a), t(a, c, a), t(a, a, c), t(a, c)
            lhs = psi @ tensor_maps(caa, ca, [(1, 1, ic), (2, 1, mu)])
            rhs = (tensor_maps(aac, ac, [(2, 1, mu), (1, 1, ic)])
                   @ tensor_maps(aca, aac, [(1, 1, ia), (2, 2, psi)])
                   @ tensor_maps(caa, aca, [(2, 2, psi), (1, 1, ia)]))
            return lhs, rhs

        def ii():
            lhs = psi @ tensor_maps(t(c), t(c, a), [(1, 1, ic), (0, 1, unit)])
            rhs = tensor_maps(t(c), t(a, c), [(0, 1, unit), (1, 1, ic)])
            return lhs, rhs

        def iii():
            ca, ac, acc, cca, cac = t(c, a), t(a, c), t(a, c, c), t(c, c, a), t(c, a, c)
            lhs = tensor_maps(ac, acc, [(1, 1, ia), (1, 2, delta)]) @ psi
            rhs = (tensor_maps(cac, acc, [(2, 2, psi), (1, 1, ic)])
                   @ tensor_maps(cca, cac, [(1, 1, ic), (2, 2, psi)])
                   @ tensor_maps(ca, cca, [(1, 2, delta), (1, 1, ia)]))
            return lhs, rhs

        def iv():
            aa = t(a, a)
            lhs = mu @ tensor_maps(t(a, c), aa, [(1, 1, ia), (1, 1, eps_a)]) @ psi
            rhs = mu @ tensor_maps(t(c, a), aa, [(1, 1, eps_a), (1, 1, ia)])
            return lhs, rhs

        _identity_check(rep, "multiplicative", "thm.entw", i_)
        _identity_check(rep, "unital", "thm.entw", ii)
        _identity_check(rep, "comultiplicative", "thm.entw", iii)
        _identity_check(rep, "counital", "thm.entw", iv)
        return rep

    def _validate_left(self) -> Report:
        rep = Report(f"entwining {self.name}")
        r, a, c, phi, mu = self.cor.base, self.A_RR, self.cor.carrier, self.psi, self.mu
        ia, ic = a.identity(), c.identity()
        t = lambda *fs: tensor(list(fs), [r] * (len(fs) - 1))
        unit = self.alg.unit_column
        eps_a = self.alg_map.matrix @ self.cor.counit
        delta = self.cor.comul

        def i_():
            aac, ac, aca, caa, ca = t(a, a, c), t(a, c), t(a, c, a), t(c, a, a), t(c, a)
            lhs = phi @ tensor_maps(aac, ac, [(2, 1, mu), (1, 1, ic)])
            rhs = (tensor_maps(caa, ca, [(1, 1, ic), (2, 1, mu)])
                   @ tensor_maps(aca, caa, [(2, 2, phi), (1, 1, ia)])
                   @ tensor_maps(aac, aca, [(1, 1, ia), (2, 2, phi)]))
            return lhs, rhs

        def ii():
            lhs = phi @ tensor_maps(t(c), t(a, c), [(0, 1, unit), (1, 1, ic)])
            rhs = tensor_maps(t(c), t(c, a), [(1, 1, ic), (0, 1, unit)])
            return lhs, rhs

        def iii():
            ac, ca, cca, acc, cac = t(a, c), t(c, a), t(c, c, a), t(a, c, c), t(c, a, c)
            lhs = tensor_maps(ca, cca, [(1, 2, delta), (1, 1, ia)]) @ phi
            rhs = (tensor_maps(cac, cca, [(1, 1, ic), (2, 2, phi)])
                   @ tensor_maps(acc, cac, [(2, 2, phi), (1, 1, ic)])
                   @ tensor_maps(ac, acc, [(1, 1, ia), (1, 2, delta)]))
            return lhs, rhs

        def iv():
            aa = t(a, a)
            lhs = mu @ tensor_maps(t(c, a), aa, [(1, 1, eps_a), (1, 1, ia)]) @ phi
            rhs = mu @ tensor_maps(t(a, c), aa, [(1, 1, ia), (1, 1, eps_a)])
            return lhs, rhs

        _identity_check(rep, "multiplicative", "thm.entw.left", i_)
        _identity_check(rep, "unital", "thm.entw.left", ii)
        _identity_check(rep, "comultiplicative", "thm.entw.left", iii)
        _identity_check(rep, "counital", "thm.entw.left", iv)
        return rep


# the equaliser corings of a herd

def _hypotheses(h, rep: Report, side: str):
    from .algebra import is_split_extension
    from .herd import check_tame
    d = h.dual
    tame = check_tame(h).ok
    mor = d.R_map if side == RIGHT else d.S_map
    split = is_split_extension(mor) is not None
    rep.data.update({"tame": tame, "split": split})
    if tame or split:
        rep.passed_check("tame or split extension", "thm.entw",
                         "tame" if tame else "split extension")
    else:
        rep.warn("tame or split extension", "thm.entw", "unsupported hypothesis")


def _injective(rep: Report, name: str, m: Matrix):
    ok = rank(m) == m.ncols
    if ok:
        rep.passed_check(name, "thm.entw")
    else:
        rep.warn(name, "thm.entw", "tensor inclusion not injective; corestrictions are not unique")


def base_coring_C(h) -> Coring:
    """C = equaliser of (ev (x) T^ (x) T)(T^ (x) gamma) and x -> 1 (x) x inside T^ (x)_S T."""
    d = h.dual
    rep = Report("equaliser coring C")
    _hypotheses(h, rep, RIGHT)
    R, S, alpha = d.R, d.S, d.R_map
    ith, it = d.Tdual.identity(), d.T.identity()
    ath_t = tensor([d.A_AR, d.Th_RS, d.T_SA], [R, S])
    xi = ambient_map(d.ThT, ath_t, kron_all(d.ev, ith, it) @ kron(ith, h.gamma_rep), name="xi_C")
    zeta = ambient_map(d.ThT, ath_t, kron_all(d.A.unit_column, ith, it), name="zeta_C")
    sub = kernel_basis(xi - zeta)
    carrier = submodule(d.ThT.result.restrict(left=alpha, right=alpha), sub, BOTH, "C")
    incl = sub.inclusion() if sub.dim else Matrix.zeros(d.field, d.ThT.dim, 0)
    four = tensor([d.Th_RS, d.T_SR, d.Th_RS, d.T_SA], [S, R, S])
    values = ambient_map(d.ThT, four, kron(ith, h.gamma_rep), name="T^ (x) gamma") @ incl
    cc = tensor([carrier, carrier], [R])
    ii = tensor_maps(cc, four, [(1, 2, incl), (1, 2, incl)], name="C (x) C inclusion")
    _injective(rep, "C (x)_R C embeds", ii)
    try:
        comul = corestrict(values, ii, "comultiplication of C")
    except InconsistencyError as e:
        raise InconsistencyError(f"def.C: {e}", e.witness) from None
    ev_c = d.ev_q @ incl
    contained = Subspace.column_space(alpha.matrix).contains_subspace(Subspace.column_space(ev_c))
    rep.expect("counit lands in alpha(R)", "def.C", contained)
    if not contained:
        raise InconsistencyError("def.C: ev on C leaves the image of alpha")
    counit = corestrict(ev_c, alpha.matrix, "counit of C")
    cor = Coring(R, carrier, comul, counit, "C")
    cor.inclusion = incl
    cor.xi = xi
    cor.target = ath_t
    ac = tensor([d.A_AR, carrier], [R])
    cor.A_tensor = ac
    cor.A_incl = tensor_maps(ac, ath_t, [(1, 1, Matrix.identity(d.field, d.A.dim)), (1, 2, incl)])
    _injective(rep, "A (x)_R C embeds", cor.A_incl)
    rep.extend(cor.validate())
    cor.report = rep
    return cor


def base_coring_D(h) -> Coring:
    """D = equaliser of (T (x) T^ (x) hatev)(gamma (x) T^) and x -> x (x) 1 inside T (x)_R T^."""
    d = h.dual
    rep = Report("equaliser coring D")
    _hypotheses(h, rep, LEFT)
    R, S, beta = d.R, d.S, d.S_map
    ith, it = d.Tdual.identity(), d.T.identity()
    t_thb = tensor([d.T_BR, d.Th_RS, d.B_SB], [R, S])
    xi = ambient_map(d.TTh, t_thb, kron_all(it, ith, d.hatev) @ kron(h.gamma_rep, ith), name="xi_D")
    zeta = ambient_map(d.TTh, t_thb, kron_all(it, ith, d.B.unit_column), name="zeta_D")
    sub = kernel_basis(xi - zeta)
    carrier = submodule(d.TTh.result.restrict(left=beta, right=beta), sub, BOTH, "D")
    incl = sub.inclusion() if sub.dim else Matrix.zeros(d.field, d.TTh.dim, 0)
    four = tensor([d.T_SR, d.Th_RS, d.T_SR, d.Th_RB], [R, S, R])
    values = ambient_map(d.TTh, four, kron(h.gamma_rep, ith), name="gamma (x) T^") @ incl
    dd = tensor([carrier, carrier], [S])
    ii = tensor_maps(dd, four, [(1, 2, incl), (1, 2, incl)], name="D (x) D inclusion")
    _injective(rep, "D (x)_S D embeds", ii)
    try:
        comul = corestrict(values, ii, "comultiplication of D")
    except InconsistencyError as e:
        raise InconsistencyError(f"def.D: {e}", e.witness) from None
    hev_d = d.hatev_q @ incl
    contained = Subspace.column_space(beta.matrix).contains_subspace(Subspace.column_space(hev_d))
    rep.expect("counit lands in beta(S)", "def.D", contained)
    if not contained:
        raise InconsistencyError("def.D: hatev on D leaves the image of beta")
    counit = corestrict(hev_d, beta.matrix, "counit of D")
    cor = Coring(S, carrier, comul, counit, "D")
    cor.inclusion = incl
    cor.xi = xi
    cor.target = t_thb
    db = tensor([carrier, d.B_SB], [S])
    cor.A_tensor = db
    cor.A_incl = tensor_maps(db, t_thb, [(1, 2, incl), (1, 1, Matrix.identity(d.field, d.B.dim))])
    _injective(rep, "D (x)_S B embeds", cor.A_incl)
    rep.extend(cor.validate())
    cor.report = rep
    return cor


def theta_map(h, cor: Coring | None = None) -> Matrix:
    """theta: T^ (x)_S T -> A (x)_R C, the corestriction of xi_C."""
    cor = cor or base_coring_C(h)
    return corestrict(cor.xi, cor.A_incl, "theta")


def check_theta_iso(h, cor: Coring | None = None) -> Report:
    d = h.dual
    cor = cor or base_coring_C(h)
    rep = Report(f"theta for {h.name}")
    ac = cor.A_tensor
    try:
        theta = theta_map(h, cor)
    except InconsistencyError as e:
        rep.failed_check("theta lands in A (x)_R C", "prop.theta", str(e), e.witness)
        return rep
    tt = d.ThT.result
    inv = ambient_map(ac, tt, tt.act_left_matrix() @ kron(Matrix.identity(d.field, d.A.dim), cor.inclusion),
                      name="a (x) c -> a c")
    rep.add(compare("inverse after theta", "prop.theta", inv @ theta, tt.identity()))
    rep.add(compare("theta after inverse", "prop.theta", theta @ inv, ac.result.identity()))
    rep.data.update({"dim_ThT": d.ThT.dim, "dim_A": d.A.dim, "dim_C": cor.dim, "dim_A_C": ac.dim})
    rep.expect("dim T^ (x)_S T = dim A * dim C", "prop.theta", d.ThT.dim == d.A.dim * cor.dim,
               f"{d.ThT.dim} vs {d.A.dim} * {cor.dim}")
    # theta carries the coring structure of T^ (x)_S T to that of A (x)_R C
    if theta.nrows == theta.ncols and rank(theta) == theta.nrows:
        tinv = inverse(theta)
        right = [theta @ m @ tinv for m in tt.right_action]
        acb = Bimodule(d.A, d.A, ac.dim, ac.result.left_action, right, "A (x) C")
        big = tensor([tt, tt], [d.A])
        acac = tensor([acb, acb], [d.A])
        ccr = tensor([cor.carrier, cor.carrier], [cor.base])
        from .herd import coring_from_herd_right
        cc, _ = coring_from_herd_right(h)
        ia, ic = Matrix.identity(d.field, d.A.dim), cor.identity()
        lhs = tensor_maps(big, acac, [(1, 1, theta), (1, 1, theta)]) @ cc.comul
        formula = (acac.projection @ kron(ac.projection, ac.projection)
                   @ kron_all(ia, ic, d.A.unit_column, ic) @ kron(ia, ccr.section @ cor.comul) @ ac.section)
        rep.add(compare("theta comultiplicative", "prop.theta", lhs, formula @ theta))
        eps = ambient_map(ac, d.A_mod, d.A.mult_matrix @ kron(ia, d.R_map.matrix @ cor.counit),
                          name="a (x) c -> a eps(c)")
        rep.add(compare("theta counital", "prop.theta", d.ev_q, eps @ theta))
    return rep


def _comodule_T(h, cor: Coring, side: str) -> Comodule:
    d = h.dual
    if side == RIGHT:
        tc = tensor([d.T_SR, cor.carrier], [d.R])
        emb = tensor_maps(tc, d.TThT, [(1, 1, d.T.identity()), (1, 2, cor.inclusion)])
    else:
        tc = tensor([cor.carrier, d.T_SR], [d.S])
        emb = tensor_maps(tc, d.TThT, [(1, 2, cor.inclusion), (1, 1, d.T.identity())])
    rho = corestrict(h.gamma_q, emb, "coaction on T")
    return Comodule(cor, d.T_SR, rho, side, "T")


def entwining_from_herd(h, cor: Coring | None = None) -> Entwining:
    """psi(c (x) a) = xi_C(c a), corestricted to A (x)_R C."""
    d = h.dual
    cor = cor or base_coring_C(h)
    a_view = base_module(d.A).restrict(left=d.R_map, right=d.R_map)
    ca = tensor([cor.carrier, a_view], [d.R])
    tt = d.ThT.result
    times = ambient_map(ca, tt, tt.act_right_matrix() @ kron(cor.inclusion, Matrix.identity(d.field, d.A.dim)),
                        name="c (x) a -> c a")
    psi = corestrict(cor.xi @ times, cor.A_incl, "psi")
    ent = Entwining(d.R_map, cor, psi, RIGHT, "psi")
    rep = ent.validate()
    if not rep.ok:
        bad = rep.failures[0]
        raise InconsistencyError(f"thm.entw: {bad.name} fails", bad.witness)
    module = _comodule_T(h, cor, RIGHT)
    rep.extend(module.validate())
    rep.extend(_entwined_module_check(ent, module, d))
    ent.module = module
    ent.report = rep
    return ent


def left_entwining_from_herd(h, cor: Coring | None = None) -> Entwining:
    """phi(b (x) d) = xi_D(b d), corestricted to D (x)_S B."""
    d = h.dual
    cor = cor or base_coring_D(h)
    b_view = base_module(d.B).restrict(left=d.S_map, right=d.S_map)
    bd = tensor([b_view, cor.carrier], [d.S])
    tt = d.TTh.result
    times = ambient_map(bd, tt, tt.act_left_matrix() @ kron(Matrix.identity(d.field, d.B.dim), cor.inclusion),
                        name="b (x) d -> b d")
    phi = corestrict(cor.xi @ times, cor.A_incl, "phi")
    ent = Entwining(d.S_map, cor, phi, LEFT, "phi")
    rep = ent.validate()
    if not rep.ok:
        bad = rep.failures[0]
        raise InconsistencyError(f"thm.entw.left: {bad.name} fails", bad.witness)
    module = _comodule_T(h, cor, LEFT)
    rep.extend(module.validate())
    rep.extend(_entwined_module_check(ent, module, d))
    ent.module = module
    ent.report = rep
    return ent


def _entwined_module_check(ent: Entwining, module: Comodule, d) -> Report:
    rep = Report("entwined module")
    r, a, c, t = ent.cor.base, ent.A_RR, ent.cor.carrier, module.carrier
    ia, ic, it = a.identity(), c.identity(), t.identity()
    rho, psi = module.coaction, ent.psi
    tt = lambda *fs: tensor(list(fs), [r] * (len(fs) - 1))

    def right():
        ta = tt(t, a)
        act = ambient_map(ta, t, d.T.act_right_matrix(), name="action")
        lhs = rho @ act
        rhs = (tensor_maps(tt(t, a, c), tt(t, c), [(2, 1, act), (1, 1, ic)])
               @ tensor_maps(tt(t, c, a), tt(t, a, c), [(1, 1, it), (2, 2, psi)])
               @ tensor_maps(ta, tt(t, c, a), [(1, 2, rho), (1, 1, ia)]))
        return lhs, rhs

    def left():
        at = tt(a, t)
        act = ambient_map(at, t, d.T.act_left_matrix(), name="action")
        lhs = rho @ act
        rhs = (tensor_maps(tt(c, a, t), tt(c, t), [(1, 1, ic), (2, 1, act)])
               @ tensor_maps(tt(a, c, t), tt(c, a, t), [(2, 2, psi), (1, 1, it)])
               @ tensor_maps(at, tt(a, c, t), [(1, 1, ia), (1, 2, rho)]))
        return lhs, rhs

    anchor = "thm.entw.module"
    _identity_check(rep, "coaction respects the action through the entwining", anchor,
                    right if ent.side == RIGHT else left)
    return rep


class GaloisData:
    def __init__(self, can, galois, translation, report):
        self.can = can
        self.galois = galois
        self.translation = translation
        self.report = report


def canonical_map(h, cor: Coring | None = None) -> GaloisData:
    """can = theta (lambda^-1 (x) T): T* (x)_S T -> A (x)_R C, cross-checked against f(x_0) (x) x_1."""
    from .herd import lambda_matrix, right_dual
    d = h.dual
    cor = cor or base_coring_C(h)
    rep = Report(f"canonical map for {h.name}")
    tstar, hb = right_dual(d)
    lam = lambda_matrix(d, hb)
    lam_inv = inverse(lam) if lam is not None and lam.nrows == lam.ncols else None
    if lam_inv is None:
        rep.failed_check("lambda invertible", "thm.galois", "T is not finitely generated projective via T^")
        return GaloisData(None, False, None, rep)
    rep.passed_check("lambda invertible", "thm.galois")
    tst = tensor([tstar, d.T_SA], [d.S])
    theta = theta_map(h, cor)
    can = theta @ tensor_maps(tst, d.ThT, [(1, 1, lam_inv), (1, 1, d.T.identity())], name="lambda^-1 (x) T")
    module = _comodule_T(h, cor, RIGHT)
    ac = cor.A_tensor
    sec = module.MC.section @ module.coaction
    ic = cor.identity()
    flat = Matrix.from_columns(d.field, [c for fm in hb.mats for c in (kron(fm, ic) @ sec).columns()],
                               ac.ambient_dim)
    direct = ambient_map(tst, ac, flat, name="f (x) x -> f(x_0) (x) x_1")
    rep.add(compare("can agrees with f(x_0) (x) x_1", "thm.galois", can, direct))
    galois = can.nrows == can.ncols and rank(can) == can.nrows
    rep.expect("canonical map bijective", "thm.galois", galois)
    translation = None
    if galois:
        can_inv = inverse(can)
        unit_c = tensor_maps(tensor([cor.carrier], []), ac,
                             [(0, 1, d.A.unit_column), (1, 1, ic)], name="c -> 1 (x) c")
        lam_t = tensor_maps(d.ThT, tst, [(1, 1, lam), (1, 1, d.T.identity())], name="lambda (x) T")
        rep.add(compare("translation map is the inclusion", "rem.translation",
                        can_inv @ unit_c, lam_t @ cor.inclusion))
        translation = cor.inclusion
    rep.extend(endomorphism_checks(h))
    rep.data["galois"] = galois
    return GaloisData(can, galois, translation, rep)


def is_galois(h, cor: Coring | None = None) -> bool:
    return canonical_map(h, cor).galois


def endomorphism_checks(h) -> Report:
    """S = End^C(T) and R = End^D(T) for the corings of the herd, as subspaces of End_k(T)."""
    from .herd import coring_from_herd_left, coring_from_herd_right
    d = h.dual
    f, n = d.field, d.T.dim
    rep = Report("endomorphism rings")
    for label, builder, acts, images in (
            ("S = End^C(T)", coring_from_herd_right, d.T.right_action,
             [d.T.left_by(d.S_map.image(s)) for s in range(d.S.dim)]),
            ("R = End^D(T)", coring_from_herd_left, d.T.left_action,
             [d.T.right_by(d.R_map.image(r)) for r in range(d.R.dim)])):
        cor, module = builder(h)
        rho = module.coaction
        ic = cor.identity()
        cons = [([(None, a), (a.scale(-1), None)], None) for a in acts]
        if module.side == RIGHT:
            term = lambda x, m=module, c=ic: (tensor_maps(m.MC, m.MC, [(1, 1, x), (1, 1, c)], check=False)
                                              @ m.coaction).scale(-1)
        else:
            term = lambda x, m=module, c=ic: (tensor_maps(m.MC, m.MC, [(1, 1, c), (1, 1, x)], check=False)
                                              @ m.coaction).scale(-1)
        cons.append(([(rho, None), term], None))
        space = matrix_solution_space(f, (n, n), cons)
        sol = Subspace.span(f, n * n, [[x for r in m.rows for x in r] for m in space.directions])
        img = Subspace.span(f, n * n, [[x for r in m.rows for x in r] for m in images])
        if sol == img:
            rep.passed_check(label, "thm.galois")
        else:
            rep.warn(label, "thm.galois", f"colinear endomorphisms {sol.dim}, image {img.dim}")
    return rep


def shepherd_from_galois(dual, module: Comodule):
    """gamma(x) = x_0 (x) tau(x_1), tau(c) = can^-1(1 (x) c) with can(x^ (x) x) = ev(x^ (x) x_0) (x) x_1."""
    from .herd import HerdData
    d = dual
    cor = module.coring
    a_view = d.A_mod.restrict(right=d.R_map)
    ac = tensor([a_view, cor.carrier], [d.R])
    flat = kron(d.ev, cor.identity()) @ kron(d.Tdual.identity(), module.MC.section @ module.coaction)
    can = ambient_map(d.ThT, ac, flat, name="canonical map")
    if not (can.nrows == can.ncols and rank(can) == can.nrows):
        raise PreconditionError("not Galois: the canonical map is not bijective")
    unit_c = tensor_maps(tensor([cor.carrier], []), ac, [(0, 1, d.A.unit_column), (1, 1, cor.identity())])
    tau = inverse(can) @ unit_c
    gamma = tensor_maps(module.MC, d.TThT, [(1, 1, d.T.identity()), (1, 2, tau)], name="T (x) tau") @ module.coaction
    return HerdData(d, d.TThT.section @ gamma, d.name)


galois_herd = shepherd_from_galois

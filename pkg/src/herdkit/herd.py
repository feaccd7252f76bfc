"""Formal duals, bimodule herds, tameness and the two corings of a herd.

T is a B-A bimodule, T^ an A-B bimodule, alpha: R -> A and beta: S -> B.
ev: T^ (x)_S T -> A and hatev: T (x)_R T^ -> B are stored as matrices on plain
tensors of basis vectors, and so is the shepherd gamma: T -> T (x) T^ (x) T.
Everything else is derived from them through the tensor quotients.
"""

from __future__ import annotations

from functools import cached_property

from .algebra import AlgebraMorphism, FinDimAlgebra, ground_field, identity_morphism, matrix_algebra
from .bimodule import (
    BOTH, LEFT, RIGHT, Bimodule, BimoduleMap, ambient_map, flat_map, tensor, tensor_maps,
)
from .coring import Comodule, Coring, base_module
from .errors import InputError, NotBalancedError
from .linalg import Field, Matrix, inverse, kron, kron_all, rank, solve_matrix
from .report import Report, compare


def _leaf(m: Bimodule) -> Bimodule:
    return m if m.origin[0] == "leaf" else m.as_leaf()


class FormalDualPair:
    def __init__(self, T: Bimodule, Tdual: Bimodule, R_map: AlgebraMorphism,
                 S_map: AlgebraMorphism, ev: Matrix, hatev: Matrix, name: str = ""):
        T, Tdual = _leaf(T), _leaf(Tdual)
        A, B = T.right_alg, T.left_alg
        if not (Tdual.left_alg.same_as(A) and Tdual.right_alg.same_as(B)):
            raise InputError("the dual must be an A-B bimodule for T a B-A bimodule")
        if not R_map.target.same_as(A) or not S_map.target.same_as(B):
            raise InputError("alpha must land in A and beta in B")
        if ev.shape != (A.dim, Tdual.dim * T.dim):
            raise InputError(f"ev has shape {ev.shape}, expected {(A.dim, Tdual.dim * T.dim)}")
        if hatev.shape != (B.dim, T.dim * Tdual.dim):
            raise InputError(f"hatev has shape {hatev.shape}, expected {(B.dim, T.dim * Tdual.dim)}")
        self.T, self.Tdual = T, Tdual
        self.R_map, self.S_map = R_map, S_map
        self.ev, self.hatev = ev, hatev
        self.name = name or T.name

    def __repr__(self):
        return f"FormalDualPair({self.name}, dim T={self.T.dim})"

    def with_maps(self, ev: Matrix | None = None, hatev: Matrix | None = None) -> FormalDualPair:
        return FormalDualPair(self.T, self.Tdual, self.R_map, self.S_map,
                              self.ev if ev is None else ev,
                              self.hatev if hatev is None else hatev, self.name)

    @property
    def field(self) -> Field:
        return self.T.field

    @property
    def A(self) -> FinDimAlgebra:
        return self.T.right_alg

    @property
    def B(self) -> FinDimAlgebra:
        return self.T.left_alg

    @property
    def R(self) -> FinDimAlgebra:
        return self.R_map.source

    @property
    def S(self) -> FinDimAlgebra:
        return self.S_map.source

    # restricted views; cached so that tensor products built from them are shared

    @cached_property
    def T_BR(self):
        return self.T.restrict(right=self.R_map)

    @cached_property
    def T_SA(self):
        return self.T.restrict(left=self.S_map)

    @cached_property
    def T_SR(self):
        return self.T.restrict(left=self.S_map, right=self.R_map)

    @cached_property
    def Th_AS(self):
        return self.Tdual.restrict(right=self.S_map)

    @cached_property
    def Th_RB(self):
        return self.Tdual.restrict(left=self.R_map)

    @cached_property
    def Th_RS(self):
        return self.Tdual.restrict(left=self.R_map, right=self.S_map)

    @cached_property
    def A_mod(self):
        return base_module(self.A)

    @cached_property
    def B_mod(self):
        return base_module(self.B)

    @cached_property
    def A_RA(self):
        return self.A_mod.restrict(left=self.R_map)

    @cached_property
    def A_AR(self):
        return self.A_mod.restrict(right=self.R_map)

    @cached_property
    def B_BS(self):
        return self.B_mod.restrict(right=self.S_map)

    @cached_property
    def B_SB(self):
        return self.B_mod.restrict(left=self.S_map)

    # tensor products

    @cached_property
    def ThT(self):
        """T^ (x)_S T, an A-A bimodule."""
        return tensor([self.Th_AS, self.T_SA], [self.S])

    @cached_property
    def TTh(self):
        """T (x)_R T^, a B-B bimodule."""
        return tensor([self.T_BR, self.Th_RB], [self.R])

    @cached_property
    def TThT(self):
        return tensor([self.T_BR, self.Th_RS, self.T_SA], [self.R, self.S])

    @cached_property
    def ThTTh(self):
        return tensor([self.Th_AS, self.T_SR, self.Th_RB], [self.S, self.R])

    @cached_property
    def ev_q(self) -> Matrix:
        return self.ev @ self.ThT.section

    @cached_property
    def hatev_q(self) -> Matrix:
        return self.hatev @ self.TTh.section

    @property
    def ev_map(self) -> BimoduleMap:
        return BimoduleMap(self.ThT.result, self.A_mod, self.ev_q, BOTH, "ev")

    @property
    def hatev_map(self) -> BimoduleMap:
        return BimoduleMap(self.TTh.result, self.B_mod, self.hatev_q, BOTH, "hatev")


def _balanced(rep: Report, name: str, anchor: str, flat: Matrix, tp) -> bool:
    rel = tp.relation_matrix()
    img = flat @ rel
    for j in range(img.ncols):
        if any(img.col(j)):
            f = flat.field
            rep.failed_check(name, anchor, "a balancing relation is not sent to zero",
                             {"relation": [f.fmt(x) for x in rel.col(j)],
                              "image": [f.fmt(x) for x in img.col(j)]})
            return False
    rep.passed_check(name, anchor)
    return True


def validate_formal_dual(d: FormalDualPair) -> Report:
    rep = Report(f"formal dual {d.name}")
    for label, obj in (("T", d.T), ("T^", d.Tdual)):
        sub = obj.validate()
        rep.expect(f"{label} is a bimodule", "def.dual", sub.ok,
                   "; ".join(c.name for c in sub.failures))
    for label, mor in (("alpha", d.R_map), ("beta", d.S_map)):
        sub = mor.validate()
        rep.expect(f"{label} is an algebra map", "def.dual", sub.ok,
                   "; ".join(c.name for c in sub.failures))
    ev_ok = _balanced(rep, "ev balanced over S", "def.dual", d.ev, d.ThT)
    hev_ok = _balanced(rep, "hatev balanced over R", "def.dual", d.hatev, d.TTh)
    if ev_ok:
        rep.extend(d.ev_map.check("def.dual"))
    if hev_ok:
        rep.extend(d.hatev_map.check("def.dual"))
    T, Th = d.T, d.Tdual
    it, ith = T.identity(), Th.identity()
    lhs = T.act_left_matrix() @ kron(d.hatev, it) @ d.TThT.section
    rhs = T.act_right_matrix() @ kron(it, d.ev) @ d.TThT.section
    rep.add(compare("hatev then act equals act then ev on T", "diag.A", lhs, rhs))
    lhs = Th.act_right_matrix() @ kron(ith, d.hatev) @ d.ThTTh.section
    rhs = Th.act_left_matrix() @ kron(d.ev, ith) @ d.ThTTh.section
    rep.add(compare("ev then act equals act then hatev on T^", "diag.B", lhs, rhs))
    return rep


# duals of T and the maps lambda, lambda^

def _hom_space(src_actions, dst_actions, field, shape):
    from .bimodule import map_solution_space
    cons = [([(None, a), (b.scale(-1), None)], None) for a, b in zip(src_actions, dst_actions)]
    return map_solution_space(field, shape, cons)


def _vec(m: Matrix):
    return [x for r in m.rows for x in r]


class HomBasis:
    """A basis of a space of matrices with coordinate lookup."""

    def __init__(self, field, shape, mats):
        self.field = field
        self.shape = shape
        self.mats = list(mats)
        n = shape[0] * shape[1]
        self.stacked = Matrix.from_columns(field, [_vec(m) for m in self.mats], n)

    @property
    def dim(self) -> int:
        return len(self.mats)

    def coordinates(self, m: Matrix) -> tuple | None:
        x = solve_matrix(self.stacked, Matrix.column(self.field, _vec(m)))
        return None if x is None else x.col(0)

    def coordinate_matrix(self, mats) -> Matrix | None:
        cols = []
        for m in mats:
            c = self.coordinates(m)
            if c is None:
                return None
            cols.append(c)
        return Matrix.from_columns(self.field, cols, self.dim)


def right_dual(d: FormalDualPair):
    """T* = Hom_A(T, A) as an A-S bimodule, with its basis."""
    A, T = d.A, d.T
    space = _hom_space(T.right_action, A.right_mult, d.field, (A.dim, T.dim))
    hb = HomBasis(d.field, (A.dim, T.dim), space.directions)
    left = [hb.coordinate_matrix([A.left_mult[a] @ f for f in hb.mats]) for a in range(A.dim)]
    right = [hb.coordinate_matrix([f @ T.left_by(d.S_map.image(s)) for f in hb.mats])
             for s in range(d.S.dim)]
    mod = Bimodule(A, d.S, hb.dim, left, right, "T*")
    return mod, hb


def left_dual_basis(d: FormalDualPair) -> HomBasis:
    """*T = Hom_B(T, B) (left linear maps)."""
    B, T = d.B, d.T
    space = _hom_space(T.left_action, B.left_mult, d.field, (B.dim, T.dim))
    return HomBasis(d.field, (B.dim, T.dim), space.directions)


def lambda_matrix(d: FormalDualPair, hb: HomBasis) -> Matrix | None:
    """T^ -> T*, x^ -> ev(x^ (x) -); None if some value is not A-linear."""
    n = d.T.dim
    mats = [d.ev.submatrix(cols=list(range(i * n, (i + 1) * n))) for i in range(d.Tdual.dim)]
    return hb.coordinate_matrix(mats)


def lambdahat_matrix(d: FormalDualPair, hb: HomBasis) -> Matrix | None:
    """T^ -> *T, x^ -> hatev(- (x) x^)."""
    n, m = d.T.dim, d.Tdual.dim
    mats = [d.hatev.submatrix(cols=[x * m + i for x in range(n)]) for i in range(m)]
    return hb.coordinate_matrix(mats)


def _bijective(m: Matrix | None) -> bool:
    return m is not None and m.nrows == m.ncols and rank(m) == m.nrows


def check_progenerator(d: FormalDualPair) -> Report:
    rep = Report(f"progenerator {d.name}")
    ev_s = rank(d.ev_q) == d.A.dim
    hev_s = rank(d.hatev_q) == d.B.dim
    rep.expect("ev surjective", "lem.dual", ev_s, f"rank {rank(d.ev_q)} of {d.A.dim}")
    rep.expect("hatev surjective", "lem.dual", hev_s, f"rank {rank(d.hatev_q)} of {d.B.dim}")
    _, hb = right_dual(d)
    lam = lambda_matrix(d, hb)
    lhb = left_dual_basis(d)
    lamh = lambdahat_matrix(d, lhb)
    lam_b, lamh_b = _bijective(lam), _bijective(lamh)
    rep.expect("lambda bijective", "lem.dual", lam_b,
               f"T^ dim {d.Tdual.dim}, T* dim {hb.dim}"
               + ("" if lam is None else f", rank {rank(lam)}"))
    rep.expect("lambda^ bijective", "lem.dual", lamh_b,
               f"T^ dim {d.Tdual.dim}, *T dim {lhb.dim}"
               + ("" if lamh is None else f", rank {rank(lamh)}"))
    # for a formal dual, hatev onto forces lambda bijective and ev onto forces lambda^ bijective
    consistent = (not hev_s or lam_b) and (not ev_s or lamh_b)
    if validate_formal_dual(d).ok:
        rep.expect("surjectivity and duality agree", "lem.dual", consistent,
                   "internal inconsistency" if not consistent else "")
    else:
        rep.warn("surjectivity and duality agree", "lem.dual", "not applicable: not a formal dual")
    morita = ev_s and hev_s
    if morita:
        rep.passed_check("Morita equivalence between A and B", "lem.dual")
    else:
        rep.warn("Morita equivalence between A and B", "lem.dual", "not concluded")
    rep.data.update({"ev_surjective": ev_s, "hatev_surjective": hev_s,
                     "lambda_bijective": lam_b, "lambdahat_bijective": lamh_b,
                     "morita": morita})
    return rep


def is_faithfully_flat(m: Bimodule, side: str) -> tuple:
    """(projective, trace ideal full) for m as a module over its side algebra."""
    f = m.field
    if side == RIGHT:
        alg, acts, mult = m.right_alg, m.right_action, m.right_alg.right_mult
    else:
        alg, acts, mult = m.left_alg, m.left_action, m.left_alg.left_mult
    if m.dim == 0:
        return True, alg.dim == 0
    space = _hom_space(acts, mult, f, (alg.dim, m.dim))
    duals = space.directions
    trace = [c for g in duals for c in g.columns()]
    full = bool(trace) and rank(Matrix.from_columns(f, trace, alg.dim)) == alg.dim
    # dual basis: the identity is a combination of x -> m_i f(x) (or f(x) m_i)
    gens = []
    for i in range(m.dim):
        for g in duals:
            out = Matrix.zeros(f, m.dim, m.dim)
            for r in range(alg.dim):
                row = g.row(r)
                if any(row):
                    v = acts[r].submatrix(cols=[i])
                    out = out + v @ Matrix(f, [row], m.dim)
            gens.append(out)
    if not gens:
        return False, full
    hb = HomBasis(f, (m.dim, m.dim), gens)
    projective = hb.coordinates(m.identity()) is not None
    return projective, full


class HerdData:
    def __init__(self, dual: FormalDualPair, gamma: Matrix, name: str = ""):
        if gamma.shape != (dual.TThT.ambient_dim, dual.T.dim):
            raise InputError(f"gamma has shape {gamma.shape}, expected "
                             f"{(dual.TThT.ambient_dim, dual.T.dim)}")
        self.dual = dual
        self.gamma = gamma
        self.name = name or dual.name

    def __repr__(self):
        return f"HerdData({self.name}, dim T={self.dual.T.dim})"

    def with_gamma(self, gamma: Matrix) -> HerdData:
        return HerdData(self.dual, gamma, self.name)

    def with_dual(self, dual: FormalDualPair) -> HerdData:
        return HerdData(dual, self.gamma, self.name)

    @cached_property
    def gamma_q(self) -> Matrix:
        return self.dual.TThT.projection @ self.gamma

    @cached_property
    def gamma_rep(self) -> Matrix:
        """Canonical plain-tensor representative of gamma."""
        return self.dual.TThT.section @ self.gamma_q

    @cached_property
    def TA_ThT(self):
        d = self.dual
        return tensor([d.T, d.Th_AS, d.T_SA], [d.A, d.S])

    @cached_property
    def TTh_BT(self):
        d = self.dual
        return tensor([d.T_BR, d.Th_RB, d.T], [d.R, d.B])

    @cached_property
    def gamma_A(self) -> Matrix:
        """T -> T (x)_A T^ (x)_S T."""
        return self.TA_ThT.projection @ self.gamma_rep

    @cached_property
    def gamma_B(self) -> Matrix:
        """T -> T (x)_R T^ (x)_B T."""
        return self.TTh_BT.projection @ self.gamma_rep

    @cached_property
    def five(self):
        d = self.dual
        return tensor([d.T_BR, d.Th_RS, d.T_SR, d.Th_RS, d.T_SA], [d.R, d.S, d.R, d.S])


def _catch(rep: Report, name: str, anchor: str, fn):
    try:
        return fn()
    except NotBalancedError as e:
        rep.failed_check(name, anchor, str(e), e.witness)
        return None


def validate_herd(h: HerdData) -> Report:
    d = h.dual
    rep = Report(f"herd {h.name}")
    T = d.T
    it, ith = T.identity(), d.Tdual.identity()
    lin = BimoduleMap(d.T_SR, d.TThT.result.restrict(left=d.S_map, right=d.R_map), h.gamma_q,
                      BOTH, "gamma").check("def.herd")
    rep.extend(lin)
    bt = tensor([d.B_BS, d.T_SA], [d.S])
    lhs = _catch(rep, "hatev (x) T then gamma", "eq.coev",
                 lambda: ambient_map(d.TThT, bt, kron(d.hatev, it)) @ h.gamma_q)
    if lhs is not None:
        rhs = bt.projection @ kron(d.B.unit_column, it)
        rep.add(compare("(hatev (x) T) gamma is x -> 1 (x) x", "eq.coev", lhs, rhs))
    ta = tensor([d.T_BR, d.A_RA], [d.R])
    lhs = _catch(rep, "T (x) ev then gamma", "eq.ev",
                 lambda: ambient_map(d.TThT, ta, kron(it, d.ev)) @ h.gamma_q)
    if lhs is not None:
        rhs = ta.projection @ kron(it, d.A.unit_column)
        rep.add(compare("(T (x) ev) gamma is x -> x (x) 1", "eq.ev", lhs, rhs))
    five = h.five
    g = h.gamma_rep
    left = _catch(rep, "gamma (x) T^ (x) T well defined", "eq.ass",
                  lambda: ambient_map(d.TThT, five, kron_all(g, ith, it)))
    right = _catch(rep, "T (x) T^ (x) gamma well defined", "eq.ass",
                   lambda: ambient_map(d.TThT, five, kron_all(it, ith, g)))
    if left is not None and right is not None:
        rep.add(compare("shepherd coassociative", "eq.ass", left @ h.gamma_q, right @ h.gamma_q))
    # derived facts: gamma_A is right A-linear, gamma_B left B-linear
    axioms_ok = all(c.passed for c in rep.checks)
    for label, src, tp, g_side, side in (
            ("gamma_A right A-linear", d.T, h.TA_ThT, h.gamma_A, RIGHT),
            ("gamma_B left B-linear", d.T, h.TTh_BT, h.gamma_B, LEFT)):
        sub = BimoduleMap(src, tp.result, g_side, {side}, label).check("lem.gammaA")
        ok = sub.ok
        if axioms_ok:
            rep.expect(label, "lem.gammaA", ok, "" if ok else "internal inconsistency",
                       None if ok else sub.failures[0].witness)
        else:
            rep.warn(label, "lem.gammaA", "not applicable: herd axioms fail")
    return rep


def check_tame(h) -> Report:
    d = h.dual if isinstance(h, HerdData) else h
    rep = Report(f"tameness {d.name}")
    ev_s = rank(d.ev_q) == d.A.dim
    hev_s = rank(d.hatev_q) == d.B.dim
    rep.expect("ev surjective", "def.tame", ev_s)
    rep.expect("hatev surjective", "def.tame", hev_s)
    pr, fr = is_faithfully_flat(d.T_SR, RIGHT)
    ps, fs = is_faithfully_flat(d.T_SR, LEFT)
    rep.expect("T faithfully flat over R", "def.tame", pr and fr,
               f"projective={pr}, trace ideal full={fr}")
    rep.expect("T faithfully flat over S", "def.tame", ps and fs,
               f"projective={ps}, trace ideal full={fs}")
    rep.data["tame"] = rep.ok
    return rep


def is_tame(h) -> bool:
    return check_tame(h).ok


# the corings of a herd

def coring_from_herd_right(h: HerdData):
    """The A-coring T^ (x)_S T and T as a right comodule via gamma_A."""
    d = h.dual
    c = d.ThT.result
    cc = tensor([c, c], [d.A])
    comul = flat_map(d.ThT, cc, kron(d.Tdual.identity(), h.gamma_rep), name="comultiplication")
    cor = Coring(d.A, c, comul, d.ev_q, "T^ (x)_S T")
    tc = tensor([d.T, c], [d.A])
    coaction = flat_map(d.T, tc, h.gamma_rep, name="gamma_A")
    return cor, Comodule(cor, d.T, coaction, RIGHT, "T")


def coring_from_herd_left(h: HerdData):
    """The B-coring T (x)_R T^ and T as a left comodule via gamma_B."""
    d = h.dual
    c = d.TTh.result
    cc = tensor([c, c], [d.B])
    comul = flat_map(d.TTh, cc, kron(h.gamma_rep, d.Tdual.identity()), name="comultiplication")
    cor = Coring(d.B, c, comul, d.hatev_q, "T (x)_R T^")
    ct = tensor([c, d.T], [d.B])
    coaction = flat_map(d.T, ct, h.gamma_rep, name="gamma_B")
    return cor, Comodule(cor, d.T, coaction, LEFT, "T")


def check_theta(h: HerdData) -> Report:
    """Theta_A: T* (x)_S T -> T^ (x)_S T, f (x) x -> f(x_1) x_2 (x) x_3, against lambda (x) T."""
    d = h.dual
    rep = Report(f"Theta_A for {h.name}")
    f = d.field
    tstar, hb = right_dual(d)
    lam = lambda_matrix(d, hb)
    if lam is None:
        rep.failed_check("lambda defined", "prop.theta", "ev(x^ (x) -) is not A-linear")
        return rep
    tst = tensor([tstar, d.T_SA], [d.S])
    nT, nTh, nA = d.T.dim, d.Tdual.dim, d.A.dim
    Th = d.Tdual
    g = h.gamma_rep
    flat_cols = []
    for fm in hb.mats:
        # f applied to the first leg of gamma, then acting on the second
        act = Th.act_left_matrix() @ kron(fm, Th.identity())
        step = kron(act, d.T.identity()) @ g
        flat_cols.extend(step.columns())
    flat = Matrix.from_columns(f, flat_cols, nTh * nT)
    try:
        theta = ambient_map(tst, d.ThT, flat, name="Theta_A")
    except NotBalancedError as e:
        rep.failed_check("Theta_A well defined", "prop.theta", str(e), e.witness)
        return rep
    inv = tensor_maps(d.ThT, tst, [(1, 1, lam), (1, 1, d.T.identity())], name="lambda (x) T")
    rep.add(compare("Theta_A then inverse", "prop.theta", inv @ theta, tst.result.identity()))
    rep.add(compare("inverse then Theta_A", "prop.theta", theta @ inv, d.ThT.result.identity()))
    evals = Matrix.from_columns(f, [fm.col(x) for fm in hb.mats for x in range(nT)], nA)
    evaluation = ambient_map(tst, d.A_mod, evals, name="evaluation")
    rep.add(compare("ev after Theta_A is evaluation", "prop.theta", d.ev_q @ theta, evaluation))
    rep.data["dim"] = tst.dim
    return rep


# constructors

def trivial_herd(field: Field) -> HerdData:
    k = ground_field(field)
    one = Matrix.identity(field, 1)
    t = Bimodule(k, k, 1, [one], [one], "k")
    th = Bimodule(k, k, 1, [one], [one], "k^")
    idk = identity_morphism(k)
    dual = FormalDualPair(t, th, idk, idk, one, one, "trivial")
    return HerdData(dual, one, "trivial")


def comatrix_herd(field: Field, n: int = 2, basis: Matrix | None = None) -> HerdData:
    """T = k^n over A = R = k with S = B = M_n(k); gamma(x) = sum_i e_i (x) e_i* (x) x."""
    k = ground_field(field)
    mn = matrix_algebra(field, n)
    one = Matrix.identity(field, n)
    units = []
    for i in range(n):
        for j in range(n):
            units.append(Matrix(field, [[1 if (r, c) == (i, j) else 0 for c in range(n)]
                                        for r in range(n)], n))
    t = Bimodule(mn, k, n, units, [one], "k^n")
    # row vectors: f . E_ij sends eps_i to eps_j
    th = Bimodule(k, mn, n, [one], [u.T for u in units], "(k^n)*")
    idk = identity_morphism(k)
    idm = identity_morphism(mn)
    ev = Matrix(field, [[1 if l == m else 0 for l in range(n) for m in range(n)]], n * n)
    hatev = Matrix(field, [[1 if (m, l) == (i, j) else 0 for m in range(n) for l in range(n)]
                           for i in range(n) for j in range(n)], n * n)
    dual = FormalDualPair(t, th, idk, idm, ev, hatev, "comatrix")
    p = one if basis is None else basis
    pinv = inverse(p)
    if pinv is None:
        raise InputError("dual basis matrix is singular")
    # sum_i e_i (x) f^i as a vector of T (x) T^
    coev = [0] * (n * n)
    for i in range(n):
        for m in range(n):
            for l in range(n):
                coev[m * n + l] += p[m, i] * pinv[i, l]
    gamma = kron(Matrix.column(field, coev), one)
    return HerdData(dual, gamma, "comatrix")

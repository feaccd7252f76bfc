"""Bimodules, bimodule maps and balanced tensor products over algebras.

A tensor product of several factors is a quotient of the plain tensor product of
the factors (its "ambient" space, lexicographic indices) by the balancing
relations at every junction.  Every quotient carries a projection and a section.

Bimodules remember how they were built (tensor quotient, subobject, restriction,
quotient), which gives a "flat" description in terms of the leaf modules.  Maps
written on elements are evaluated on flat representatives and pushed back down.
"""

from __future__ import annotations

import math
from functools import lru_cache

from .algebra import AlgebraMorphism, FinDimAlgebra, ground_field
from .errors import InconsistencyError, InputError, NotBalancedError
from .linalg import (
    Matrix, MapSpace, Subspace, _quotient_from_rows, kernel_basis, kron, kron_all,
    matrix_solution_space, quotient, solve_matrix,
)
from .report import PASS, Check, Report, compare

LEFT, RIGHT = "left", "right"
BOTH = frozenset({LEFT, RIGHT})


class Bimodule:
    """A left_alg-right_alg bimodule given by action matrices on a basis."""

    def __init__(self, left_alg: FinDimAlgebra, right_alg: FinDimAlgebra, dim: int,
                 left_action, right_action, name: str = "", origin=None):
        self.left_alg = left_alg
        self.right_alg = right_alg
        self.dim = dim
        self.left_action = tuple(left_action)
        self.right_action = tuple(right_action)
        self.name = name
        self.origin = origin or ("leaf",)
        self._cache = {}
        if len(self.left_action) != left_alg.dim or len(self.right_action) != right_alg.dim:
            raise InputError(f"bimodule {name}: one action matrix per algebra basis element expected")
        for m in self.left_action + self.right_action:
            if m.shape != (dim, dim):
                raise InputError(f"bimodule {name}: action matrix of shape {m.shape}, expected {(dim, dim)}")

    def __repr__(self):
        return f"Bimodule({self.name or '?'}, dim={self.dim}, {self.left_alg.name}-{self.right_alg.name})"

    @property
    def field(self):
        return self.left_alg.field

    def left_by(self, x) -> Matrix:
        out = Matrix.zeros(self.field, self.dim, self.dim)
        for a, m in zip(x, self.left_action):
            if a:
                out = out + m.scale(a)
        return out

    def right_by(self, x) -> Matrix:
        out = Matrix.zeros(self.field, self.dim, self.dim)
        for a, m in zip(x, self.right_action):
            if a:
                out = out + m.scale(a)
        return out

    def act_left_matrix(self) -> Matrix:
        """a (x) m -> a m as a map left_alg (x)_k M -> M."""
        key = "act_left"
        if key not in self._cache:
            self._cache[key] = self.left_action[0].hstack(*self.left_action[1:])
        return self._cache[key]

    def act_right_matrix(self) -> Matrix:
        """m (x) a -> m a as a map M (x)_k right_alg -> M."""
        key = "act_right"
        if key not in self._cache:
            d, n = self.dim, self.right_alg.dim
            rows = [[0] * (d * n) for _ in range(d)]
            for a, m in enumerate(self.right_action):
                for j in range(d):
                    for i in range(d):
                        rows[i][j * n + a] = m.rows[i][j]
            self._cache[key] = Matrix(self.field, rows, d * n)
        return self._cache[key]

    def identity(self) -> Matrix:
        return Matrix.identity(self.field, self.dim)

    def restrict(self, left: AlgebraMorphism | None = None,
                 right: AlgebraMorphism | None = None) -> Bimodule:
        """Restriction of scalars along algebra maps into left_alg / right_alg."""
        la, ra = self.left_action, self.right_action
        lalg, ralg = self.left_alg, self.right_alg
        if left is not None:
            if not left.target.same_as(self.left_alg):
                raise InputError(f"restrict {self.name}: left morphism lands in the wrong algebra")
            la = [self.left_by(left.image(i)) for i in range(left.source.dim)]
            lalg = left.source
        if right is not None:
            if not right.target.same_as(self.right_alg):
                raise InputError(f"restrict {self.name}: right morphism lands in the wrong algebra")
            ra = [self.right_by(right.image(i)) for i in range(right.source.dim)]
            ralg = right.source
        return Bimodule(lalg, ralg, self.dim, la, ra, self.name, ("restrict", self))

    def validate(self) -> Report:
        rep = Report(f"bimodule {self.name}")
        ident = self.identity()
        for side, alg, acts in ((LEFT, self.left_alg, self.left_action),
                                (RIGHT, self.right_alg, self.right_action)):
            unit = self.left_by(alg.unit) if side == LEFT else self.right_by(alg.unit)
            rep.add(compare(f"{side} unital", "", unit, ident))
            for i in range(alg.dim):
                for j in range(alg.dim):
                    if side == LEFT:
                        lhs = acts[i] @ acts[j]
                        rhs = self.left_by(alg.mul[i][j])
                    else:
                        lhs = acts[i] @ acts[j]
                        rhs = self.right_by(alg.mul[j][i])
                    c = compare(f"{side} associative", "", lhs, rhs, f"basis pair ({i}, {j})")
                    if not c.passed:
                        rep.add(c)
            if not rep.failures:
                rep.passed_check(f"{side} associative")
        ok = True
        for i, lm in enumerate(self.left_action):
            for j, rm in enumerate(self.right_action):
                c = compare("actions commute", "", lm @ rm, rm @ lm, f"left {i}, right {j}")
                if not c.passed:
                    rep.add(c)
                    ok = False
        if ok:
            rep.passed_check("actions commute")
        return rep

    # flat descriptions

    def flat_factors(self):
        key = "flat_factors"
        if key not in self._cache:
            kind = self.origin[0]
            if kind == "tensor":
                out = ()
                for fac in self.origin[1].factors:
                    out += fac.flat_factors()
            elif kind in ("sub", "restrict", "quotient"):
                out = self.origin[1].flat_factors()
            else:
                out = (self,)
            self._cache[key] = out
        return self._cache[key]

    def flat_dim(self) -> int:
        return math.prod(f.dim for f in self.flat_factors())

    def flat_section(self) -> Matrix:
        """Map from this module to flat representatives."""
        key = "flat_section"
        if key not in self._cache:
            kind = self.origin[0]
            if kind == "tensor":
                tp = self.origin[1]
                out = kron_all(*[f.flat_section() for f in tp.factors]) @ tp.section
            elif kind == "sub":
                out = self.origin[1].flat_section() @ self.origin[2].inclusion()
            elif kind == "restrict":
                out = self.origin[1].flat_section()
            elif kind == "quotient":
                out = self.origin[1].flat_section() @ self.origin[3]
            else:
                out = self.identity()
            self._cache[key] = out
        return self._cache[key]

    def flat_projection(self) -> Matrix:
        """Map from flat representatives onto this module (not defined for subobjects)."""
        key = "flat_projection"
        if key not in self._cache:
            kind = self.origin[0]
            if kind == "tensor":
                tp = self.origin[1]
                out = tp.projection @ kron_all(*[f.flat_projection() for f in tp.factors])
            elif kind == "sub":
                raise InputError(f"{self.name}: subobjects have no flat projection; corestrict instead")
            elif kind == "restrict":
                out = self.origin[1].flat_projection()
            elif kind == "quotient":
                out = self.origin[2] @ self.origin[1].flat_projection()
            else:
                out = self.identity()
            self._cache[key] = out
        return self._cache[key]

    def as_leaf(self, name: str | None = None) -> Bimodule:
        """The same module with its construction history forgotten."""
        return Bimodule(self.left_alg, self.right_alg, self.dim, self.left_action,
                        self.right_action, name or self.name)

    def has_flat_projection(self) -> bool:
        kind = self.origin[0]
        if kind == "sub":
            return False
        if kind == "tensor":
            return all(f.has_flat_projection() for f in self.origin[1].factors)
        if kind in ("restrict", "quotient"):
            return self.origin[1].has_flat_projection()
        return True


def regular_bimodule(a: FinDimAlgebra, name: str | None = None) -> Bimodule:
    return Bimodule(a, a, a.dim, a.left_mult, a.right_mult, name or a.name)


def left_module(a: FinDimAlgebra, dim: int, left_action, name: str = "") -> Bimodule:
    """A left a-module viewed as an a-k bimodule."""
    k = ground_field(a.field)
    return Bimodule(a, k, dim, left_action, [Matrix.identity(a.field, dim)], name)


def right_module(a: FinDimAlgebra, dim: int, right_action, name: str = "") -> Bimodule:
    k = ground_field(a.field)
    return Bimodule(k, a, dim, [Matrix.identity(a.field, dim)], right_action, name)


class BimoduleMap:
    """A linear map declared to respect the given sides."""

    def __init__(self, source: Bimodule, target: Bimodule, matrix: Matrix,
                 linearity=BOTH, name: str = ""):
        if matrix.shape != (target.dim, source.dim):
            raise InputError(f"map {name}: matrix shape {matrix.shape}, expected {(target.dim, source.dim)}")
        self.source = source
        self.target = target
        self.matrix = matrix
        self.linearity = frozenset(linearity)
        self.name = name

    def __repr__(self):
        return f"BimoduleMap({self.name or '?'}: {self.source.name} -> {self.target.name})"

    def check(self, anchor: str = "") -> Report:
        rep = Report(f"linearity of {self.name}")
        s, t, m = self.source, self.target, self.matrix
        if LEFT in self.linearity:
            if not s.left_alg.same_as(t.left_alg):
                rep.failed_check(f"{self.name} left linear", anchor, "left algebras differ")
            else:
                rep.add(_first_failure(f"{self.name} left linear", anchor,
                                       [(m @ a, b @ m) for a, b in zip(s.left_action, t.left_action)]))
        if RIGHT in self.linearity:
            if not s.right_alg.same_as(t.right_alg):
                rep.failed_check(f"{self.name} right linear", anchor, "right algebras differ")
            else:
                rep.add(_first_failure(f"{self.name} right linear", anchor,
                                       [(m @ a, b @ m) for a, b in zip(s.right_action, t.right_action)]))
        return rep

    def compose(self, first: BimoduleMap) -> BimoduleMap:
        """self after first."""
        return BimoduleMap(first.source, self.target, self.matrix @ first.matrix,
                           self.linearity & first.linearity, f"{self.name}.{first.name}")


def _first_failure(name, anchor, pairs):
    for idx, (lhs, rhs) in enumerate(pairs):
        c = compare(name, anchor, lhs, rhs, f"algebra basis element {idx}")
        if not c.passed:
            return c
    return Check(name, anchor, PASS)


class TensorProduct:
    """factors[0] (x)_{overs[0]} factors[1] (x) ... as a quotient of the plain tensor product."""

    def __init__(self, factors, overs):
        factors, overs = tuple(factors), tuple(overs)
        if not factors:
            raise InputError("tensor product of no factors")
        if len(overs) != len(factors) - 1:
            raise InputError("need one algebra per junction")
        for i, a in enumerate(overs):
            left, right = factors[i], factors[i + 1]
            if not left.right_alg.same_as(a):
                raise InputError(f"algebra mismatch: {left.name} is not a right {a.name}-module")
            if not right.left_alg.same_as(a):
                raise InputError(f"algebra mismatch: {right.name} is not a left {a.name}-module")
        self.factors = factors
        self.overs = overs
        self.dims = tuple(f.dim for f in factors)
        self.ambient_dim = math.prod(self.dims)
        field = factors[0].field
        self.field = field
        n = len(factors)
        if n == 1:
            self.projection = self.section = factors[0].identity()
            self.result = factors[0]
            return
        if n == 2:
            m, nn = factors
            a = overs[0]
            rows = []
            im, inn = m.identity(), nn.identity()
            for r in range(a.dim):
                g = kron(m.right_action[r], inn) - kron(im, nn.left_action[r])
                for j in range(g.ncols):
                    col = g.col(j)
                    if any(col):
                        rows.append(col)
            self.projection, self.section, self._relations = _quotient_from_rows(field, self.ambient_dim, rows)
            lproj = [self.projection @ kron(x, inn) @ self.section for x in m.left_action]
            rproj = [self.projection @ kron(im, x) @ self.section for x in nn.right_action]
        else:
            prefix = tensor(factors[:-1], overs[:-1])
            last = factors[-1]
            binary = tensor((prefix.result, last), overs[-1:])
            il = last.identity()
            self.projection = binary.projection @ kron(prefix.projection, il)
            self.section = kron(prefix.section, il) @ binary.section
            lproj = binary.result.left_action
            rproj = binary.result.right_action
        name = " (x) ".join(f.name or "?" for f in factors)
        self.result = Bimodule(factors[0].left_alg, factors[-1].right_alg, self.projection.nrows,
                               lproj, rproj, f"({name})", ("tensor", self))

    def __repr__(self):
        return f"TensorProduct({self.result.name}, dim={self.dim}, ambient={self.ambient_dim})"

    @property
    def dim(self) -> int:
        return self.projection.nrows

    @property
    def left_factor(self):
        return self.factors[0]

    @property
    def right_factor(self):
        return self.factors[-1]

    @property
    def over(self):
        return self.overs[0] if len(self.overs) == 1 else self.overs

    @property
    def relations(self) -> Subspace:
        if not hasattr(self, "_relations"):
            if len(self.factors) == 1:
                self._relations = Subspace.zero(self.field, self.ambient_dim)
            else:
                self._relations = kernel_basis(self.projection)
        return self._relations

    def relation_matrix(self) -> Matrix:
        """Relation basis vectors as columns."""
        rel = self.relations
        if rel.dim == 0:
            return Matrix.zeros(self.field, self.ambient_dim, 0)
        return rel.inclusion()


BalancedTensor = TensorProduct


@lru_cache(maxsize=None)
def _tensor_cached(factors, overs):
    return TensorProduct(factors, overs)


def tensor(factors, overs) -> TensorProduct:
    """Cached constructor; identical inputs share one quotient basis."""
    return _tensor_cached(tuple(factors), tuple(overs))


def tensor_over(m: Bimodule, a: FinDimAlgebra, n: Bimodule) -> TensorProduct:
    return tensor((m, n), (a,))


def as_tensor(x) -> TensorProduct:
    return x if isinstance(x, TensorProduct) else tensor((x,), ())


def _check_descends(name, out_proj_map: Matrix, rel: Matrix):
    """out_proj_map kills the relation columns, else NotBalancedError."""
    if rel.ncols == 0:
        return
    img = out_proj_map @ rel
    for j in range(img.ncols):
        col = img.col(j)
        if any(col):
            f = rel.field
            raise NotBalancedError(
                f"{name}: not balanced; relation vector {j} is not sent to zero",
                {"relation": [f.fmt(x) for x in rel.col(j)], "image": [f.fmt(x) for x in col]})


def _group(tp: TensorProduct, start: int, count: int):
    if count == 0:
        return None
    return tensor(tp.factors[start:start + count], tp.overs[start:start + count - 1])


def tensor_maps(src, dst, blocks, check: bool = True, name: str = "tensor map") -> Matrix:
    """Induced map between tensor products given blockwise.

    blocks is a list of (n_src, n_dst, matrix[, ambient]): the matrix maps the tensor
    product of the next n_src source factors to that of the next n_dst target factors
    (a block with no source factors maps the ground field).  With ambient=True the
    matrix acts on the plain tensor products of those factors instead of the quotients.
    """
    src, dst = as_tensor(src), as_tensor(dst)
    field = src.field
    lifts = []
    si = di = 0
    for block in blocks:
        ns, nd, m = block[:3]
        ambient = len(block) > 3 and block[3]
        sg, dg = _group(src, si, ns), _group(dst, di, nd)
        if ambient:
            sdim = sg.ambient_dim if sg else 1
            ddim = dg.ambient_dim if dg else 1
        else:
            sdim = sg.dim if sg else 1
            ddim = dg.dim if dg else 1
        if m.shape != (ddim, sdim):
            raise InputError(f"{name}: block of shape {m.shape}, expected {(ddim, sdim)}")
        lift = m
        if not ambient:
            if sg is not None:
                lift = lift @ sg.projection
            if dg is not None:
                lift = dg.section @ lift
        lifts.append(lift)
        si += ns
        di += nd
    if si != len(src.factors) or di != len(dst.factors):
        raise InputError(f"{name}: blocks do not cover the factors")
    big = kron_all(*lifts) if lifts else Matrix.identity(field, 1)
    pb = dst.projection @ big
    if check:
        _check_descends(name, pb, src.relation_matrix())
    return pb @ src.section


def ambient_map(src, dst, flat: Matrix, check: bool = True, name: str = "map") -> Matrix:
    """A formula on plain tensors pushed down to the quotients src -> dst."""
    src, dst = as_tensor(src), as_tensor(dst)
    return tensor_maps(src, dst, [(len(src.factors), len(dst.factors), flat, True)], check, name)


def flat_map(src, dst, flat: Matrix, check: bool = True, name: str = "map") -> Matrix:
    """Like ambient_map, but on flat representatives (factors may themselves be composite)."""
    src = src.result if isinstance(src, TensorProduct) else src
    dst = dst.result if isinstance(dst, TensorProduct) else dst
    return descend(flat, src, dst, check, name)


def rebase(m: Matrix, src: Bimodule, dst: Bimodule) -> Matrix:
    """A map src -> dst rewritten on flat representatives."""
    return dst.flat_section() @ m @ src.flat_projection()


def induced_map(f: BimoduleMap, g: BimoduleMap, src: TensorProduct, dst: TensorProduct) -> BimoduleMap:
    """f (x) g between balanced tensor products."""
    if f.source is not src.factors[0] and f.source.dim != src.factors[0].dim:
        raise InputError("induced_map: f does not start at the left factor")
    if g.source is not src.factors[-1] and g.source.dim != src.factors[-1].dim:
        raise InputError("induced_map: g does not start at the right factor")
    m = tensor_maps(src, dst, [(1, 1, f.matrix), (1, 1, g.matrix)], name=f"{f.name} (x) {g.name}")
    lin = set()
    if LEFT in f.linearity:
        lin.add(LEFT)
    if RIGHT in g.linearity:
        lin.add(RIGHT)
    return BimoduleMap(src.result, dst.result, m, lin, f"{f.name} (x) {g.name}")


def descend(flat_map: Matrix, src: Bimodule, dst: Bimodule, check: bool = True,
            name: str = "map") -> Matrix:
    """Push a map written on flat representatives down to src -> dst."""
    out = dst.flat_projection() @ flat_map
    if check and src.origin[0] == "tensor":
        tp = src.origin[1]
        one_level = out @ kron_all(*[f.flat_section() for f in tp.factors])
        _check_descends(name, one_level, tp.relation_matrix())
    return out @ src.flat_section()


def corestrict(values: Matrix, inclusion: Matrix, name: str = "map") -> Matrix:
    """Solve inclusion X = values; raise if some column is not in the image."""
    x = solve_matrix(inclusion, values)
    if x is None:
        for j in range(values.ncols):
            if solve_matrix(inclusion, values.submatrix(cols=[j])) is None:
                f = values.field
                raise InconsistencyError(f"{name}: image leaves the target subobject",
                                         {"basis_index": j, "value": [f.fmt(v) for v in values.col(j)]})
    return x


def submodule(m: Bimodule, sub: Subspace, sides=BOTH, name: str = "") -> Bimodule:
    """Sub-bimodule on a subspace; sides outside the closed set are demoted to the ground field."""
    incl = sub.inclusion()
    acts = {}
    for side, alg, mats in ((LEFT, m.left_alg, m.left_action), (RIGHT, m.right_alg, m.right_action)):
        restricted = []
        closed = True
        for mat in mats:
            co = sub.coordinate_matrix(mat @ incl) if sub.dim else Matrix.zeros(m.field, 0, 0)
            if co is None:
                closed = False
                break
            restricted.append(co)
        if not closed:
            if side in sides:
                raise InconsistencyError(f"{name or m.name}: subspace not closed under the {side} action")
            alg = ground_field(m.field)
            restricted = [Matrix.identity(m.field, sub.dim)]
        acts[side] = (alg, restricted)
    return Bimodule(acts[LEFT][0], acts[RIGHT][0], sub.dim, acts[LEFT][1], acts[RIGHT][1],
                    name or f"sub({m.name})", ("sub", m, sub))


def equalizer(f: BimoduleMap, g: BimoduleMap, name: str = ""):
    """Kernel of f - g as a sub-bimodule of the common source, with its inclusion."""
    if f.source is not g.source and f.source.dim != g.source.dim:
        raise InputError("equalizer: sources differ")
    if f.matrix.shape != g.matrix.shape:
        raise InputError("equalizer: shape mismatch")
    sub = kernel_basis(f.matrix - g.matrix)
    sides = f.linearity & g.linearity
    obj = submodule(f.source, sub, sides, name or f"eq({f.name}, {g.name})")
    return sub, BimoduleMap(obj, f.source, sub.inclusion(), sides, "inclusion")


def quotient_module(m: Bimodule, rel: Subspace, name: str = "") -> tuple:
    proj, sec = quotient(rel)
    relm = rel.inclusion() if rel.dim else Matrix.zeros(m.field, m.dim, 0)
    acts = []
    for mats in (m.left_action, m.right_action):
        out = []
        for mat in mats:
            if rel.dim and not (proj @ mat @ relm).is_zero():
                raise InconsistencyError(f"{name or m.name}: relations not closed under the actions")
            out.append(proj @ mat @ sec)
        acts.append(out)
    q = Bimodule(m.left_alg, m.right_alg, proj.nrows, acts[0], acts[1], name or f"quot({m.name})",
                 ("quotient", m, proj, sec))
    return q, proj, sec


def coequalizer(f: BimoduleMap, g: BimoduleMap, name: str = ""):
    """Cokernel of f - g with induced actions, and the projection."""
    if f.matrix.shape != g.matrix.shape:
        raise InputError("coequalizer: shape mismatch")
    rel = Subspace.column_space(f.matrix - g.matrix)
    q, proj, _ = quotient_module(f.target, rel, name)
    return q, BimoduleMap(f.target, q, proj, f.linearity & g.linearity, "projection")


def map_solution_space(field, shape, constraints) -> MapSpace | None:
    """Matrices X of the given shape satisfying linear conditions.

    Each condition is (terms, rhs) with terms (P, Q) meaning P X Q (None = identity)
    or callables linear in X; None is returned when the system is infeasible.
    """
    return matrix_solution_space(field, shape, constraints)


def linear_maps_space(src: Bimodule, dst: Bimodule, sides=BOTH) -> MapSpace:
    """All maps src -> dst respecting the given sides."""
    cons = []
    if LEFT in sides:
        for a, b in zip(src.left_action, dst.left_action):
            cons.append(([(None, a), (b.scale(-1), None)], None))
    if RIGHT in sides:
        for a, b in zip(src.right_action, dst.right_action):
            cons.append(([(None, a), (b.scale(-1), None)], None))
    return map_solution_space(src.field, (dst.dim, src.dim), cons)

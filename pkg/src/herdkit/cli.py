"""Command line: load a JSON scenario, run a directive pipeline, print a report.

Exit codes: 0 all checks pass, 1 a check failed, 2 input error, 3 internal inconsistency.
"""

from __future__ import annotations

import argparse
import dataclasses
import json
import sys
from dataclasses import dataclass, field as dc_field
from fractions import Fraction
from pathlib import Path

from .algebra import (
    AlgebraMorphism, FinDimAlgebra, ground_field, group_algebra, identity_morphism,
    matrix_algebra, unit_morphism, validate_algebra,
)
from .bimodule import Bimodule
from .errors import HerdkitError, InconsistencyError, InputError, PreconditionError
from .herd import (
    FormalDualPair, HerdData, check_progenerator, check_tame, check_theta, coring_from_herd_left,
    coring_from_herd_right, validate_formal_dual, validate_herd,
)
from .linalg import Field, Matrix
from .report import FAIL, WARN, Report

SCHEMA = 1
DIRECTIVES = ("check-herd", "build-corings", "check-entwining", "check-galois", "coherd",
              "reconstruct", "compose", "coobject", "setherd")
EXIT_PASS, EXIT_FAIL, EXIT_INPUT, EXIT_INCONSISTENT = 0, 1, 2, 3


@dataclass
class Scenario:
    id: str
    field: Field
    directive: str = ""
    algebras: dict = dc_field(default_factory=dict)
    morphisms: dict = dc_field(default_factory=dict)
    bimodules: dict = dc_field(default_factory=dict)
    maps: dict = dc_field(default_factory=dict)
    herd: HerdData | None = None
    coobject: dict | None = None
    compose: dict | None = None
    setherd: object = None


# loading

def _need(obj, key, loc, kind=None):
    if not isinstance(obj, dict):
        raise InputError("expected an object", loc)
    if key not in obj:
        raise InputError(f"missing key {key!r}", loc)
    v = obj[key]
    if kind is not None and not isinstance(v, kind):
        raise InputError(f"expected {getattr(kind, '__name__', kind)}", f"{loc}.{key}")
    return v


def _ref(table: dict, name, loc, what: str):
    if not isinstance(name, str):
        raise InputError(f"expected the name of a {what}", loc)
    if name not in table:
        raise InputError(f"unresolved reference to {what} {name!r}", loc)
    return table[name]


def _scalar(f: Field, x, loc):
    if isinstance(x, bool) or not isinstance(x, (int, str)):
        raise InputError(f"not a field element: {x!r} (use an integer or a string like '3/4')", loc)
    try:
        return f(x)
    except InputError as e:
        raise InputError(str(e), loc) from None


def _matrix(f: Field, rows, loc, shape=None) -> Matrix:
    if not isinstance(rows, list) or any(not isinstance(r, list) for r in rows):
        raise InputError("a matrix is a list of rows", loc)
    ncols = len(rows[0]) if rows else (shape[1] if shape else 0)
    for i, r in enumerate(rows):
        if len(r) != ncols:
            raise InputError(f"row {i} has {len(r)} entries, expected {ncols}", loc)
    m = Matrix(f, [[_scalar(f, x, f"{loc}[{i}][{j}]") for j, x in enumerate(r)]
                   for i, r in enumerate(rows)], ncols)
    if shape is not None and m.shape != tuple(shape):
        raise InputError(f"shape mismatch: got {m.shape[0]}x{m.shape[1]}, expected {shape[0]}x{shape[1]}", loc)
    return m


def _load_algebra(f: Field, name, spec, loc) -> FinDimAlgebra:
    if not isinstance(spec, dict):
        raise InputError("expected an object", loc)
    if spec.get("ground"):
        return ground_field(f)
    if "matrix" in spec:
        n = spec["matrix"]
        if not isinstance(n, int) or n < 1:
            raise InputError("matrix size must be a positive integer", f"{loc}.matrix")
        return matrix_algebra(f, n)
    if "group" in spec:
        orders = spec["group"]
        if not isinstance(orders, list) or not all(isinstance(o, int) and o > 0 for o in orders):
            raise InputError("group is a list of positive cyclic orders", f"{loc}.group")
        return group_algebra(f, orders, name)
    dim = _need(spec, "dim", loc, int)
    mul = _need(spec, "mul", loc, list)
    if len(mul) != dim:
        raise InputError(f"shape mismatch: {len(mul)} rows of structure constants, expected {dim}", f"{loc}.mul")
    consts = []
    for i, row in enumerate(mul):
        if not isinstance(row, list) or len(row) != dim:
            raise InputError(f"shape mismatch: expected {dim} products", f"{loc}.mul[{i}]")
        out = []
        for j, v in enumerate(row):
            vloc = f"{loc}.mul[{i}][{j}]"
            if not isinstance(v, list) or len(v) != dim:
                raise InputError(f"shape mismatch: expected a vector of length {dim}", vloc)
            out.append([_scalar(f, x, f"{vloc}[{k}]") for k, x in enumerate(v)])
        consts.append(out)
    unit = _need(spec, "unit", loc, list)
    if len(unit) != dim:
        raise InputError(f"shape mismatch: unit has length {len(unit)}, expected {dim}", f"{loc}.unit")
    return FinDimAlgebra(f, dim, consts, [_scalar(f, x, f"{loc}.unit[{k}]") for k, x in enumerate(unit)], name)


def _load_morphism(f: Field, algs: dict, spec, loc) -> AlgebraMorphism:
    if not isinstance(spec, dict):
        raise InputError("expected an object", loc)
    if "identity" in spec:
        return identity_morphism(_ref(algs, spec["identity"], f"{loc}.identity", "algebra"))
    if "unit" in spec:
        target = _ref(algs, spec["unit"], f"{loc}.unit", "algebra")
        src = _ref(algs, spec["source"], f"{loc}.source", "algebra") if "source" in spec else None
        if src is not None and src.dim != 1:
            raise InputError("the source of a unit morphism is the ground field", f"{loc}.source")
        return unit_morphism(target, src)
    src = _ref(algs, _need(spec, "source", loc), f"{loc}.source", "algebra")
    dst = _ref(algs, _need(spec, "target", loc), f"{loc}.target", "algebra")
    m = _matrix(f, _need(spec, "matrix", loc), f"{loc}.matrix", (dst.dim, src.dim))
    return AlgebraMorphism(src, dst, m)


def _load_bimodule(f: Field, algs: dict, name, spec, loc) -> Bimodule:
    left = _ref(algs, _need(spec, "left", loc), f"{loc}.left", "algebra")
    right = _ref(algs, _need(spec, "right", loc), f"{loc}.right", "algebra")
    dim = _need(spec, "dim", loc, int)
    acts = {}
    for side, alg in (("left_action", left), ("right_action", right)):
        mats = _need(spec, side, loc, list)
        if len(mats) != alg.dim:
            raise InputError(f"shape mismatch: {len(mats)} action matrices, expected one per basis "
                             f"element of {alg.name or 'the algebra'} ({alg.dim})", f"{loc}.{side}")
        acts[side] = [_matrix(f, m, f"{loc}.{side}[{i}]", (dim, dim)) for i, m in enumerate(mats)]
    return Bimodule(left, right, dim, acts["left_action"], acts["right_action"], name)


def _load_herd(sc: Scenario, spec, loc) -> HerdData:
    mods, morph, maps = sc.bimodules, sc.morphisms, sc.maps
    t = _ref(mods, _need(spec, "T", loc), f"{loc}.T", "bimodule")
    th = _ref(mods, _need(spec, "dual", loc), f"{loc}.dual", "bimodule")
    alpha = _ref(morph, _need(spec, "alpha", loc), f"{loc}.alpha", "morphism")
    beta = _ref(morph, _need(spec, "beta", loc), f"{loc}.beta", "morphism")
    ev = _ref(maps, _need(spec, "ev", loc), f"{loc}.ev", "map")
    hatev = _ref(maps, _need(spec, "hatev", loc), f"{loc}.hatev", "map")
    gamma = _ref(maps, _need(spec, "gamma", loc), f"{loc}.gamma", "map")
    A, B = t.right_alg, t.left_alg
    for shape, m, key in (((A.dim, th.dim * t.dim), ev, "ev"), ((B.dim, t.dim * th.dim), hatev, "hatev"),
                          ((t.dim * th.dim * t.dim, t.dim), gamma, "gamma")):
        if m.shape != shape:
            raise InputError(f"shape mismatch: map {spec[key]!r} is {m.shape[0]}x{m.shape[1]}, "
                             f"expected {shape[0]}x{shape[1]}", f"{loc}.{key}")
    try:
        dual = FormalDualPair(t, th, alpha, beta, ev, hatev, sc.id)
        return HerdData(dual, gamma, sc.id)
    except InputError as e:
        raise InputError(str(e), loc) from None


def _load_setherd(spec, loc):
    from .setherd import FiniteHerd, affine_herd, product_group
    if not isinstance(spec, dict):
        raise InputError("expected an object", loc)
    name = spec.get("name", "")
    if "affine" in spec:
        orders = spec["affine"]
        if not isinstance(orders, list) or not all(isinstance(o, int) and o > 0 for o in orders):
            raise InputError("affine is a list of positive cyclic orders", f"{loc}.affine")
        return affine_herd(product_group(*orders), name or "affine " + "x".join(f"Z/{o}" for o in orders))
    chi = _need(spec, "chi", loc, list)
    n = len(chi)
    for x, plane in enumerate(chi):
        if not isinstance(plane, list) or len(plane) != n:
            raise InputError(f"shape mismatch: expected {n} rows", f"{loc}.chi[{x}]")
        for y, row in enumerate(plane):
            if not isinstance(row, list) or len(row) != n:
                raise InputError(f"shape mismatch: expected {n} entries", f"{loc}.chi[{x}][{y}]")
            for z, v in enumerate(row):
                if isinstance(v, bool) or not isinstance(v, int) or not 0 <= v < n:
                    raise InputError(f"entry must be an element index in 0..{n - 1}", f"{loc}.chi[{x}][{y}][{z}]")
    try:
        return FiniteHerd(n, chi, tuple(spec.get("labels", ())), name)
    except InputError as e:
        raise InputError(str(e), loc) from None


def _load_coobject(spec, loc) -> dict:
    if not isinstance(spec, dict):
        raise InputError("expected an object", loc)
    out = {"order": spec.get("order", 2)}
    if "a" in spec:
        out["a"] = spec["a"]
    return out


def parse_scenario(data, scenario_id: str = "scenario", field_override=None) -> Scenario:
    if not isinstance(data, dict):
        raise InputError("the top level must be an object", "$")
    schema = data.get("schema")
    if schema != SCHEMA:
        raise InputError(f"unsupported schema {schema!r}; expected {SCHEMA}", "$.schema")
    f = Field.parse(field_override) if field_override else None
    if f is None:
        try:
            f = Field.parse(data.get("field", "Q"))
        except InputError as e:
            raise InputError(str(e), "$.field") from None
    sc = Scenario(str(data.get("id", scenario_id)), f, str(data.get("directive", "")))
    for section in ("algebras", "morphisms", "bimodules", "maps"):
        if not isinstance(data.get(section, {}), dict):
            raise InputError("expected an object keyed by name", f"$.{section}")
    for name, spec in data.get("algebras", {}).items():
        sc.algebras[name] = _load_algebra(f, name, spec, f"$.algebras.{name}")
    for name, spec in data.get("morphisms", {}).items():
        sc.morphisms[name] = _load_morphism(f, sc.algebras, spec, f"$.morphisms.{name}")
    for name, spec in data.get("bimodules", {}).items():
        loc = f"$.bimodules.{name}"
        if not isinstance(spec, dict):
            raise InputError("expected an object", loc)
        sc.bimodules[name] = _load_bimodule(f, sc.algebras, name, spec, loc)
    for name, rows in data.get("maps", {}).items():
        sc.maps[name] = _matrix(f, rows, f"$.maps.{name}")
    if "herd" in data:
        sc.herd = _load_herd(sc, data["herd"], "$.herd")
    if "coobject" in data:
        sc.coobject = _load_coobject(data["coobject"], "$.coobject")
    if "compose" in data:
        spec = data["compose"]
        loc = "$.compose"
        sc.compose = {"left": _load_coobject(_need(spec, "left", loc), f"{loc}.left"),
                      "right": _load_coobject(_need(spec, "right", loc), f"{loc}.right")}
        for side in ("left", "right"):
            if "a" not in sc.compose[side]:
                raise InputError("missing key 'a'", f"{loc}.{side}")
    if "setherd" in data:
        sc.setherd = _load_setherd(data["setherd"], "$.setherd")
    return sc


def load_scenario(path, field_override=None) -> Scenario:
    p = Path(path)
    try:
        text = p.read_text(encoding="utf-8")
    except OSError as e:
        raise InputError(f"cannot read file: {e.strerror}", str(path)) from None
    try:
        data = json.loads(text)
    except json.JSONDecodeError as e:
        raise InputError(f"malformed JSON: {e.msg}", f"{path}:{e.lineno}:{e.colno}") from None
    return parse_scenario(data, p.stem, field_override)


# serialisation of herds (used to produce fixtures)

def _rows(m: Matrix) -> list:
    return [[m.field.fmt(x) for x in r] for r in m.rows]


def _algebra_json(a: FinDimAlgebra) -> dict:
    f = a.field
    return {"dim": a.dim, "mul": [[[f.fmt(x) for x in v] for v in row] for row in a.mul],
            "unit": [f.fmt(x) for x in a.unit]}


def herd_to_json(h: HerdData, scenario_id: str = "") -> dict:
    """A schema-1 document that loads back to an equal herd."""
    d = h.dual
    algs = []
    keys = {}

    def key(role, a):
        for k, b in algs:
            if b.same_as(a):
                return k
        algs.append((role, a))
        return role

    for role, a in (("A", d.A), ("B", d.B), ("R", d.R), ("S", d.S)):
        keys[role] = key(role, a)
    t, th = d.T, d.Tdual

    def mod(m, left, right):
        return {"left": keys[left], "right": keys[right], "dim": m.dim,
                "left_action": [_rows(x) for x in m.left_action],
                "right_action": [_rows(x) for x in m.right_action]}

    return {
        "schema": SCHEMA,
        "id": scenario_id or h.name,
        "field": d.field.name,
        "algebras": {k: _algebra_json(a) for k, a in algs},
        "morphisms": {
            "alpha": {"source": keys["R"], "target": keys["A"], "matrix": _rows(d.R_map.matrix)},
            "beta": {"source": keys["S"], "target": keys["B"], "matrix": _rows(d.S_map.matrix)},
        },
        "bimodules": {"T": mod(t, "B", "A"), "That": mod(th, "A", "B")},
        "maps": {"ev": _rows(d.ev), "hatev": _rows(d.hatev), "gamma": _rows(h.gamma)},
        "herd": {"T": "T", "dual": "That", "alpha": "alpha", "beta": "beta",
                 "ev": "ev", "hatev": "hatev", "gamma": "gamma"},
    }


# running

class Run:
    """Accumulates sectioned checks and a summary for one scenario."""

    def __init__(self, sc: Scenario, directive: str):
        self.report = Report(f"{sc.id}: {directive}")
        self.report.data.update({"scenario": sc.id, "directive": directive, "field": sc.field.name})
        self.summary = {}

    def add(self, section: str, rep: Report) -> bool:
        for c in rep.checks:
            self.report.add(dataclasses.replace(c, section=section))
        return rep.ok

    def _note(self, section: str, check):
        self.report.checks[-1] = dataclasses.replace(check, section=section)

    def guard(self, section: str, anchor: str, fn):
        """Run a construction; a violated hypothesis becomes a failed check instead of a crash."""
        try:
            return fn()
        except PreconditionError as e:
            self._note(section, self.report.failed_check("hypotheses of the construction", anchor, str(e)))
            return None

    def skip(self, section: str, why: str):
        self._note(section, self.report.warn("skipped", "", why))


def _validate_inputs(run: Run, sc: Scenario) -> bool:
    ok = True
    for name, a in sc.algebras.items():
        ok &= run.add(f"algebra {name}", validate_algebra(a))
    for name, m in sc.morphisms.items():
        ok &= run.add(f"morphism {name}", m.validate())
    for name, m in sc.bimodules.items():
        ok &= run.add(f"bimodule {name}", m.validate())
    return ok


def _herd_validators(run: Run, h: HerdData) -> bool:
    ok = run.add("formal dual", validate_formal_dual(h.dual))
    ok &= run.add("herd", validate_herd(h))
    prog = check_progenerator(h.dual)
    run.add("progenerator", prog)
    run.summary.update({"dim A": h.dual.A.dim, "dim B": h.dual.B.dim, "dim R": h.dual.R.dim,
                        "dim S": h.dual.S.dim, "dim T": h.dual.T.dim, "dim T^": h.dual.Tdual.dim})
    return ok


def _tame(run: Run, h: HerdData) -> bool:
    rep = check_tame(h)
    run.summary["tame"] = rep.ok
    return run.add("tameness", rep)


def _corings(run: Run, h: HerdData):
    cc, tc = coring_from_herd_right(h)
    dd, td = coring_from_herd_left(h)
    run.add("coring over A", cc.validate())
    run.add("T as comodule over A", tc.validate())
    run.add("coring over B", dd.validate())
    run.add("T as comodule over B", td.validate())
    run.add("theta", check_theta(h))
    run.summary.update({"dim coring over A": cc.dim, "dim coring over B": dd.dim})


def _entwinings(run: Run, h: HerdData):
    from .coring import base_coring_C, base_coring_D, check_theta_iso, entwining_from_herd, left_entwining_from_herd
    C = base_coring_C(h)
    D = base_coring_D(h)
    run.add("equaliser coring C", C.report)
    run.add("equaliser coring D", D.report)
    theta = check_theta_iso(h, C)
    run.add("theta isomorphism", theta)
    run.add("right entwining", entwining_from_herd(h, C).report)
    run.add("left entwining", left_entwining_from_herd(h, D).report)
    run.summary.update({"dim C": C.dim, "dim D": D.dim, "dim T^ (x)_S T": theta.data.get("dim_ThT")})


def _galois(run: Run, h: HerdData):
    from .coring import base_coring_C, canonical_map, entwining_from_herd, shepherd_from_galois
    C = base_coring_C(h)
    g = canonical_map(h, C)
    run.add("canonical map", g.report)
    run.summary["galois"] = g.galois
    if not g.galois:
        run.skip("shepherd round trip", "the canonical map is not bijective")
        return
    module = entwining_from_herd(h, C).module
    back = run.guard("shepherd round trip", "thm.galois", lambda: shepherd_from_galois(h.dual, module))
    if back is not None:
        rep = Report()
        rep.expect("shepherd from the Galois comodule equals the original", "thm.galois",
                   back.gamma_q == h.gamma_q)
        run.add("shepherd round trip", rep)


def _coherd(run: Run, h: HerdData, rings: bool):
    from .coherd import coherd_from_tame_herd, compare_rings, compute_h_maps, reconstruct_rings, validate_coherd
    c = coherd_from_tame_herd(h, check=False)
    run.add("coherd", validate_coherd(c))
    hm = compute_h_maps(h, c)
    run.add("comparison maps", hm)
    run.summary.update({"dim T-bar": c.Xbar.dim, "h bijective": hm.data["h_bijective"],
                        "h1 bijective": hm.data["h1_bijective"]})
    if not rings:
        return c
    a, b = reconstruct_rings(c)
    run.add("reconstructed A'", a.report)
    run.add("reconstructed B'", b.report)
    cmp = compare_rings(c, h, (a, b))
    run.add("ring comparison", cmp)
    run.summary.update({
        "dim A'": a.dim, "dim B'": b.dim, "A' unital": a.unital, "B' unital": b.unital,
        "A' isomorphic to A": bool(cmp.data.get("nu_A_injective") and cmp.data.get("nu_A_surjective")),
        "B' isomorphic to B": bool(cmp.data.get("nu_B_injective") and cmp.data.get("nu_B_surjective")),
    })
    return c


def _herd_pipeline(run: Run, sc: Scenario, directive: str):
    h = sc.herd
    if h is None:
        raise InputError(f"directive {directive} needs a 'herd' section", "$")
    if not _herd_validators(run, h):
        run.skip("constructions", "the herd axioms fail")
        return
    if directive == "check-herd":
        run.summary["tame"] = check_tame(h).ok
        return
    if directive == "build-corings":
        _corings(run, h)
        return
    if directive == "check-galois":
        if _tame(run, h):
            _galois(run, h)
        else:
            run.skip("constructions", "the herd is not tame")
        return
    if not _tame(run, h):
        run.skip("constructions", "the herd is not tame")
        return
    if directive == "check-entwining":
        _entwinings(run, h)
    else:
        _coherd(run, h, rings=directive == "reconstruct")


def _coobject_param(sc: Scenario, opts) -> tuple:
    spec = dict(sc.coobject or {})
    if opts.get("order") is not None:
        spec["order"] = opts["order"]
    if opts.get("a") is not None:
        spec["a"] = opts["a"]
    if "a" not in spec:
        raise InputError("the coobject directive needs a parameter a (--a or $.coobject.a)", "$.coobject")
    if spec.get("order", 2) != 2:
        raise InputError(f"only quadratic co-objects over kC_2 are built in; got order {spec['order']}",
                         "$.coobject.order")
    return spec["a"]


def _build_coobject(f: Field, a, hopf, loc):
    from .hopf import quadratic_coobject
    if f.characteristic == 2:
        raise InputError("quadratic co-objects need characteristic other than 2", loc)
    x = _scalar(f, a, loc)
    if not x:
        raise InputError("the parameter a must be invertible", loc)
    return quadratic_coobject(f, x, hopf)


def _coobject_pipeline(run: Run, sc: Scenario, opts):
    from .hopf import (
        check_cotranslation, check_equaliser_coalgebra, find_coobject_iso, group_hopf, herd_from_coobject,
        trivial_coobject,
    )
    a = _coobject_param(sc, opts)
    hopf = group_hopf(sc.field, [2])
    run.add("Hopf algebra", hopf.validate())
    c = _build_coobject(sc.field, a, hopf, "$.coobject.a")
    run.add("co-object", c.validate())
    run.add("cotranslation", check_cotranslation(c))
    h = herd_from_coobject(c)
    run.summary["co-object"] = c.name
    if not _herd_validators(run, h) or not _tame(run, h):
        run.skip("constructions", "the herd of the co-object fails")
        return
    run.add("equaliser coalgebra", check_equaliser_coalgebra(c, h))
    _coherd(run, h, rings=True)
    run.summary["A' isomorphic to H"] = run.summary.get("A' isomorphic to A", False)
    iso = find_coobject_iso(c, trivial_coobject(hopf))
    run.summary["co-object isomorphic to H"] = iso.status
    if iso.detail:
        run.summary["isomorphism search"] = iso.detail


def _compose_pipeline(run: Run, sc: Scenario):
    from .hopf import check_composition_theorem, compose_coobjects, find_coobject_iso, group_hopf
    if sc.compose is None:
        raise InputError("directive compose needs a 'compose' section with two co-object parameters", "$")
    hopf = group_hopf(sc.field, [2])
    c = _build_coobject(sc.field, sc.compose["left"]["a"], hopf, "$.compose.left.a")
    d = _build_coobject(sc.field, sc.compose["right"]["a"], hopf, "$.compose.right.a")
    rep = check_composition_theorem(c, d)
    run.add("composition", rep)
    cd = compose_coobjects(c, d)
    prod = _build_coobject(sc.field, sc.field.fmt(sc.field.mul(c.comul[3, 0], d.comul[3, 0])), hopf, "$.compose")
    iso = find_coobject_iso(cd, prod)
    run.summary.update({"left": c.name, "right": d.name, "dim of the tensor product": rep.data["dim"],
                        "sigma shape": list(rep.data["sigma"].shape),
                        f"tensor product isomorphic to {prod.name}": iso.status})


def _setherd_pipeline(run: Run, sc: Scenario, opts):
    from .setherd import affine_herd, basepoint_report, cyclic_group, reconstruct_group, validate_set_herd
    h = sc.setherd
    if opts.get("order") is not None:
        n = opts["order"]
        if n < 1:
            raise InputError("--order must be positive", "--order")
        h = affine_herd(cyclic_group(n), f"affine Z/{n}")
    if h is None:
        raise InputError("directive setherd needs a 'setherd' section or --order", "$")
    run.summary.update({"herd": h.name, "size": h.n})
    if not run.add("set herd", validate_set_herd(h)):
        run.skip("group", "the herd axioms fail")
        return
    g, rep = reconstruct_group(h, 0)
    run.add("group at basepoint 0", rep)
    run.add("basepoints", basepoint_report(h))
    run.summary["abelian"] = all(g.mul[x][y] == g.mul[y][x] for x in range(g.order) for y in range(g.order))


def run(sc: Scenario, directive: str | None = None, opts: dict | None = None) -> Report:
    """Validators first, constructions second, theorems third."""
    directive = directive or sc.directive
    if directive not in DIRECTIVES:
        raise InputError(f"unknown directive {directive!r}", "directive")
    opts = opts or {}
    r = Run(sc, directive)
    if not _validate_inputs(r, sc):
        r.skip("constructions", "the input algebras, morphisms or bimodules fail their axioms")
    elif directive == "coobject":
        _coobject_pipeline(r, sc, opts)
    elif directive == "compose":
        _compose_pipeline(r, sc)
    elif directive == "setherd":
        _setherd_pipeline(r, sc, opts)
    else:
        _herd_pipeline(r, sc, directive)
    r.report.data["summary"] = r.summary
    return r.report


# output

def _plain(v, matrices: bool):
    if isinstance(v, bool) or v is None or isinstance(v, (int, str)):
        return v
    if isinstance(v, Fraction):
        return str(v)
    if isinstance(v, Matrix):
        return _rows(v) if matrices else {"shape": list(v.shape)}
    if isinstance(v, (list, tuple)):
        return [_plain(x, matrices) for x in v]
    if isinstance(v, dict):
        return {str(k): _plain(x, matrices) for k, x in v.items()}
    return str(v)


def to_json(rep: Report, matrices: bool = False) -> dict:
    d = rep.data
    fails = len(rep.failures)
    return {
        "schema": SCHEMA,
        "scenario": d.get("scenario", ""),
        "directive": d.get("directive", ""),
        "field": d.get("field", ""),
        "status": "pass" if fails == 0 else "fail",
        "counts": {"checks": len(rep), "fail": fails, "warn": sum(c.status == WARN for c in rep)},
        "checks": [_plain(c.to_dict(), matrices) for c in rep],
        "summary": _plain(d.get("summary", {}), matrices),
    }


def emit(rep: Report, fmt: str = "human", matrices: bool = False) -> str:
    doc = to_json(rep, matrices)
    if fmt == "json":
        return json.dumps(doc, indent=2, ensure_ascii=False) + "\n"
    lines = [f"scenario {doc['scenario']}  directive {doc['directive']}  field {doc['field']}"]
    section = None
    for c in doc["checks"]:
        if c.get("section") != section:
            section = c.get("section")
            lines.append(f"[{section}]")
        tag = {"pass": "PASS", "fail": "FAIL", "warn": "WARN"}[c["status"]]
        anchor = f" ({c['anchor']})" if c["anchor"] else ""
        lines.append(f"  {tag} {c['name']}{anchor}")
        if c.get("detail"):
            lines.append(f"       {c['detail']}")
        if c["status"] == FAIL and c.get("witness") is not None:
            lines.append(f"       witness {json.dumps(c['witness'], sort_keys=True, ensure_ascii=False)}")
    if doc["summary"]:
        lines.append("summary")
        for k, v in doc["summary"].items():
            lines.append(f"  {k}: {json.dumps(v, ensure_ascii=False) if not isinstance(v, str) else v}")
    n = doc["counts"]
    lines.append(f"{doc['status'].upper()}: {n['checks']} checks, {n['fail']} failed, {n['warn']} warnings")
    return "\n".join(lines) + "\n"


def exit_status(rep: Report) -> int:
    return EXIT_PASS if rep.ok else EXIT_FAIL


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="herdkit", description="Exact verification of herds, corings and co-objects.")
    p.add_argument("directive", choices=DIRECTIVES)
    p.add_argument("file", nargs="?", help="scenario JSON (optional for coobject and setherd)")
    p.add_argument("--format", choices=("human", "json"), default="human")
    p.add_argument("--field", help="override the field: Q or F<p>")
    p.add_argument("--order", type=int, help="group order (coobject: 2; setherd: affine Z/n)")
    p.add_argument("--a", help="co-object parameter, e.g. 2 or 3/4")
    p.add_argument("--matrices", action="store_true", help="include matrices in the summary")
    return p


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        if args.file:
            sc = load_scenario(args.file, args.field)
        elif args.directive in ("coobject", "setherd"):
            sc = Scenario(args.directive, Field.parse(args.field or "Q"))
        else:
            raise InputError(f"directive {args.directive} needs a scenario file")
        rep = run(sc, args.directive, {"order": args.order, "a": args.a})
    except InputError as e:
        print(f"herdkit: input error: {e}", file=sys.stderr)
        return EXIT_INPUT
    except (InconsistencyError, HerdkitError) as e:
        print(f"herdkit: internal inconsistency: {e}", file=sys.stderr)
        return EXIT_INCONSISTENT
    sys.stdout.write(emit(rep, args.format, args.matrices))
    return exit_status(rep)


if __name__ == "__main__":
    sys.exit(main())

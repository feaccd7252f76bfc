"""Finite set-theoretic herds (ternary operations) and the groups they determine."""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .errors import InconsistencyError, InputError
from .report import Report

MAX_SIZE = 4096


@dataclass(frozen=True)
class FiniteHerd:
    """chi[x][y][z] on the elements 0..n-1; labels are for display only."""

    n: int
    chi: tuple
    labels: tuple = ()
    name: str = ""

    def __post_init__(self):
        if not 0 < self.n <= MAX_SIZE:
            raise InputError(f"herd size {self.n} outside 1..{MAX_SIZE}")
        n = self.n
        chi = tuple(tuple(tuple(int(v) for v in row) for row in plane) for plane in self.chi)
        if len(chi) != n or any(len(p) != n or any(len(r) != n for r in p) for p in chi):
            raise InputError(f"chi must be an {n}x{n}x{n} table")
        if any(not 0 <= v < n for p in chi for r in p for v in r):
            raise InputError("chi has entries outside the element range")
        object.__setattr__(self, "chi", chi)
        if self.labels and len(self.labels) != n:
            raise InputError("one label per element expected")

    def __call__(self, x, y, z) -> int:
        return self.chi[x][y][z]

    def label(self, x) -> str:
        return str(self.labels[x]) if self.labels else str(x)


def validate_set_herd(h: FiniteHerd) -> Report:
    rep = Report(f"set herd {h.name}")
    n, chi = h.n, h.chi
    bad = next(((x, y) for x in range(n) for y in range(n) if chi[x][x][y] != y), None)
    rep.expect("chi(x, x, y) = y", "app.herd", bad is None, witness={"tuple": bad})
    bad = next(((x, y) for x in range(n) for y in range(n) if chi[y][x][x] != y), None)
    rep.expect("chi(y, x, x) = y", "app.herd", bad is None, witness={"tuple": bad})
    bad = None
    for a, b, c, d, e in itertools.product(range(n), repeat=5):
        if chi[chi[a][b][c]][d][e] != chi[a][b][chi[c][d][e]]:
            bad = (a, b, c, d, e)
            break
    rep.expect("chi(chi(a, b, c), d, e) = chi(a, b, chi(c, d, e))", "app.herd", bad is None,
               witness={"tuple": bad})
    return rep


@dataclass(frozen=True)
class GroupTable:
    mul: tuple
    identity: int
    inverse: tuple

    @property
    def order(self) -> int:
        return len(self.mul)


def check_group(g: GroupTable) -> Report:
    rep = Report("group axioms")
    n, m, e = g.order, g.mul, g.identity
    bad = next(((x, y, z) for x, y, z in itertools.product(range(n), repeat=3)
                if m[m[x][y]][z] != m[x][m[y][z]]), None)
    rep.expect("associative", "group", bad is None, witness={"tuple": bad})
    bad = next((x for x in range(n) if m[e][x] != x or m[x][e] != x), None)
    rep.expect("identity", "group", bad is None, witness={"element": bad})
    bad = next((x for x in range(n) if m[x][g.inverse[x]] != e or m[g.inverse[x]][x] != e), None)
    rep.expect("inverses", "group", bad is None, witness={"element": bad})
    return rep


def reconstruct_group(h: FiniteHerd, e: int = 0):
    """x * y = chi(x, e, y), x^-1 = chi(e, x, e)."""
    if not 0 <= e < h.n:
        raise InputError(f"basepoint {e} is not an element")
    n = h.n
    mul = tuple(tuple(h(x, e, y) for y in range(n)) for x in range(n))
    inv = tuple(h(e, x, e) for x in range(n))
    g = GroupTable(mul, e, inv)
    rep = check_group(g)
    if not rep.ok:
        raise InconsistencyError(f"reconstructed operation is not a group: {rep.failures[0].name}")
    return g, rep


def _generators(g: GroupTable):
    """A small generating set, greedily chosen."""
    n, m = g.order, g.mul
    gens, span = [], {g.identity}
    for x in range(n):
        if x in span:
            continue
        gens.append(x)
        frontier = list(span)
        span = set(span)
        while frontier:
            y = frontier.pop()
            for s in gens:
                z = m[y][s]
                if z not in span:
                    span.add(z)
                    frontier.append(z)
        if len(span) == n:
            break
    return gens


def _element_orders(g: GroupTable):
    out = []
    for x in range(g.order):
        k, y = 1, x
        while y != g.identity:
            y = g.mul[y][x]
            k += 1
        out.append(k)
    return out


def find_group_isomorphism(g: GroupTable, k: GroupTable):
    """An isomorphism g -> k as a tuple, or None; backtracking over images of generators."""
    n = g.order
    if n != k.order:
        return None
    og, ok = _element_orders(g), _element_orders(k)
    if sorted(og) != sorted(ok):
        return None
    gens = _generators(g)

    def extend(images):
        phi = {g.identity: k.identity}
        for s, t in zip(gens, images):
            phi[s] = t
        frontier = list(phi)
        while frontier:
            x = frontier.pop()
            for s in gens:
                y = g.mul[x][s]
                v = k.mul[phi[x]][phi[s]]
                if y in phi:
                    if phi[y] != v:
                        return None
                else:
                    phi[y] = v
                    frontier.append(y)
        if len(phi) != n or len(set(phi.values())) != n:
            return None
        for x in range(n):
            for y in range(n):
                if phi[g.mul[x][y]] != k.mul[phi[x]][phi[y]]:
                    return None
        return tuple(phi[x] for x in range(n))

    cands = [[t for t in range(n) if ok[t] == og[s]] for s in gens]
    for images in itertools.product(*cands):
        phi = extend(images)
        if phi is not None:
            return phi
    return None


def basepoint_report(h: FiniteHerd, limit: int = 24) -> Report:
    """Groups from different basepoints are isomorphic (checked when |X| <= limit)."""
    rep = Report(f"basepoints of {h.name}")
    g0, _ = reconstruct_group(h, 0)
    if h.n > limit:
        rep.warn("basepoint independence", "app.herd", f"|X| = {h.n} exceeds {limit}; not checked")
        return rep
    bad = None
    for e in range(1, h.n):
        ge, _ = reconstruct_group(h, e)
        if find_group_isomorphism(g0, ge) is None:
            bad = e
            break
    rep.expect("groups at all basepoints are isomorphic", "app.herd", bad is None, witness={"basepoint": bad})
    return rep


def affine_herd(g: GroupTable, name: str = "") -> FiniteHerd:
    """chi(x, y, z) = x y^-1 z."""
    n, m, inv = g.order, g.mul, g.inverse
    chi = tuple(tuple(tuple(m[m[x][inv[y]]][z] for z in range(n)) for y in range(n)) for x in range(n))
    return FiniteHerd(n, chi, name=name)


def product_group(*orders: int) -> GroupTable:
    """Z/o1 x ... x Z/ok with elements in lexicographic order."""
    orders = [int(o) for o in orders] or [1]
    if any(o < 1 for o in orders):
        raise InputError("cyclic orders must be positive")
    elems = list(itertools.product(*[range(o) for o in orders]))
    index = {x: i for i, x in enumerate(elems)}
    mul = tuple(tuple(index[tuple((a + b) % o for a, b, o in zip(x, y, orders))] for y in elems)
                for x in elems)
    inv = tuple(index[tuple((-a) % o for a, o in zip(x, orders))] for x in elems)
    return GroupTable(mul, 0, inv)


def cyclic_group(n: int) -> GroupTable:
    return product_group(n)


def klein_group() -> GroupTable:
    return product_group(2, 2)

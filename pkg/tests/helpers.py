"""Shared builders and hypothesis strategies for the test suite."""

import itertools
import random
from pathlib import Path

from hypothesis import strategies as st

from herdkit import Bimodule, BimoduleMap, Field, Matrix, group_algebra, ground_field
from herdkit.linalg import inverse

Q = Field.rationals()
F5 = Field.prime(5)
FIELDS = (Q, F5)
ACCEPTANCE = {}
FIXTURES = Path(__file__).resolve().parent.parent / "fixtures"


def matrices(field, nrows, ncols, lo=-3, hi=3):
    return st.lists(st.lists(st.integers(lo, hi), min_size=ncols, max_size=ncols),
                    min_size=nrows, max_size=nrows).map(lambda rows: Matrix.from_rows(field, rows, ncols))


def sized_matrices(field, max_rows=4, max_cols=4):
    return st.tuples(st.integers(1, max_rows), st.integers(1, max_cols)).flatmap(
        lambda s: matrices(field, s[0], s[1]))


def random_invertible(field, n, rng):
    while True:
        m = Matrix.from_rows(field, [[rng.randint(-2, 2) for _ in range(n)] for _ in range(n)], n)
        inv = inverse(m)
        if inv is not None:
            return m, inv


def cycle_permutation(sizes):
    """A permutation of range(sum(sizes)) made of consecutive cycles."""
    perm, start = [], 0
    for s in sizes:
        perm += [start + (i + 1) % s for i in range(s)]
        start += s
    return perm


def perm_matrix(field, perm):
    n = len(perm)
    return Matrix(field, [[1 if perm[j] == i else 0 for j in range(n)] for i in range(n)], n)


def cycle_sizes(n, rng, max_dim):
    """Cycle lengths dividing n with total at most max_dim (at least one cycle)."""
    divisors = [d for d in range(1, n + 1) if n % d == 0 and d <= max_dim]
    sizes = []
    while True:
        d = rng.choice(divisors)
        if sum(sizes) + d > max_dim:
            break
        sizes.append(d)
        if rng.random() < 0.4:
            break
    return sizes or [1]


class PermModule:
    """A cyclic group acting on k^d through a permutation, written in a random basis."""

    def __init__(self, field, n, sizes, rng, side):
        self.field, self.n, self.side = field, n, side
        self.perm = cycle_permutation(sizes)
        d = len(self.perm)
        p, pinv = random_invertible(field, d, rng)
        g = p @ perm_matrix(field, self.perm) @ pinv
        acts = [Matrix.identity(field, d)]
        for _ in range(1, n):
            acts.append(acts[-1] @ g)
        self.alg = group_algebra(field, [n])
        k = ground_field(field)
        if side == "right":
            self.bimodule = Bimodule(k, self.alg, d, [Matrix.identity(field, d)], acts, "M")
        else:
            self.bimodule = Bimodule(self.alg, k, d, acts, [Matrix.identity(field, d)], "N")

    def power(self, i):
        out = list(range(len(self.perm)))
        for _ in range(i % self.n):
            out = [self.perm[x] for x in out]
        return out


def orbit_count(m: PermModule, n_mod: PermModule) -> int:
    """Orbits of g.(i, j) = (g^-1 i, g j): the dimension of M (x)_{kC_n} N for permutation modules."""
    n = m.n
    pts = set(itertools.product(range(len(m.perm)), range(len(n_mod.perm))))
    orbits = 0
    while pts:
        start = pts.pop()
        orbits += 1
        for i in range(1, n):
            pm, pn = m.power(n - i), n_mod.power(i)
            pts.discard((pm[start[0]], pn[start[1]]))
    return orbits


def random_tensor_instance(field, seed, max_dim=4):
    """A random right kC_n-module M and left kC_n-module N over the same algebra."""
    rng = random.Random(seed)
    n = rng.choice([1, 2, 3])
    m = PermModule(field, n, cycle_sizes(n, rng, max_dim), rng, "right")
    nn = PermModule(field, n, cycle_sizes(n, rng, max_dim), rng, "left")
    return m, nn, rng


def random_linear_endo(mod: Bimodule, rng, side):
    """x -> x.a (side right) or a.x (side left) for random a in the commutative acting algebra."""
    f = mod.field
    acts = mod.right_action if side == "right" else mod.left_action
    out = Matrix.zeros(f, mod.dim, mod.dim)
    for a in acts:
        c = rng.randint(-2, 2)
        if c:
            out = out + a.scale(c)
    lin = {"left", "right"}
    return BimoduleMap(mod, mod, out, lin, "f")

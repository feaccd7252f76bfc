import itertools
import math

import pytest
from hypothesis import given, strategies as st

from herdkit import (
    FiniteHerd, InconsistencyError, InputError, affine_herd, basepoint_report, find_group_isomorphism,
    reconstruct_group, validate_set_herd,
)
from herdkit.setherd import check_group, cyclic_group, klein_group, product_group


def z3():
    return FiniteHerd(3, [[[(x - y + z) % 3 for z in range(3)] for y in range(3)] for x in range(3)], name="Z/3")


def test_affine_z3_and_singleton():
    assert validate_set_herd(z3()).ok
    assert validate_set_herd(FiniteHerd(1, [[[0]]])).ok


def test_corrupted_table_reports_the_violated_tuple():
    chi = [[[(x - y + z) % 3 for z in range(3)] for y in range(3)] for x in range(3)]
    chi[0][1][0] = 0
    h = FiniteHerd(3, chi)
    rep = validate_set_herd(h)
    assert not rep.ok
    t = rep.failures[0].witness["tuple"]
    a, b, c, d, e = t
    assert h(h(a, b, c), d, e) != h(a, b, h(c, d, e))
    first = min(u for u in itertools.product(range(3), repeat=5)
                if h(h(*u[:3]), *u[3:]) != h(*u[:2], h(*u[2:])))
    assert t == first


def test_reconstructed_group_at_two_basepoints():
    g, rep = reconstruct_group(z3(), 0)
    assert rep.ok
    assert g.mul == tuple(tuple((x + y) % 3 for y in range(3)) for x in range(3))
    g1, _ = reconstruct_group(z3(), 1)
    assert g1.identity == 1
    assert find_group_isomorphism(g, g1) is not None


def test_klein_four():
    h = affine_herd(klein_group(), "V4")
    assert validate_set_herd(h).ok
    g, _ = reconstruct_group(h)
    assert find_group_isomorphism(g, product_group(2, 2)) is not None
    assert find_group_isomorphism(g, cyclic_group(4)) is None


def test_bad_inputs():
    with pytest.raises(InputError):
        FiniteHerd(2, [[[0, 1], [1, 0]]])
    with pytest.raises(InputError):
        FiniteHerd(2, [[[0, 2], [1, 0]], [[0, 1], [1, 0]]])
    with pytest.raises(InputError):
        reconstruct_group(z3(), 5)
    with pytest.raises(InconsistencyError):
        reconstruct_group(FiniteHerd(2, [[[0, 0], [0, 0]], [[0, 0], [0, 0]]]))


@pytest.mark.parametrize("n", range(1, 13))
def test_cyclic_affine_herds(n):
    g = cyclic_group(n)
    h = affine_herd(g, f"Z/{n}")
    assert validate_set_herd(h).ok
    back, rep = reconstruct_group(h, 0)
    assert rep.ok and back.mul == g.mul
    assert basepoint_report(h).ok


@given(orders=st.lists(st.integers(1, 4), min_size=1, max_size=3).filter(
    lambda o: math.prod(o) <= 24))
def test_products_of_cyclic_groups(orders):
    g = product_group(*orders)
    assert check_group(g).ok
    h = affine_herd(g)
    g0, _ = reconstruct_group(h)
    assert find_group_isomorphism(g0, g) is not None
    assert basepoint_report(h).ok


@given(n=st.integers(2, 6), data=st.data())
def test_breaking_the_left_unit_law_is_witnessed(n, data):
    x = data.draw(st.integers(0, n - 1))
    z = data.draw(st.integers(0, n - 1))
    chi = [[list(r) for r in plane] for plane in affine_herd(cyclic_group(n)).chi]
    chi[x][x][z] = (z + 1) % n
    rep = validate_set_herd(FiniteHerd(n, chi))
    assert not rep.ok
    assert rep.failures[0].witness["tuple"] is not None


def test_isomorphism_search():
    assert find_group_isomorphism(product_group(2, 3), cyclic_group(6)) is not None
    assert find_group_isomorphism(cyclic_group(4), klein_group()) is None
    assert find_group_isomorphism(cyclic_group(4), cyclic_group(5)) is None

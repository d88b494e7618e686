import doctest

from hypothesis import given, settings, strategies as st

import disthom.abgroups as abgroups
from disthom import (FinAbGroup, TRIVIAL, Z, annihilated_by, cyclic,
                     group_sum, tensor_with_cyclic, tor_with_cyclic)


def test_doctests():
    failures, _ = doctest.testmod(abgroups)
    assert failures == 0


def test_canonical_equality():
    assert FinAbGroup.from_factors(0, [2, 3]) == cyclic(6)
    assert FinAbGroup.from_factors(0, [2, 4]) != cyclic(8)
    assert FinAbGroup.from_factors(2, []) == abgroups.free_group(2)


def test_sum_normalizes():
    got = group_sum(cyclic(2, 2), cyclic(4))
    assert got.torsion == (2, 2, 4)
    assert group_sum(Z, TRIVIAL) == Z


def test_tensor_and_tor():
    g = group_sum(Z, cyclic(4))
    assert tensor_with_cyclic(g, 2) == cyclic(2, 2)
    assert tor_with_cyclic(g, 2) == cyclic(2)
    assert tor_with_cyclic(Z, 5) == TRIVIAL


def test_annihilated_by():
    assert annihilated_by(cyclic(2, 5), 4)
    assert not annihilated_by(group_sum(Z, cyclic(2)), 2)
    assert annihilated_by(TRIVIAL, 1)
    # multiplying by zero kills everything trivially
    assert annihilated_by(group_sum(Z, cyclic(3)), 0)


@settings(deadline=None)
@given(st.lists(st.integers(0, 24), max_size=6),
       st.lists(st.integers(0, 24), max_size=6))
def test_sum_commutes(xs, ys):
    a = FinAbGroup.from_factors(0, xs)
    b = FinAbGroup.from_factors(0, ys)
    assert group_sum(a, b) == group_sum(b, a)


@settings(deadline=None)
@given(st.lists(st.integers(2, 40), max_size=5), st.integers(1, 12))
def test_tensor_respects_order(xs, q):
    g = FinAbGroup.from_factors(0, xs)
    t = tensor_with_cyclic(g, q)
    assert annihilated_by(t, q)


def test_invariant_factor_chain_property():
    g = FinAbGroup.from_factors(1, [12, 18, 10])
    for a, b in zip(g.torsion, g.torsion[1:]):
        assert b % a == 0
    assert g.torsion_order() == 12 * 18 * 10

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from core.errors import CapacityExceededError, NotNormalError
from core.models.permutation import Permutation
from core.tools.groupkit import (
    GeneratedGroup,
    classify_r_group,
    closure,
    commutator,
    conjugate,
    coset_action,
    cyclic_subgroup_count,
    derived_subgroup,
    element_order,
    is_normal,
    is_perfect,
    normal_closure,
    order_histogram,
    quotient,
    quotient_subgroups,
    subgroups_between,
    sylow_shape,
    sylow_subgroup,
    try_closure,
)


def test_closure_order_and_bfs_start(s4):
    assert s4.order == 24
    assert s4.elements[0].is_identity()
    assert len({g.key() for g in s4.elements}) == 24


def test_closure_cap(s4):
    with pytest.raises(CapacityExceededError):
        closure(s4.generators, cap=10)
    assert try_closure(s4.generators, 10) is None
    assert try_closure(s4.generators, 24).order == 24


def test_lazy_group_with_known_order(s4):
    lazy = GeneratedGroup(s4.generators, order=24)
    assert not lazy.is_enumerated
    assert lazy.order == 24
    assert Permutation.from_cycles(4, [[1, 3]]) in lazy
    assert lazy.is_enumerated


def test_element_orders(s4, a5):
    assert element_order(Permutation.from_cycles(4, [[0, 1, 2, 3]])) == 4
    assert order_histogram(s4) == {1: 1, 2: 9, 3: 8, 4: 6}
    assert order_histogram(a5) == {1: 1, 2: 15, 3: 20, 5: 24}
    assert cyclic_subgroup_count(s4) == 16
    assert cyclic_subgroup_count(a5) == 31


def test_conjugate_and_commutator():
    g = Permutation.from_cycles(3, [[0, 1]])
    h = Permutation.from_cycles(3, [[0, 1, 2]])
    assert conjugate(h, g) == g.inverse() * h * g
    assert commutator(g, h) == g.inverse() * h.inverse() * g * h
    assert commutator(h, h).is_identity()


def test_derived_subgroups(s4, a5):
    assert derived_subgroup(s4).order == 12
    assert not is_perfect(s4)
    assert is_perfect(a5)


def test_normality(s4, v4):
    assert is_normal(s4, v4)
    swap = closure([Permutation.from_cycles(4, [[0, 1]])])
    assert not is_normal(s4, swap)
    assert normal_closure(s4, [Permutation.from_cycles(4, [[0, 1], [2, 3]])]).order == 4


def test_quotient_s4_by_v4(s4, v4):
    quot = quotient(s4, v4)
    assert quot.order == 6
    assert quot.check_axioms()
    assert not quot.is_abelian()
    assert not quot.is_cyclic()
    assert sorted(quot.element_order(i) for i in range(6)) == [1, 2, 2, 2, 3, 3]
    assert quot.project(s4.identity) == 0
    assert all(quot.multiply(i, quot.inverse(i)) == 0 for i in range(6))


def test_quotient_needs_normal_subgroup(s4):
    with pytest.raises(NotNormalError):
        quotient(s4, closure([Permutation.from_cycles(4, [[0, 1]])]))


def _rotation(n, k):
    return Permutation(tuple((x + k) % n for x in range(n)))


def test_cyclic_quotient():
    c12 = closure([_rotation(12, 1)])
    c2 = closure([_rotation(12, 6)])
    quot = quotient(c12, c2)
    assert quot.order == 6
    assert quot.is_cyclic()
    assert quot.is_abelian()
    assert len(quotient_subgroups(quot)) == 4


def test_subgroups_between(s4, v4):
    pullbacks = subgroups_between(s4, v4)
    assert [pb.group.order for pb in pullbacks] == [4, 8, 8, 8, 12, 24]
    assert pullbacks[0].cosets == frozenset([0])
    assert not pullbacks[1].group.is_enumerated
    assert pullbacks[1].group.order == 8
    again = subgroups_between(s4, v4)
    assert [pb.digest for pb in again] == [pb.digest for pb in pullbacks]
    for pb in pullbacks:
        assert pb.group.enumerate().order == len(pb.cosets) * 4


def test_subgroups_between_cap(s4, v4):
    with pytest.raises(CapacityExceededError):
        subgroups_between(s4, v4, cap=5)


def test_coset_action(s4):
    point_stab = closure([Permutation.from_cycles(4, [[0, 1, 2]]), Permutation.from_cycles(4, [[0, 1]])])
    perms = coset_action(s4, point_stab)
    assert all(p.degree == 4 for p in perms)
    assert closure(perms).order == 24


def test_sylow(s4, a5):
    assert sylow_subgroup(s4, 2).order == 8
    assert sylow_subgroup(a5, 5).order == 5
    assert sylow_subgroup(s4, 5).order == 1
    assert sylow_shape(s4) == {2: "other", 3: "cyclic"}
    assert sylow_shape(a5) == {2: "other", 3: "cyclic", 5: "cyclic"}


def test_quaternion_classification():
    # Q8 in its regular representation on 8 points
    i = Permutation.from_cycles(8, [[0, 2, 1, 3], [4, 7, 5, 6]])
    j = Permutation.from_cycles(8, [[0, 4, 1, 5], [2, 6, 3, 7]])
    q8 = closure([i, j])
    assert q8.order == 8
    assert classify_r_group(q8, 2) == "generalized-quaternion"
    assert classify_r_group(closure([Permutation.from_cycles(8, [list(range(8))])]), 2) == "cyclic"


@settings(max_examples=50, deadline=None)
@given(st.integers(0, 23), st.integers(0, 23))
def test_commutators_lie_in_a4(s4, a, b):
    derived = derived_subgroup(s4)
    assert commutator(s4.elements[a], s4.elements[b]) in derived


S4_GENERATORS = [
    Permutation.from_cycles(4, [[0, 1, 2, 3]]),
    Permutation.from_cycles(4, [[0, 1]]),
    Permutation.from_cycles(4, [[1, 2, 3]]),
    Permutation.from_cycles(4, [[0, 2], [1, 3]]),
]
A5_GENERATORS = [
    Permutation.from_cycles(5, [[0, 1, 2, 3, 4]]),
    Permutation.from_cycles(5, [[0, 1, 2]]),
    Permutation.from_cycles(5, [[0, 1], [2, 3]]),
]


@settings(max_examples=30, deadline=None)
@given(st.permutations(S4_GENERATORS))
def test_closure_independent_of_generator_order(s4, gens):
    group = closure(gens)
    assert set(group.key_set()) == set(s4.key_set())
    assert group.elements[0].is_identity()


@settings(max_examples=20, deadline=None)
@given(st.permutations(S4_GENERATORS))
def test_intermediate_subgroup_orders_divide(v4, gens):
    group = closure(gens)
    orders = [pb.group.order for pb in subgroups_between(group, v4)]
    assert orders == [4, 8, 8, 8, 12, 24]
    assert all(group.order % order == 0 and order % v4.order == 0 for order in orders)


@settings(max_examples=20, deadline=None)
@given(st.permutations(A5_GENERATORS), st.sampled_from([2, 3, 5]))
def test_sylow_order_is_full_prime_part(gens, r):
    group = closure(gens)
    sylow = sylow_subgroup(group, r)
    full = {2: 4, 3: 3, 5: 5}[r]
    assert sylow.order == full
    assert group.order % sylow.order == 0
    assert all(g in group for g in sylow.generators)

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st
from sympy.combinatorics import Permutation as SympyPermutation
from sympy.combinatorics import PermutationGroup as SympyPermutationGroup

from core.errors import CapacityExceededError, InconsistentActionError, PreconditionViolationError
from core.models.gfield import field_make
from core.models.matsemi import projective_space, vector_space
from core.models.permutation import Permutation
from core.tools.actions import (
    RangePoints,
    action_instance,
    chain_order,
    fixed_point_counts,
    frobenius_zassenhaus,
    is_half_transitive,
    is_semiregular,
    orbit_of_point,
    orbits,
    orbits_from_arrays,
    point_orbit_stabilizer,
    point_stabilizer_elements,
    points_in_regular_orbits,
    regular_orbit_count,
    regular_orbit_exists,
    transitivity_profile,
    tuple_orbit_stabilizer,
    verify_orbit_closure,
)
from core.tools.atlas import gammal1, load_generator_file, sl25_in_gl2
from core.tools.groupkit import GeneratedGroup, closure
from utils.config import MATHIEU_DIR


def _group(n, *cycles):
    return closure([Permutation.from_cycles(n, c) for c in cycles])


@pytest.fixture(scope="module")
def s5_gens():
    return [Permutation.from_cycles(5, [[0, 1, 2, 3, 4]]), Permutation.from_cycles(5, [[0, 1]])]


@pytest.fixture(scope="module")
def m11_gens():
    _, (a, b) = load_generator_file(MATHIEU_DIR / "M11.txt")
    return [a, b, a * b, b * a]


@pytest.fixture(scope="module")
def agl15():
    # x -> 2x and x -> x + 1 on F_5
    return closure([
        Permutation(tuple((2 * x) % 5 for x in range(5))),
        Permutation(tuple((x + 1) % 5 for x in range(5))),
    ])


def test_orbit_partition():
    action = action_instance(_group(4, [[0, 1]]), RangePoints(4))
    partition = orbits(action)
    assert partition.orbit_of.tolist() == [0, 0, 2, 3]
    assert partition.sizes == {0: 2, 2: 1, 3: 1}
    assert partition.size_list() == [1, 1, 2]
    assert partition.count == 3
    assert partition.reps == {0: 0, 2: 2, 3: 3}
    assert is_half_transitive(partition) == (False, None)
    assert verify_orbit_closure(action, partition)
    assert orbit_of_point(action, 1).tolist() == [0, 1]


def test_transitive_action(s4):
    action = action_instance(s4, RangePoints(4))
    partition = orbits(action)
    assert is_half_transitive(partition) == (True, 4)
    assert not is_semiregular(action, partition)
    assert len(point_stabilizer_elements(action, 0)) == 6


def test_regular_orbits():
    c4 = _group(4, [[0, 1, 2, 3]])
    action = action_instance(c4, RangePoints(4))
    partition = orbits(action)
    assert is_semiregular(action, partition)
    assert regular_orbit_exists(action, partition)
    assert fixed_point_counts(action) == [4, 0, 0, 0]

    swap = action_instance(_group(5, [[0, 1], [2, 3]]), RangePoints(5))
    partition = orbits(swap)
    assert regular_orbit_count(partition, 2) == 2
    assert points_in_regular_orbits(partition, 2) == 4


def test_inconsistent_action():
    with pytest.raises(InconsistentActionError):
        action_instance(_group(4, [[0, 1]]), RangePoints(5))


def test_linear_flag_inference(f11):
    r = sl25_in_gl2(f11)
    assert action_instance(r.group, vector_space(f11, 2)).linear
    assert not action_instance(r.group, projective_space(f11, 2)).linear


def test_point_orbit_stabilizer(s4):
    orbit, stab = point_orbit_stabilizer(s4.generators, 0)
    assert orbit == [0, 1, 2, 3]
    assert closure(stab).order == 6
    assert all(g(0) == 0 for g in stab)


def test_tuple_orbit_stabilizer(s4):
    stab = tuple_orbit_stabilizer(s4.generators, (0, 1), group_order=24)
    assert stab.orbit_size == 12
    assert stab.group().order == 2
    assert stab.orbit_sizes_on_rest() == [2]
    with pytest.raises(InconsistentActionError):
        tuple_orbit_stabilizer(s4.generators, (0, 1), group_order=25)
    with pytest.raises(CapacityExceededError):
        tuple_orbit_stabilizer(s4.generators, (0, 1, 2), cap=10)


def test_truncated_stabilizer_is_detected(s5_gens):
    # one Schreier generator cannot generate the point stabilizer S_4
    with pytest.raises(InconsistentActionError):
        tuple_orbit_stabilizer(s5_gens, (0,), group_order=120, schreier_cap=1)
    with pytest.raises(InconsistentActionError):
        transitivity_profile(s5_gens, 5, 2, group_order=120, schreier_cap=1)
    assert tuple_orbit_stabilizer(s5_gens, (0,), schreier_cap=1).orbit_size == 5


def test_chain_order(s5_gens):
    assert chain_order(s5_gens) == 120
    _, m11 = load_generator_file(MATHIEU_DIR / "M11.txt")
    assert chain_order(m11) == 7920


@pytest.mark.parametrize("name", ["M11", "M12", "M22"])
def test_chain_order_matches_sympy(name):
    _, gens = load_generator_file(MATHIEU_DIR / f"{name}.txt")
    oracle = SympyPermutationGroup(*[SympyPermutation(list(g.images)) for g in gens])
    assert chain_order(gens) == oracle.order()


def test_symmetric_group_profile(s5_gens):
    profile = transitivity_profile(s5_gens, 5, 4, group_order=120)
    assert profile.max_transitivity() == 4
    assert [profile.sharp[k] for k in range(1, 5)] == [False, False, False, True]
    assert all(profile.plus_half[k] for k in range(5))
    assert profile.stabilizer_orbits == {1: [4], 2: [3], 3: [2], 4: [1]}
    assert profile.stabilizer_orders == {1: 24, 2: 6, 3: 2, 4: 1}
    assert profile.implications_hold()


def test_affine_profile(agl15):
    profile = transitivity_profile(agl15.generators, 5, 3)
    assert profile.max_transitivity() == 2
    assert profile.sharp[2]
    assert not profile.sharp[1]
    # the 2-point stabilizer is trivial even without a known group order
    assert profile.stabilizer_orders == {2: 1}
    assert not profile.transitive[3]


def test_intransitive_profile():
    gens = [Permutation.from_cycles(6, [[0, 1, 2], [3, 4, 5]])]
    profile = transitivity_profile(gens, 6, 2)
    assert profile.plus_half[0]
    assert not profile.transitive[1]
    assert profile.max_transitivity() == 0
    assert profile.implications_hold()


def test_profile_needs_room():
    with pytest.raises(PreconditionViolationError):
        transitivity_profile([Permutation.identity_of(3)], 3, 3)


def test_frobenius_permutation_groups(s4, agl15):
    s3 = _group(3, [[0, 1, 2]], [[0, 1]])
    verdict = frobenius_zassenhaus(action_instance(s3, RangePoints(3)))
    assert verdict.frobenius and verdict.zassenhaus

    verdict = frobenius_zassenhaus(action_instance(agl15, RangePoints(5)))
    assert verdict.frobenius

    verdict = frobenius_zassenhaus(action_instance(s4, RangePoints(4)))
    assert not verdict.frobenius
    assert verdict.zassenhaus


def test_frobenius_needs_transitivity():
    with pytest.raises(PreconditionViolationError):
        frobenius_zassenhaus(action_instance(_group(4, [[0, 1]]), RangePoints(4)))


def test_frobenius_linear(f11):
    action = action_instance(sl25_in_gl2(f11).group, vector_space(f11, 2))
    verdict = frobenius_zassenhaus(action)
    assert verdict.complement
    assert verdict.frobenius

    gl = gammal1(2, 3)
    verdict = frobenius_zassenhaus(action_instance(gl.group, vector_space(field_make(2), 3)))
    assert not verdict.complement
    assert verdict.zassenhaus


def test_trivial_group_is_no_frobenius_complement(f11):
    identity = GeneratedGroup([sl25_in_gl2(f11).group.identity])
    verdict = frobenius_zassenhaus(action_instance(identity, vector_space(f11, 2)))
    assert verdict.complement
    assert not verdict.frobenius


@settings(max_examples=20, deadline=None)
@given(st.permutations(range(4)))
def test_stabilizer_independent_of_generator_order(m11_gens, order):
    gens = [m11_gens[i] for i in order]
    stab = tuple_orbit_stabilizer(gens, (0, 1), group_order=7920)
    assert stab.orbit_size == 110
    assert chain_order(stab.generators) == 72
    assert chain_order(gens) == 7920
    orbit, _ = point_orbit_stabilizer(gens, 3)
    assert sorted(orbit) == list(range(11))


@settings(max_examples=30, deadline=None)
@given(st.permutations([
    Permutation.from_cycles(8, [[0, 1, 2]]),
    Permutation.from_cycles(8, [[3, 4]]),
    Permutation.from_cycles(8, [[5, 6, 7]]),
    Permutation.from_cycles(8, [[5, 6]]),
]))
def test_orbit_partition_independent_of_generator_order(gens):
    perms = [np.array(g.images, dtype=np.int64) for g in gens]
    assert orbits_from_arrays(perms, 8).tolist() == [0, 0, 0, 3, 3, 5, 5, 5]
    partition = orbits(action_instance(closure(gens), RangePoints(8)))
    assert partition.size_list() == [2, 3, 3]

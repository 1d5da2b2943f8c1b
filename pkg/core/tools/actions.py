"""
Group Actions

This module provides orbit partitions of group actions on indexed point sets, point and
tuple stabilizers via Schreier generators, and the transitivity predicates used by the
verifier: half-transitivity, semiregularity, regular orbits, k- and (k+1/2)-transitivity,
sharp transitivity, and the Frobenius / Zassenhaus tests.

An action is compiled once: every generator becomes a numpy array of point indices,
and orbits are the weakly connected components of the resulting graph.
"""

import logging
import math
from dataclasses import dataclass, field
from typing import Any, Dict, List, Optional, Sequence, Tuple

import numpy as np
from scipy.sparse import csr_matrix
from scipy.sparse.csgraph import connected_components

from core.errors import (
    CapacityExceededError,
    InconsistentActionError,
    PreconditionViolationError,
)
from core.models.matsemi import CodePointSet
from core.models.permutation import Permutation
from core.tools.groupkit import GeneratedGroup, closure
from utils.config import SCHREIER_CAP, TUPLE_ORBIT_CAP

logger = logging.getLogger("core.tools.actions")

# ==================== POINT SETS AND ACTION INSTANCES ====================

class RangePoints:
    """The points 0..n-1 acted on by permutations."""

    def __init__(self, n: int):
        self.n = n

    @property
    def size(self) -> int:
        return self.n

    def __len__(self) -> int:
        return self.n

    def label(self, index: int) -> int:
        return index

    def compile(self, g: Permutation) -> np.ndarray:
        if g.degree != self.n:
            raise InconsistentActionError(f"permutation of degree {g.degree} on {self.n} points")
        return np.array(g.images, dtype=np.int64)


@dataclass
class ActionInstance:
    """A group acting on an indexed point set, with generators compiled to index arrays."""

    group: GeneratedGroup
    points: Any
    compiled: List[np.ndarray]
    linear: bool = False

    @property
    def size(self) -> int:
        return self.points.size

    def image(self, g: Any) -> np.ndarray:
        """Compiled permutation of point indices for any group element."""
        return _checked(self.points.compile(g), self.size)


def _checked(perm: np.ndarray, size: int) -> np.ndarray:
    perm = np.asarray(perm, dtype=np.int64)
    if perm.shape != (size,) or (size and (perm.min() < 0 or perm.max() >= size)):
        raise InconsistentActionError("action map leaves the point set")
    if size and not np.all(np.bincount(perm, minlength=size) == 1):
        raise InconsistentActionError("action map is not a bijection of the point set")
    return perm


def action_instance(group: GeneratedGroup, points: Any, linear: Optional[bool] = None) -> ActionInstance:
    """
    Compile the generators of group on points.

    Args:
        group: Acting group (generators are enough)
        points: An indexed point set (CodePointSet, ProjectivePointSet, RangePoints)
        linear: Whether points is the full V^# of a linear action; inferred when None

    Returns:
        ActionInstance ready for orbit computations
    """
    compiled = [_checked(points.compile(g), points.size) for g in group.generators]
    if linear is None:
        linear = (
            isinstance(points, CodePointSet)
            and not points.projective
            and points.size == points.spec.q ** points.n - 1
        )
    return ActionInstance(group=group, points=points, compiled=compiled, linear=linear)


# ==================== ORBITS ====================

@dataclass
class OrbitPartition:
    """
    Orbits of an action; an orbit id is the smallest point index it contains.

    sizes and reps are keyed by orbit id in increasing order.
    """

    orbit_of: np.ndarray
    sizes: Dict[int, int]
    reps: Dict[int, Any] = field(default_factory=dict)

    @property
    def count(self) -> int:
        return len(self.sizes)

    def size_list(self) -> List[int]:
        """Orbit sizes sorted ascending."""
        return sorted(self.sizes.values())

    def size_of(self, index: int) -> int:
        return self.sizes[int(self.orbit_of[index])]

    def members(self, orbit_id: int) -> np.ndarray:
        return np.flatnonzero(self.orbit_of == orbit_id)


def orbits_from_arrays(perms: Sequence[np.ndarray], size: int) -> np.ndarray:
    """orbit_of array (smallest index per orbit) for compiled generators."""
    if size == 0:
        return np.zeros(0, dtype=np.int64)
    sources = np.arange(size, dtype=np.int64)
    if perms:
        rows = np.concatenate([sources] * len(perms))
        cols = np.concatenate(list(perms))
    else:
        rows = cols = sources
    graph = csr_matrix((np.ones(len(rows), dtype=np.int8), (rows, cols)), shape=(size, size))
    n_comp, labels = connected_components(graph, directed=True, connection="weak")
    smallest = np.full(n_comp, size, dtype=np.int64)
    np.minimum.at(smallest, labels, sources)
    return smallest[labels]


def orbits(action: ActionInstance) -> OrbitPartition:
    """
    Orbit partition of an action.

    Raises:
        InconsistentActionError: a generator does not permute the point set
    """
    orbit_of = orbits_from_arrays(action.compiled, action.size)
    ids, counts = np.unique(orbit_of, return_counts=True)
    sizes = {int(i): int(c) for i, c in zip(ids, counts)}
    reps = {i: action.points.label(i) for i in sizes}
    return OrbitPartition(orbit_of=orbit_of, sizes=sizes, reps=reps)


def verify_orbit_closure(action: ActionInstance, partition: OrbitPartition) -> bool:
    """Full pass: no generator moves a point into another orbit."""
    return all(np.array_equal(partition.orbit_of[perm], partition.orbit_of) for perm in action.compiled)


def orbit_of_point(action: ActionInstance, index: int) -> np.ndarray:
    """Point indices in the orbit of one point."""
    partition = orbits(action)
    return partition.members(int(partition.orbit_of[index]))


# ==================== ORBIT PREDICATES ====================

def is_half_transitive(partition: OrbitPartition) -> Tuple[bool, Optional[int]]:
    """(all orbits equal size, that common size or None)."""
    distinct = set(partition.sizes.values())
    if len(distinct) == 1:
        return True, distinct.pop()
    return False, None


def is_semiregular(action: ActionInstance, partition: OrbitPartition) -> bool:
    order = action.group.order
    return all(s == order for s in partition.sizes.values())


def regular_orbit_exists(action: ActionInstance, partition: OrbitPartition) -> bool:
    order = action.group.order
    return any(s == order for s in partition.sizes.values())


def regular_orbit_count(partition: OrbitPartition, order: int) -> int:
    return sum(1 for s in partition.sizes.values() if s == order)


def points_in_regular_orbits(partition: OrbitPartition, order: int) -> int:
    return sum(s for s in partition.sizes.values() if s == order)


def fixed_point_counts(action: ActionInstance) -> List[int]:
    """Number of fixed points of every element of the (enumerated) group."""
    idx = np.arange(action.size)
    return [int(np.count_nonzero(action.image(g) == idx)) for g in action.group.elements]


def point_stabilizer_elements(action: ActionInstance, index: int) -> List[Any]:
    """Elements of the enumerated group fixing one point (direct filtering)."""
    return [g for g in action.group.elements if action.image(g)[index] == index]


# ==================== SCHREIER GENERATORS ====================

def _dedup(gens: Sequence[Permutation]) -> List[Permutation]:
    seen = set()
    out = []
    for g in gens:
        if g.is_identity() or g.key() in seen:
            continue
        seen.add(g.key())
        out.append(g)
    return out


def point_orbit_stabilizer(
    gens: Sequence[Permutation],
    point: int,
    schreier_cap: int = SCHREIER_CAP,
) -> Tuple[List[int], List[Permutation]]:
    """
    Orbit of a point (BFS order) and Schreier generators of its stabilizer.

    Schreier generators u_x * g * u_{x^g}^-1 are deduplicated by key; at most
    schreier_cap are kept, first found first.
    """
    degree = gens[0].degree
    identity = Permutation.identity_of(degree)
    transversal: Dict[int, Permutation] = {point: identity}
    orbit = [point]
    i = 0
    while i < len(orbit):
        x = orbit[i]
        for g in gens:
            y = g.images[x]
            if y not in transversal:
                transversal[y] = transversal[x].compose(g)
                orbit.append(y)
        i += 1

    inverses: Dict[int, Permutation] = {}
    stab: List[Permutation] = []
    seen = set()
    for x in orbit:
        ux = transversal[x]
        for g in gens:
            y = g.images[x]
            if y not in inverses:
                inverses[y] = transversal[y].inverse()
            s = ux.compose(g).compose(inverses[y])
            if s.is_identity() or s.key() in seen:
                continue
            seen.add(s.key())
            stab.append(s)
            if len(stab) >= schreier_cap:
                logger.debug(f"Schreier generator cap {schreier_cap} reached at point {point}")
                return orbit, stab
    return orbit, stab


@dataclass
class TupleStabilizer:
    """Orbit size of a point tuple and Schreier generators of its pointwise stabilizer."""

    base: Tuple[int, ...]
    orbit_size: int
    generators: List[Permutation]
    degree: int

    @property
    def is_trivial(self) -> bool:
        return not self.generators

    def group(self) -> GeneratedGroup:
        gens = self.generators or [Permutation.identity_of(self.degree)]
        return closure(gens, name=f"stab{self.base}")

    def orbit_sizes_on_rest(self) -> List[int]:
        """Sorted orbit sizes of the stabilizer on the points outside the base."""
        gens = self.generators or [Permutation.identity_of(self.degree)]
        perms = [np.array(g.images, dtype=np.int64) for g in gens]
        orbit_of = orbits_from_arrays(perms, self.degree)
        rest = np.array([x for x in range(self.degree) if x not in self.base], dtype=np.int64)
        if len(rest) == 0:
            return []
        _, counts = np.unique(orbit_of[rest], return_counts=True)
        return sorted(int(c) for c in counts)


def tuple_orbit_stabilizer(
    gens: Sequence[Permutation],
    base: Sequence[int],
    group_order: Optional[int] = None,
    cap: int = TUPLE_ORBIT_CAP,
    schreier_cap: int = SCHREIER_CAP,
) -> TupleStabilizer:
    """
    Orbit size of an ordered point tuple and generators of its stabilizer.

    The tuple orbit is walked one base point at a time: the orbit of b_i under the
    stabilizer of (b_0..b_{i-1}) gives the next factor of the orbit size, and the
    Schreier generators of that step generate the next stabilizer.

    Args:
        gens: Group generators (permutations of one degree)
        base: Distinct points b_0, ..., b_{k-1}
        group_order: When known, orbit_size * |stabilizer| is checked against it, which
            also catches a stabilizer truncated by schreier_cap
        cap: Largest tuple orbit accepted
        schreier_cap: Largest number of kept Schreier generators per step

    Raises:
        CapacityExceededError: the tuple orbit is larger than cap
        InconsistentActionError: orbit size and stabilizer order do not multiply to group_order
    """
    base = tuple(int(b) for b in base)
    degree = gens[0].degree
    current = _dedup(gens)
    orbit_size = 1
    for b in base:
        if not current:
            break
        orbit, current = point_orbit_stabilizer(current, b, schreier_cap)
        orbit_size *= len(orbit)
        if orbit_size > cap:
            raise CapacityExceededError("tuple orbit", cap)
    result = TupleStabilizer(base=base, orbit_size=orbit_size, generators=current, degree=degree)
    if group_order is not None:
        stab_order = chain_order(current) if current else 1
        if orbit_size * stab_order != group_order:
            raise InconsistentActionError(
                f"orbit {orbit_size} x stabilizer {stab_order} != group order {group_order}"
            )
    return result


def chain_order(gens: Sequence[Permutation]) -> int:
    """Group order as the product of basic orbit sizes along a stabilizer chain."""
    current = _dedup(gens)
    order = 1
    while current:
        moved = next(x for x in range(current[0].degree) if current[0].images[x] != x)
        orbit, current = point_orbit_stabilizer(current, moved, schreier_cap=10 ** 9)
        order *= len(orbit)
    return order


# ==================== TRANSITIVITY PROFILE ====================

@dataclass
class TransitivityProfile:
    """
    Transitivity flags of a permutation group of degree n, for k = 1..k_max.

    plus_half[k] is (k+1/2)-transitivity; plus_half[0] is 1/2-transitivity.
    stabilizer_orbits[k] lists the orbit sizes of the k-point stabilizer on the
    remaining points (only for k-transitive levels).
    """

    degree: int
    k_max: int
    transitive: Dict[int, bool] = field(default_factory=dict)
    sharp: Dict[int, bool] = field(default_factory=dict)
    plus_half: Dict[int, bool] = field(default_factory=dict)
    stabilizer_orbits: Dict[int, List[int]] = field(default_factory=dict)
    stabilizer_orders: Dict[int, int] = field(default_factory=dict)

    def max_transitivity(self) -> int:
        return max([k for k, v in self.transitive.items() if v], default=0)

    def implications_hold(self) -> bool:
        """k-transitive => (k-1/2)-transitive => (k-1)-transitive."""
        for k in range(1, self.k_max + 1):
            if self.transitive.get(k) and not self.plus_half.get(k - 1):
                return False
            if k >= 2 and self.plus_half.get(k - 1) and not self.transitive.get(k - 1):
                return False
        return True


def _falling(n: int, k: int) -> int:
    return math.perm(n, k)


def transitivity_profile(
    gens: Sequence[Permutation],
    n: int,
    k_max: int,
    group_order: Optional[int] = None,
    schreier_cap: int = SCHREIER_CAP,
) -> TransitivityProfile:
    """
    Compute k-transitive, sharply k-transitive and (k+1/2)-transitive flags.

    Stabilizer orders are group_order / orbit size when the group order is known;
    otherwise only a trivial stabilizer gets an order. A known group order is also
    checked against every tuple orbit and its stabilizer.

    Raises:
        PreconditionViolationError: n <= k_max
        InconsistentActionError: a stabilizer disagrees with group_order
    """
    if n < k_max + 1:
        raise PreconditionViolationError(f"degree {n} too small for k_max {k_max}")
    profile = TransitivityProfile(degree=n, k_max=k_max)

    perms = [np.array(g.images, dtype=np.int64) for g in gens]
    _, counts = np.unique(orbits_from_arrays(perms, n), return_counts=True)
    profile.plus_half[0] = len(set(counts.tolist())) == 1

    for k in range(1, k_max + 1):
        if k > 1 and not profile.transitive[k - 1]:
            profile.transitive[k] = profile.sharp[k] = profile.plus_half[k] = False
            continue
        stab = tuple_orbit_stabilizer(gens, range(k), group_order=group_order, schreier_cap=schreier_cap)
        is_k = stab.orbit_size == _falling(n, k)
        profile.transitive[k] = is_k
        profile.sharp[k] = is_k and stab.is_trivial
        if is_k:
            rest = stab.orbit_sizes_on_rest()
            profile.stabilizer_orbits[k] = rest
            profile.plus_half[k] = len(set(rest)) <= 1
            if group_order is not None:
                profile.stabilizer_orders[k] = group_order // stab.orbit_size
            elif stab.is_trivial:
                profile.stabilizer_orders[k] = 1
        else:
            profile.plus_half[k] = False
    logger.info(f"degree {n}: transitivity {profile.max_transitivity()}")
    return profile


# ==================== FROBENIUS AND ZASSENHAUS ====================

@dataclass
class FrobeniusVerdict:
    frobenius: bool
    zassenhaus: bool
    complement: bool


def _semiregular_on_rest(gens: Sequence[Permutation], base: Tuple[int, ...], stab_order: int) -> bool:
    if stab_order == 1:
        return True
    stab = TupleStabilizer(base=base, orbit_size=0, generators=list(gens), degree=gens[0].degree)
    return all(size == stab_order for size in stab.orbit_sizes_on_rest())


def frobenius_zassenhaus(action: ActionInstance) -> FrobeniusVerdict:
    """
    Frobenius, Zassenhaus and Frobenius-complement verdicts.

    For a linear action on V^# the verdicts are those of the affine group T(V)G acting
    on V: T(V)G is Frobenius iff G is nontrivial and semiregular on V^# (G is then a
    Frobenius complement), and Zassenhaus iff G is transitive on V^# and the stabilizer
    of a nonzero vector acts semiregularly on the other nonzero vectors.

    Raises:
        PreconditionViolationError: a permutation action that is not transitive
    """
    partition = orbits(action)
    order = action.group.order

    if action.linear:
        semiregular = is_semiregular(action, partition)
        transitive = partition.count == 1
        zassenhaus = False
        if transitive:
            stab = point_stabilizer_elements(action, 0)
            if len(stab) == 1:
                zassenhaus = True
            else:
                sub = action_instance(GeneratedGroup(stab, elements=None), action.points, linear=False)
                sizes = orbits(sub).sizes
                zassenhaus = all(size == len(stab) for pid, size in sizes.items() if pid != 0)
        return FrobeniusVerdict(frobenius=semiregular and order > 1, zassenhaus=zassenhaus, complement=semiregular)

    if partition.count != 1:
        raise PreconditionViolationError("Frobenius/Zassenhaus tests need a transitive action")
    gens = [g for g in action.group.generators]
    n = action.size

    point = tuple_orbit_stabilizer(gens, (0,))
    point_order = order // n
    frobenius = point_order > 1 and _semiregular_on_rest(point.generators, (0,), point_order)

    pair = tuple_orbit_stabilizer(gens, (0, 1))
    zassenhaus = False
    if pair.orbit_size == n * (n - 1):
        pair_order = order // (n * (n - 1))
        zassenhaus = _semiregular_on_rest(pair.generators, (0, 1), pair_order)
    return FrobeniusVerdict(frobenius=frobenius, zassenhaus=zassenhaus, complement=frobenius)

"""
Group Toolkit

This module provides a generic finite-group engine for any element kind that offers
compose / inverse / identity / is_identity / key: closure enumeration, element orders,
derived subgroups, quotients by normal subgroups, the subgroup lattice between a normal
subgroup and an overgroup, coset actions and Sylow subgroup shapes.

Element kinds used in the toolkit are SemilinearMap (core.models.matsemi) and
Permutation (core.models.permutation).
"""

import hashlib
import logging
from collections import Counter
from dataclasses import dataclass
from typing import Any, Dict, FrozenSet, Hashable, Iterable, List, Optional, Sequence

from sympy import factorint, totient

from core.errors import (
    CapacityExceededError,
    ConstructionFailedError,
    InvalidArgumentError,
    NotNormalError,
)
from core.models.permutation import Permutation
from utils.config import CLOSURE_CAP, SUBGROUP_QUOTIENT_CAP

logger = logging.getLogger("core.tools.groupkit")

Element = Any
Key = Hashable

# ==================== GENERATED GROUPS ====================

class GeneratedGroup:
    """
    A group given by generators, optionally with its full element list.

    The element list is filled by closure() and never changes afterwards. A group may
    also carry a known order without being enumerated (pullbacks from a quotient).
    """

    def __init__(
        self,
        generators: Sequence[Element],
        elements: Optional[List[Element]] = None,
        order: Optional[int] = None,
        name: str = "",
    ):
        if not generators:
            raise InvalidArgumentError("a generated group needs at least one generator")
        self.generators: List[Element] = list(generators)
        self.name = name
        self._elements = elements
        self._index: Optional[Dict[Key, int]] = None
        if elements is not None:
            self._index = {g.key(): i for i, g in enumerate(elements)}
            order = len(elements)
        self._order = order

    def __repr__(self) -> str:
        label = self.name or "group"
        return f"<{label} order={self._order if self._order is not None else '?'} gens={len(self.generators)}>"

    @property
    def identity(self) -> Element:
        return self.generators[0].identity()

    @property
    def is_enumerated(self) -> bool:
        return self._elements is not None

    @property
    def elements(self) -> List[Element]:
        if self._elements is None:
            self.enumerate()
        return self._elements  # type: ignore[return-value]

    @property
    def order(self) -> int:
        if self._order is None:
            self.enumerate()
        return self._order  # type: ignore[return-value]

    def enumerate(self, cap: int = CLOSURE_CAP) -> "GeneratedGroup":
        """Fill the element list by closure; returns self."""
        if self._elements is None:
            elements = _bfs_closure(self.generators, cap)
            if self._order is not None and self._order != len(elements):
                raise ConstructionFailedError(
                    f"{self.name or 'group'}: expected order {self._order}, enumerated {len(elements)}"
                )
            self._elements = elements
            self._index = {g.key(): i for i, g in enumerate(elements)}
            self._order = len(elements)
        return self

    def key_set(self) -> Dict[Key, int]:
        """Map from element key to position in the element list."""
        self.enumerate()
        return self._index  # type: ignore[return-value]

    def contains(self, g: Element) -> bool:
        return g.key() in self.key_set()

    def __contains__(self, g: Element) -> bool:
        return self.contains(g)

    def index_of(self, g: Element) -> int:
        return self.key_set()[g.key()]


def _bfs_closure(generators: Sequence[Element], cap: int) -> List[Element]:
    identity = generators[0].identity()
    elements = [identity]
    seen = {identity.key()}
    i = 0
    while i < len(elements):
        x = elements[i]
        for g in generators:
            y = x.compose(g)
            k = y.key()
            if k not in seen:
                if len(elements) >= cap:
                    raise CapacityExceededError("group closure", cap)
                seen.add(k)
                elements.append(y)
        i += 1
    return elements


def closure(generators: Sequence[Element], cap: int = CLOSURE_CAP, name: str = "") -> GeneratedGroup:
    """
    Enumerate the group generated by the given elements.

    Args:
        generators: Elements of one kind and one ambient space
        cap: Maximum number of elements before giving up
        name: Optional label used in logs and reprs

    Returns:
        An enumerated GeneratedGroup; elements are listed in BFS order from the identity

    Raises:
        CapacityExceededError: the group has more than cap elements
    """
    group = GeneratedGroup(generators, name=name)
    group.enumerate(cap)
    logger.debug(f"closure {name or ''}: order {group.order}")
    return group


def try_closure(generators: Sequence[Element], cap: int) -> Optional[GeneratedGroup]:
    """closure() that returns None instead of raising when the cap is hit."""
    try:
        return closure(generators, cap)
    except CapacityExceededError:
        return None


# ==================== ORDERS ====================

def element_order(g: Element, cap: int = CLOSURE_CAP) -> int:
    """Smallest k >= 1 with g^k = identity."""
    x = g
    k = 1
    while not x.is_identity():
        x = x.compose(g)
        k += 1
        if k > cap:
            raise CapacityExceededError("element order", cap)
    return k


def order_histogram(group: GeneratedGroup) -> Dict[int, int]:
    """Map from element order to the number of elements of that order."""
    counts = Counter(element_order(g) for g in group.elements)
    return dict(sorted(counts.items()))


def cyclic_subgroup_count(group: GeneratedGroup) -> int:
    """Number of nontrivial cyclic subgroups: sum over k > 1 of n_k / phi(k)."""
    total = 0
    for k, n in order_histogram(group).items():
        if k > 1:
            total += n // int(totient(k))
    return total


def power(g: Element, k: int) -> Element:
    """g^k for k >= 0 by square and multiply."""
    result = g.identity()
    base = g
    while k:
        if k & 1:
            result = result.compose(base)
        base = base.compose(base)
        k >>= 1
    return result


def conjugate(h: Element, g: Element) -> Element:
    """h^g = g^-1 h g."""
    return g.inverse().compose(h).compose(g)


def commutator(a: Element, b: Element) -> Element:
    """[a, b] = a^-1 b^-1 a b."""
    return a.inverse().compose(b.inverse()).compose(a).compose(b)


# ==================== NORMALITY AND DERIVED SUBGROUP ====================

def is_normal(group: GeneratedGroup, sub: GeneratedGroup) -> bool:
    """True iff g^-1 n g lies in sub for every pair of generators."""
    keys = sub.key_set()
    return all(conjugate(n, g).key() in keys for g in group.generators for n in sub.generators)


def normal_closure(group: GeneratedGroup, seeds: Sequence[Element], cap: int = CLOSURE_CAP) -> GeneratedGroup:
    """Smallest normal subgroup of group containing the seeds."""
    gens = [s for s in seeds if not s.is_identity()] or [group.identity]
    while True:
        sub = closure(gens, cap)
        keys = sub.key_set()
        extra = []
        for g in group.generators:
            for n in sub.generators:
                c = conjugate(n, g)
                if c.key() not in keys:
                    extra.append(c)
                    break
        if not extra:
            return sub
        gens = gens + extra


def derived_subgroup(group: GeneratedGroup, cap: int = CLOSURE_CAP) -> GeneratedGroup:
    """Subgroup generated by all commutators (normal closure of generator commutators)."""
    if group.order > 100_000:
        raise CapacityExceededError("derived subgroup input", 100_000)
    gens = group.generators
    seeds = [commutator(a, b) for i, a in enumerate(gens) for b in gens[i + 1:]]
    derived = normal_closure(group, seeds, cap)
    derived.name = f"[{group.name}, {group.name}]" if group.name else ""
    return derived


def is_perfect(group: GeneratedGroup) -> bool:
    return derived_subgroup(group).order == group.order


# ==================== QUOTIENTS ====================

@dataclass
class QuotientGroup:
    """
    G/N as coset representatives plus an exact multiplication table.

    Coset 0 is N itself. reps[i] is the first element of the i-th coset in the
    enumeration order of G.
    """

    reps: List[Element]
    table: List[List[int]]
    coset_of: Dict[Key, int]
    normal_order: int

    @property
    def order(self) -> int:
        return len(self.reps)

    def project(self, g: Element) -> int:
        """Natural projection G -> G/N."""
        return self.coset_of[g.key()]

    def multiply(self, i: int, j: int) -> int:
        return self.table[i][j]

    def element_order(self, i: int) -> int:
        k, x = 1, i
        while x != 0:
            x = self.table[x][i]
            k += 1
        return k

    def inverse(self, i: int) -> int:
        return next(j for j in range(self.order) if self.table[i][j] == 0)

    def generate(self, gens: Iterable[int]) -> FrozenSet[int]:
        """Subgroup of the quotient generated by coset indices."""
        gens = list(gens)
        elems = {0}
        frontier = [0]
        while frontier:
            x = frontier.pop()
            row = self.table[x]
            for g in gens:
                y = row[g]
                if y not in elems:
                    elems.add(y)
                    frontier.append(y)
        return frozenset(elems)

    def is_cyclic(self) -> bool:
        return any(self.element_order(i) == self.order for i in range(self.order))

    def is_abelian(self) -> bool:
        return all(self.table[i][j] == self.table[j][i] for i in range(self.order) for j in range(i))

    def check_axioms(self) -> bool:
        """Exhaustive group-table check: identity, inverses, associativity."""
        m = self.order
        t = self.table
        if any(t[0][i] != i or t[i][0] != i for i in range(m)):
            return False
        if any(0 not in t[i] for i in range(m)):
            return False
        return all(t[t[i][j]][k] == t[i][t[j][k]] for i in range(m) for j in range(m) for k in range(m))


def quotient(group: GeneratedGroup, normal: GeneratedGroup, cap: int = CLOSURE_CAP) -> QuotientGroup:
    """
    Quotient of an enumerated group by a normal subgroup.

    Raises:
        NotNormalError: normal is not normal in group
    """
    group.enumerate(cap)
    normal.enumerate(cap)
    group_keys = group.key_set()
    if any(n.key() not in group_keys for n in normal.generators):
        raise NotNormalError(f"{normal!r} is not contained in {group!r}")
    if not is_normal(group, normal):
        raise NotNormalError(f"{normal!r} is not normal in {group!r}")

    coset_of: Dict[Key, int] = {}
    reps: List[Element] = []
    for x in group.elements:
        if x.key() in coset_of:
            continue
        c = len(reps)
        reps.append(x)
        for n in normal.elements:
            coset_of[x.compose(n).key()] = c

    table = [[coset_of[a.compose(b).key()] for b in reps] for a in reps]
    logger.debug(f"quotient of order {len(reps)} = {group.order}/{normal.order}")
    return QuotientGroup(reps=reps, table=table, coset_of=coset_of, normal_order=normal.order)


def quotient_subgroups(quot: QuotientGroup) -> Dict[FrozenSet[int], List[int]]:
    """
    All subgroups of a quotient, each with a generating list of coset indices.

    Subgroups are found as iterated joins of cyclic subgroups, deduplicated by
    element set.
    """
    cyclics: Dict[FrozenSet[int], int] = {}
    for i in range(quot.order):
        c = quot.generate([i])
        if c not in cyclics:
            cyclics[c] = i
    trivial = frozenset([0])
    found: Dict[FrozenSet[int], List[int]] = {trivial: []}
    queue = [trivial]
    while queue:
        sub = queue.pop(0)
        gens = found[sub]
        for cyc, c in cyclics.items():
            if c in sub:
                continue
            joined = quot.generate(gens + [c])
            if joined not in found:
                found[joined] = gens + [c]
                queue.append(joined)
    return found


@dataclass
class Pullback:
    """A subgroup G with R <= G <= N, described through N/R."""

    group: GeneratedGroup
    cosets: FrozenSet[int]
    digest: str


def subgroups_between(
    big: GeneratedGroup,
    normal: GeneratedGroup,
    quot: Optional[QuotientGroup] = None,
    cap: int = SUBGROUP_QUOTIENT_CAP,
) -> List[Pullback]:
    """
    Every subgroup G with normal <= G <= big, for normal normal in big.

    The lattice is enumerated in big/normal and each subgroup is pulled back; the
    pulled-back group keeps its known order and is enumerated only on demand.
    Distinct quotient subgroups pull back to distinct element sets, so deduplication
    happens in the quotient.

    Returns:
        Pullbacks sorted by order, then by a digest of their coset representatives

    Raises:
        CapacityExceededError: the quotient is larger than cap
    """
    if quot is None:
        quot = quotient(big, normal)
    if quot.order > cap:
        raise CapacityExceededError("subgroup quotient", cap)

    pullbacks = []
    for cosets, gens in quotient_subgroups(quot).items():
        generators = list(normal.generators) + [quot.reps[i] for i in gens]
        order = len(cosets) * normal.order
        rep_keys = sorted(repr(quot.reps[i].key()) for i in cosets)
        digest = hashlib.sha256("|".join(rep_keys).encode()).hexdigest()
        sub = GeneratedGroup(generators, order=order, name=f"pullback[{order}]")
        pullbacks.append(Pullback(group=sub, cosets=cosets, digest=digest))

    pullbacks.sort(key=lambda pb: (pb.group.order, pb.digest))
    logger.info(f"{len(pullbacks)} subgroups between orders {normal.order} and {big.order}")
    return pullbacks


# ==================== COSET ACTIONS ====================

def coset_action(group: GeneratedGroup, sub: GeneratedGroup) -> List[Permutation]:
    """
    Permutations induced by the generators of group on the right cosets of sub.

    Cosets are numbered in order of first appearance in the element list of group.
    """
    group.enumerate()
    sub.enumerate()
    coset_of: Dict[Key, int] = {}
    reps: List[Element] = []
    for x in group.elements:
        if x.key() in coset_of:
            continue
        c = len(reps)
        reps.append(x)
        for h in sub.elements:
            coset_of[h.compose(x).key()] = c
    return [
        Permutation(tuple(coset_of[r.compose(g).key()] for r in reps))
        for g in group.generators
    ]


# ==================== SYLOW SUBGROUPS ====================

def _is_power_of(n: int, r: int) -> bool:
    while n % r == 0:
        n //= r
    return n == 1


def sylow_subgroup(group: GeneratedGroup, r: int) -> GeneratedGroup:
    """
    A Sylow r-subgroup grown from a maximal-order r-element.

    Raises:
        ConstructionFailedError: no normalizing r-element extends a non-Sylow r-group
    """
    full = r ** factorint(group.order).get(r, 0)
    if full == 1:
        return closure([group.identity])
    orders = {g.key(): element_order(g) for g in group.elements}
    r_elements = [g for g in group.elements if orders[g.key()] > 1 and _is_power_of(orders[g.key()], r)]
    start = max(r_elements, key=lambda g: orders[g.key()])
    gens = [start]
    current = closure(gens)
    while current.order < full:
        keys = current.key_set()
        grow = next(
            (
                y for y in r_elements
                if y.key() not in keys and all(conjugate(h, y).key() in keys for h in current.generators)
            ),
            None,
        )
        if grow is None:
            raise ConstructionFailedError(f"Sylow {r}-subgroup stuck at order {current.order}")
        gens.append(grow)
        current = closure(gens)
    current.name = f"Syl_{r}"
    return current


def classify_r_group(p_group: GeneratedGroup, r: int) -> str:
    """'cyclic', 'generalized-quaternion' or 'other'."""
    n = p_group.order
    orders = [element_order(g) for g in p_group.elements]
    if n == 1 or n in orders:
        return "cyclic"
    if r == 2 and n >= 8 and orders.count(2) == 1 and (n // 2) in orders:
        return "generalized-quaternion"
    return "other"


def sylow_shape(group: GeneratedGroup) -> Dict[int, str]:
    """Per-prime classification of the Sylow subgroups of an enumerated group."""
    if group.order > 100_000:
        raise CapacityExceededError("sylow_shape input", 100_000)
    return {r: classify_r_group(sylow_subgroup(group, r), r) for r in sorted(factorint(group.order))}

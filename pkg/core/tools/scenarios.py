"""
Verifier Scenarios

This module provides the scenario registry: every scenario binds one mathematical
claim about half-transitive linear groups or 3/2-transitive permutation groups to an
executable check that records observations. The runner compares observations with the
golden tables and turns any exception into a failed result.

Scenario functions receive a ScenarioResult and their parameters as keyword arguments
and only add observations; status and timing are set by run_scenario.
"""

import logging
import math
import time
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Any, Callable, Dict, List, Optional, Sequence, Tuple

from sympy import binomial, factorint

from core.errors import InvalidArgumentError, InvariantViolationError, NotFoundError, VerifierError
from core.models.gfield import FieldSpec, field_make
from core.models.matsemi import (
    VectorPoint,
    apply,
    inverse,
    projective_space,
    tensor,
    transpose,
    vector_space,
)
from core.models.results import GoldenTable, ScenarioResult, judge
from core.tools.actions import (
    RangePoints,
    action_instance,
    fixed_point_counts,
    frobenius_zassenhaus,
    is_half_transitive,
    is_semiregular,
    orbits,
    points_in_regular_orbits,
    regular_orbit_count,
    transitivity_profile,
)
from core.tools.atlas import (
    coset_projective_image,
    deleted_perm_module,
    gammal1,
    named_permgroup,
    normalizer_extension,
    s0,
    s4_in_pgl2,
    scalars,
    sl25_in_gl2,
    tensor_group,
)
from core.tools.bounds import BOUNDS
from core.tools.groupkit import (
    GeneratedGroup,
    closure,
    cyclic_subgroup_count,
    order_histogram,
    quotient,
    subgroups_between,
    sylow_shape,
)

logger = logging.getLogger("core.tools.scenarios")

# ==================== REGISTRY ====================

@dataclass
class Scenario:
    """A registered scenario with its default parameter sets."""

    id: str
    claim: str
    func: Callable[..., None]
    param_sets: List[Dict[str, Any]]
    slow: List[Dict[str, Any]] = field(default_factory=list)
    aliases: Tuple[str, ...] = ()

    def is_slow(self, params: Dict[str, Any]) -> bool:
        return params in self.slow


REGISTRY: Dict[str, Scenario] = {}
# Alternative ids accepted wherever a scenario id is
ALIASES: Dict[str, str] = {}


def scenario(
    sid: str,
    claim: str,
    param_sets: Sequence[Dict[str, Any]],
    slow: Sequence[Dict[str, Any]] = (),
    aliases: Sequence[str] = (),
):
    """Register a scenario function under an id and optional aliases."""

    def wrap(func: Callable[..., None]) -> Callable[..., None]:
        REGISTRY[sid] = Scenario(sid, claim, func, list(param_sets), list(slow), tuple(aliases))
        for alias in aliases:
            ALIASES[alias] = sid
        return func

    return wrap


def get_scenario(sid: str) -> Scenario:
    """Look up a scenario by id or alias."""
    sid = ALIASES.get(sid, sid)
    if sid not in REGISTRY:
        raise NotFoundError(f"unknown scenario {sid!r}")
    return REGISTRY[sid]


def run_scenario(sid: str, params: Dict[str, Any], golden: Optional[GoldenTable] = None) -> ScenarioResult:
    """
    Run one scenario and judge it against its golden table.

    Any exception raised by the scenario becomes a 'fail' result carrying an 'error'
    observation; toolkit errors are logged as errors, anything else with a traceback.

    Raises:
        NotFoundError: unknown scenario id
    """
    spec = get_scenario(sid)
    result = ScenarioResult(scenario=spec.id, params=dict(params))
    start = time.perf_counter()
    try:
        spec.func(result, **params)
    except VerifierError as e:
        logger.error(f"{spec.id} {params}: {e}")
        result.observe("error", f"{type(e).__name__}: {e}")
        result.status = "fail"
    except Exception as e:
        logger.exception(f"{spec.id} {params}: unexpected {type(e).__name__}")
        result.observe("error", f"{type(e).__name__}: {e}")
        result.status = "fail"
    result.runtime_ms = int((time.perf_counter() - start) * 1000)
    if result.status != "fail":
        judge(result, golden.lookup(params) if golden else None)
    logger.info(f"{spec.id} {params}: {result.status} in {result.runtime_ms} ms")
    return result


# ==================== SHARED CONSTRUCTIONS ====================

@lru_cache(maxsize=None)
def field_of(q: int) -> FieldSpec:
    """F_q for a prime power q."""
    factors = factorint(q)
    if len(factors) != 1:
        raise InvalidArgumentError(f"{q} is not a prime power")
    (p, a), = factors.items()
    return field_make(int(p), int(a))


@dataclass
class NormalizerSetup:
    """R = SL_2(5), the full scalar group Z, and N = Z R (extended by sigma when q = p^2)."""

    spec: FieldSpec
    r: Any
    z: Any
    big: GeneratedGroup


@lru_cache(maxsize=None)
def normalizer_setup(q: int) -> NormalizerSetup:
    spec = field_of(q)
    r = sl25_in_gl2(spec)
    z = scalars(spec, q - 1)
    gens = list(r.generators) + list(z.generators)
    if spec.a == 2:
        gens.append(normalizer_extension(r, spec))
    big = closure(gens, name=f"N({q})")
    logger.info(f"N({q}) has order {big.order}")
    return NormalizerSetup(spec=spec, r=r, z=z, big=big)


def scalar_cosets(setup: NormalizerSetup, quot) -> set:
    return {quot.project(g) for g in setup.z.group.elements}


# ==================== LINEAR GROUP SCENARIOS ====================

def enumerate_half_transitive(result: ScenarioResult, q: int) -> None:
    """
    Every G with R <= G <= N that is half-transitive but not semiregular on V^#.

    Rows are (|G|, orbit size, number of orbits), distinct and ascending. For each row
    the number of subgroups producing it and their scalar orders |G cap Z| are recorded.
    """
    setup = normalizer_setup(q)
    points = vector_space(setup.spec, 2)
    quot = quotient(setup.big, setup.r.group)
    z_cosets = scalar_cosets(setup, quot)
    pullbacks = subgroups_between(setup.big, setup.r.group, quot)

    rows: Dict[Tuple[int, int, int], List[int]] = {}
    for pb in pullbacks:
        action = action_instance(pb.group, points)
        partition = orbits(action)
        half, size = is_half_transitive(partition)
        if not half or is_semiregular(action, partition):
            continue
        row = (pb.group.order, size, partition.count)
        if size * partition.count != points.size:
            raise InvariantViolationError(f"{partition.count} orbits of size {size} do not cover {points.size} vectors")
        rows.setdefault(row, []).append(2 * len(pb.cosets & z_cosets))

    ordered = sorted(rows)
    result.observe("rows", [list(r) for r in ordered], "PUBLISHED")
    result.observe("row_details", [
        {"row": list(r), "subgroups": len(rows[r]), "scalar_orders": sorted(set(rows[r]))}
        for r in ordered
    ])
    result.observe("normalizer_order", setup.big.order)
    result.observe("subgroups_examined", len(pullbacks))


scenario(
    "half_transitive_table",
    "Groups R <= G <= N(SL_2(5)) half-transitive and not semiregular on V^# exist only for q in {11, 19, 29, 169}",
    [{"q": q} for q in (11, 19, 29, 31, 41, 49, 59, 61, 169)],
    slow=[{"q": 59}, {"q": 61}],
    aliases=("table1",),
)(enumerate_half_transitive)


@scenario(
    "scalar_transitivity",
    "F_p^* SL_2(5) is transitive on the nonzero vectors of F_p^2",
    [{"q": q} for q in (11, 19, 29)],
)
def scalar_transitivity(result: ScenarioResult, q: int) -> None:
    setup = normalizer_setup(q)
    zr = closure(list(setup.r.generators) + list(setup.z.generators), name=f"ZR({q})")
    partition = orbits(action_instance(zr, vector_space(setup.spec, 2)))
    result.observe("order", zr.order)
    result.observe("orbit_sizes", partition.size_list(), "PUBLISHED")


@scenario(
    "half_transitive_normal_subgroups",
    "Every G with R <= G <= Z R is half-transitive, being normal in a transitive group",
    [{"q": q} for q in (11, 19, 29)],
)
def half_transitive_normal_subgroups(result: ScenarioResult, q: int) -> None:
    setup = normalizer_setup(q)
    zr = closure(list(setup.r.generators) + list(setup.z.generators), name=f"ZR({q})")
    points = vector_space(setup.spec, 2)
    profiles = []
    all_half = True
    for pb in subgroups_between(zr, setup.r.group):
        partition = orbits(action_instance(pb.group, points))
        half, size = is_half_transitive(partition)
        all_half = all_half and half
        profiles.append([pb.group.order, size, partition.count])
    result.observe("all_half_transitive", all_half, "PUBLISHED")
    result.observe("subgroup_count", len(profiles))
    result.observe("profiles", profiles)


def projective_orbit_report(result: ScenarioResult, q: int, group: str, z0: int = 1) -> Any:
    """
    Orbits of a group on P_1(F_q^2); group is 'z0r' (Z_0 R), 'a5' (image of R) or 's4'.

    Returns the action and partition for the callers that record more.
    """
    spec = field_of(q)
    points = projective_space(spec, 2)
    if group == "z0r":
        r = sl25_in_gl2(spec)
        gens = list(r.generators) + [g for g in scalars(spec, z0).generators if not g.is_identity()]
        action = action_instance(GeneratedGroup(gens), points)
        order = None
    elif group == "a5":
        image = coset_projective_image(sl25_in_gl2(spec), spec)
        action = action_instance(image.group, RangePoints(points.size))
        order = image.order
    elif group == "s4":
        s4 = s4_in_pgl2(spec)
        action = action_instance(s4.group, RangePoints(points.size))
        order = s4.order
    else:
        raise NotFoundError(f"unknown projective group {group!r}")
    partition = orbits(action)
    result.observe("projective_orbit_sizes", partition.size_list(), "PUBLISHED" if group == "z0r" else "DERIVED")
    return action, partition, order


@scenario(
    "projective_orbits",
    "Z_0 SL_2(5) with |Z_0| = 28 in GL_2(169) has orbits of sizes 20, 30, 60, 60 on 1-spaces",
    [{"q": 169, "z0": 28}],
)
def projective_orbits(result: ScenarioResult, q: int, z0: int) -> None:
    projective_orbit_report(result, q, "z0r", z0)
    result.observe("z0_order", z0)


@scenario(
    "sl25_semiregular",
    "SL_2(5) <= GL_2(q) is semiregular on V^# (every nontrivial element fixed-point-free)",
    [{"q": q} for q in (11, 19, 29, 169)],
)
def sl25_semiregular(result: ScenarioResult, q: int) -> None:
    r = sl25_in_gl2(field_of(q))
    action = action_instance(r.group, vector_space(field_of(q), 2))
    partition = orbits(action)
    fpf = all(count == 0 for count in fixed_point_counts(action)[1:])
    result.observe("semiregular", is_semiregular(action, partition), "PUBLISHED")
    result.observe("fixed_point_free", fpf, "PUBLISHED")
    result.observe("orbit_count", partition.count)


@scenario(
    "a5_regular_orbits",
    "The image of SL_2(5) on P_1 has at least ceil((q - 62)/60) regular orbits",
    [{"q": 71}, {"q": 101}],
)
def a5_regular_orbits(result: ScenarioResult, q: int) -> None:
    action, partition, order = projective_orbit_report(result, q, "a5")
    bound = math.ceil((q - 62) / 60)
    regular = regular_orbit_count(partition, order)
    result.observe("order", order, "PUBLISHED")
    result.observe("bound", bound, "PUBLISHED")
    result.observe("meets_bound", regular >= bound, "PUBLISHED")
    result.observe("regular_orbit_count", regular)
    result.observe("fixed_points_at_most_two", max(fixed_point_counts(action)[1:]) <= 2, "PUBLISHED")


@scenario(
    "s4_regular_points",
    "At least q - 32 points of P_1 lie in regular orbits of S_4 <= PGL_2(q)",
    [{"q": 67}],
)
def s4_regular_points(result: ScenarioResult, q: int) -> None:
    action, partition, order = projective_orbit_report(result, q, "s4")
    regular_points = points_in_regular_orbits(partition, order)
    result.observe("order", order, "PUBLISHED")
    result.observe("bound", q - 32, "PUBLISHED")
    result.observe("meets_bound", regular_points >= q - 32, "PUBLISHED")
    result.observe("points_in_regular_orbits", regular_points)
    result.observe("fixed_points_at_most_two", max(fixed_point_counts(action)[1:]) <= 2, "PUBLISHED")


@scenario(
    "tensor_stabilizer",
    "In Z (R_1 tensor R_1^T) the stabilizer of u1w1 + u2w2 is {B tensor B^-T}",
    [{"q": 11}],
)
def tensor_stabilizer(result: ScenarioResult, q: int) -> None:
    spec = field_of(q)
    recipe = tensor_group(spec, "sl25_sl25", q - 1)
    group = recipe.group
    v = VectorPoint.of(spec, [1, 0, 0, 1])
    stabilizer = {g.key() for g in group.elements if apply(g, v) == v}

    r1 = sl25_in_gl2(spec)
    expected = {
        tensor(b.mat, transpose(inverse(b.mat))).codes + (0,)
        for b in r1.group.elements
    }
    result.observe("group_order", group.order, "DERIVED")
    result.observe("stabilizer_order", len(stabilizer), "DERIVED")
    result.observe("stabilizer_equals_tensor_set", stabilizer == expected, "PUBLISHED")

    # Rank-two tensors are the vectors u1w1' + u2w2' for some basis w1', w2'
    points = vector_space(spec, 4)
    partition = orbits(action_instance(group, points))
    rank_two = []
    for orbit_id, size in partition.sizes.items():
        a, b, c, d = partition.reps[orbit_id]
        if spec.tables.sub(spec.tables.mul(a, d), spec.tables.mul(b, c)):
            rank_two.append(group.order // size)
    result.observe("rank_two_stabilizer_orders", sorted(rank_two))
    result.observe("coprime_to_3_stabilizer_exists", any(s % 3 for s in rank_two), "PUBLISHED")


@scenario(
    "deleted_module",
    "Z_0 S_c on the sum-zero module has vector orbits of sizes c(c-1)|Z_0|/(2,|Z_0|) and 3|Z_0|C(c,3)",
    [{"c": 5, "p": 7, "z0": 1}, {"c": 5, "p": 7, "z0": 2}],
)
def deleted_module(result: ScenarioResult, c: int, p: int, z0: int) -> None:
    action = deleted_perm_module(c, p, "symmetric", z0)
    partition = orbits(action)
    v1 = [1, p - 1] + [0] * (c - 2)
    v2 = [1, 1, p - 2] + [0] * (c - 3)
    size1 = partition.size_of(action.points.index_of(v1))
    size2 = partition.size_of(action.points.index_of(v2))
    result.observe("orbit_v1", size1, "PUBLISHED")
    result.observe("orbit_v2", size2, "PUBLISHED")
    result.observe("formula_v1", c * (c - 1) * z0 // math.gcd(2, z0))
    result.observe("formula_v2", 3 * z0 * int(binomial(c, 3)))
    result.observe("half_transitive", is_half_transitive(partition)[0], "PUBLISHED")


@scenario(
    "order_statistics",
    "Element orders of SL_2(5), A_5 and S_4; A_5 has 31 and S_4 has 16 nontrivial cyclic subgroups",
    [{"q": 11}],
)
def order_statistics(result: ScenarioResult, q: int) -> None:
    spec = field_of(q)
    r = sl25_in_gl2(spec)
    a5 = coset_projective_image(r, spec).group
    s4 = s4_in_pgl2(spec).group
    result.observe("sl25_histogram", order_histogram(r.group))
    result.observe("a5_histogram", order_histogram(a5))
    result.observe("s4_histogram", order_histogram(s4))
    result.observe("a5_cyclic_subgroups", cyclic_subgroup_count(a5), "PUBLISHED")
    result.observe("s4_cyclic_subgroups", cyclic_subgroup_count(s4), "PUBLISHED")


@scenario(
    "quotient_structure",
    "N/R is cyclic of order 9 for q = 19; the semilinear normalizer for q = 169 has order 20160",
    [{"q": 19}, {"q": 169}],
)
def quotient_structure(result: ScenarioResult, q: int) -> None:
    setup = normalizer_setup(q)
    quot = quotient(setup.big, setup.r.group)
    result.observe("normalizer_order", setup.big.order)
    result.observe("quotient_order", quot.order)
    result.observe("quotient_cyclic", quot.is_cyclic())
    result.observe("quotient_abelian", quot.is_abelian())
    result.observe("quotient_axioms", quot.check_axioms() if quot.order <= 200 else None)
    pullbacks = subgroups_between(setup.big, setup.r.group, quot)
    result.observe("subgroup_count", len(pullbacks))
    result.observe("subgroup_orders", [pb.group.order for pb in pullbacks])


@scenario(
    "sylow_shapes",
    "SL_2(5) has quaternion Sylow 2-subgroups and cyclic odd Sylow subgroups; S_4 does not",
    [{"q": 11}],
)
def sylow_shapes(result: ScenarioResult, q: int) -> None:
    spec = field_of(q)
    result.observe("sl25", sylow_shape(sl25_in_gl2(spec).group))
    result.observe("s4", sylow_shape(s4_in_pgl2(spec).group))


@scenario(
    "corollary_cases",
    "S_0(11) and GammaL_1(8) are half-transitive; SL_2(5) on V^#(F_19^2) is a Frobenius complement",
    [{}],
)
def corollary_cases(result: ScenarioResult) -> None:
    spec11 = field_of(11)
    s0_group = s0(spec11)
    partition = orbits(action_instance(s0_group.group, vector_space(spec11, 2)))
    result.observe("s0_order", s0_group.order, "PUBLISHED")
    result.observe("s0_orbit_sizes", partition.size_list())
    result.observe("s0_half_transitive", is_half_transitive(partition)[0], "PUBLISHED")

    gl = gammal1(2, 3)
    action = action_instance(gl.group, vector_space(field_of(2), 3))
    partition = orbits(action)
    verdict = frobenius_zassenhaus(action)
    result.observe("gammal1_order", gl.order)
    result.observe("gammal1_orbit_sizes", partition.size_list())
    result.observe("gammal1_half_transitive", is_half_transitive(partition)[0], "PUBLISHED")
    result.observe("gammal1_zassenhaus", verdict.zassenhaus)

    spec19 = field_of(19)
    action = action_instance(sl25_in_gl2(spec19).group, vector_space(spec19, 2))
    verdict = frobenius_zassenhaus(action)
    result.observe("sl25_complement", verdict.complement, "PUBLISHED")
    result.observe("sl25_frobenius", verdict.frobenius)


# ==================== PERMUTATION GROUP SCENARIOS ====================

# Largest k examined per catalogued group
PERMUTATION_SUITE = {
    "A7_pairs": 2,
    "S7_pairs": 2,
    "PSL2(8)_deg28": 2,
    "PGammaL2(8)_deg9": 4,
    "AGammaL1(8)": 3,
    "PGL2(7)_projline": 4,
    "M11_deg11": 5,
    "M11_deg12": 4,
    "M12": 6,
    "M22": 4,
    "M23": 5,
}


@scenario(
    "permutation_suite",
    "Transitivity profiles of the 3/2-transitive and multiply transitive permutation groups",
    [{"group": name} for name in PERMUTATION_SUITE],
    slow=[{"group": "M23"}],
)
def permutation_suite(result: ScenarioResult, group: str) -> None:
    if group not in PERMUTATION_SUITE:
        raise NotFoundError(f"{group!r} is not in the permutation suite")
    data = named_permgroup(group)
    profile = transitivity_profile(data.generators, data.degree, PERMUTATION_SUITE[group], data.order)
    if not profile.implications_hold():
        raise InvariantViolationError(f"{group}: transitivity flags contradict each other")
    nonregular = profile.stabilizer_orders.get(1, 1) > 1
    verdict = frobenius_zassenhaus(action_instance(data.group(), RangePoints(data.degree)))

    result.observe("degree", data.degree)
    result.observe("order", data.order)
    result.observe("max_transitivity", profile.max_transitivity())
    result.observe("sharply_transitive", max([k for k, v in profile.sharp.items() if v], default=0))
    result.observe("plus_half", sorted(k for k, v in profile.plus_half.items() if v))
    result.observe("three_halves", bool(profile.transitive[1] and nonregular and profile.plus_half[1]))
    for k, sizes in sorted(profile.stabilizer_orbits.items()):
        result.observe(f"stabilizer_orbits_{k}", sizes)
        if k in profile.stabilizer_orders:
            result.observe(f"stabilizer_order_{k}", profile.stabilizer_orders[k])
    result.observe("frobenius", verdict.frobenius)
    result.observe("zassenhaus", verdict.zassenhaus)


# ==================== BOUNDS ====================

@scenario(
    "bound_check",
    "Exact evaluation of the counting inequalities that bound the exceptional field sizes",
    [{"name": name} for name in BOUNDS],
)
def bound_check(result: ScenarioResult, name: str) -> None:
    if name not in BOUNDS:
        raise NotFoundError(f"unknown bound {name!r}")
    for label, value in BOUNDS[name]().items():
        result.observe(label, value)


def default_runs(skip_slow: bool = False) -> List[Tuple[str, Dict[str, Any]]]:
    """All (scenario id, params) pairs of a full run, in registry order."""
    runs = []
    for sid, spec in REGISTRY.items():
        for params in spec.param_sets:
            if skip_slow and spec.is_slow(params):
                continue
            runs.append((sid, dict(params)))
    return runs

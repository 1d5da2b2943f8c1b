"""
Group Atlas

This module provides deterministic constructions of the named groups used by the
verifier scenarios:
- scalar groups, SL_2(5) inside GL_2(q), the monomial group S_0(q) and GammaL_1(p^d)
- the semilinear element normalizing SL_2(5) in GammaL_2(p^2)
- tensor-product groups in GL_4(q) and deleted permutation modules
- S_4 inside PGL_2(q) and the projective image of a linear group
- a catalogue of permutation groups (projective lines, pair actions, Mathieu groups)

Every construction is checked against an oracle (closure order, perfection, unique
involution) before it is returned.
"""

import logging
import re
from dataclasses import dataclass, field
from functools import lru_cache
from itertools import combinations, product
from pathlib import Path
from typing import Any, Dict, List, Optional, Sequence, Tuple

import numpy as np
from sympy import divisors, factorint

from core.errors import (
    CapacityExceededError,
    ConstructionFailedError,
    DataInvalidError,
    InvalidArgumentError,
    NotFoundError,
    UnsupportedFieldError,
)
from core.models.gfield import FieldSpec, code_to_coeffs, field_make
from core.models.matsemi import (
    Matrix,
    ProjectivePointSet,
    SemilinearMap,
    det,
    nullspace,
    projective_space,
    tensor,
    transpose,
    vector_subset,
)
from core.models.permutation import Permutation
from core.tools.actions import ActionInstance, action_instance, chain_order
from core.tools.groupkit import (
    GeneratedGroup,
    closure,
    coset_action,
    element_order,
    is_perfect,
    try_closure,
)
from utils.config import MATHIEU_DIR

logger = logging.getLogger("core.tools.atlas")

# ==================== RECIPES ====================

@dataclass
class GroupRecipe:
    """
    A named group construction together with the oracle it passed.

    group is the validated closure (or a group with a validated order for the large
    permutation groups).
    """

    name: str
    params: Dict[str, Any]
    generators: List[Any]
    validation: str
    group: GeneratedGroup
    extras: Dict[str, Any] = field(default_factory=dict)

    @property
    def order(self) -> int:
        return self.group.order


def _expect_order(group: GeneratedGroup, expected: int, what: str) -> None:
    if group.order != expected:
        raise ConstructionFailedError(f"{what}: closure order {group.order}, expected {expected}")


def _map(spec: FieldSpec, rows: Sequence[Sequence[int]], frob: int = 0) -> SemilinearMap:
    return SemilinearMap.make(Matrix.from_rows(spec, rows), frob)


# ==================== SCALARS, S_0, GAMMAL_1 ====================

def scalars(spec: FieldSpec, m: int, n: int = 2) -> GroupRecipe:
    """
    Cyclic group of scalar matrices of order m in GL_n(q).

    Raises:
        InvalidArgumentError: m does not divide q - 1
    """
    if m < 1 or (spec.q - 1) % m:
        raise InvalidArgumentError(f"scalar order {m} does not divide {spec.q - 1}")
    t = spec.tables
    lam = t.primitive_power((spec.q - 1) // m)
    gen = SemilinearMap(Matrix.scalar(spec, n, lam), 0)
    group = closure([gen], name=f"Z{m}")
    _expect_order(group, m, "scalars")
    return GroupRecipe(f"scalars({m})", {"q": spec.q, "m": m, "n": n}, [gen], f"order {m}", group)


def s0(spec: FieldSpec) -> GroupRecipe:
    """
    S_0(q): monomial 2 x 2 matrices of determinant +-1, order 4(q - 1).

    Raises:
        UnsupportedFieldError: q is even
    """
    if spec.p == 2:
        raise UnsupportedFieldError("S_0(q) needs q odd")
    t = spec.tables
    g = t.primitive
    gens = [
        _map(spec, [[g, 0], [0, t.inv(g)]]),
        _map(spec, [[1, 0], [0, t.neg(1)]]),
        _map(spec, [[0, 1], [1, 0]]),
    ]
    group = closure(gens, name=f"S0({spec.q})")
    _expect_order(group, 4 * (spec.q - 1), "S_0")
    return GroupRecipe(f"S0({spec.q})", {"q": spec.q}, gens, "order 4(q-1)", group)


def gammal1(p: int, d: int) -> GroupRecipe:
    """
    GammaL_1(p^d) as a subgroup of GL_d(p).

    F_{p^d} is identified with F_p^d through the basis 1, t, ..., t^(d-1); the
    generators are multiplication by the primitive element and the Frobenius x -> x^p.
    """
    if d < 1:
        raise InvalidArgumentError("gammal1 needs d >= 1")
    big = field_make(p, d)
    base = field_make(p, 1)
    bt = big.tables
    g = bt.primitive
    basis = [p ** i for i in range(d)]
    mult_rows = [list(code_to_coeffs(big, bt.mul(b, g))) for b in basis]
    frob_rows = [list(code_to_coeffs(big, bt.frob(b, 1))) for b in basis]
    mult = _map(base, mult_rows)
    frob = _map(base, frob_rows)

    expected = d * (p ** d - 1)
    group = closure([mult, frob], name=f"GammaL1({p}^{d})")
    _expect_order(group, expected, "GammaL_1")
    if element_order(mult) != p ** d - 1 or element_order(frob) != d:
        raise ConstructionFailedError("GammaL_1 generators have the wrong orders")
    return GroupRecipe(f"GammaL1({p}^{d})", {"p": p, "d": d}, [mult, frob], "order d(p^d-1)", group)


# ==================== SL_2(5) ====================

def _is_binary_icosahedral(group: Optional[GeneratedGroup]) -> bool:
    if group is None or group.order != 120:
        return False
    involutions = [g for g in group.elements if not g.is_identity() and g.compose(g).is_identity()]
    if len(involutions) != 1:
        return False
    minus = involutions[0]
    spec = minus.spec
    if minus.key() != Matrix.scalar(spec, 2, spec.tables.neg(1)).codes + (0,):
        return False
    return is_perfect(group)


def embeds_sl25(spec: FieldSpec) -> bool:
    """SL_2(5) <= SL_2(q) with the golden-ratio trace inside F_q."""
    return spec.p not in (2, 5) and spec.q % 5 in (1, 4)


@lru_cache(maxsize=None)
def sl25_in_gl2(spec: FieldSpec) -> GroupRecipe:
    """
    SL_2(5) inside SL_2(q) by a trace-targeted search.

    s = [[0, 1], [-1, tau]] has order 5 when tau^2 + tau - 1 = 0. The second generator u
    is the first matrix in canonical order with trace -1, determinant 1 and tr(su) = 0,
    so that u has order 3 and su squares to -I.

    Raises:
        UnsupportedFieldError: p in {2, 5} or q = +-2 mod 5
        ConstructionFailedError: no candidate passes the oracle
    """
    if not embeds_sl25(spec):
        raise UnsupportedFieldError(f"SL_2(5) has no trace-targeted embedding over {spec!r}")
    t = spec.tables
    one, minus_one = 1, t.neg(1)
    taus = [c for c in range(spec.q) if t.add(t.add(t.mul(c, c), c), minus_one) == 0]
    for tau in taus:
        s = _map(spec, [[0, 1], [minus_one, tau]])
        for x, z in product(range(spec.q), repeat=2):
            w = t.sub(minus_one, x)
            y = t.sub(z, t.mul(tau, t.add(one, x)))
            if t.sub(t.mul(x, w), t.mul(y, z)) != one:
                continue
            u = _map(spec, [[x, y], [z, w]])
            group = try_closure([s, u], 121)
            if _is_binary_icosahedral(group):
                group.name = f"SL2(5)<GL2({spec.q})"
                logger.info(f"SL2(5) in GL2({spec.q}): tau={tau}, u={u.mat.codes}")
                return GroupRecipe(
                    f"SL2(5)@{spec.q}",
                    {"q": spec.q},
                    [s, u],
                    "order 120, perfect, unique involution -I",
                    group,
                    extras={"tau": tau},
                )
    raise ConstructionFailedError(f"no SL_2(5) found in GL_2({spec.q})")


def scalar_extension(recipe: GroupRecipe, z: GroupRecipe) -> GeneratedGroup:
    """The product Z R of a linear group with a scalar group (not enumerated)."""
    gens = list(recipe.generators) + [g for g in z.generators if not g.is_identity()]
    return GeneratedGroup(gens, name=f"Z{z.params['m']}*{recipe.name}")


# ==================== NORMALIZER EXTENSION ====================

def _conjugacy_system(spec: FieldSpec, g: Matrix, h: Matrix) -> List[List[int]]:
    """Rows of the linear system g X - X h = 0 in the unknowns X (row-major)."""
    t = spec.tables
    rows = []
    for i in range(2):
        for j in range(2):
            row = [0] * 4
            for k in range(2):
                for l in range(2):
                    coeff = 0
                    if l == j:
                        coeff = t.add(coeff, g.codes[i * 2 + k])
                    if k == i:
                        coeff = t.sub(coeff, h.codes[l * 2 + j])
                    row[k * 2 + l] = coeff
            rows.append(row)
    return rows


def normalizer_extension(recipe: GroupRecipe, spec: FieldSpec) -> SemilinearMap:
    """
    A semilinear map (C, 1) normalizing R = SL_2(5) in GammaL_2(p^2).

    Conjugation by (C, 1) sends g to C^-1 g^sigma C, so C must solve g^sigma C = C h
    for generator images h in R. Images are tried over all pairs of elements of R with
    the matching traces, in enumeration order.

    Raises:
        InvalidArgumentError: the field is not quadratic over its prime field
        ConstructionFailedError: no assignment gives an invertible solution
    """
    if spec.a != 2:
        raise InvalidArgumentError("normalizer_extension needs q = p^2")
    group = recipe.group
    keys = group.key_set()
    gens = [g.mat for g in recipe.generators]
    twisted = [g.frobenius(1) for g in gens]
    candidates = [
        [h.mat for h in group.elements if h.mat.trace() == tw.trace()]
        for tw in twisted
    ]

    def assign(index: int, rows: List[List[int]]):
        if index == len(twisted):
            yield rows
            return
        for h in candidates[index]:
            yield from assign(index + 1, rows + _conjugacy_system(spec, twisted[index], h))

    for rows in assign(0, []):
        basis = nullspace(spec, rows, 4)
        if len(basis) != 1:
            continue
        c = Matrix(spec, 2, basis[0])
        if det(c).is_zero():
            continue
        ext = SemilinearMap(c, 1)
        inv_ext = ext.inverse()
        if all(inv_ext.compose(g).compose(ext).key() in keys for g in recipe.generators):
            logger.info(f"normalizing semilinear map found: C={c.codes}")
            return ext
    raise ConstructionFailedError(f"no semilinear map normalizes SL_2(5) in GammaL_2({spec.q})")


# ==================== TENSOR PRODUCTS ====================

def _identity2(spec: FieldSpec) -> Matrix:
    return Matrix.identity(spec, 2)


def tensor_group(spec: FieldSpec, kind: str = "sl25_sl25", z0: int = 1) -> GroupRecipe:
    """
    Z_0 (R_1 tensor R_2) inside GL_4(q).

    kind 'sl25_sl25' uses R_1 = SL_2(5) and R_2 = R_1^T; kind 'sl25_sl23ext' uses the
    preimage of S_4 in GL_2(q) as second factor. The order is computed by closure and the
    central-product correction |Z_0||R_1||R_2| / |G| is recorded in extras.
    """
    r1 = sl25_in_gl2(spec)
    first = [g.mat for g in r1.generators]
    if kind == "sl25_sl25":
        second = [transpose(m) for m in first]
        r2_order = r1.order
    elif kind == "sl25_sl23ext":
        s4 = s4_in_pgl2(spec)
        second = [g.mat for g in s4.generators]
        r2_order = closure([SemilinearMap(m, 0) for m in second]).order
    else:
        raise InvalidArgumentError(f"unknown tensor kind {kind!r}")

    i2 = _identity2(spec)
    gens = [SemilinearMap(tensor(m, i2), 0) for m in first]
    gens += [SemilinearMap(tensor(i2, m), 0) for m in second]
    if z0 > 1:
        gens += scalars(spec, z0, 4).generators
    group = closure(gens, name=f"Z{z0}*{kind}({spec.q})")
    correction = z0 * r1.order * r2_order // group.order
    if z0 * r1.order * r2_order % group.order:
        raise ConstructionFailedError(f"tensor group order {group.order} does not divide the product")
    logger.info(f"tensor group {kind} over F_{spec.q}: order {group.order}, correction {correction}")
    return GroupRecipe(
        f"tensor[{kind}]@{spec.q}",
        {"q": spec.q, "kind": kind, "z0": z0},
        gens,
        "order computed by closure",
        group,
        extras={"first": first, "second": second, "correction": correction},
    )


# ==================== DELETED PERMUTATION MODULE ====================

def _permutation_matrix(spec: FieldSpec, perm: Permutation) -> SemilinearMap:
    c = perm.degree
    rows = [[1 if perm.images[i] == j else 0 for j in range(c)] for i in range(c)]
    return SemilinearMap(Matrix.from_rows(spec, rows), 0)


def _symmetric_generators(c: int, alternating: bool) -> List[Permutation]:
    cycle = Permutation.from_cycles(c, [list(range(c))])
    if not alternating:
        return [cycle, Permutation.from_cycles(c, [[0, 1]])]
    if c % 2 == 0:
        cycle = Permutation.from_cycles(c, [list(range(1, c))])
    return [cycle, Permutation.from_cycles(c, [[0, 1, 2]])]


def sum_zero_vectors(spec: FieldSpec, c: int) -> np.ndarray:
    """Nonzero vectors of F_p^c with coordinate sum zero."""
    p = spec.p
    free = np.array(list(product(range(p), repeat=c - 1)), dtype=np.int64)
    last = (-free.sum(axis=1)) % p
    vectors = np.column_stack([free, last])
    return vectors[vectors.any(axis=1)]


def deleted_perm_module(c: int, p: int, group: str = "symmetric", z0: int = 1) -> ActionInstance:
    """
    Z_0 x H acting on the sum-zero hyperplane of F_p^c, H = A_c or S_c.

    The group acts by c x c permutation matrices and scalars on the stored sum-zero
    vectors; compiling a generator fails if the hyperplane is not invariant.

    Raises:
        InvalidArgumentError: c >= p, c < 5, z0 not dividing p - 1 or unknown group
    """
    if c >= p:
        raise InvalidArgumentError(f"deleted permutation module needs c < p, got c={c}, p={p}")
    if c < 5:
        raise InvalidArgumentError("deleted permutation module needs c >= 5")
    if group not in ("alternating", "symmetric"):
        raise InvalidArgumentError(f"unknown permutation group {group!r}")
    spec = field_make(p, 1)
    perms = _symmetric_generators(c, group == "alternating")
    gens = [_permutation_matrix(spec, g) for g in perms]
    if z0 > 1:
        gens += scalars(spec, z0, c).generators
    points = vector_subset(spec, sum_zero_vectors(spec, c))
    generated = GeneratedGroup(gens, name=f"Z{z0}x{group[0].upper()}{c}")
    action = action_instance(generated, points, linear=True)
    assert points.size == p ** (c - 1) - 1
    return action


# ==================== S_4 AND PROJECTIVE IMAGES ====================

def _projective_permutation(points: ProjectivePointSet, g: SemilinearMap) -> Permutation:
    return Permutation(tuple(int(x) for x in points.compile(g)))


def projective_image(
    generators: Sequence[SemilinearMap],
    spec: FieldSpec,
    cap: int = 1_000_000,
) -> Tuple[ProjectivePointSet, GeneratedGroup]:
    """The permutation group induced on P_1(V) by linear or semilinear 2 x 2 maps."""
    points = projective_space(spec, 2)
    perms = [_projective_permutation(points, g) for g in generators]
    return points, closure(perms, cap)


def coset_projective_image(recipe: GroupRecipe, spec: FieldSpec) -> GroupRecipe:
    """
    The image of a linear group on the 1-spaces of V = F_q^2, as permutations.

    For R = SL_2(5) this is the group A_5 of order 60.
    """
    points, group = projective_image(recipe.generators, spec)
    group.name = f"{recipe.name}/scalars"
    logger.info(f"projective image of {recipe.name}: order {group.order} on {points.size} points")
    return GroupRecipe(
        f"P({recipe.name})",
        {"q": spec.q},
        list(group.generators),
        "closure on P_1",
        group,
        extras={"points": points},
    )


@lru_cache(maxsize=None)
def s4_in_pgl2(spec: FieldSpec) -> GroupRecipe:
    """
    A subgroup S_4 of PGL_2(q), q odd and coprime to 3.

    a = [[0, 1], [-1/2, 1]] has projective order 4 (tr^2 = 2 det). b runs over
    [[x, y], [z, 1 - x]] of determinant 1 (projective order 3) with tr(ab) = 0
    (projective order 2), in canonical order. The first pair whose projective image
    has order 24 is returned.

    Raises:
        UnsupportedFieldError: p in {2, 3}
        ConstructionFailedError: no pair generates S_4
    """
    if spec.p in (2, 3):
        raise UnsupportedFieldError("S_4 search needs p > 3")
    t = spec.tables
    half = t.inv(2 % spec.p)
    a = _map(spec, [[0, 1], [t.neg(half), 1]])
    points = projective_space(spec, 2)
    pa = _projective_permutation(points, a)
    for x, y in product(range(spec.q), repeat=2):
        z = t.sub(t.add(x, t.mul(y, half)), 1)
        w = t.sub(1, x)
        if t.sub(t.mul(x, w), t.mul(y, z)) != 1:
            continue
        b = _map(spec, [[x, y], [z, w]])
        image = try_closure([pa, _projective_permutation(points, b)], 25)
        if image is not None and image.order == 24:
            image.name = f"S4<PGL2({spec.q})"
            logger.info(f"S4 in PGL2({spec.q}) with b={b.mat.codes}")
            return GroupRecipe(
                f"S4@{spec.q}", {"q": spec.q}, [a, b], "projective closure order 24", image,
                extras={"points": points},
            )
    raise ConstructionFailedError(f"no S_4 found in PGL_2({spec.q})")


# ==================== PERMUTATION GROUP CATALOGUE ====================

@dataclass
class PermGroupData:
    """A catalogued permutation group with a validated order."""

    name: str
    degree: int
    generators: List[Permutation]
    order: int

    def group(self) -> GeneratedGroup:
        return GeneratedGroup(self.generators, order=self.order, name=self.name)


def _field_of_order(q: int) -> FieldSpec:
    factors = factorint(q)
    if len(factors) != 1:
        raise NotFoundError(f"{q} is not a prime power")
    (p, a), = factors.items()
    return field_make(p, a)


def _pgl2_generators(spec: FieldSpec, special: bool) -> List[SemilinearMap]:
    t = spec.tables
    g = t.primitive
    minus_one = t.neg(1)
    diag = [[g, 0], [0, t.inv(g)]] if special else [[g, 0], [0, 1]]
    return [
        _map(spec, diag),
        _map(spec, [[1, 1], [0, 1]]),
        _map(spec, [[0, 1], [minus_one, 0]]),
    ]


def _projective_line(q: int, special: bool, semilinear: bool = False) -> Tuple[List[Permutation], int]:
    spec = _field_of_order(q)
    gens = _pgl2_generators(spec, special)
    if semilinear and spec.a > 1:
        gens.append(SemilinearMap(Matrix.identity(spec, 2), 1))
    points = projective_space(spec, 2)
    perms = [_projective_permutation(points, g) for g in gens]
    order = q * (q * q - 1)
    if special and q % 2:
        order //= 2
    if semilinear:
        order *= spec.a
    return perms, order


def _pairs_action(alternating: bool) -> Tuple[List[Permutation], int]:
    pairs = list(combinations(range(7), 2))
    index = {pair: i for i, pair in enumerate(pairs)}
    base = [Permutation.from_cycles(7, [list(range(7))])]
    base.append(Permutation.from_cycles(7, [[0, 1, 2]] if alternating else [[0, 1]]))
    perms = [
        Permutation(tuple(index[tuple(sorted(g.on_tuple(pair)))] for pair in pairs))
        for g in base
    ]
    return perms, 2520 if alternating else 5040


def _psl28_on_28() -> Tuple[List[Permutation], int]:
    perms, order = _projective_line(8, special=True)
    big = closure(perms, name="PSL2(8)")
    _expect_order(big, order, "PSL2(8)")
    a = next(g for g in big.elements if element_order(g) == 9)
    a_inv = a.inverse()
    b = next(
        g for g in big.elements
        if element_order(g) == 2 and g.compose(a).compose(g).key() == a_inv.key()
    )
    dihedral = closure([a, b], name="D18")
    _expect_order(dihedral, 18, "dihedral subgroup of PSL2(8)")
    return coset_action(big, dihedral), order


def _agammal1_8() -> Tuple[List[Permutation], int]:
    spec = field_make(2, 3)
    t = spec.tables
    elems = range(spec.q)
    perms = [
        Permutation(tuple(t.mul(x, t.primitive) for x in elems)),
        Permutation(tuple(t.add(x, 1) for x in elems)),
        Permutation(tuple(t.frob(x, 1) for x in elems)),
    ]
    return perms, 8 * 7 * 3


def load_generator_file(path: Path) -> Tuple[int, List[Permutation]]:
    """
    Read a generator data file.

    The first non-comment line is the degree; every following line is one permutation
    as space-separated 0-based images. Lines starting with '#' are comments.

    Raises:
        DataInvalidError: missing file, malformed numbers or a line that is not a permutation
    """
    if not path.exists():
        raise DataInvalidError(f"generator file {path} not found")
    lines = [
        line.strip() for line in path.read_text().splitlines()
        if line.strip() and not line.lstrip().startswith("#")
    ]
    if not lines:
        raise DataInvalidError(f"{path.name}: empty generator file")
    try:
        degree = int(lines[0])
        rows = [[int(x) for x in line.split()] for line in lines[1:]]
    except ValueError as e:
        raise DataInvalidError(f"{path.name}: {e}") from e
    gens = []
    for n, row in enumerate(rows, start=1):
        if len(row) != degree or sorted(row) != list(range(degree)):
            raise DataInvalidError(f"{path.name}: generator {n} is not a permutation of degree {degree}")
        gens.append(Permutation(tuple(row)))
    if not gens:
        raise DataInvalidError(f"{path.name}: no generators")
    return degree, gens


MATHIEU_ORDERS = {"M11": 7920, "M12": 95040, "M22": 443520, "M23": 10200960}
# Orders above this are validated through a stabilizer chain instead of a closure
_CLOSURE_VALIDATION_LIMIT = 100_000


def _mathieu(name: str, data_dir: Path) -> Tuple[List[Permutation], int]:
    _, gens = load_generator_file(data_dir / f"{name}.txt")
    expected = MATHIEU_ORDERS[name]
    if expected <= _CLOSURE_VALIDATION_LIMIT:
        found = closure(gens, cap=expected + 1).order
    else:
        found = chain_order(gens)
    if found != expected:
        raise DataInvalidError(f"{name} generators give order {found}, expected {expected}")
    return gens, expected


def _m11_on_12(data_dir: Path) -> Tuple[List[Permutation], int]:
    gens, order = _mathieu("M11", data_dir)
    m11 = closure(gens, name="M11")
    a = gens[0]
    for b in m11.elements:
        if b.is_identity() or not b.compose(b).is_identity():
            continue
        sub = try_closure([a, b], 661)
        if sub is not None and sub.order == 660:
            sub.name = "PSL2(11)"
            return coset_action(m11, sub), order
    raise ConstructionFailedError("no PSL_2(11) found in M11")


_PROJLINE = re.compile(r"^(PSL2|PGL2)\((\d+)\)_projline$")

CATALOGUE = (
    "A7_pairs", "S7_pairs", "PSL2(q)_projline", "PGL2(q)_projline", "PGammaL2(8)_deg9",
    "PSL2(8)_deg28", "AGammaL1(8)", "M11_deg11", "M11_deg12", "M12", "M22", "M23",
)


def named_permgroup(name: str, data_dir: Optional[Path] = None) -> PermGroupData:
    """
    Look up a catalogued permutation group.

    Args:
        name: One of CATALOGUE, with q a prime power in the projective-line names
        data_dir: Directory of the Mathieu generator files

    Returns:
        PermGroupData with generators and a validated order

    Raises:
        NotFoundError: unknown name
        DataInvalidError: generator data fails validation
    """
    data_dir = data_dir or MATHIEU_DIR
    match = _PROJLINE.match(name)
    if match:
        q = int(match.group(2))
        perms, order = _projective_line(q, special=match.group(1) == "PSL2")
    elif name in ("A7_pairs", "S7_pairs"):
        perms, order = _pairs_action(name.startswith("A"))
    elif name == "PGammaL2(8)_deg9":
        perms, order = _projective_line(8, special=False, semilinear=True)
    elif name == "PSL2(8)_deg28":
        perms, order = _psl28_on_28()
    elif name == "AGammaL1(8)":
        perms, order = _agammal1_8()
    elif name == "M11_deg11":
        perms, order = _mathieu("M11", data_dir)
    elif name == "M11_deg12":
        perms, order = _m11_on_12(data_dir)
    elif name in ("M12", "M22", "M23"):
        perms, order = _mathieu(name, data_dir)
    else:
        raise NotFoundError(f"unknown permutation group {name!r}")

    if name.startswith("M"):
        group_order = order
    else:
        try:
            group_order = closure(perms, cap=order + 1).order
        except CapacityExceededError as e:
            raise ConstructionFailedError(f"{name}: closure larger than {order}") from e
        if group_order != order:
            raise ConstructionFailedError(f"{name}: order {group_order}, expected {order}")
    logger.info(f"{name}: degree {perms[0].degree}, order {group_order}")
    return PermGroupData(name=name, degree=perms[0].degree, generators=perms, order=group_order)


def divisor_scalars(spec: FieldSpec) -> List[int]:
    """Orders of all scalar subgroups of GL_2(q)."""
    return [int(d) for d in divisors(spec.q - 1)]

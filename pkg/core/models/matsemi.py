"""
Matrices and Semilinear Maps

This module provides dense square matrices over F_q, semilinear maps (matrix plus
Frobenius exponent), Kronecker products, and the right action on row vectors and on
projective points.

Conventions:
- Vectors are rows and groups act on the right.
- A semilinear map (A, i) sends v to frobenius(v, i) * A, so
  compose((A, i), (B, j)) = (frobenius(A, j) * B, i + j mod a).

Matrix entries are stored as a row-major tuple of element codes (see gfield); the
FieldElement view is available through Matrix.entries. Point sets for V^# and P_1(V)
are indexed numpy arrays that compile a map into a permutation of point indices.
"""

import logging
from dataclasses import dataclass
from typing import Iterable, List, Optional, Sequence, Tuple, Union

import numpy as np

from core.errors import (
    InconsistentActionError,
    InvalidArgumentError,
    SingularMatrixError,
)
from core.models.gfield import FieldElement, FieldSpec, FieldTables

logger = logging.getLogger("core.models.matsemi")

Scalar = Union[int, FieldElement]

# ==================== MATRICES ====================

def _code(spec: FieldSpec, value: Scalar) -> int:
    if isinstance(value, FieldElement):
        if value.spec != spec:
            raise InvalidArgumentError("matrix entry from a different field")
        return value.code
    if not 0 <= int(value) < spec.q:
        raise InvalidArgumentError(f"code {value} is not an element of {spec!r}")
    return int(value)


def _matmul_codes(t: FieldTables, n: int, a: Sequence[int], b: Sequence[int]) -> Tuple[int, ...]:
    if t.prime:
        p = t.p
        return tuple(
            sum(a[i * n + k] * b[k * n + j] for k in range(n)) % p
            for i in range(n)
            for j in range(n)
        )
    mul, add = t.mul, t.add
    out = []
    for i in range(n):
        row = a[i * n:(i + 1) * n]
        for j in range(n):
            acc = 0
            for k in range(n):
                if row[k]:
                    acc = add(acc, mul(row[k], b[k * n + j]))
            out.append(acc)
    return tuple(out)


@dataclass(frozen=True)
class Matrix:
    """An n x n matrix over F_q, entries as element codes in row-major order."""

    spec: FieldSpec
    n: int
    codes: Tuple[int, ...]

    @classmethod
    def from_rows(cls, spec: FieldSpec, rows: Sequence[Sequence[Scalar]]) -> "Matrix":
        n = len(rows)
        if n == 0 or any(len(r) != n for r in rows):
            raise InvalidArgumentError("matrix must be square and nonempty")
        return cls(spec, n, tuple(_code(spec, x) for r in rows for x in r))

    @classmethod
    def identity(cls, spec: FieldSpec, n: int) -> "Matrix":
        return cls.scalar(spec, n, 1)

    @classmethod
    def scalar(cls, spec: FieldSpec, n: int, value: Scalar) -> "Matrix":
        c = _code(spec, value)
        return cls(spec, n, tuple(c if i == j else 0 for i in range(n) for j in range(n)))

    @classmethod
    def diagonal(cls, spec: FieldSpec, values: Sequence[Scalar]) -> "Matrix":
        n = len(values)
        codes = [0] * (n * n)
        for i, v in enumerate(values):
            codes[i * n + i] = _code(spec, v)
        return cls(spec, n, tuple(codes))

    @property
    def tables(self) -> FieldTables:
        return self.spec.tables

    @property
    def entries(self) -> List[List[FieldElement]]:
        return [[self.spec.element(self.codes[i * self.n + j]) for j in range(self.n)] for i in range(self.n)]

    def array(self) -> np.ndarray:
        return np.array(self.codes, dtype=np.int64).reshape(self.n, self.n)

    def row(self, i: int) -> Tuple[int, ...]:
        return self.codes[i * self.n:(i + 1) * self.n]

    def _check(self, other: "Matrix") -> None:
        if not isinstance(other, Matrix) or other.spec != self.spec or other.n != self.n:
            raise InvalidArgumentError("matrix dimension or field mismatch")

    def __matmul__(self, other: "Matrix") -> "Matrix":
        self._check(other)
        return Matrix(self.spec, self.n, _matmul_codes(self.tables, self.n, self.codes, other.codes))

    def scale(self, value: Scalar) -> "Matrix":
        c = _code(self.spec, value)
        t = self.tables
        return Matrix(self.spec, self.n, tuple(t.mul(c, x) for x in self.codes))

    def frobenius(self, i: int) -> "Matrix":
        i %= self.spec.a
        if i == 0:
            return self
        frob = self.tables.frob_lists[i]
        return Matrix(self.spec, self.n, tuple(frob[x] for x in self.codes))

    def trace(self) -> int:
        t = self.tables
        acc = 0
        for i in range(self.n):
            acc = t.add(acc, self.codes[i * self.n + i])
        return acc

    def is_identity(self) -> bool:
        n = self.n
        return all(c == (1 if i // n == i % n else 0) for i, c in enumerate(self.codes))

    def __repr__(self) -> str:
        rows = ["[" + " ".join(str(c) for c in self.row(i)) + "]" for i in range(self.n)]
        return f"Matrix({self.spec!r}, {' '.join(rows)})"


def matmul(a: Matrix, b: Matrix) -> Matrix:
    return a @ b


def transpose(a: Matrix) -> Matrix:
    n = a.n
    return Matrix(a.spec, n, tuple(a.codes[j * n + i] for i in range(n) for j in range(n)))


def _row_reduce(spec: FieldSpec, rows: List[List[int]], ncols: int) -> Tuple[List[List[int]], List[int]]:
    """Reduced row echelon form over F_q; returns (rows, pivot columns)."""
    t = spec.tables
    rows = [list(r) for r in rows]
    pivots: List[int] = []
    r = 0
    for col in range(ncols):
        pivot = next((i for i in range(r, len(rows)) if rows[i][col]), None)
        if pivot is None:
            continue
        rows[r], rows[pivot] = rows[pivot], rows[r]
        inv_lead = t.inv(rows[r][col])
        rows[r] = [t.mul(inv_lead, x) for x in rows[r]]
        for i in range(len(rows)):
            if i != r and rows[i][col]:
                factor = rows[i][col]
                rows[i] = [t.sub(x, t.mul(factor, y)) for x, y in zip(rows[i], rows[r])]
        pivots.append(col)
        r += 1
        if r == len(rows):
            break
    return rows, pivots


def det(a: Matrix) -> FieldElement:
    """Determinant by Gaussian elimination."""
    t = a.tables
    n = a.n
    rows = [list(a.row(i)) for i in range(n)]
    result = 1
    for col in range(n):
        pivot = next((i for i in range(col, n) if rows[i][col]), None)
        if pivot is None:
            return a.spec.zero
        if pivot != col:
            rows[col], rows[pivot] = rows[pivot], rows[col]
            result = t.neg(result)
        lead = rows[col][col]
        result = t.mul(result, lead)
        inv_lead = t.inv(lead)
        for i in range(col + 1, n):
            if rows[i][col]:
                factor = t.mul(rows[i][col], inv_lead)
                rows[i] = [t.sub(x, t.mul(factor, y)) for x, y in zip(rows[i], rows[col])]
    return a.spec.element(result)


def inverse(a: Matrix) -> Matrix:
    """
    Matrix inverse by Gauss-Jordan elimination.

    Raises:
        SingularMatrixError: det(a) = 0
    """
    n = a.n
    augmented = [list(a.row(i)) + [1 if j == i else 0 for j in range(n)] for i in range(n)]
    rows, pivots = _row_reduce(a.spec, augmented, n)
    if pivots != list(range(n)):
        raise SingularMatrixError(f"singular {n}x{n} matrix over {a.spec!r}")
    return Matrix(a.spec, n, tuple(x for r in rows for x in r[n:]))


def nullspace(spec: FieldSpec, rows: Sequence[Sequence[int]], ncols: int) -> List[Tuple[int, ...]]:
    """
    Basis of the solutions x of rows * x = 0 over F_q.

    Args:
        spec: Field of the coefficients
        rows: Coefficient rows as element codes
        ncols: Number of unknowns

    Returns:
        Basis vectors (element codes), one per free column, in column order
    """
    t = spec.tables
    if not rows:
        return [tuple(1 if j == i else 0 for j in range(ncols)) for i in range(ncols)]
    reduced, pivots = _row_reduce(spec, [list(r) for r in rows], ncols)
    basis = []
    for free in (c for c in range(ncols) if c not in pivots):
        vec = [0] * ncols
        vec[free] = 1
        for r, pc in enumerate(pivots):
            vec[pc] = t.neg(reduced[r][free])
        basis.append(tuple(vec))
    return basis


def tensor(a: Matrix, b: Matrix) -> Matrix:
    """Kronecker product, basis order (u1w1, u1w2, u2w1, u2w2) for 2 x 2 factors."""
    if a.spec != b.spec:
        raise InvalidArgumentError("tensor factors over different fields")
    if a.n != 2 or b.n != 2:
        raise InvalidArgumentError("tensor expects 2 x 2 factors")
    t = a.tables
    n, m = a.n, b.n
    size = n * m
    codes = [0] * (size * size)
    for i in range(n):
        for j in range(n):
            x = a.codes[i * n + j]
            for k in range(m):
                for l in range(m):
                    codes[(i * m + k) * size + (j * m + l)] = t.mul(x, b.codes[k * m + l])
    return Matrix(a.spec, size, tuple(codes))


# ==================== SEMILINEAR MAPS ====================

@dataclass(frozen=True)
class SemilinearMap:
    """
    An element (A, i) of GammaL_n(q): v -> frobenius(v, i) * A.

    Use SemilinearMap.make for validated construction; compose and inverse keep
    the invariants by construction.
    """

    mat: Matrix
    frob: int = 0

    @classmethod
    def make(cls, mat: Matrix, frob: int = 0) -> "SemilinearMap":
        if det(mat).is_zero():
            raise SingularMatrixError("semilinear map needs an invertible matrix")
        return cls(mat, frob % mat.spec.a)

    @classmethod
    def linear(cls, spec: FieldSpec, rows: Sequence[Sequence[Scalar]]) -> "SemilinearMap":
        return cls.make(Matrix.from_rows(spec, rows), 0)

    @property
    def spec(self) -> FieldSpec:
        return self.mat.spec

    @property
    def n(self) -> int:
        return self.mat.n

    def compose(self, other: "SemilinearMap") -> "SemilinearMap":
        """self then other: v * compose(g, h) = (v * g) * h."""
        if other.mat.spec != self.mat.spec or other.mat.n != self.mat.n:
            raise InvalidArgumentError("semilinear maps over different spaces")
        a = self.mat.codes
        if other.frob:
            frob = self.mat.tables.frob_lists[other.frob]
            a = tuple(frob[x] for x in a)
        codes = _matmul_codes(self.mat.tables, self.mat.n, a, other.mat.codes)
        return SemilinearMap(Matrix(self.mat.spec, self.mat.n, codes), (self.frob + other.frob) % self.mat.spec.a)

    def __mul__(self, other: "SemilinearMap") -> "SemilinearMap":
        return self.compose(other)

    def inverse(self) -> "SemilinearMap":
        a = self.mat.spec.a
        back = (a - self.frob) % a
        return SemilinearMap(inverse(self.mat).frobenius(back), back)

    def identity(self) -> "SemilinearMap":
        return SemilinearMap(Matrix.identity(self.mat.spec, self.mat.n), 0)

    def is_identity(self) -> bool:
        return self.frob == 0 and self.mat.is_identity()

    def key(self) -> Tuple[int, ...]:
        return self.mat.codes + (self.frob,)

    def is_linear(self) -> bool:
        return self.frob == 0


def identity_map(spec: FieldSpec, n: int) -> SemilinearMap:
    return SemilinearMap(Matrix.identity(spec, n), 0)


def compose(g: SemilinearMap, h: SemilinearMap) -> SemilinearMap:
    return g.compose(h)


# ==================== VECTORS AND PROJECTIVE POINTS ====================

@dataclass(frozen=True)
class VectorPoint:
    """A row vector of element codes."""

    spec: FieldSpec
    coords: Tuple[int, ...]

    @classmethod
    def of(cls, spec: FieldSpec, values: Iterable[Scalar]) -> "VectorPoint":
        return cls(spec, tuple(_code(spec, v) for v in values))

    @property
    def n(self) -> int:
        return len(self.coords)

    def is_zero(self) -> bool:
        return not any(self.coords)

    def key(self) -> int:
        """Lexicographic key: sum(code_j * q^(n-1-j))."""
        k = 0
        for c in self.coords:
            k = k * self.spec.q + c
        return k


@dataclass(frozen=True)
class ProjectivePoint:
    """A 1-space, stored as the representative whose first nonzero coordinate is 1."""

    spec: FieldSpec
    coords: Tuple[int, ...]

    @classmethod
    def of(cls, v: VectorPoint) -> "ProjectivePoint":
        return cls(v.spec, normalize(v).coords)

    def vector(self) -> VectorPoint:
        return VectorPoint(self.spec, self.coords)


def normalize(v: VectorPoint) -> VectorPoint:
    """Scale v so its first nonzero coordinate is 1."""
    if v.is_zero():
        raise InvalidArgumentError("the zero vector spans no 1-space")
    t = v.spec.tables
    lead = next(c for c in v.coords if c)
    if lead == 1:
        return v
    inv_lead = t.inv(lead)
    return VectorPoint(v.spec, tuple(t.mul(inv_lead, c) for c in v.coords))


def apply(g: SemilinearMap, v: VectorPoint) -> VectorPoint:
    """Right action v * (A, i) = frobenius(v, i) * A."""
    if v.n != g.n or v.spec != g.spec:
        raise InvalidArgumentError("vector and map live in different spaces")
    t = g.mat.tables
    coords = v.coords
    if g.frob:
        coords = tuple(t.frob(c, g.frob) for c in coords)
    n = g.n
    out = []
    a = g.mat.codes
    for j in range(n):
        acc = 0
        for k in range(n):
            if coords[k]:
                acc = t.add(acc, t.mul(coords[k], a[k * n + j]))
        out.append(acc)
    return VectorPoint(v.spec, tuple(out))


def apply_proj(g: SemilinearMap, point: ProjectivePoint) -> ProjectivePoint:
    """Induced action on 1-spaces."""
    return ProjectivePoint.of(apply(g, point.vector()))


def tensor_vec(u: VectorPoint, w: VectorPoint) -> VectorPoint:
    """u tensor w with basis order (u1w1, u1w2, u2w1, u2w2)."""
    if u.spec != w.spec:
        raise InvalidArgumentError("tensor factors over different fields")
    if u.n != 2 or w.n != 2:
        raise InvalidArgumentError("tensor_vec expects vectors of length 2")
    t = u.spec.tables
    return VectorPoint(u.spec, tuple(t.mul(x, y) for x in u.coords for y in w.coords))


# ==================== INDEXED POINT SETS ====================

class CodePointSet:
    """
    An indexed set of row vectors over F_q.

    Points are stored as an (N, n) array of element codes sorted by lexicographic key;
    compile() turns a semilinear map into the permutation of point indices it induces.
    """

    projective = False

    def __init__(self, spec: FieldSpec, n: int, coords: np.ndarray):
        self.spec = spec
        self.n = n
        self.tables = spec.tables
        self.weights = np.array([spec.q ** (n - 1 - j) for j in range(n)], dtype=np.int64)
        keys = coords @ self.weights
        order = np.argsort(keys, kind="stable")
        self.coords = coords[order]
        self.keys = keys[order]
        if len(self.keys) > 1 and np.any(np.diff(self.keys) == 0):
            raise InvalidArgumentError("point set contains repeated vectors")

    @property
    def size(self) -> int:
        return len(self.keys)

    def __len__(self) -> int:
        return self.size

    def label(self, index: int) -> Tuple[int, ...]:
        return tuple(int(c) for c in self.coords[index])

    def index_of(self, point: Union[VectorPoint, ProjectivePoint, Sequence[int]]) -> int:
        coords = np.array([point.coords if hasattr(point, "coords") else point], dtype=np.int64)
        if self.projective:
            coords = self._normalize(coords)
        return int(self._lookup(coords @ self.weights)[0])

    def _lookup(self, keys: np.ndarray) -> np.ndarray:
        pos = np.searchsorted(self.keys, keys)
        clipped = np.minimum(pos, self.size - 1)
        if np.any(self.keys[clipped] != keys):
            raise InconsistentActionError("image vector lies outside the point set")
        return clipped

    def _normalize(self, coords: np.ndarray) -> np.ndarray:
        t = self.tables
        nonzero = coords != 0
        if not np.all(nonzero.any(axis=1)):
            raise InconsistentActionError("zero vector has no projective image")
        first = nonzero.argmax(axis=1)
        lead = coords[np.arange(len(coords)), first]
        inv_lead = t.inv_np(lead)
        return t.mul_np(coords, inv_lead[:, None])

    def image_coords(self, g: SemilinearMap) -> np.ndarray:
        """Coordinates of every point after applying g."""
        if g.n != self.n or g.spec != self.spec:
            raise InvalidArgumentError("map and point set live in different spaces")
        t = self.tables
        coords = t.frob_np(self.coords, g.frob) if g.frob else self.coords
        a = g.mat.array()
        if t.prime:
            return (coords @ a) % t.p
        out = np.zeros_like(coords)
        for j in range(self.n):
            acc = np.zeros(len(coords), dtype=np.int64)
            for k in range(self.n):
                if a[k, j]:
                    acc = t.add_np(acc, t.mul_np(coords[:, k], a[k, j]))
            out[:, j] = acc
        return out

    def compile(self, g: SemilinearMap) -> np.ndarray:
        """Permutation of point indices induced by g."""
        coords = self.image_coords(g)
        if self.projective:
            coords = self._normalize(coords)
        return self._lookup(coords @ self.weights)


class ProjectivePointSet(CodePointSet):
    """Normalized representatives of 1-spaces, indexed in key order."""

    projective = True


def _all_vectors(spec: FieldSpec, n: int) -> np.ndarray:
    keys = np.arange(1, spec.q ** n, dtype=np.int64)
    coords = np.empty((len(keys), n), dtype=np.int64)
    for j in range(n):
        coords[:, j] = (keys // spec.q ** (n - 1 - j)) % spec.q
    return coords


def vector_space(spec: FieldSpec, n: int) -> CodePointSet:
    """V^# = nonzero vectors of F_q^n in lexicographic order; index = key - 1."""
    points = CodePointSet(spec, n, _all_vectors(spec, n))
    assert points.size == spec.q ** n - 1
    return points


def projective_space(spec: FieldSpec, n: int) -> ProjectivePointSet:
    """P_1(V) as normalized representatives in lexicographic order."""
    coords = _all_vectors(spec, n)
    nonzero = coords != 0
    first = nonzero.argmax(axis=1)
    normalized = coords[np.arange(len(coords)), first] == 1
    points = ProjectivePointSet(spec, n, coords[normalized])
    assert points.size == (spec.q ** n - 1) // (spec.q - 1)
    return points


def vector_subset(spec: FieldSpec, vectors: Iterable[Sequence[int]]) -> CodePointSet:
    """An arbitrary set of stored nonzero vectors, e.g. an invariant subspace."""
    coords = np.array([list(v) for v in vectors], dtype=np.int64)
    if coords.ndim != 2 or len(coords) == 0:
        raise InvalidArgumentError("vector_subset needs a nonempty list of equal-length vectors")
    return CodePointSet(spec, coords.shape[1], coords)

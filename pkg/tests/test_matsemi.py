import numpy as np
import pytest
from hypothesis import assume, given, settings
from hypothesis import strategies as st

from core.errors import InconsistentActionError, InvalidArgumentError, SingularMatrixError
from core.models.gfield import field_make
from core.models.matsemi import (
    Matrix,
    ProjectivePoint,
    SemilinearMap,
    VectorPoint,
    apply,
    apply_proj,
    det,
    inverse,
    normalize,
    nullspace,
    projective_space,
    tensor,
    tensor_vec,
    transpose,
    vector_space,
    vector_subset,
)

F9 = field_make(3, 2)
F11 = field_make(11)


@st.composite
def semilinear_maps(draw, spec=F9):
    codes = draw(st.lists(st.integers(0, spec.q - 1), min_size=4, max_size=4))
    mat = Matrix(spec, 2, tuple(codes))
    assume(not det(mat).is_zero())
    return SemilinearMap(mat, draw(st.integers(0, spec.a - 1)))


vectors = st.lists(st.integers(0, F9.q - 1), min_size=2, max_size=2).map(lambda c: VectorPoint.of(F9, c))


def test_det_and_inverse(f7):
    m = Matrix.from_rows(f7, [[1, 2], [3, 4]])
    assert det(m).code == 5
    assert (m @ inverse(m)).is_identity()
    assert (inverse(m) @ m).is_identity()


def test_singular_matrix(f7):
    m = Matrix.from_rows(f7, [[1, 2], [2, 4]])
    assert det(m).is_zero()
    with pytest.raises(SingularMatrixError):
        inverse(m)
    with pytest.raises(SingularMatrixError):
        SemilinearMap.make(m)


def test_matrix_validation(f7):
    with pytest.raises(InvalidArgumentError):
        Matrix.from_rows(f7, [[1, 2, 3], [4, 5, 6]])
    with pytest.raises(InvalidArgumentError):
        Matrix.from_rows(f7, [[1, 7], [0, 1]])
    with pytest.raises(InvalidArgumentError):
        Matrix.identity(f7, 2) @ Matrix.identity(f7, 3)


def test_transpose_and_trace(f7):
    m = Matrix.from_rows(f7, [[1, 2], [3, 4]])
    assert transpose(m).codes == (1, 3, 2, 4)
    assert m.trace() == 5


def test_tensor_layout(f7):
    a = Matrix.from_rows(f7, [[1, 2], [3, 4]])
    i2 = Matrix.identity(f7, 2)
    assert tensor(i2, i2).is_identity()
    assert tensor(a, i2).row(0) == (1, 0, 2, 0)
    assert tensor(i2, a).row(1) == (3, 4, 0, 0)
    with pytest.raises(InvalidArgumentError):
        tensor(Matrix.identity(f7, 3), i2)


@settings(max_examples=100, deadline=None)
@given(semilinear_maps(), semilinear_maps(), vectors)
def test_right_action_convention(g, h, v):
    assert apply(g.compose(h), v) == apply(h, apply(g, v))


@settings(max_examples=100, deadline=None)
@given(semilinear_maps(), semilinear_maps(), semilinear_maps())
def test_composition_is_associative(g, h, k):
    assert g.compose(h).compose(k) == g.compose(h.compose(k))


@settings(max_examples=100, deadline=None)
@given(semilinear_maps())
def test_semilinear_inverse(g):
    assert g.compose(g.inverse()).is_identity()
    assert g.inverse().compose(g).is_identity()


@settings(max_examples=50, deadline=None)
@given(semilinear_maps(F11), semilinear_maps(F11))
def test_tensor_is_multiplicative(g, h):
    left = tensor(g.mat, h.mat) @ tensor(h.mat, g.mat)
    right = tensor(g.mat @ h.mat, h.mat @ g.mat)
    assert left == right


def test_tensor_vector_action(f11):
    a = Matrix.from_rows(f11, [[2, 3], [1, 5]])
    b = Matrix.from_rows(f11, [[0, 1], [10, 4]])
    u, w = VectorPoint.of(f11, [1, 7]), VectorPoint.of(f11, [3, 2])
    lhs = apply(SemilinearMap(tensor(a, b)), tensor_vec(u, w))
    rhs = tensor_vec(apply(SemilinearMap(a), u), apply(SemilinearMap(b), w))
    assert lhs == rhs


def test_normalize_and_projective_points():
    f5 = field_make(5)
    assert normalize(VectorPoint.of(f5, [0, 3])).coords == (0, 1)
    assert normalize(VectorPoint.of(f5, [2, 4])).coords == (1, 2)
    with pytest.raises(InvalidArgumentError):
        normalize(VectorPoint.of(f5, [0, 0]))
    swap = SemilinearMap.linear(f5, [[0, 1], [1, 0]])
    point = ProjectivePoint.of(VectorPoint.of(f5, [2, 4]))
    assert apply_proj(swap, point).coords == (1, 3)


def test_vector_space_indexing():
    f3 = field_make(3)
    points = vector_space(f3, 2)
    assert points.size == 8
    assert points.label(0) == (0, 1)
    assert points.index_of([0, 1]) == 0
    assert points.index_of(VectorPoint.of(f3, [2, 2])) == 7


def test_projective_space_indexing():
    f5 = field_make(5)
    points = projective_space(f5, 2)
    assert points.size == 6
    assert [points.label(i) for i in range(3)] == [(0, 1), (1, 0), (1, 1)]
    assert points.index_of([2, 4]) == 3
    assert projective_space(F9, 2).size == 10


def test_compile_is_a_permutation(f11):
    g = SemilinearMap.linear(f11, [[2, 3], [1, 5]])
    for points in (vector_space(f11, 2), projective_space(f11, 2)):
        perm = points.compile(g)
        assert sorted(perm.tolist()) == list(range(points.size))


def test_compile_semilinear_matches_apply(f49):
    g = SemilinearMap.make(Matrix.from_rows(f49, [[1, 8], [0, 1]]), 1)
    points = vector_space(f49, 2)
    perm = points.compile(g)
    for i in (0, 5, 100, 2399):
        image = apply(g, VectorPoint(f49, points.label(i)))
        assert perm[i] == points.index_of(image)


def test_subset_must_be_invariant(f7):
    axis = vector_subset(f7, [[x, 0] for x in range(1, 7)])
    assert axis.compile(SemilinearMap.linear(f7, [[3, 0], [0, 1]])).tolist() == [2, 5, 1, 4, 0, 3]
    with pytest.raises(InconsistentActionError):
        axis.compile(SemilinearMap.linear(f7, [[0, 1], [1, 0]]))


def test_nullspace(f7):
    assert nullspace(f7, [[1, 1]], 2) == [(6, 1)]
    assert nullspace(f7, [], 2) == [(1, 0), (0, 1)]
    assert nullspace(f7, [[1, 0], [0, 1]], 2) == []

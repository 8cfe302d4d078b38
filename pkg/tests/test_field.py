import pytest

from unisingular.errors import CapExceeded, SingularMatrix
from unisingular.field import (
    FieldSpec,
    FMatrix,
    Functional,
    FVector,
    Subspace,
    canonical_row,
    has_eig1,
    hyperplanes,
    index_vec,
    kernel,
    rref,
    row_index,
    vec_index,
)


def test_field_spec_caps():
    FieldSpec(3, 5)
    with pytest.raises(CapExceeded):
        FieldSpec(3, 25)
    with pytest.raises(ValueError):
        FieldSpec(4, 2)


def test_matrix_arithmetic_mod3():
    spec = FieldSpec(3, 2)
    a = FMatrix(spec, [[1, 2], [0, 1]])
    b = FMatrix(spec, [[2, 0], [1, 1]])
    assert (a @ b).rows == ((1, 2), (1, 1))
    assert (a + b).rows == ((0, 2), (1, 2))
    assert a.inverse() @ a == FMatrix.identity(spec)
    assert a.det() == 1
    assert a.pow(3) == FMatrix.identity(spec)


def test_singular_inverse_raises():
    spec = FieldSpec(3, 2)
    m = FMatrix(spec, [[1, 2], [2, 1]])
    assert m.det() == 0
    with pytest.raises(SingularMatrix):
        m.inverse()


def test_rref_and_kernel():
    spec = FieldSpec(3, 3)
    m = FMatrix(spec, [[1, 2, 0], [0, 1, 1], [1, 0, 1]])
    reduced, rank, pivots = rref(m)
    assert reduced.rows[0][0] == 1
    assert rank == 2 and pivots == [0, 1]
    ker = kernel(m)
    assert ker.dim == 1
    for row in ker.basis:
        img = m.matvec(FVector(spec, row))
        assert img.is_zero()


def test_subspace_contains_and_vectors():
    spec = FieldSpec(3, 3)
    sub = Subspace(spec, [(1, 0, 2), (0, 1, 1)])
    assert sub.dim == 2
    vecs = list(sub.vectors())
    assert len(vecs) == 9
    for v in vecs:
        assert sub.contains(v)
    assert not sub.contains((0, 0, 1))


def test_has_eig1():
    spec = FieldSpec(3, 2)
    assert has_eig1(FMatrix.identity(spec))
    # order-2 scalar -I has eigenvalues -1 only
    assert not has_eig1(FMatrix(spec, [[2, 0], [0, 2]]))
    with pytest.raises(SingularMatrix):
        has_eig1(FMatrix(spec, [[0, 0], [0, 0]]))


def test_canonical_row_leading_one():
    assert canonical_row((0, 2, 1), 3) == (0, 1, 2)
    assert canonical_row((2, 2, 2), 3) == (1, 1, 1)
    with pytest.raises(ValueError):
        canonical_row((0, 0, 0), 3)


def test_index_round_trip():
    spec = FieldSpec(3, 4)
    for i in (0, 1, 17, 80):
        v = index_vec(spec, i)
        assert vec_index(v) == i
    assert row_index((1, 2, 0), 3) == 1 + 2 * 3


def test_hyperplane_enumeration():
    spec = FieldSpec(3, 3)
    hps = list(hyperplanes(spec))
    # one canonical functional per hyperplane
    assert len(hps) == (3**3 - 1) // 2
    indices = [phi.index() for phi in hps]
    assert indices == sorted(indices)
    assert all(isinstance(phi, Functional) for phi in hps)
    # every nonzero vector lies on some hyperplane
    ker_union = set()
    for phi in hps:
        ker_union.update(tuple(v) for v in phi.kernel().vectors())
    assert len(ker_union) == 3**3


def test_functional_kernel_dim():
    spec = FieldSpec(5, 3)
    phi = Functional(spec, (1, 0, 4))
    assert phi.kernel().dim == 2
    assert phi((0, 1, 0)) == 0
    assert phi((1, 0, 0)) == 1

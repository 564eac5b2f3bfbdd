import pytest
from hypothesis import given, settings, strategies as st

from toritrans.errors import DegenerateInput
from toritrans.lattice import (
    adjugate,
    complete_to_basis,
    det,
    extends_to_basis,
    hermite_normal_form,
    identity,
    integer_kernel,
    matmul,
    primitive_part,
    rank,
    saturation_basis,
    smith_normal_form,
)

small = st.integers(-6, 6)


def matrices(max_rows=4, max_cols=4):
    return st.integers(1, max_cols).flatmap(
        lambda n: st.lists(st.lists(small, min_size=n, max_size=n), min_size=1, max_size=max_rows)
    )


@pytest.mark.parametrize(
    "v, expected",
    [((2, 4), (1, 2)), ((3, -6, 9), (1, -2, 3)), ((0, -5), (0, -1)), ((7,), (1,))],
)
def test_primitive_part(v, expected):
    assert primitive_part(v) == expected


def test_primitive_part_rejects_zero():
    with pytest.raises(DegenerateInput):
        primitive_part((0, 0))


@pytest.mark.parametrize(
    "A, diag",
    [(identity(2), (1, 1)), (((1, 0), (1, 2)), (1, 2)), (((2,),), (2,)), (((2, 4), (6, 8)), (2, 4))],
)
def test_smith_examples(A, diag):
    snf = smith_normal_form(A)
    assert snf.diagonal == diag
    assert matmul(matmul(snf.U, A), snf.V) == snf.D


@settings(max_examples=150, deadline=None)
@given(matrices())
def test_smith_decomposition_is_exact(A):
    snf = smith_normal_form(A)
    assert matmul(matmul(snf.U, A), snf.V) == snf.D
    assert abs(det(snf.U)) == 1 and abs(det(snf.V)) == 1
    assert matmul(snf.U, snf.U_inv) == identity(len(A))
    assert matmul(snf.V, snf.V_inv) == identity(len(A[0]))
    d = [x for x in snf.diagonal if x]
    assert list(snf.diagonal) == d + [0] * (len(snf.diagonal) - len(d))
    assert all(x > 0 for x in d)
    assert all(d[i + 1] % d[i] == 0 for i in range(len(d) - 1))
    assert len(d) == snf.rank == rank(A)
    for i, row in enumerate(snf.D):
        for j, x in enumerate(row):
            assert x == 0 or i == j


@given(st.lists(small, min_size=1, max_size=5).filter(any))
def test_primitive_part_idempotent(v):
    p = primitive_part(v)
    assert primitive_part(p) == p
    assert extends_to_basis([v], len(v)) == (tuple(v) == p)


@pytest.mark.parametrize(
    "vectors, n, expected",
    [([(1, 0)], 2, ((1, 0),)), ([(1, 1), (-1, 1)], 2, ((1, 0), (0, 1))), ([], 2, ())],
)
def test_saturation_basis(vectors, n, expected):
    assert saturation_basis(vectors, n) == expected


@settings(max_examples=100, deadline=None)
@given(matrices())
def test_saturation_is_saturated(A):
    n = len(A[0])
    S = saturation_basis(A, n)
    assert saturation_basis(S, n) == S
    assert len(S) == rank(A)
    if S:
        assert extends_to_basis(S, n)


@pytest.mark.parametrize(
    "vectors, expected",
    [([(1, 0), (1, 1)], True), ([(1, 0), (1, 2)], False), ([(2, 4)], False), ([(1, 2), (2, 4)], False)],
)
def test_extends_to_basis(vectors, expected):
    assert extends_to_basis(vectors, 2) is expected


@settings(max_examples=100, deadline=None)
@given(matrices())
def test_integer_kernel(A):
    n = len(A[0])
    K = integer_kernel(A, n)
    assert len(K) == n - rank(A)
    for k in K:
        assert all(sum(a * b for a, b in zip(row, k)) == 0 for row in A)
    if K:
        assert extends_to_basis(K, n)


@settings(max_examples=100, deadline=None)
@given(st.integers(1, 4).flatmap(lambda n: st.lists(st.lists(small, min_size=n, max_size=n), min_size=n, max_size=n)))
def test_adjugate_identity(A):
    n = len(A)
    d = det(A)
    assert matmul(adjugate(A), A) == tuple(tuple(d * x for x in row) for row in identity(n))


def test_hermite_form_is_canonical():
    assert hermite_normal_form([(2, 4), (1, 1)]) == hermite_normal_form([(1, 1), (0, 2)])
    assert hermite_normal_form([(0, 0), (3, 6)]) == ((3, 6),)


@given(st.lists(small, min_size=1, max_size=4).filter(any).map(lambda v: primitive_part(v)))
def test_complete_to_basis(v):
    M = complete_to_basis(v)
    assert M[0] == v and abs(det(M)) == 1

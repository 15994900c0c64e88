import numpy as np
import pytest
from hypothesis import given, settings, strategies as st
from hypothesis.extra.numpy import array_shapes, arrays

from qmds.errors import (
    DescentRangeError,
    RankDeficitError,
    RowEquivalenceError,
    SubsetBoundError,
    ZeroEntryError,
)
from qmds.gf import build_field
from qmds.linalg import (
    ExactMatrix,
    any_r_columns_independent,
    apply,
    entrywise_frobenius,
    frobenius_descent_solve,
    full_column_rank,
    matmul,
    nullspace,
    paired_descent_solve,
    rank,
    rref,
)


def lemma42_matrix(ctx, alpha, a_start, num_rows, r):
    ell = np.arange(1, r + 1)
    rows = [[1] * (r + 1)]
    for j in range(num_rows):
        rows.append([0] + ctx.power(alpha, ell * (a_start + j)).tolist())
    return ExactMatrix.from_rows(ctx, rows)


def test_rref_examples(gf4):
    identity = ExactMatrix.identity(gf4, 3)
    reduced, pivots = rref(identity)
    assert reduced == identity
    assert pivots == [0, 1, 2]

    zero = ExactMatrix.from_rows(gf4, [[0, 0], [0, 0]])
    reduced, pivots = rref(zero)
    assert reduced.is_zero()
    assert pivots == []

    reduced, pivots = rref(ExactMatrix.from_rows(gf4, [[1, 1], [1, 1]]))
    assert reduced.entries.tolist() == [[1, 1], [0, 0]]
    assert pivots == [0]


def test_nullspace_examples(gf9, gf25, subfield_solutions):
    assert nullspace(ExactMatrix.identity(gf9, 4)) == []

    (basis,) = nullspace(ExactMatrix.from_rows(gf9, [[1, 1]]))
    assert basis.tolist() == [gf9.minus_one, 1]

    xs = [1, gf25.from_int(2)]
    A = ExactMatrix.from_rows(gf25, [[1, 1, 1], [0] + xs])
    (basis,) = nullspace(A)
    scaled = gf25.div(basis, basis[0])
    assert scaled.tolist() == [1, gf25.from_int(3), 1]
    assert subfield_solutions(A) >= {tuple(scaled.tolist())}


def test_entrywise_frobenius(gf9):
    M = ExactMatrix.from_rows(gf9, [[2, 5], [0, 3]])
    assert entrywise_frobenius(entrywise_frobenius(M)) == M
    assert entrywise_frobenius(ExactMatrix.from_rows(gf9, [[2]])).entries.tolist() == [[int(gf9.power(2, 3))]]
    subfield = ExactMatrix.from_rows(gf9, [[1, gf9.from_int(2)], [0, 1]])
    assert entrywise_frobenius(subfield) == subfield


def test_matmul_against_identity(gf16):
    M = ExactMatrix.from_rows(gf16, [[1, 7, 0], [3, 3, 15]])
    assert matmul(M, ExactMatrix.identity(gf16, 3)) == M
    assert matmul(ExactMatrix.identity(gf16, 2), M) == M
    assert apply(M, [0, 0, 0]).tolist() == [0, 0]


def test_any_r_columns_independent(gf16):
    assert any_r_columns_independent(ExactMatrix.identity(gf16, 4), 4)
    repeated = ExactMatrix.from_rows(gf16, [[1, 1, 2], [5, 5, 9]])
    assert not any_r_columns_independent(repeated, 2)
    assert any_r_columns_independent(repeated, 1)

    # q = 4, s = 2, t = 1: alpha = omega^3, rows mu = 2, 3
    A = lemma42_matrix(gf16, gf16.omega_power(3), 2, 2, 3)
    assert A.shape == (3, 4)
    assert any_r_columns_independent(A, 3)


def test_any_r_columns_independent_bound(gf4):
    wide = ExactMatrix(gf4, np.ones((1, 30), dtype=np.int64))
    with pytest.raises(SubsetBoundError):
        any_r_columns_independent(wide, 15)
    with pytest.raises(ValueError):
        any_r_columns_independent(wide, 31)


def test_descent_examples(gf9, gf25, gf16, subfield_solutions):
    u = frobenius_descent_solve(ExactMatrix.from_rows(gf9, [[1, 1]]))
    assert u.tolist() == [1, gf9.from_int(2)]

    A = ExactMatrix.from_rows(gf25, [[1, 1, 1], [0, 1, gf25.from_int(2)]])
    u = frobenius_descent_solve(A)
    assert u.tolist() == [1, gf25.from_int(3), 1]
    assert tuple(u.tolist()) in subfield_solutions(A)

    A = lemma42_matrix(gf16, gf16.omega_power(3), 2, 2, 3)
    u = frobenius_descent_solve(A)
    assert np.all(u != 0)
    assert gf16.in_base_subfield(u).all()
    assert not apply(A, u).any()
    assert tuple(u.tolist()) in subfield_solutions(A)


def test_descent_precondition_errors(gf9):
    with pytest.raises(RankDeficitError):
        frobenius_descent_solve(ExactMatrix.from_rows(gf9, [[1, 1, 1], [1, 1, 1]]))
    with pytest.raises(RowEquivalenceError):
        frobenius_descent_solve(ExactMatrix.from_rows(gf9, [[1, 2]]))
    with pytest.raises(ZeroEntryError):
        frobenius_descent_solve(ExactMatrix.from_rows(gf9, [[1, 0]]))


def test_paired_descent(gf25, gf9, subfield_solutions):
    M = ExactMatrix.from_rows(gf25, [[1, 1, 1]])
    x = paired_descent_solve(M)
    assert np.all(x != 0)
    assert gf25.in_base_subfield(x).all()
    assert tuple(x.tolist()) in subfield_solutions(M)

    with pytest.raises(DescentRangeError):
        paired_descent_solve(ExactMatrix.from_rows(gf9, [[1, 1, 1, 1], [0, 1, 2, 1]]))
    with pytest.raises(DescentRangeError):
        paired_descent_solve(ExactMatrix.from_rows(gf9, [[1, 1]]))


matrices_gf9 = arrays(np.int64, array_shapes(min_dims=2, max_dims=2, min_side=1, max_side=5), elements=st.integers(0, 8))


@settings(max_examples=100, deadline=None)
@given(matrices_gf9)
def test_rref_properties(entries):
    ctx = build_field(3, 1)
    M = ExactMatrix(ctx, entries)
    reduced, pivots = rref(M)
    again, again_pivots = rref(reduced)
    assert again == reduced
    assert again_pivots == pivots

    basis = nullspace(M)
    assert rank(M) + len(basis) == M.cols
    for vector in basis:
        assert not apply(M, vector).any()


@settings(max_examples=50, deadline=None)
@given(arrays(np.int64, (6, 3, 3), elements=st.integers(0, 15)))
def test_batch_rank_matches_rref(stack):
    ctx = build_field(2, 2)
    flags = full_column_rank(ctx, stack)
    expected = [rank(ExactMatrix(ctx, matrix)) == 3 for matrix in stack]
    assert flags.tolist() == expected

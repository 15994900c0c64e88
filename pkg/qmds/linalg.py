"""
Dense exact linear algebra over GF(q^2) and the subfield descent solvers.

Matrices hold canonical field indices (see qmds.gf) in an int64 array; all
elimination runs through the FieldCtx kernels so results are exact.
"""
from __future__ import annotations

import itertools
import logging
import math
from dataclasses import dataclass
from typing import Iterator, List, Sequence, Tuple

import numpy as np

from .errors import (
    DescentError,
    DescentRangeError,
    FieldError,
    RankDeficitError,
    RowEquivalenceError,
    SubsetBoundError,
    ZeroEntryError,
)
from .gf import FieldCtx, IndexArray

logger = logging.getLogger(__name__)

DEFAULT_SUBSET_BOUND = 10**6
DEFAULT_CHUNK_SIZE = 20_000


@dataclass(frozen=True, eq=False)
class ExactMatrix:
    ctx: FieldCtx
    entries: IndexArray

    def __post_init__(self) -> None:
        entries = np.array(self.entries, dtype=np.int64, copy=True)
        if entries.ndim != 2:
            raise FieldError(f"matrix entries must be two-dimensional, got shape {entries.shape}")
        if entries.size and (entries.min() < 0 or entries.max() >= self.ctx.order):
            raise FieldError(f"matrix entries outside GF({self.ctx.order})")
        entries.setflags(write=False)
        object.__setattr__(self, "entries", entries)

    @classmethod
    def from_rows(cls, ctx: FieldCtx, rows: Sequence[Sequence[int]], cols: int = 0) -> "ExactMatrix":
        if len(rows) == 0:
            return cls(ctx, np.zeros((0, cols), dtype=np.int64))
        return cls(ctx, np.asarray(rows, dtype=np.int64))

    @classmethod
    def identity(cls, ctx: FieldCtx, size: int) -> "ExactMatrix":
        return cls(ctx, np.eye(size, dtype=np.int64))

    @property
    def rows(self) -> int:
        return int(self.entries.shape[0])

    @property
    def cols(self) -> int:
        return int(self.entries.shape[1])

    @property
    def shape(self) -> Tuple[int, int]:
        return self.rows, self.cols

    def is_zero(self) -> bool:
        return not np.any(self.entries)

    def select_columns(self, columns: Sequence[int]) -> "ExactMatrix":
        return ExactMatrix(self.ctx, self.entries[:, list(columns)])

    def transpose(self) -> "ExactMatrix":
        return ExactMatrix(self.ctx, self.entries.T)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, ExactMatrix):
            return NotImplemented
        return self.ctx is other.ctx and np.array_equal(self.entries, other.entries)

    __hash__ = None  # type: ignore[assignment]


def _rref_array(ctx: FieldCtx, entries: IndexArray) -> Tuple[IndexArray, List[int]]:
    work = np.array(entries, dtype=np.int64, copy=True)
    n_rows, n_cols = work.shape
    pivots: List[int] = []
    row = 0
    for col in range(n_cols):
        if row == n_rows:
            break
        candidates = np.nonzero(work[row:, col])[0]
        if candidates.size == 0:
            continue
        pivot_row = row + int(candidates[0])
        if pivot_row != row:
            work[[row, pivot_row]] = work[[pivot_row, row]]
        work[row] = ctx.mul(work[row], ctx.inv(work[row, col]))
        factors = work[:, col].copy()
        factors[row] = 0
        work = ctx.sub(work, ctx.mul(factors[:, None], work[row][None, :]))
        pivots.append(col)
        row += 1
    return work, pivots


def rref(M: ExactMatrix) -> Tuple[ExactMatrix, List[int]]:
    reduced, pivots = _rref_array(M.ctx, M.entries)
    return ExactMatrix(M.ctx, reduced), pivots


def rank(M: ExactMatrix) -> int:
    return len(rref(M)[1])


def _kernel_from_rref(ctx: FieldCtx, reduced: IndexArray, pivots: Sequence[int]) -> List[IndexArray]:
    n_cols = reduced.shape[1]
    pivot_set = set(pivots)
    basis: List[IndexArray] = []
    for free in range(n_cols):
        if free in pivot_set:
            continue
        vector = np.zeros(n_cols, dtype=np.int64)
        vector[free] = 1
        for row, pivot in enumerate(pivots):
            vector[pivot] = ctx.neg(reduced[row, free])
        basis.append(vector)
    return basis


def nullspace(M: ExactMatrix) -> List[IndexArray]:
    """Basis of the right kernel, one vector per free column of the RREF."""
    reduced, pivots = _rref_array(M.ctx, M.entries)
    return _kernel_from_rref(M.ctx, reduced, pivots)


def matmul(A: ExactMatrix, B: ExactMatrix) -> ExactMatrix:
    if A.cols != B.rows:
        raise FieldError(f"cannot multiply {A.shape} by {B.shape}")
    ctx = A.ctx
    if A.cols == 0:
        return ExactMatrix(ctx, np.zeros((A.rows, B.cols), dtype=np.int64))
    products = ctx.mul(A.entries[:, :, None], B.entries[None, :, :])
    return ExactMatrix(ctx, ctx.total(products, axis=1))


def apply(M: ExactMatrix, vector: Sequence[int]) -> IndexArray:
    column = np.asarray(vector, dtype=np.int64).reshape(-1, 1)
    return matmul(M, ExactMatrix(M.ctx, column)).entries[:, 0]


def entrywise_frobenius(M: ExactMatrix) -> ExactMatrix:
    return ExactMatrix(M.ctx, M.ctx.frobenius(M.entries))


def full_column_rank(ctx: FieldCtx, stack: IndexArray) -> np.ndarray:
    """
    For a (batch, rows, cols) stack of matrices, flag the ones whose columns
    are linearly independent.  Elimination runs on every matrix at once.
    """
    work = np.array(stack, dtype=np.int64, copy=True)
    batch, n_rows, n_cols = work.shape
    if n_cols > n_rows:
        return np.zeros(batch, dtype=bool)
    ok = np.ones(batch, dtype=bool)
    idx = np.arange(batch)
    for col in range(n_cols):
        nonzero = work[:, col:, col] != 0
        ok &= nonzero.any(axis=1)
        pivot = col + np.argmax(nonzero, axis=1)
        top = work[idx, col].copy()
        work[idx, col] = work[idx, pivot]
        work[idx, pivot] = top
        lead = work[idx, col, col]
        lead = np.where(lead == 0, 1, lead)
        pivot_rows = ctx.mul(work[idx, col], ctx.inv(lead)[:, None])
        factors = work[:, :, col].copy()
        factors[:, col] = 0
        work = ctx.sub(work, ctx.mul(factors[:, :, None], pivot_rows[:, None, :]))
        work[idx, col] = pivot_rows
    return ok


def iter_column_subsets(n_cols: int, size: int, chunk_size: int = DEFAULT_CHUNK_SIZE) -> Iterator[np.ndarray]:
    combos = itertools.combinations(range(n_cols), size)
    while True:
        chunk = list(itertools.islice(combos, chunk_size))
        if not chunk:
            return
        yield np.asarray(chunk, dtype=np.int64)


def subsets_independent(M: ExactMatrix, subsets: np.ndarray) -> np.ndarray:
    """Independence flag for each row of `subsets` (column indices of M)."""
    stack = M.entries[:, subsets].transpose(1, 0, 2)
    return full_column_rank(M.ctx, stack)


def any_r_columns_independent(
    M: ExactMatrix,
    r: int,
    bound: int = DEFAULT_SUBSET_BOUND,
    chunk_size: int = DEFAULT_CHUNK_SIZE,
) -> bool:
    if r < 0 or r > M.cols:
        raise ValueError(f"r = {r} must lie in [0, {M.cols}]")
    if r == 0:
        return True
    count = math.comb(M.cols, r)
    if count > bound:
        raise SubsetBoundError(f"{count} column subsets of size {r} exceed the exhaustive bound {bound}")
    logger.debug("checking %d column subsets of size %d", count, r)
    for subsets in iter_column_subsets(M.cols, r, chunk_size):
        if not subsets_independent(M, subsets).all():
            return False
    return True


def frobenius_descent_solve(A: ExactMatrix) -> IndexArray:
    """
    Kernel vector of an r x (r+1) system with every entry in GF(q)*.

    The kernel is a line stable under entrywise Frobenius, so a scaled kernel
    vector is Frobenius-fixed.  Each failed precondition raises its own
    DescentError subclass.
    """
    ctx = A.ctx
    r = A.rows
    if A.cols != r + 1:
        raise DescentError(f"descent needs an r x (r+1) system, got {A.shape}")
    reduced, pivots = _rref_array(ctx, A.entries)
    if len(pivots) != r:
        raise RankDeficitError(f"system has rank {len(pivots)}, expected {r}")
    conjugate, _ = _rref_array(ctx, ctx.frobenius(A.entries))
    if not np.array_equal(reduced, conjugate):
        raise RowEquivalenceError("system is not row-equivalent to its entrywise Frobenius image")

    (kernel,) = _kernel_from_rref(ctx, reduced, pivots)
    lead = int(np.flatnonzero(kernel)[0])
    kernel = ctx.mul(kernel, ctx.inv(kernel[lead]))

    lam = int(ctx.div(ctx.frobenius(kernel[lead]), kernel[lead]))
    if not np.array_equal(ctx.frobenius(kernel), ctx.mul(kernel, lam)):
        raise RowEquivalenceError("kernel line is not Frobenius-stable")
    log_lam = lam - 1
    if log_lam % (ctx.q - 1) != 0:
        raise RowEquivalenceError("Frobenius eigenvalue of the kernel is not a (q+1)-th root of unity")
    scale = ctx.omega_power((-log_lam) % ctx.group_order // (ctx.q - 1))
    solution = ctx.mul(kernel, scale)

    if np.any(solution == 0):
        raise ZeroEntryError(f"kernel vector has zero entries at {np.flatnonzero(solution == 0).tolist()}")
    if not ctx.in_base_subfield(solution).all():
        raise DescentError("descended kernel vector left GF(q)")
    if np.any(apply(A, solution)):
        raise DescentError("descended vector does not solve the system")
    return solution


def paired_descent_solve(M: ExactMatrix) -> IndexArray:
    """
    Solution in (GF(q)*)^tau of a (tau-2) x tau system.

    Solves the two subsystems with the first and the last column removed,
    then combines them as (0, u) - alpha (v, 0) with alpha the first power of
    the GF(q)* generator that keeps every coordinate nonzero.
    """
    ctx = M.ctx
    tau = M.cols
    if not 3 <= tau < ctx.q + 1:
        raise DescentRangeError(f"paired descent needs 3 <= tau < q+1 = {ctx.q + 1}, got tau = {tau}")
    if M.rows != tau - 2:
        raise DescentError(f"paired descent needs a (tau-2) x tau system, got {M.shape}")

    u = frobenius_descent_solve(M.select_columns(range(1, tau)))
    v = frobenius_descent_solve(M.select_columns(range(tau - 1)))
    forbidden = set(ctx.div(u[:-1], v[1:]).tolist())

    generator = ctx.subfield_generator
    for j in range(ctx.q - 1):
        alpha = int(ctx.power(generator, j))
        if alpha in forbidden:
            continue
        shifted_u = np.concatenate(([0], u))
        shifted_v = np.concatenate((v, [0]))
        solution = ctx.sub(shifted_u, ctx.mul(alpha, shifted_v))
        logger.debug("paired descent picked alpha = g^%d", j)
        return solution
    raise DescentRangeError("every alpha in GF(q)* collides with a coordinate ratio")

"""
Generalized Reed-Solomon codes GRS_k(a, v) over GF(q^2).

Self-orthogonality is tested two independent ways: the Hermitian Gram matrix
G (G^(q))^T and the power-sum criterion sum_l a_l^(qi+j) v_l^(q+1) = 0 for all
0 <= i, j < k.  Both must agree on every input.
"""
from __future__ import annotations

import logging
import math
from dataclasses import dataclass
from enum import Enum
from typing import List, Optional, Sequence, Tuple

import numpy as np

from .errors import EnumerationBoundError, InvalidCodeError
from .gf import FieldCtx, IndexArray
from .linalg import (
    DEFAULT_CHUNK_SIZE,
    DEFAULT_SUBSET_BOUND,
    ExactMatrix,
    entrywise_frobenius,
    full_column_rank,
    iter_column_subsets,
    matmul,
    subsets_independent,
)

logger = logging.getLogger(__name__)

DEFAULT_SAMPLE_COUNT = 10**5
DEFAULT_CODEWORD_BOUND = 2**24

# elements per (batch, k, n) block during codeword enumeration
_ENUMERATION_BLOCK = 4_000_000


class MdsMode(str, Enum):
    EXHAUSTIVE = "exhaustive"
    SAMPLED = "sampled"


@dataclass(frozen=True)
class MdsVerdict:
    holds: bool
    mode: MdsMode
    subsets_checked: int

    @property
    def probabilistic(self) -> bool:
        return self.mode is MdsMode.SAMPLED


@dataclass(frozen=True, eq=False)
class GrsCode:
    """
    GRS_k(a, v): codewords (v_1 f(a_1), ..., v_n f(a_n)) for deg f < k.

    k = 0 is accepted and describes the zero code.
    """

    ctx: FieldCtx
    a: IndexArray
    v: IndexArray
    k: int

    def __post_init__(self) -> None:
        a = np.array(self.a, dtype=np.int64, copy=True).reshape(-1)
        v = np.array(self.v, dtype=np.int64, copy=True).reshape(-1)
        if a.shape != v.shape:
            raise InvalidCodeError(f"{a.size} evaluation points but {v.size} multipliers")
        n = a.size
        if n == 0 or n > self.ctx.order:
            raise InvalidCodeError(f"length {n} outside [1, {self.ctx.order}]")
        if min(a.min(), v.min()) < 0 or max(a.max(), v.max()) >= self.ctx.order:
            raise InvalidCodeError(f"entries outside GF({self.ctx.order})")
        if np.unique(a).size != n:
            raise InvalidCodeError("evaluation points are not pairwise distinct")
        if np.any(v == 0):
            raise InvalidCodeError("column multipliers must be nonzero")
        if not 0 <= self.k <= n:
            raise InvalidCodeError(f"dimension {self.k} outside [0, {n}]")
        a.setflags(write=False)
        v.setflags(write=False)
        object.__setattr__(self, "a", a)
        object.__setattr__(self, "v", v)

    @property
    def n(self) -> int:
        return int(self.a.size)

    def with_multipliers(self, v: Sequence[int]) -> "GrsCode":
        return GrsCode(self.ctx, self.a, np.asarray(v, dtype=np.int64), self.k)


def generator_matrix(C: GrsCode) -> ExactMatrix:
    """Rows v_j a_j^i for 0 <= i < k, with 0^0 = 1."""
    ctx = C.ctx
    exponents = np.arange(C.k, dtype=np.int64)[:, None]
    rows = ctx.mul(ctx.power(C.a[None, :], exponents), C.v[None, :])
    return ExactMatrix(ctx, rows.reshape(C.k, C.n))


def hermitian_inner(ctx: FieldCtx, x: Sequence[int], y: Sequence[int]) -> int:
    x = np.asarray(x, dtype=np.int64)
    y = np.asarray(y, dtype=np.int64)
    if x.shape != y.shape:
        raise ValueError(f"vectors of length {x.size} and {y.size} cannot be paired")
    return int(ctx.total(ctx.mul(x, ctx.frobenius(y))))


def hermitian_gram(C: GrsCode) -> ExactMatrix:
    G = generator_matrix(C)
    return matmul(G, entrywise_frobenius(G).transpose())


def _power_sums(C: GrsCode) -> IndexArray:
    ctx = C.ctx
    i, j = np.meshgrid(np.arange(C.k), np.arange(C.k), indexing="ij")
    exponents = (ctx.q * i + j).reshape(-1, 1)
    terms = ctx.mul(ctx.power(C.a[None, :], exponents), ctx.norm(C.v)[None, :])
    return ctx.total(terms, axis=1).reshape(C.k, C.k)


def power_sum_failures(C: GrsCode) -> List[Tuple[int, int]]:
    """Pairs (i, j) whose power sum <a^(qi+j), v^(q+1)> is nonzero."""
    sums = _power_sums(C)
    return [(int(i), int(j)) for i, j in zip(*np.nonzero(sums))]


def power_sum_check(C: GrsCode) -> bool:
    return not np.any(_power_sums(C))


def check_mds_matrix(
    G: ExactMatrix,
    bound: int = DEFAULT_SUBSET_BOUND,
    sample_count: int = DEFAULT_SAMPLE_COUNT,
    seed: int = 0,
    chunk_size: int = DEFAULT_CHUNK_SIZE,
) -> MdsVerdict:
    """
    Every k columns of the k x n matrix G independent.  Exhaustive while
    C(n, k) stays under `bound`, otherwise `sample_count` random k-subsets
    drawn from a generator seeded with `seed`.
    """
    k, n = G.shape
    if k == 0:
        return MdsVerdict(True, MdsMode.EXHAUSTIVE, 0)
    count = math.comb(n, k)
    if count <= bound:
        logger.debug("exhaustive MDS check over %d subsets", count)
        for subsets in iter_column_subsets(n, k, chunk_size):
            if not subsets_independent(G, subsets).all():
                return MdsVerdict(False, MdsMode.EXHAUSTIVE, count)
        return MdsVerdict(True, MdsMode.EXHAUSTIVE, count)

    logger.warning("C(%d, %d) = %d exceeds %d; sampling %d subsets", n, k, count, bound, sample_count)
    rng = np.random.default_rng(seed)
    remaining = sample_count
    while remaining > 0:
        batch = min(chunk_size, remaining)
        subsets = np.sort(np.argsort(rng.random((batch, n)), axis=1)[:, :k], axis=1)
        stack = G.entries[:, subsets].transpose(1, 0, 2)
        if not full_column_rank(G.ctx, stack).all():
            return MdsVerdict(False, MdsMode.SAMPLED, sample_count)
        remaining -= batch
    return MdsVerdict(True, MdsMode.SAMPLED, sample_count)


def check_mds(
    C: GrsCode,
    bound: int = DEFAULT_SUBSET_BOUND,
    sample_count: int = DEFAULT_SAMPLE_COUNT,
    seed: int = 0,
    chunk_size: int = DEFAULT_CHUNK_SIZE,
) -> MdsVerdict:
    return check_mds_matrix(generator_matrix(C), bound, sample_count, seed, chunk_size)


def is_mds(C: GrsCode, bound: int = DEFAULT_SUBSET_BOUND, sample_count: int = DEFAULT_SAMPLE_COUNT, seed: int = 0) -> bool:
    return check_mds(C, bound, sample_count, seed).holds


def min_distance_enumerate(C: GrsCode, bound: int = DEFAULT_CODEWORD_BOUND) -> int:
    """
    Exact minimum weight over all nonzero codewords.

    Only messages whose first nonzero coordinate is 1 are visited; scalar
    multiples share a weight.
    """
    ctx = C.ctx
    k, n = C.k, C.n
    if k == 0:
        raise InvalidCodeError("the zero code has no minimum distance")
    if ctx.order**k > bound:
        raise EnumerationBoundError(f"{ctx.order}^{k} codewords exceed the enumeration bound {bound}")

    G = generator_matrix(C).entries
    batch = max(1, _ENUMERATION_BLOCK // (k * n))
    best: Optional[int] = None
    for lead in range(k):
        free = k - 1 - lead
        total = ctx.order**free
        for start in range(0, total, batch):
            index = np.arange(start, min(start + batch, total), dtype=np.int64)
            messages = np.zeros((index.size, k), dtype=np.int64)
            messages[:, lead] = 1
            for d in range(free):
                messages[:, lead + 1 + d] = (index // ctx.order**d) % ctx.order
            codewords = ctx.total(ctx.mul(messages[:, :, None], G[None, :, :]), axis=1)
            weight = int(np.count_nonzero(codewords, axis=1).min())
            best = weight if best is None else min(best, weight)
            if best == 1:
                return best
    assert best is not None
    return best

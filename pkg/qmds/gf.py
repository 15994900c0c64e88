"""
Exact arithmetic in the tower GF(p) < GF(q) < GF(q^2), q = p^e.

Field elements are canonical indices: 0 is the zero element and any other
value v stands for omega^(v - 1).  FieldCtx methods operate on numpy arrays
of indices (broadcasting like ordinary ufuncs); the module-level functions
are the scalar API over Fq2Elem.  GF(q) is never a separate context: it is
the set of indices fixed by the Frobenius map x -> x^q.
"""
from __future__ import annotations

import logging
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Literal, Optional, Union

import galois
import numpy as np
import numpy.typing as npt

from .errors import FieldError, TableBoundError

logger = logging.getLogger(__name__)

DEFAULT_TABLE_BOUND = 2**20

IndexArray = npt.NDArray[np.int64]
Indices = Union[int, np.integer, npt.ArrayLike]
ArithOp = Literal["add", "mul", "neg", "inv", "pow"]


@dataclass(frozen=True, order=True)
class Fq2Elem:
    value: int

    @property
    def is_zero(self) -> bool:
        return self.value == 0


@dataclass(frozen=True, eq=False)
class FieldCtx:
    """
    GF(q^2) as lookup tables over a fixed primitive element omega.

    `omega` is the integer representation of omega (polynomial coefficients
    read as base-p digits), `exp_table[i]` is the integer representation of
    omega^i and `log_table` inverts it (-1 at zero).  `zech_table[d]` is the
    canonical index of 1 + omega^d.
    """

    p: int
    e: int
    q: int
    order: int
    modulus_poly: tuple[int, ...]
    omega: int
    exp_table: IndexArray = field(repr=False)
    log_table: IndexArray = field(repr=False)
    zech_table: IndexArray = field(repr=False)

    @property
    def group_order(self) -> int:
        return self.order - 1

    @property
    def minus_one(self) -> int:
        return 1 if self.p == 2 else 1 + self.group_order // 2

    @property
    def subfield_generator(self) -> int:
        """Index of omega^(q+1), the fixed generator of GF(q)*."""
        return self.omega_power(self.q + 1)

    def omega_power(self, exponent: int) -> int:
        return 1 + exponent % self.group_order

    def elem(self, value: int) -> Fq2Elem:
        if not 0 <= int(value) < self.order:
            raise FieldError(f"{value} is not a canonical index of GF({self.order})")
        return Fq2Elem(int(value))

    def from_int(self, n: int) -> int:
        """Index of the prime-field element n mod p."""
        return int(self.index_of_poly(n % self.p))

    def index_of_poly(self, poly: Indices) -> IndexArray:
        poly = np.asarray(poly, dtype=np.int64)
        return np.where(poly == 0, 0, self.log_table[poly] + 1)

    def poly_of(self, x: Indices) -> IndexArray:
        x = np.asarray(x, dtype=np.int64)
        return np.where(x == 0, 0, self.exp_table[np.maximum(x - 1, 0)])

    def elements(self) -> IndexArray:
        return np.arange(self.order, dtype=np.int64)

    def subfield_elements(self) -> IndexArray:
        """Indices of GF(q)*, in increasing powers of the subfield generator."""
        return 1 + (self.q + 1) * np.arange(self.q - 1, dtype=np.int64)

    # element kernels

    def mul(self, x: Indices, y: Indices) -> IndexArray:
        x = np.asarray(x, dtype=np.int64)
        y = np.asarray(y, dtype=np.int64)
        product = (x + y - 2) % self.group_order + 1
        return np.where((x == 0) | (y == 0), 0, product)

    def inv(self, x: Indices) -> IndexArray:
        x = np.asarray(x, dtype=np.int64)
        if np.any(x == 0):
            raise FieldError("zero has no multiplicative inverse")
        return (1 - x) % self.group_order + 1

    def div(self, x: Indices, y: Indices) -> IndexArray:
        return self.mul(x, self.inv(y))

    def power(self, x: Indices, n: Indices) -> IndexArray:
        """x^n for any integer n; 0^0 is 1."""
        x = np.asarray(x, dtype=np.int64)
        n = np.asarray(n, dtype=np.int64)
        if np.any((x == 0) & (n < 0)):
            raise FieldError("zero has no negative powers")
        nonzero = ((x - 1) * (n % self.group_order)) % self.group_order + 1
        return np.where(x == 0, np.where(n == 0, 1, 0), nonzero)

    def add(self, x: Indices, y: Indices) -> IndexArray:
        x = np.asarray(x, dtype=np.int64)
        y = np.asarray(y, dtype=np.int64)
        shift = (y - x) % self.group_order
        both = self.mul(x, self.zech_table[shift])
        return np.where(x == 0, y, np.where(y == 0, x, both))

    def neg(self, x: Indices) -> IndexArray:
        return self.mul(x, self.minus_one)

    def sub(self, x: Indices, y: Indices) -> IndexArray:
        return self.add(x, self.neg(y))

    def total(self, x: Indices, axis: int = 0) -> IndexArray:
        x = np.moveaxis(np.asarray(x, dtype=np.int64), axis, 0)
        acc = np.zeros(x.shape[1:], dtype=np.int64)
        for part in x:
            acc = self.add(acc, part)
        return acc

    def frobenius(self, x: Indices) -> IndexArray:
        return self.power(x, self.q)

    def norm(self, x: Indices) -> IndexArray:
        return self.power(x, self.q + 1)

    def in_base_subfield(self, x: Indices) -> npt.NDArray[np.bool_]:
        x = np.asarray(x, dtype=np.int64)
        return (x == 0) | ((x - 1) % (self.q + 1) == 0)

    def norm_preimage(self, u: Indices) -> IndexArray:
        u = np.asarray(u, dtype=np.int64)
        if np.any(u == 0):
            raise FieldError("zero has no norm preimage in GF(q^2)*")
        logs = u - 1
        if np.any(logs % (self.q + 1) != 0):
            raise FieldError(f"norm preimage requested for an element outside GF({self.q})")
        return logs // (self.q + 1) + 1


def build_field(p: int, e: int, table_bound: int = DEFAULT_TABLE_BOUND) -> FieldCtx:
    if p < 2 or not galois.is_prime(p):
        raise FieldError(f"characteristic {p} is not prime")
    if e < 1:
        raise FieldError(f"extension degree must be positive, got {e}")
    order = p ** (2 * e)
    if order > table_bound:
        raise TableBoundError(f"GF({p}^{2 * e}) has {order} elements, above the table bound {table_bound}")
    return _build_tables(p, e)


def field_for_q(q: int, table_bound: int = DEFAULT_TABLE_BOUND) -> FieldCtx:
    """Context for GF(q^2) given the base field size q."""
    if q < 2 or not galois.is_prime_power(q):
        raise FieldError(f"q = {q} is not a prime power")
    primes, multiplicities = galois.factors(q)
    return build_field(int(primes[0]), int(multiplicities[0]), table_bound)


@lru_cache(maxsize=None)
def _build_tables(p: int, e: int) -> FieldCtx:
    order = p ** (2 * e)
    modulus = galois.irreducible_poly(p, 2 * e, method="min")
    omega = int(galois.primitive_element(modulus, method="min"))
    GF = galois.GF(order, irreducible_poly=modulus, primitive_element=omega)

    powers = GF(omega) ** np.arange(order - 1)
    exp_table = powers.view(np.ndarray).astype(np.int64)
    if np.unique(exp_table).size != order - 1:
        raise FieldError(f"element {omega} does not generate GF({order})*")

    log_table = np.full(order, -1, dtype=np.int64)
    log_table[exp_table] = np.arange(order - 1, dtype=np.int64)

    constant = exp_table % p
    plus_one = exp_table - constant + (constant + 1) % p
    zech_table = np.where(plus_one == 0, 0, log_table[plus_one] + 1)

    for table in (exp_table, log_table, zech_table):
        table.setflags(write=False)

    logger.debug("built GF(%d^%d) with modulus %s and omega=%d", p, 2 * e, modulus, omega)
    return FieldCtx(
        p=p,
        e=e,
        q=p**e,
        order=order,
        modulus_poly=tuple(int(c) for c in modulus.coeffs),
        omega=omega,
        exp_table=exp_table,
        log_table=log_table,
        zech_table=zech_table,
    )


def arith(ctx: FieldCtx, op: ArithOp, x: Fq2Elem, y: Optional[Union[Fq2Elem, int]] = None) -> Fq2Elem:
    x = ctx.elem(x.value)
    if op == "neg":
        return Fq2Elem(int(ctx.neg(x.value)))
    if op == "inv":
        return Fq2Elem(int(ctx.inv(x.value)))
    if y is None:
        raise FieldError(f"operation {op!r} needs a second operand")
    if op == "pow":
        if isinstance(y, Fq2Elem):
            raise FieldError("pow takes an integer exponent")
        return Fq2Elem(int(ctx.power(x.value, int(y))))
    if not isinstance(y, Fq2Elem):
        raise FieldError(f"operation {op!r} takes two field elements")
    y = ctx.elem(y.value)
    if op == "add":
        return Fq2Elem(int(ctx.add(x.value, y.value)))
    if op == "mul":
        return Fq2Elem(int(ctx.mul(x.value, y.value)))
    raise FieldError(f"unknown field operation {op!r}")


def frobenius(ctx: FieldCtx, x: Fq2Elem) -> Fq2Elem:
    return Fq2Elem(int(ctx.frobenius(ctx.elem(x.value).value)))


def norm(ctx: FieldCtx, x: Fq2Elem) -> Fq2Elem:
    return Fq2Elem(int(ctx.norm(ctx.elem(x.value).value)))


def is_in_base_subfield(ctx: FieldCtx, x: Fq2Elem) -> bool:
    return bool(ctx.in_base_subfield(ctx.elem(x.value).value))


def norm_preimage(ctx: FieldCtx, u: Fq2Elem) -> Fq2Elem:
    return Fq2Elem(int(ctx.norm_preimage(ctx.elem(u.value).value)))


def dlog(ctx: FieldCtx, x: Fq2Elem) -> int:
    x = ctx.elem(x.value)
    if x.is_zero:
        raise FieldError("discrete log of zero is undefined")
    return x.value - 1

"""
The six Hermitian self-orthogonal GRS families.

Every family places its evaluation points on cosets of the cyclic group
<theta> of m-th roots of unity, solves a small linear system for
u in (GF(q)*)^(r+1) (or (GF(q)*)^r when there is no zero point), and lifts u
to column multipliers through the norm map.  `assemble` does the layout and
the solve, `verify_code` computes verdicts, `build` does both and refuses to
return a certificate with a failed verdict.
"""
from __future__ import annotations

import logging
from dataclasses import dataclass, field, replace
from enum import Enum
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

import galois
import numpy as np

from .config import QmdsSettings, VerificationSettings
from .errors import (
    CertificateMismatchError,
    ConstructionError,
    InvalidSpecError,
    LemmaViolation,
)
from .gf import FieldCtx, IndexArray, field_for_q
from .grs import GrsCode, check_mds, min_distance_enumerate, power_sum_check, hermitian_gram
from .linalg import ExactMatrix, any_r_columns_independent, frobenius_descent_solve, paired_descent_solve

logger = logging.getLogger(__name__)


class Family(str, Enum):
    T32 = "T32"
    T43I = "T43i"
    T43II = "T43ii"
    T53I = "T53i"
    T53II = "T53ii"
    T63 = "T63"

    @property
    def has_zero_point(self) -> bool:
        return self is not Family.T63

    @property
    def uses_t(self) -> bool:
        return self in (Family.T43II, Family.T53II, Family.T63)


class DivisibilityKind(str, Enum):
    I = "i"  # noqa: E741
    II = "ii"
    SHIFTED = "shifted"


class VerifyLevel(str, Enum):
    PARAMS = "params"
    GRAM = "gram"
    FULL = "full"


def _r_from_t(family: Family, t: int) -> int:
    return 2 * t + 2 if family is Family.T53II else 2 * t + 1


def _t_from_r(family: Family, r: int) -> int:
    offset = 2 if family is Family.T53II else 1
    if r < offset or (r - offset) % 2:
        raise InvalidSpecError(f"{family.value} needs r = 2t+{offset}, got r = {r}")
    return (r - offset) // 2


@dataclass(frozen=True)
class ConstructionSpec:
    family: Family
    q: int
    s: int
    r: int
    k: int
    t: Optional[int] = None

    @classmethod
    def create(
        cls,
        family: "Family | str",
        q: int,
        s: int,
        k: int,
        r: Optional[int] = None,
        t: Optional[int] = None,
    ) -> "ConstructionSpec":
        """Validated spec; for the t-families a missing r or t is derived from the other."""
        try:
            family = Family(family)
        except ValueError:
            raise InvalidSpecError(f"unknown family {family!r}") from None
        if family.uses_t:
            if t is None and r is None:
                raise InvalidSpecError(f"{family.value} needs t (or r)")
            if t is None:
                t = _t_from_r(family, r)
            if r is None:
                r = _r_from_t(family, t)
            if r != _r_from_t(family, t):
                raise InvalidSpecError(f"{family.value} needs r = {_r_from_t(family, t)} for t = {t}, got r = {r}")
        else:
            if t is not None:
                raise InvalidSpecError(f"{family.value} takes no t parameter")
            if r is None:
                raise InvalidSpecError(f"{family.value} needs r")
        spec = cls(family=family, q=int(q), s=int(s), r=int(r), k=int(k), t=None if t is None else int(t))
        spec.validate()
        return spec

    @property
    def divisor(self) -> int:
        """Order of the coset-index group: q^2 - 1 = divisor * m."""
        if self.family is Family.T32:
            return self.s
        if self.family in (Family.T43I, Family.T43II):
            return 2 * self.s + 1
        return 2 * self.s

    @property
    def m(self) -> int:
        return (self.q * self.q - 1) // self.divisor

    @property
    def n(self) -> int:
        blocks = self.r * self.m
        return blocks + 1 if self.family.has_zero_point else blocks

    @property
    def k_max(self) -> int:
        q, s = self.q, self.s
        t = self.t or 0
        if self.family is Family.T32:
            return self.r * (q - 1) // s
        c = (q + 1) // self.divisor
        if self.family is Family.T63:
            return (s + t) * c - 2
        return (s + t + 1) * c - 1

    @property
    def reference(self) -> str:
        parts = [self.family.value, f"q={self.q}", f"s={self.s}", f"r={self.r}"]
        if self.t is not None:
            parts.append(f"t={self.t}")
        parts.append(f"k={self.k}")
        return ":".join(parts)

    def with_k(self, k: int) -> "ConstructionSpec":
        spec = replace(self, k=k)
        spec.validate()
        return spec

    def validate(self) -> None:
        q, s, r, t, family = self.q, self.s, self.r, self.t, self.family
        if q < 2 or not galois.is_prime_power(q):
            raise InvalidSpecError(f"q = {q} is not a prime power")
        if s < 1:
            raise InvalidSpecError(f"s must be positive, got {s}")

        if family is Family.T32:
            if (q - 1) % s:
                raise InvalidSpecError(f"T32 needs s | q-1, got s = {s}, q = {q}")
            if not 1 <= r <= s:
                raise InvalidSpecError(f"T32 needs 1 <= r <= s = {s}, got r = {r}")
        elif family in (Family.T43I, Family.T43II):
            if q <= 2:
                raise InvalidSpecError(f"{family.value} needs q > 2")
            if (q + 1) % (2 * s + 1):
                raise InvalidSpecError(f"{family.value} needs (2s+1) | q+1, got s = {s}, q = {q}")
            if r == 2 * s + 1:
                raise InvalidSpecError(
                    f"r = 2s+1 gives length q^2 = {q * q}; that length is covered by T32 with s = r = q-1"
                )
            if family is Family.T43I and not 1 <= r < 2 * s + 1:
                raise InvalidSpecError(f"T43i needs 1 <= r < 2s+1 = {2 * s + 1}, got r = {r}")
            if family is Family.T43II and not 0 <= t <= s - 1:
                raise InvalidSpecError(f"T43ii needs 0 <= t <= s-1 = {s - 1}, got t = {t}")
        else:
            if (q + 1) % (2 * s):
                raise InvalidSpecError(f"{family.value} needs 2s | q+1, got s = {s}, q = {q}")
            if family is Family.T63:
                if not 1 <= t <= s - 1:
                    raise InvalidSpecError(f"T63 needs 1 <= t <= s-1 = {s - 1}, got t = {t}")
            else:
                if s == 1:
                    raise InvalidSpecError(
                        f"{family.value} needs s > 1; s = 1 (length 1 + r(q^2-1)/2) is not covered by this family"
                    )
                if r == 2 * s:
                    raise InvalidSpecError(
                        f"r = 2s gives length q^2 = {q * q}; that length is covered by T32 with s = r = q-1"
                    )
                if family is Family.T53I and not 2 <= r < 2 * s:
                    raise InvalidSpecError(f"T53i needs 2 <= r < 2s = {2 * s}, got r = {r}")
                if family is Family.T53II and not 0 <= t <= s - 2:
                    raise InvalidSpecError(f"T53ii needs 0 <= t <= s-2 = {s - 2}, got t = {t}")
            if q % 2 == 0:
                raise LemmaViolation(f"2s | q+1 with q = {q} even")

        if not 1 <= self.k <= self.k_max:
            raise InvalidSpecError(f"{family.value} needs 1 <= k <= {self.k_max} for {self.reference}, got k = {self.k}")


# divisibility of the power-sum exponents

def multiples_by_search(q: int, m: int, k: int, shift: int = 0) -> List[int]:
    """All mu with q*i + j + shift = mu*m for some 0 <= i, j < k, by brute force."""
    i, j = np.meshgrid(np.arange(k), np.arange(k), indexing="ij")
    exponents = (q * i + j + shift).ravel()
    return sorted(set((exponents[exponents % m == 0] // m).tolist()))


def _window(kind: DivisibilityKind, s: int, t: int) -> Tuple[int, ...]:
    if kind is DivisibilityKind.I:
        return (0,) + tuple(range(s - t + 1, s + t + 1))
    if kind is DivisibilityKind.II:
        return (0,) + tuple(range(s - t, s + t + 1))
    return tuple(range(s - t + 1, s + t))


def divisibility_set(kind: "DivisibilityKind | str", q: int, s: int, t: int, k: int) -> List[int]:
    """
    Multiples mu with q*i + j = mu*m (or q*i + j + q + 1 = mu*m for the
    shifted kind) for some 0 <= i, j < k, from the closed form.

    With c = (q+1)/D, mu*m = q*(mu*c - 1) + (q - mu*c) is the only way to
    write mu*m as q*i + j with 0 <= j < q, so mu is present iff that (i, j)
    lies in the k x k box.  The result is checked against the window the
    constructions solve for.
    """
    kind = DivisibilityKind(kind)
    lowest_t = 1 if kind is DivisibilityKind.SHIFTED else 0
    highest_t = s - 2 if kind is DivisibilityKind.II else s - 1
    if not lowest_t <= t <= highest_t:
        raise InvalidSpecError(f"t = {t} outside [{lowest_t}, {highest_t}] for the {kind.value} kind with s = {s}")
    divisor = 2 * s + 1 if kind is DivisibilityKind.I else 2 * s
    if (q + 1) % divisor:
        raise InvalidSpecError(f"{divisor} does not divide q+1 = {q + 1}")
    c = (q + 1) // divisor
    if kind is DivisibilityKind.SHIFTED:
        upper = (s + t) * c - 2
    else:
        upper = (s + t + 1) * c - 1
    if not 1 <= k <= upper:
        raise InvalidSpecError(f"k = {k} outside [1, {upper}] for q = {q}, s = {s}, t = {t}")

    shift = 1 if kind is DivisibilityKind.SHIFTED else 0
    found = [] if shift else [0]
    for mu in range(1, divisor):
        i = mu * c - 1 - shift
        j = q - mu * c - shift
        if 0 <= i <= k - 1 and 0 <= j <= k - 1:
            found.append(mu)

    window = _window(kind, s, t)
    if not set(found) <= set(window):
        raise LemmaViolation(f"multiples {found} fall outside {list(window)} for q = {q}, s = {s}, t = {t}, k = {k}")
    return found


# lemma systems

def check_lemma_matrix(A: ExactMatrix, size: int) -> None:
    if not any_r_columns_independent(A, size):
        raise LemmaViolation(f"some {size} columns of the {A.rows}x{A.cols} system are dependent")


def solve_sum_zero(ctx: FieldCtx, r: int) -> IndexArray:
    """u_0 + ... + u_r = 0 with u in (GF(q)*)^(r+1)."""
    if ctx.q <= 2:
        raise InvalidSpecError("a nonzero sum-zero solution needs q > 2")
    if r < 1:
        raise InvalidSpecError(f"r must be positive, got {r}")
    target = int(ctx.neg(ctx.from_int(r - 1)))
    generator = ctx.subfield_generator
    for j in range(ctx.q - 1):
        a = int(ctx.power(generator, j))
        b = int(ctx.sub(target, a))
        if b != 0:
            return np.array([1] * (r - 1) + [a, b], dtype=np.int64)
    raise LemmaViolation(f"no sum-zero completion for q = {ctx.q}, r = {r}")


def solve_parity_system(ctx: FieldCtx, r: int) -> IndexArray:
    """
    u_0 + sum u_l = 0 and sum (-1)^l u_l = 0 (l = 1..r).

    Adding and subtracting the equations leaves u_0 + 2 sum_{l odd} u_l = 0
    and u_0 + 2 sum_{l even} u_l = 0, two sum-zero problems sharing u_0.
    """
    if ctx.p == 2:
        raise InvalidSpecError("the parity system needs odd q")
    if r < 2:
        raise InvalidSpecError(f"the parity system needs r >= 2, got {r}")
    odd = np.arange(1, r + 1, 2)
    even = np.arange(2, r + 1, 2)
    w_odd = solve_sum_zero(ctx, odd.size)
    w_even = solve_sum_zero(ctx, even.size)
    half = ctx.inv(ctx.from_int(2))
    scale = ctx.div(w_odd[0], w_even[0])

    u = np.zeros(r + 1, dtype=np.int64)
    u[0] = w_odd[0]
    u[odd] = ctx.mul(w_odd[1:], half)
    u[even] = ctx.mul(ctx.mul(w_even[1:], scale), half)
    return u


def solve_vandermonde_system(ctx: FieldCtx, xs: Sequence[int]) -> IndexArray:
    """u_0 + ... + u_r = 0 and sum_l x_l^i u_l = 0 for i = 1..r-1."""
    xs = np.asarray(xs, dtype=np.int64)
    r = xs.size
    if r < 1:
        raise InvalidSpecError("need at least one x value")
    if np.any(xs == 0):
        raise InvalidSpecError("x values must be nonzero")
    if np.unique(xs).size != r:
        raise InvalidSpecError("x values must be pairwise distinct")
    if not ctx.in_base_subfield(xs).all():
        raise InvalidSpecError(f"x values must lie in GF({ctx.q})")
    rows = [[1] * (r + 1)]
    for i in range(1, r):
        rows.append([0] + ctx.power(xs, i).tolist())
    A = ExactMatrix.from_rows(ctx, rows)
    check_lemma_matrix(A, r)
    return frobenius_descent_solve(A)


def solve_power_system(ctx: FieldCtx, alpha: int, a_start: int, num_rows: int, r: int) -> IndexArray:
    """
    u_0 + ... + u_r = 0 and sum_l alpha^(l*mu) u_l = 0 for
    mu = a_start, ..., a_start + num_rows - 1.
    """
    if num_rows != r - 1:
        raise InvalidSpecError(f"a square power system needs num_rows = r-1, got {num_rows} rows for r = {r}")
    ell = np.arange(1, r + 1, dtype=np.int64)
    rows = [[1] * (r + 1)]
    for j in range(num_rows):
        rows.append([0] + ctx.power(alpha, ell * (a_start + j)).tolist())
    A = ExactMatrix.from_rows(ctx, rows)
    check_lemma_matrix(A, r)
    return frobenius_descent_solve(A)


def solve_shifted_system(ctx: FieldCtx, s: int, t: int) -> IndexArray:
    """sum_l alpha^(l*mu) eta^l u_l = 0 for mu = s-t+1, ..., s+t-1; alpha = omega^m, eta = omega^-(q+1)."""
    q = ctx.q
    if (q + 1) % (2 * s) or not 1 <= t <= s - 1:
        raise InvalidSpecError(f"shifted system needs 2s | q+1 and 1 <= t <= s-1, got q = {q}, s = {s}, t = {t}")
    r = 2 * t + 1
    m = ctx.group_order // (2 * s)
    alpha = ctx.omega_power(m)
    eta = ctx.omega_power(-(q + 1))
    ell = np.arange(1, r + 1, dtype=np.int64)
    a = s - t + 1
    rows = [ctx.mul(ctx.power(alpha, ell * (a + j)), ctx.power(eta, ell)).tolist() for j in range(r - 2)]
    M = ExactMatrix.from_rows(ctx, rows, cols=r)
    check_lemma_matrix(M, r - 2)
    return paired_descent_solve(M)


# certificates

@dataclass(frozen=True)
class Verdicts:
    gram_zero: Optional[bool] = None
    power_sum: Optional[bool] = None
    mds: Optional[bool] = None
    singleton_equality: Optional[bool] = None
    mds_mode: Optional[str] = None
    min_distance: Optional[int] = None

    def failures(self) -> List[str]:
        checks = {
            "gram_zero": self.gram_zero,
            "power_sum": self.power_sum,
            "mds": self.mds,
            "singleton_equality": self.singleton_equality,
        }
        return [name for name, value in checks.items() if value is False]

    @property
    def accepted(self) -> bool:
        return not self.failures()

    def to_dict(self) -> Dict[str, object]:
        return {
            "gram_zero": self.gram_zero,
            "power_sum": self.power_sum,
            "mds": self.mds,
            "singleton_equality": self.singleton_equality,
            "mds_mode": self.mds_mode,
            "min_distance": self.min_distance,
        }


@dataclass(frozen=True, eq=False)
class ConstructionCertificate:
    spec: ConstructionSpec
    code: GrsCode
    u: IndexArray
    coset_reps: Tuple[int, ...]
    theta: int
    routing: str
    multiples: Tuple[int, ...]
    verdicts: Verdicts = field(default_factory=Verdicts)

    @property
    def ctx(self) -> FieldCtx:
        return self.code.ctx

    @property
    def accepted(self) -> bool:
        return self.verdicts.accepted


def _multiples_for(spec: ConstructionSpec) -> List[int]:
    q, s, k = spec.q, spec.s, spec.k
    t = spec.t or 0
    if spec.family is Family.T32:
        found = multiples_by_search(q, spec.m, k)
        if max(found) >= spec.r:
            raise LemmaViolation(f"multiples {found} exceed the {spec.r} solved rows for {spec.reference}")
        return found
    if spec.family in (Family.T43I, Family.T43II):
        found = divisibility_set(DivisibilityKind.I, q, s, t, k)
        shift = 0
    elif spec.family is Family.T63:
        found = divisibility_set(DivisibilityKind.SHIFTED, q, s, t, k)
        shift = q + 1
    else:
        found = divisibility_set(DivisibilityKind.II, q, s, t, k)
        shift = 0
    brute = multiples_by_search(q, spec.m, k, shift)
    if brute != found:
        raise LemmaViolation(f"closed-form multiples {found} disagree with search {brute} for {spec.reference}")
    return found


def _solve(ctx: FieldCtx, spec: ConstructionSpec, multiples: Sequence[int]) -> Tuple[IndexArray, str]:
    s, r = spec.s, spec.r
    t = spec.t or 0
    family = spec.family
    if family is Family.T32:
        xs = ctx.power(ctx.omega_power(spec.m), np.arange(r))
        if not ctx.in_base_subfield(xs).all() or np.unique(xs).size != r:
            raise LemmaViolation(f"coset powers {xs.tolist()} are not distinct elements of GF({spec.q})")
        return solve_vandermonde_system(ctx, xs), "vandermonde"
    if family is Family.T43I:
        return solve_sum_zero(ctx, r), "sum_zero"
    if family is Family.T53I:
        if s in multiples:
            return solve_parity_system(ctx, r), "parity"
        return solve_sum_zero(ctx, r), "sum_zero"
    alpha = ctx.omega_power(spec.m)
    if family is Family.T43II:
        return solve_power_system(ctx, alpha, s - t + 1, 2 * t, r), "power"
    if family is Family.T53II:
        return solve_power_system(ctx, alpha, s - t, 2 * t + 1, r), "power"
    return solve_shifted_system(ctx, s, t), "shifted"


def assemble(spec: ConstructionSpec, settings: Optional[QmdsSettings] = None) -> ConstructionCertificate:
    """Layout, lemma solve and multiplier lift; verdicts are left unset."""
    settings = settings or QmdsSettings()
    ctx = field_for_q(spec.q, settings.field.table_bound)
    m, r = spec.m, spec.r

    multiples = _multiples_for(spec)
    u, routing = _solve(ctx, spec, multiples)
    logger.debug("%s solved by %s: u=%s", spec.reference, routing, u.tolist())

    first = 0 if spec.family is Family.T32 else 1
    coset_reps = tuple(range(first, first + r))
    theta = ctx.omega_power(spec.divisor)
    nu = np.arange(m, dtype=np.int64)
    block_exponents = np.asarray(coset_reps)[:, None] + spec.divisor * nu[None, :]
    points = (block_exponents % ctx.group_order + 1).ravel()

    if spec.family.has_zero_point:
        m_elem = ctx.from_int(m)
        if m_elem == 0:
            raise LemmaViolation(f"m = {m} vanishes in GF({ctx.p})")
        block_v = np.repeat(ctx.norm_preimage(u[1:]), m)
        v0 = ctx.norm_preimage(ctx.mul(u[0], m_elem))
        a = np.concatenate(([0], points))
        v = np.concatenate(([v0], block_v))
    else:
        theta_powers = ctx.power(theta, nu)
        v = ctx.mul(ctx.norm_preimage(u)[:, None], theta_powers[None, :]).ravel()
        a = points

    if np.unique(a).size != a.size:
        raise LemmaViolation(f"evaluation points of {spec.reference} collide")
    if a.size != spec.n:
        raise LemmaViolation(f"{spec.reference} laid out {a.size} points, expected {spec.n}")
    if 2 * spec.k > spec.n:
        raise LemmaViolation(f"k = {spec.k} exceeds n/2 for {spec.reference}")

    code = GrsCode(ctx, a, v, spec.k)
    return ConstructionCertificate(
        spec=spec,
        code=code,
        u=u,
        coset_reps=tuple(ctx.omega_power(e) for e in coset_reps),
        theta=theta,
        routing=routing,
        multiples=tuple(multiples),
    )


def verify_code(
    spec: ConstructionSpec,
    code: GrsCode,
    level: "VerifyLevel | str" = VerifyLevel.FULL,
    settings: Optional[VerificationSettings] = None,
) -> Verdicts:
    level = VerifyLevel(level)
    settings = settings or VerificationSettings()
    if level is VerifyLevel.PARAMS:
        return Verdicts()

    gram_zero = hermitian_gram(code).is_zero()
    power_sum = power_sum_check(code)
    if gram_zero != power_sum:
        raise LemmaViolation(f"Gram test ({gram_zero}) and power-sum test ({power_sum}) disagree on {spec.reference}")
    if level is VerifyLevel.GRAM:
        return Verdicts(gram_zero=gram_zero, power_sum=power_sum)

    mds = check_mds(
        code,
        bound=settings.exhaustive_subset_bound,
        sample_count=settings.sample_count,
        seed=settings.seed,
        chunk_size=settings.chunk_size,
    )
    min_distance = None
    if code.ctx.order**code.k <= settings.codeword_bound:
        min_distance = min_distance_enumerate(code, settings.codeword_bound)
    singleton = (
        mds.holds
        and code.n == spec.n
        and code.k == spec.k
        and (min_distance is None or min_distance == code.n - code.k + 1)
    )
    return Verdicts(
        gram_zero=gram_zero,
        power_sum=power_sum,
        mds=mds.holds,
        singleton_equality=singleton,
        mds_mode=mds.mode.value,
        min_distance=min_distance,
    )


def build(
    spec: ConstructionSpec,
    level: "VerifyLevel | str" = VerifyLevel.FULL,
    settings: Optional[QmdsSettings] = None,
) -> ConstructionCertificate:
    settings = settings or QmdsSettings()
    certificate = assemble(spec, settings)
    verdicts = verify_code(spec, certificate.code, level, settings.verification)
    certificate = replace(certificate, verdicts=verdicts)
    failures = verdicts.failures()
    if failures:
        raise ConstructionError(f"{spec.reference} failed {', '.join(failures)}", certificate)
    logger.info("built %s: n=%d k=%d verdicts=%s", spec.reference, spec.n, spec.k, verdicts.to_dict())
    return certificate


def reproduce(
    certificate: ConstructionCertificate,
    level: "VerifyLevel | str" = VerifyLevel.FULL,
    settings: Optional[QmdsSettings] = None,
) -> Verdicts:
    """
    Re-derive a certificate from its spec, require the stored evaluation
    data to match, and recompute its verdicts from the stored code.
    """
    settings = settings or QmdsSettings()
    fresh = assemble(certificate.spec, settings)
    mismatched = [
        name
        for name, stored, expected in (
            ("a", certificate.code.a, fresh.code.a),
            ("v", certificate.code.v, fresh.code.v),
            ("u", certificate.u, fresh.u),
        )
        if not np.array_equal(stored, expected)
    ]
    if certificate.theta != fresh.theta or certificate.coset_reps != fresh.coset_reps:
        mismatched.append("cosets")
    if mismatched:
        raise CertificateMismatchError(f"{certificate.spec.reference}: stored {', '.join(mismatched)} differ from a fresh assembly")
    verdicts = verify_code(certificate.spec, certificate.code, level, settings.verification)
    stored = certificate.verdicts
    for name in ("gram_zero", "power_sum", "mds", "singleton_equality"):
        recorded = getattr(stored, name)
        recomputed = getattr(verdicts, name)
        if recorded is not None and recomputed is not None and recorded != recomputed:
            raise CertificateMismatchError(f"{certificate.spec.reference}: {name} recorded {recorded}, recomputed {recomputed}")
    return verdicts


def family_specs(q: int, n_max: Optional[int] = None) -> Iterable[ConstructionSpec]:
    """Every legal (family, s, r, t) at k = k_max with n <= n_max."""
    for family in Family:
        for s in range(1, q + 2):
            for r, t in _shapes(family, s):
                try:
                    spec = ConstructionSpec.create(family, q, s, k=1, r=r, t=t)
                except InvalidSpecError:
                    continue
                if n_max is not None and spec.n > n_max:
                    continue
                yield spec.with_k(spec.k_max)


def _shapes(family: Family, s: int) -> Iterable[Tuple[int, Optional[int]]]:
    if family is Family.T32:
        return ((r, None) for r in range(1, s + 1))
    if family in (Family.T43I, Family.T53I):
        return ((r, None) for r in range(1, 2 * s + 1))
    return ((_r_from_t(family, t), t) for t in range(0, s))

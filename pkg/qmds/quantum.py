"""
Quantum code parameters: the Hermitian construction, the quantum Singleton
bound, the propagation rule and enumeration over the six families.
"""
from __future__ import annotations

import logging
import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from typing import Dict, List, Optional, Sequence, Tuple

from .config import QmdsSettings
from .constructions import (
    ConstructionCertificate,
    ConstructionSpec,
    Family,
    VerifyLevel,
    build,
    family_specs,
)
from .errors import (
    MissingCertificateError,
    PropagationError,
    QuantumParamsError,
    SingletonViolationError,
)

logger = logging.getLogger(__name__)

PROPAGATE_STEP = "propagate"


def exceeds_half_q(q: int, d: int) -> bool:
    """Minimum distance above q/2 + 1."""
    return 2 * d > q + 2


@dataclass(frozen=True)
class QuantumParams:
    q: int
    n: int
    k_q: int
    d: int
    provenance: str
    spec: Optional[ConstructionSpec] = None
    verified: Optional[bool] = None

    def __post_init__(self) -> None:
        if self.n < 1 or not 0 <= self.k_q <= self.n or self.d < 1:
            raise QuantumParamsError(f"[[{self.n}, {self.k_q}, {self.d}]] is not a valid parameter triple")

    @property
    def steps(self) -> int:
        return self.provenance.count(">")

    @property
    def propagated(self) -> bool:
        return self.steps > 0

    @property
    def exceeds_half_q(self) -> bool:
        return exceeds_half_q(self.q, self.d)

    @property
    def key(self) -> Tuple[int, int, int]:
        return self.n, self.k_q, self.d

    def label(self) -> str:
        return f"[[{self.n}, {self.k_q}, {self.d}]]_{self.q}"


def hermitian_to_quantum(n: int, k: int, q: int, reference: Optional[str]) -> QuantumParams:
    """[[n, n-2k, k+1]]_q from a certified Hermitian self-orthogonal [n, k, n-k+1] code."""
    if not reference:
        raise MissingCertificateError(f"no certificate backs the [{n}, {k}] code")
    if k < 1 or 2 * k > n:
        raise QuantumParamsError(f"a self-orthogonal [{n}, {k}] code needs 1 <= k <= n/2")
    return QuantumParams(q=q, n=n, k_q=n - 2 * k, d=k + 1, provenance=reference)


def from_certificate(certificate: ConstructionCertificate) -> QuantumParams:
    spec = certificate.spec
    params = hermitian_to_quantum(certificate.code.n, certificate.code.k, spec.q, spec.reference)
    verdicts = certificate.verdicts
    verified = verdicts.accepted if verdicts.gram_zero is not None else None
    return QuantumParams(params.q, params.n, params.k_q, params.d, params.provenance, spec, verified)


def singleton_defect(params: QuantumParams) -> int:
    defect = (params.n - params.k_q + 2) - 2 * params.d
    if defect < 0:
        raise SingletonViolationError(f"{params.label()} violates 2d <= n - k + 2")
    return defect


def propagate(params: QuantumParams) -> QuantumParams:
    """[[n, n-2d+2, d]] -> [[n-1, n-2d+3, d-1]]."""
    if singleton_defect(params) != 0:
        raise PropagationError(f"{params.label()} is not quantum MDS")
    if params.d < 2:
        raise PropagationError(f"{params.label()} has d = 1 and cannot be shortened")
    return QuantumParams(
        q=params.q,
        n=params.n - 1,
        k_q=params.n - 2 * params.d + 3,
        d=params.d - 1,
        provenance=f"{params.provenance}>{PROPAGATE_STEP}",
        spec=params.spec,
        verified=params.verified,
    )


def propagate_steps(params: QuantumParams, steps: int) -> List[QuantumParams]:
    chain = []
    for _ in range(steps):
        params = propagate(params)
        chain.append(params)
    return chain


def corollary_params(spec: ConstructionSpec) -> QuantumParams:
    """
    Top member of the shortened family of length r*m that a zero-point
    family reaches in one propagation step, from the closed-form k bounds.
    """
    q, s, r, t = spec.q, spec.s, spec.r, spec.t or 0
    family = spec.family
    if not family.has_zero_point:
        raise QuantumParamsError(f"{family.value} has no shortened corollary family")
    n = r * spec.m
    if family is Family.T32:
        k = r * (q - 1) // s - 1
    else:
        c = (q + 1) // spec.divisor
        extra = t if family in (Family.T43II, Family.T53II) else 0
        k = (s + 1 + extra) * c - 2
    return QuantumParams(q=q, n=n, k_q=n - 2 * k, d=k + 1, provenance=f"{spec.with_k(spec.k_max).reference}>{PROPAGATE_STEP}")


def combined_k_bound(q: int, s: int, r: int) -> int:
    """Largest k for length r(q^2-1)/(2s), 3 <= r <= 2s, joining the odd-r and even-r families."""
    if (q + 1) % (2 * s) or not 3 <= r <= 2 * s:
        raise QuantumParamsError(f"no combined bound for q = {q}, s = {s}, r = {r}")
    return (s + math.ceil((r - 1) / 2)) * ((q + 1) // (2 * s)) - 2


def _expand_k(specs: Sequence[ConstructionSpec], all_k: bool) -> List[ConstructionSpec]:
    if not all_k:
        return list(specs)
    return [spec.with_k(k) for spec in specs for k in range(1, spec.k_max + 1)]


def _direct(spec: ConstructionSpec, verify: bool, level: VerifyLevel, settings: QmdsSettings) -> QuantumParams:
    if verify:
        return from_certificate(build(spec, level, settings))
    params = hermitian_to_quantum(spec.n, spec.k, spec.q, spec.reference)
    return QuantumParams(params.q, params.n, params.k_q, params.d, params.provenance, spec, None)


def _preference(params: QuantumParams) -> Tuple[int, int, str]:
    return params.steps, len(params.provenance), params.provenance


def _order(params: QuantumParams) -> Tuple[int, int, int, str]:
    family_rank = list(Family).index(params.spec.family) if params.spec else len(Family)
    k = params.spec.k if params.spec else 0
    return family_rank, params.n, k, params.provenance


def enumerate_families(
    q: int,
    n_max: int,
    verify: bool = True,
    all_k: bool = False,
    level: "VerifyLevel | str" = VerifyLevel.FULL,
    workers: int = 1,
    settings: Optional[QmdsSettings] = None,
) -> List[QuantumParams]:
    """
    Quantum parameters of every legal family member with n <= n_max, each
    followed by one propagation step.  Identical (n, k_q, d) triples keep
    the direct construction, then the shortest provenance.
    """
    if n_max > q * q + 1:
        raise QuantumParamsError(f"n_max = {n_max} exceeds q^2 + 1 = {q * q + 1}")
    settings = settings or QmdsSettings()
    level = VerifyLevel(level)
    specs = _expand_k(list(family_specs(q, n_max)), all_k)
    logger.info("enumerating %d family members for q = %d, n <= %d", len(specs), q, n_max)

    if workers > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            direct = list(pool.map(lambda spec: _direct(spec, verify, level, settings), specs))
    else:
        direct = [_direct(spec, verify, level, settings) for spec in specs]

    best: Dict[Tuple[int, int, int], QuantumParams] = {}
    for params in direct:
        for candidate in (params, propagate(params)):
            singleton_defect(candidate)
            current = best.get(candidate.key)
            if current is None or _preference(candidate) < _preference(current):
                best[candidate.key] = candidate
    rows = sorted(best.values(), key=_order)
    logger.info("enumeration kept %d parameter triples", len(rows))
    return rows

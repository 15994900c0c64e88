"""
JSON documents for certificates and parameter tables.

Field elements are written as discrete logs to base omega, with -1 for zero;
the modulus polynomial (highest degree first) and omega are recorded once.
"""
from __future__ import annotations

import json
from typing import List, Literal, Optional

import numpy as np
from pydantic import BaseModel

from qmds.config import QmdsSettings
from qmds.constructions import ConstructionCertificate, ConstructionSpec, Verdicts
from qmds.errors import CertificateMismatchError
from qmds.gf import FieldCtx, field_for_q
from qmds.grs import GrsCode
from qmds.quantum import QuantumParams, from_certificate

SCHEMA_VERSION = 1
ZERO_LOG = -1


class FieldDocument(BaseModel):
    p: int
    e: int
    q: int
    modulus_poly: List[int]
    omega: int


class SpecDocument(BaseModel):
    family: str
    q: int
    s: int
    r: int
    t: Optional[int] = None
    k: int
    m: int
    n: int


class VerdictsDocument(BaseModel):
    gram_zero: Optional[bool] = None
    power_sum: Optional[bool] = None
    mds: Optional[bool] = None
    singleton_equality: Optional[bool] = None
    mds_mode: Optional[str] = None
    min_distance: Optional[int] = None


class QuantumDocument(BaseModel):
    q: int
    n: int
    k_q: int
    d: int
    label: str


class CertificateDocument(BaseModel):
    schema_version: Literal[1] = SCHEMA_VERSION
    field: FieldDocument
    spec: SpecDocument
    a: List[int]
    v: List[int]
    u: List[int]
    coset_reps: List[int]
    theta: int
    routing: str
    multiples: List[int]
    verdicts: VerdictsDocument
    quantum: QuantumDocument


class ParamsRow(BaseModel):
    family: Optional[str] = None
    q: int
    s: Optional[int] = None
    r: Optional[int] = None
    t: Optional[int] = None
    k: Optional[int] = None
    n: int
    k_q: int
    d: int
    provenance: str
    verified: Optional[bool] = None

    @property
    def label(self) -> str:
        return f"[[{self.n}, {self.k_q}, {self.d}]]_{self.q}"


def to_logs(indices) -> List[int]:
    return (np.asarray(indices, dtype=np.int64) - 1).tolist()


def from_logs(ctx: FieldCtx, logs: List[int]) -> np.ndarray:
    values = np.asarray(logs, dtype=np.int64)
    if values.size and (values.min() < ZERO_LOG or values.max() >= ctx.group_order):
        raise CertificateMismatchError(f"discrete logs outside [{ZERO_LOG}, {ctx.group_order - 1}]")
    return values + 1


def certificate_to_document(certificate: ConstructionCertificate) -> CertificateDocument:
    ctx = certificate.ctx
    spec = certificate.spec
    params = from_certificate(certificate)
    return CertificateDocument(
        field=FieldDocument(p=ctx.p, e=ctx.e, q=ctx.q, modulus_poly=list(ctx.modulus_poly), omega=ctx.omega),
        spec=SpecDocument(family=spec.family.value, q=spec.q, s=spec.s, r=spec.r, t=spec.t, k=spec.k, m=spec.m, n=spec.n),
        a=to_logs(certificate.code.a),
        v=to_logs(certificate.code.v),
        u=to_logs(certificate.u),
        coset_reps=to_logs(certificate.coset_reps),
        theta=int(certificate.theta) - 1,
        routing=certificate.routing,
        multiples=list(certificate.multiples),
        verdicts=VerdictsDocument(**certificate.verdicts.to_dict()),
        quantum=QuantumDocument(q=params.q, n=params.n, k_q=params.k_q, d=params.d, label=params.label()),
    )


def document_to_certificate(document: CertificateDocument, settings: Optional[QmdsSettings] = None) -> ConstructionCertificate:
    settings = settings or QmdsSettings()
    ctx = field_for_q(document.field.q, settings.field.table_bound)
    if tuple(document.field.modulus_poly) != ctx.modulus_poly or document.field.omega != ctx.omega:
        raise CertificateMismatchError(
            f"document field (modulus {document.field.modulus_poly}, omega {document.field.omega}) "
            f"differs from the canonical GF({ctx.order})"
        )
    raw = document.spec
    spec = ConstructionSpec.create(raw.family, raw.q, raw.s, k=raw.k, r=raw.r, t=raw.t)
    if (raw.m, raw.n) != (spec.m, spec.n):
        raise CertificateMismatchError(f"document records m = {raw.m}, n = {raw.n}; {spec.reference} has m = {spec.m}, n = {spec.n}")
    code = GrsCode(ctx, from_logs(ctx, document.a), from_logs(ctx, document.v), spec.k)
    return ConstructionCertificate(
        spec=spec,
        code=code,
        u=from_logs(ctx, document.u),
        coset_reps=tuple(from_logs(ctx, document.coset_reps).tolist()),
        theta=int(from_logs(ctx, [document.theta])[0]),
        routing=document.routing,
        multiples=tuple(document.multiples),
        verdicts=Verdicts(**document.verdicts.model_dump()),
    )


def dump_document(document: BaseModel) -> str:
    return json.dumps(document.model_dump(mode="json"), sort_keys=True, indent=2) + "\n"


def load_document(text: str) -> CertificateDocument:
    return CertificateDocument.model_validate(json.loads(text))


def row_from_params(params: QuantumParams) -> ParamsRow:
    spec = params.spec
    return ParamsRow(
        family=spec.family.value if spec else None,
        q=params.q,
        s=spec.s if spec else None,
        r=spec.r if spec else None,
        t=spec.t if spec else None,
        k=spec.k if spec else None,
        n=params.n,
        k_q=params.k_q,
        d=params.d,
        provenance=params.provenance,
        verified=params.verified,
    )

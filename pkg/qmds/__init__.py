"""
Hermitian self-orthogonal GRS codes over GF(q^2) and the quantum MDS codes they give.
"""

from .config import QmdsSettings
from .constructions import ConstructionCertificate, ConstructionSpec, Family, VerifyLevel, build
from .gf import FieldCtx, Fq2Elem, build_field, field_for_q
from .grs import GrsCode
from .quantum import QuantumParams, enumerate_families, propagate

__all__ = [
    "ConstructionCertificate",
    "ConstructionSpec",
    "Family",
    "FieldCtx",
    "Fq2Elem",
    "GrsCode",
    "QmdsSettings",
    "QuantumParams",
    "VerifyLevel",
    "build",
    "build_field",
    "enumerate_families",
    "field_for_q",
    "propagate",
]

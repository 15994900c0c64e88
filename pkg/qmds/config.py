from __future__ import annotations

from dataclasses import dataclass, field as dc_field


@dataclass
class FieldSettings:
    table_bound: int = 2**20


@dataclass
class VerificationSettings:
    exhaustive_subset_bound: int = 10**6
    sample_count: int = 10**5
    codeword_bound: int = 2**24
    chunk_size: int = 20_000
    seed: int = 0


@dataclass
class EnumerationSettings:
    workers: int = 1


@dataclass
class QmdsSettings:
    field: FieldSettings = dc_field(default_factory=FieldSettings)
    verification: VerificationSettings = dc_field(default_factory=VerificationSettings)
    enumeration: EnumerationSettings = dc_field(default_factory=EnumerationSettings)

    @classmethod
    def from_dict(cls, payload: dict) -> "QmdsSettings":
        field_data = payload.get("field", {})
        verification_data = payload.get("verification", {})
        enumeration_data = payload.get("enumeration", {})

        field_settings = FieldSettings(
            table_bound=int(field_data.get("table_bound", 2**20)),
        )
        verification = VerificationSettings(
            exhaustive_subset_bound=int(verification_data.get("exhaustive_subset_bound", 10**6)),
            sample_count=int(verification_data.get("sample_count", 10**5)),
            codeword_bound=int(verification_data.get("codeword_bound", 2**24)),
            chunk_size=int(verification_data.get("chunk_size", 20_000)),
            seed=int(verification_data.get("seed", 0)),
        )
        enumeration = EnumerationSettings(
            workers=int(enumeration_data.get("workers", 1)),
        )
        return cls(field=field_settings, verification=verification, enumeration=enumeration)

    def to_dict(self) -> dict:
        return {
            "field": {"table_bound": self.field.table_bound},
            "verification": {
                "exhaustive_subset_bound": self.verification.exhaustive_subset_bound,
                "sample_count": self.verification.sample_count,
                "codeword_bound": self.verification.codeword_bound,
                "chunk_size": self.verification.chunk_size,
                "seed": self.verification.seed,
            },
            "enumeration": {"workers": self.enumeration.workers},
        }

from __future__ import annotations

from typing import Any


class QmdsError(Exception):
    """Base class for every error raised by the qmds package."""


class FieldError(QmdsError, ValueError):
    pass


class TableBoundError(FieldError):
    pass


class DescentError(QmdsError, ValueError):
    """A lemma system failed a precondition of the subfield descent."""


class RankDeficitError(DescentError):
    pass


class RowEquivalenceError(DescentError):
    pass


class ZeroEntryError(DescentError):
    pass


class DescentRangeError(DescentError):
    pass


class SubsetBoundError(QmdsError, ValueError):
    pass


class EnumerationBoundError(QmdsError, ValueError):
    pass


class InvalidCodeError(QmdsError, ValueError):
    pass


class InvalidSpecError(QmdsError, ValueError):
    pass


class LemmaViolation(QmdsError):
    """A computed check contradicts an existence claim the constructions rely on."""


class ConstructionError(QmdsError):
    def __init__(self, message: str, certificate: Any = None):
        super().__init__(message)
        self.certificate = certificate


class QuantumParamsError(QmdsError, ValueError):
    pass


class SingletonViolationError(QuantumParamsError):
    pass


class MissingCertificateError(QuantumParamsError):
    pass


class PropagationError(QuantumParamsError):
    pass


class CertificateMismatchError(QmdsError):
    pass

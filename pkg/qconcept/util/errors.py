"""Exceptions raised by qconcept.

Every error is a ``ValueError``; law failures carry a ``witness`` tuple naming the
elements (or objects) at which the law breaks.
"""


class QConceptError(ValueError):
    """Base class for all package errors.

    Args:
        message: Human readable description.
        witness: Optional tuple of elements/objects where a check failed.
    """

    def __init__(self, message: str, witness: tuple | None = None):
        self.message = message
        self.witness = witness
        super().__init__(message)

    def __str__(self) -> str:
        if self.witness is None:
            return self.message
        return f"{self.message} - witness {self.witness}"


class ParseError(QConceptError):
    """Malformed input files or unknown element names."""


class ValidationError(QConceptError):
    """An algebraic law or structural invariant fails."""


class NotAPartialOrder(ValidationError):
    pass


class NotALattice(ValidationError):
    pass


class NotMonotone(ValidationError):
    pass


class NotJoinPreserving(ValidationError):
    pass


class NotAssociative(ValidationError):
    pass


class IdentityFailure(ValidationError):
    pass


class TypeMismatch(ValidationError):
    pass


class ShapeMismatch(ValidationError):
    pass


class FrameMismatch(ValidationError):
    pass


class TypeOutOfRange(ValidationError):
    pass


class NotReflexive(ValidationError):
    pass


class NotTransitive(ValidationError):
    pass


class NotAClosure(ValidationError):
    pass


class GaloisFailure(ValidationError):
    pass


class StrategyMismatch(ValidationError):
    """Brute force and generator closure disagree on a fixed-point set."""


class FibreTooLarge(QConceptError):
    """A fibre (or carrier) exceeds the configured size guard."""


class CarrierTooLarge(FibreTooLarge):
    """The direct oracle's function space exceeds the size guard."""


class OracleMismatch(QConceptError):
    """The quantaloid pipeline and the direct oracle disagree."""

"""Exception hierarchy shared by every module."""


class DomainError(ValueError):
    """Base class for errors raised by a well-formed request the domain rejects."""

    def to_dict(self):
        return {"error": type(self).__name__, "message": str(self)}


class EmptyWord(DomainError):
    pass


class InvalidCounts(DomainError):
    pass


class NotUnimodular(DomainError):
    pass


class NotCoprime(DomainError):
    pass


class ParseError(DomainError):
    def __init__(self, message, offset, expected):
        super().__init__(f"{message} at offset {offset}")
        self.offset = offset
        self.expected = frozenset(expected)

    def to_dict(self):
        d = super().to_dict()
        d["offset"] = self.offset
        d["expected"] = sorted(self.expected)
        return d


class ValidationError(DomainError):
    """A diagram parameter record violates one of its family's constraints."""

    def __init__(self, family, constraint):
        super().__init__(f"{family}: {constraint}")
        self.family = family
        self.constraint = constraint

    def to_dict(self):
        d = super().to_dict()
        d["family"] = self.family
        d["constraint"] = self.constraint
        return d


class RangeViolation(ValidationError):
    pass


class GcdViolation(ValidationError):
    pass


class LinearRelationViolation(ValidationError):
    pass


class UnknownFamily(DomainError):
    pass


class NoWordRealization(DomainError):
    pass


class PreconditionViolation(DomainError):
    pass


class NormalizesToRect(DomainError):
    """The n=1 form is already equivalent to the rectangular decomposition."""

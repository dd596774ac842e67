"""Exception hierarchy.

Everything raised on purpose derives from :class:`EhrhartError`.  Geometric
and numeric precondition failures are :class:`DomainError` (the CLI maps
them to exit status 3); malformed input text is :class:`ParseError`
(exit status 2).
"""


class EhrhartError(Exception):
    pass


class DomainError(EhrhartError, ValueError):
    pass


class ParseError(EhrhartError, ValueError):
    def __init__(self, message, line=None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class SingularMatrix(DomainError):
    pass


class NonConvex(DomainError):
    pass


class DuplicateVertex(DomainError):
    pass


class CollinearAll(DomainError):
    pass


class AffinelyDependent(DomainError):
    pass


class InvalidPolytope(DomainError):
    pass


class UnsupportedKind(DomainError):
    pass


class NotFullDimensional(DomainError):
    pass


class DegeneratePolytope(DomainError):
    pass


class NegativeDilation(DomainError):
    pass


class NonpositiveDilation(DomainError):
    pass


class ValidationFailed(EhrhartError):
    """An exact reconstruction failed to reproduce a brute-force count."""


class AtBreakpoint(DomainError):
    pass


class FreeIndex(DomainError):
    pass


class InvalidParams(DomainError):
    pass


class NotDimensionTwo(DomainError):
    pass

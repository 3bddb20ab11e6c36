"""Exception hierarchy for Cyclic Structures."""


class CyclicError(Exception):
    """Base exception for every error raised by the library.

    All custom exceptions inherit from this base class, allowing
    catch-all handling in the CLI and the facade while keeping
    the specific type for tests.
    """

    def __init__(self, message: str, details: str = "") -> None:
        """Initialize exception with message and optional details.

        Args:
            message: Human-readable error message
            details: Technical details for debugging

        """
        super().__init__(message)
        self.message = message
        self.details = details


class InvalidMorphismError(CyclicError):
    """Raised when a morphism violates its structural invariants."""


class CompositionError(CyclicError):
    """Raised when two morphisms are not composable."""


class IndexRangeError(CyclicError):
    """Raised when a generator or face index is out of range."""


class NotAnAutomorphismError(CyclicError):
    """Raised when an automorphism of [n] is required but not given."""


class InvalidSequenceError(CyclicError):
    """Raised when a monotone sequence, barycentric point or F(n) tuple is malformed."""


class GroupMembershipError(CyclicError):
    """Raised when an element does not lie in the subgroup generated by [1, z]."""


class NotACyclicStructureError(CyclicError):
    """Raised when the audits run by classification fail."""


class TruncationError(CyclicError):
    """Raised when a computation needs a level above the stored truncation."""


class CircleAxiomError(CyclicError):
    """Raised when an abstract circle fails its axiom audit."""


class ExpressionParseError(CyclicError):
    """Raised when a morphism expression cannot be parsed.

    The offending token is kept in ``token`` so the CLI can name it.
    """

    def __init__(self, message: str, token: str = "", details: str = "") -> None:
        """Initialize with the offending token.

        Args:
            message: Human-readable error message
            token: Token that could not be parsed
            details: Technical details for debugging

        """
        super().__init__(message, details)
        self.token = token


class PayloadError(CyclicError):
    """Raised when a JSON payload is malformed or has the wrong shape."""


class CyclicValidationError(CyclicError):
    """Raised when a command line value fails validation."""


class RegistryError(CyclicError):
    """Raised when a model is unknown or registered twice."""

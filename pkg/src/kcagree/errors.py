"""Exception types shared across the package."""


class KcagreeError(Exception):
    """Base class for all package-specific errors."""


class MalformedPairCode(KcagreeError):
    """A bit string is not a valid self-delimiting pair encoding."""


class PadTooSmall(KcagreeError):
    """Requested padded length cannot be reached from the given pair."""


class LengthMismatch(KcagreeError):
    """An input bit string has the wrong length for the operation."""


class DomainTooLarge(KcagreeError):
    """An exhaustive enumeration would exceed its configured guard."""


class BudgetExceeded(KcagreeError):
    """An enumeration ran past its wall-time budget."""


class RuntimeBoundExceeded(KcagreeError):
    """A protocol strategy exceeded its declared per-run step bound."""


class EmbeddingTooLong(KcagreeError):
    """A hash-embedded transcript does not fit the target pair length."""


class ValidationError(KcagreeError):
    """A configuration value violates an operation's preconditions."""

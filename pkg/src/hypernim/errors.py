"""Exception types raised across the package."""


class HypernimError(Exception):
    """Base class for all package errors."""


class SpectrumError(HypernimError, ValueError):
    """Invalid spectrum or hypergraph construction."""


class IllegalMoveError(HypernimError, ValueError):
    """A move was requested that the rules do not allow."""


class DomainError(HypernimError, ValueError):
    """A formula was evaluated outside the domain where it is defined."""


class ResourceLimitError(HypernimError, MemoryError):
    """A box computation would exceed the configured position budget."""


class CacheIntegrityError(HypernimError):
    """A persisted table does not match its metadata sidecar."""

"""Exception types shared across the toolkit."""


class MonoqError(Exception):
    """Base class for all toolkit errors."""


class NormalizationError(MonoqError):
    """State amplitudes do not have unit norm."""


class InvalidSubsystemError(MonoqError):
    """A subsystem selection is empty, unknown, or trivial."""


class HermiticityError(MonoqError):
    """Matrix is not Hermitian within tolerance."""


class PositivityError(MonoqError):
    """Eigenvalue below the numerical positivity floor."""


class SizeError(MonoqError):
    """Dimension or qubit count outside the supported range."""


class ParameterError(MonoqError):
    """Scalar parameter outside its admissible range."""


class DomainError(MonoqError):
    """Function argument outside its domain."""


class UnsupportedStateClassError(MonoqError):
    """The requested quantity has no computable form for the given state class."""


class PreconditionError(MonoqError):
    """A bound was requested for a state that does not satisfy its hypothesis."""


class ConfigError(MonoqError):
    """Campaign configuration is malformed."""


class IoError(MonoqError):
    """File could not be read or written."""

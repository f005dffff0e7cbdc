class LogWError(Exception):
    """Base class for every error raised by the toolkit."""


class ConfigurationError(LogWError):
    """Unsupported Lie type/rank or an unusable setting."""


class ArgumentError(LogWError, ValueError):
    """A precondition of an operation does not hold."""


class UnsupportedSectorError(ArgumentError):
    """Narrow screening requested on a sector with s_i != 0."""


class ResourceLimitError(LogWError):
    """A configured cap (basis size, |W|, |Lambda|) would be exceeded."""


class CertificationError(LogWError):
    """An exact identity the computation relies on failed."""

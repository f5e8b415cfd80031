"""Exception hierarchy shared across the package."""


class GdsError(Exception):
    """Base class for all errors raised by this package."""


class InputError(GdsError):
    """Malformed user input (bad generator arrays, unparsable files)."""


class CapacityError(GdsError):
    """A configured size cap was exceeded; the message names the cap."""


class DomainError(GdsError):
    """Operation applied outside its mathematical domain."""


class ConfigError(GdsError):
    """No valid configuration could be found (e.g. no usable modulus)."""


class UndefinedValueError(GdsError):
    """Requested quantity is undefined for the given input."""


class FactorizationError(GdsError):
    """Factoring gave up within the allotted budget."""

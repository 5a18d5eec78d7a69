"""Exception taxonomy shared by all modules.

The CLI maps these onto exit codes: InputError -> 1, DomainError -> 2,
ResourceLimitError -> 3.
"""


class InputError(ValueError):
    """Malformed input: bad vertices, faces outside the complex, parse errors."""


class DomainError(Exception):
    """A mathematical precondition fails (non-APC, non-shifted, disconnected...)."""


class ResourceLimitError(Exception):
    """A configured cap (subset count, symbolic-determinant size) was exceeded."""


class ExactnessError(ArithmeticError):
    """An operation that must be exact (division, integrality assert) was not."""

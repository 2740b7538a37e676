"""Exception types shared across the package.

The CLI maps these to exit codes: ``InputError`` -> 2,
``ResourceLimitError`` -> 3.  ``ConsistencyError`` signals a broken
internal invariant and is never expected on valid input.
"""


class InputError(ValueError):
    """Malformed or out-of-contract input (bad parse, rank mismatch, ...)."""


class ResourceLimitError(RuntimeError):
    """Input within the contract but beyond the configured size guards."""


class ConsistencyError(RuntimeError):
    """An internal invariant failed; indicates a bug, not bad input."""

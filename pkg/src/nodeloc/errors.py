"""Exception taxonomy shared across the package.

The CLI maps these onto exit codes: input/format/usage problems exit 2,
capacity-guard refusals exit 3, internal invariant violations exit 4.
"""


class NodelocError(Exception):
    """Base class for all errors raised by this package."""


class InputError(NodelocError):
    """An argument violates an operation's precondition (bad id, bad k, ...)."""


class FormatError(NodelocError):
    """A document, path list, or outcome map does not match its schema."""


class UsageError(NodelocError):
    """The request cannot be satisfied as posed (e.g. UP analysis without paths)."""


class CapacityError(NodelocError):
    """An exhaustive computation would exceed its configured size guard."""


class InternalError(NodelocError):
    """An internal invariant was violated; indicates a bug, not bad input."""

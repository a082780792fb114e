# network/errors.py

"""
Exceptions shared by every package of the module-search toolkit.

All of them derive from ValueError so callers that only guard against bad
input keep working; the CLI maps the concrete classes to exit codes.
"""


class ModuleSearchError(ValueError):
    """Base class for input and feasibility errors."""


class GraphFormatError(ModuleSearchError):
    """Malformed edge-list input."""

    def __init__(self, message, line_number=None):
        self.line_number = line_number
        if line_number is not None:
            message = f"line {line_number}: {message}"
        super().__init__(message)


class NotSimpleGraphError(ModuleSearchError):
    """Operation needs 0/1 weights."""


class InvalidPartitionError(ModuleSearchError):
    pass


class InvalidCoverError(ModuleSearchError):
    pass


class CapExceededError(ModuleSearchError):
    """An explicit size cap (enumeration, memory) was exceeded."""

    def __init__(self, what, n, cap):
        self.what = what
        self.n = n
        self.cap = cap
        super().__init__(f"{what} supports at most {cap} nodes, got {n}")


class UnsupportedCaseError(ModuleSearchError):
    pass

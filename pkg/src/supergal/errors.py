"""Exception hierarchy shared by the pipeline and the CLI."""


class SupergalError(Exception):
    """Base class for all errors raised by supergal."""


class PreconditionError(SupergalError, ValueError):
    """The input violates a hypothesis of the method (CLI exit code 2)."""


class ConsistencyError(SupergalError, RuntimeError):
    """An internal cross-check failed (CLI exit code 3).

    ``diagnostics`` carries whatever state is useful for a bug report.
    """

    def __init__(self, message, diagnostics=None):
        super().__init__(message)
        self.diagnostics = diagnostics or {}

"""Exception types shared across the package."""


class InputError(ValueError):
    """Malformed graph file, matrix document or walk."""


class CapExceeded(RuntimeError):
    """An enumeration hit its configured size cap; the result would be incomplete."""

    def __init__(self, what, cap):
        super().__init__(f"{what} exceeded cap of {cap}")
        self.what = what
        self.cap = cap


class InternalInconsistency(AssertionError):
    """A construction produced something the underlying theory rules out."""

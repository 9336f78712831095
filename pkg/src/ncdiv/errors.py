"""Exception hierarchy; every error carries a stable machine-readable code."""


class NcdivError(Exception):
    code = "error"


class InputError(NcdivError):
    code = "input-error"


class NotOnDivisorError(InputError):
    code = "origin-not-on-divisor"


class NonReducedError(InputError):
    code = "non-reduced"

    def __init__(self, message: str, witness=None):
        super().__init__(message)
        self.witness = witness


class NotFreeError(InputError):
    code = "not-free"


class NoAdmissibleIndexError(NcdivError):
    code = "no-admissible-index"


class InternalError(NcdivError):
    """An exact cross-check disagreed; this indicates a bug, never bad input."""

    code = "internal-error"

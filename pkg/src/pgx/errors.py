"""Exception types shared across the library."""


class PgxError(Exception):
    """Base class for all library errors."""


class InputError(PgxError):
    """Bad user input: malformed spec strings, parameters violating a
    constructor's hypotheses, unreadable Cayley files. Maps to CLI exit 3."""


class ResourceError(PgxError):
    """An operation would exceed a configured size cap."""


class InvariantError(PgxError):
    """An internal exact-arithmetic or consistency invariant failed.

    These are hard errors: a parity violation or a non-exact division means
    either a bug or corrupted input data, never something to round away.
    """

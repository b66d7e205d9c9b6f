"""Exception hierarchy shared by every module and mapped to CLI exit codes."""


class GridivError(Exception):
    """Base class for all library errors."""

    exit_code = 1


class InputError(GridivError, ValueError):
    exit_code = 2


class OracleDisagreement(GridivError):
    """Two independent routes produced different answers."""

    exit_code = 3


class SizeError(GridivError):
    """A brute-force or DP size guard was exceeded."""

    exit_code = 4


class FittingError(GridivError):
    """A fitted polynomial failed its degree or spot-value check.

    ``n`` is the abscissa of the first offending value (None for degree
    failures).
    """

    exit_code = 3

    def __init__(self, message, n=None):
        super().__init__(message)
        self.n = n

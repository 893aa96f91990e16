"""Exception hierarchy shared by the library and the command line tool."""


class LotkaLawError(Exception):
    """Base class for every error this package raises on purpose."""


class DataError(LotkaLawError):
    """Malformed or out-of-domain input: bad records, bad tables, bad values."""


class NumericError(LotkaLawError):
    """A computation cannot proceed: degenerate regression, divergent series."""

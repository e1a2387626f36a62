"""Exception types shared across the package."""


class Error(Exception):
    """Base class for all package errors."""


class InvalidArgumentError(Error, ValueError):
    """An argument violates an operation's stated precondition."""


class AlphabetMismatchError(Error, ValueError):
    """A word or letter does not fit the required alphabet."""


class NotInLanguageError(Error, LookupError):
    """The queried word is not a factor of the indexed source."""


class InsufficientContextError(Error):
    """The data witnessed so far cannot answer the query."""


class PreconditionError(Error):
    """A checker's structural precondition failed on the given data."""

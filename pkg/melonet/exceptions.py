""" Exceptions """

from typing import Union


class MelonetError(Exception):
    """ Base exception for every error raised by `melonet`. """
    pass


class ParseError(MelonetError, ValueError):
    """ Exception thrown when a score, edge list or network document cannot be parsed.

    Attributes
    ----------
    reason: `str`
        The description of the parse failure.
    line: `Union[int, None]`
        The 1-based line number of the offending input line, when known.
    source: `Union[str, None]`
        The name of the offending input, when known.
    """

    def __init__(
        self,
        reason: str,
        line: Union[int, None] = None,
        source: Union[str, None] = None
    ):
        self.reason = reason
        self.line = line
        self.source = source
        super().__init__(self.__str__())

    def __str__(self):
        prefix = ':'.join(
            str(part) for part in [self.source, self.line] if part is not None
        )
        if prefix:
            return '%s: %s' % (prefix, self.reason)
        return self.reason


class DomainError(MelonetError, ValueError):
    """ Exception thrown when an operation is called outside of its domain, e.g. an empty melody. """
    pass


class InvariantError(MelonetError, RuntimeError):
    """ Exception thrown when an internal invariant does not hold. """
    pass


class CorpusError(MelonetError):
    """ Exception thrown when a corpus has no inputs or no track could be analyzed. """
    pass

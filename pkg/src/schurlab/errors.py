"""Shared error taxonomy.

PreconditionError: the input violates a documented precondition (bad shape,
degenerate configuration, unsupported field).  CLI exit code 2.

ClaimError: a mathematical claim that should hold for valid input failed;
indicates corrupted data or an internal inconsistency.  CLI exit code 3.
"""


class SchurlabError(Exception):
    pass


class PreconditionError(SchurlabError):
    pass


class ClaimError(SchurlabError):
    pass

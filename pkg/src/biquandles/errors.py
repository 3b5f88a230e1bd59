"""Error types shared across the package.

ParseError covers malformed input text (braid words, presentation files, table
files, command lines). DomainError covers well-formed input that violates a
mathematical precondition (non-unit scalars, non-prime moduli, non-square
systems, oversized carriers).
"""


class ParseError(ValueError):
    pass


class DomainError(ValueError):
    pass

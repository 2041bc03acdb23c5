"""Exception taxonomy shared across the package.

Three failure classes map onto the CLI exit-code contract: bad input
(usage, exit 64), bad mathematical input to an operation (also surfaced
as usage at the boundary), and internal consistency failures (exit 1),
which signal a bug rather than bad input.
"""


class UsageError(ValueError):
    """Invalid configuration: cap violations, non-prime base entries, bad flags."""


class DomainError(ValueError):
    """An operation was called outside its mathematical domain."""


class RecheckError(RuntimeError):
    """A computed witness or certificate failed its independent recheck."""

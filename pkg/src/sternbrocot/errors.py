"""Exception hierarchy shared across the package.

The CLI maps these onto exit codes: parse errors -> 2, domain errors -> 3,
invariant violations (bugs, by definition) -> 4.
"""


class ParseError(ValueError):
    """Malformed textual input (rational, continued fraction, range)."""


class DomainError(ValueError):
    """Operation applied outside its mathematical domain."""


class DegenerateFunnelError(DomainError):
    """Funnel requested for an integer: the defining ray passes through vertices."""


class InvariantViolation(RuntimeError):
    """A proved identity failed to hold; always an implementation bug."""

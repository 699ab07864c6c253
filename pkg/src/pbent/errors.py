"""Exception taxonomy shared across the package.

Distinct types map to distinct CLI exit codes: parse errors, violated
operation preconditions, size-budget refusals, and internal-consistency
failures (which indicate a bug, never a user mistake).
"""


class ParseError(ValueError):
    """Input text that does not match a documented grammar."""


class PreconditionError(ValueError):
    """An operation was called outside its stated domain."""


class BudgetError(ValueError):
    """Requested computation exceeds the configured size budget."""


class InternalInconsistency(RuntimeError):
    """A self-check that can only fail on an implementation bug."""

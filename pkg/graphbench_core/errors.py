"""
Exceptions raised by the workbench.

Every error derives from GraphbenchError so the command line can map the whole family
to a usage/capacity exit status without swallowing programming errors.
"""


class GraphbenchError(Exception):
    pass


class GraphValidationError(GraphbenchError, ValueError):
    """A graph, relation or file that does not describe a valid simple structure."""


class CapacityError(GraphbenchError):
    """A request exceeds the exhaustive-search limits of a module."""
    def __init__(self, message, module, limit=None):
        super().__init__(message)
        self.module = module
        self.limit = limit


class DomainError(GraphbenchError, ValueError):
    def __init__(self, message, vertex=None):
        super().__init__(message)
        self.vertex = vertex


class PreconditionError(GraphbenchError, ValueError):
    pass


class InfeasibleSpecError(PreconditionError):
    """Margins or a score sequence that no state realises."""


class UndefinedIndexError(GraphbenchError):
    pass


class NumericError(GraphbenchError, ArithmeticError):
    pass


class UnknownClaimError(GraphbenchError, KeyError):
    def __init__(self, claim_id):
        super().__init__(f"Unknown claim id: {claim_id}")
        self.claim_id = claim_id

    def __str__(self):
        return self.args[0]


class UsageError(GraphbenchError):
    pass

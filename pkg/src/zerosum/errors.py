"""Shared exception types."""


class ZeroSumError(Exception):
    """Base class for all library errors."""


class EmptyGroup(ZeroSumError):
    pass


class BadOrder(ZeroSumError):
    pass


class RankMismatch(ZeroSumError):
    pass


class BadParams(ZeroSumError):
    pass


class ParseError(ZeroSumError):
    pass


class BadPartition(ZeroSumError):
    pass


class PreconditionFailed(ZeroSumError):
    """A stated hypothesis of a construction or bound does not hold."""


class NoAdmissibleEll(ZeroSumError):
    pass


class PGroup(ZeroSumError):
    """The group is a p-group, so non-p-group formulas do not apply."""


class PrimePower(ZeroSumError):
    pass


class BudgetExceeded(ZeroSumError):
    """A search or table exceeded its configured budget.

    Exhaustive searches attach the best lower bound proven before the
    budget ran out (``lower_bound``, with a ``witness`` sequence) so a
    truncated run still yields usable information.
    """

    def __init__(self, message, lower_bound=None, witness=None, nodes=None):
        super().__init__(message)
        self.lower_bound = lower_bound
        self.witness = witness
        self.nodes = nodes

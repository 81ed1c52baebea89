"""Exception types shared across the toolkit."""


class DihedrantError(Exception):
    """Base class for all toolkit errors."""


class InvalidElement(DihedrantError, ValueError):
    pass


class NotAUnit(DihedrantError, ValueError):
    pass


class BudgetExceeded(DihedrantError, RuntimeError):
    """A search or enumeration hit its configured cap before finishing.

    Callers that can report an ``unknown`` verdict catch this; nothing in
    the toolkit turns an exhausted budget into a yes/no answer.
    """


class NeedsClosure(DihedrantError, RuntimeError):
    pass


class NotASubgroup(DihedrantError, ValueError):
    pass


class NotTransitive(DihedrantError, ValueError):
    pass


class InvalidPermutation(DihedrantError, ValueError):
    pass


class InvalidPartition(DihedrantError, ValueError):
    pass


class InvalidConnectionSet(DihedrantError, ValueError):
    pass


class InvalidTriple(DihedrantError, ValueError):
    pass


class InvalidParameter(DihedrantError, ValueError):
    pass


class UsageError(DihedrantError, ValueError):
    pass

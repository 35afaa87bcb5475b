"""Exception hierarchy shared by all modules."""


class IntvertError(Exception):
    """Base class for every error raised by this package."""


class ParameterError(IntvertError, ValueError):
    pass


class DimensionError(ParameterError):
    """Operand shapes do not fit together."""


class SingularMatrixError(IntvertError, ArithmeticError):
    pass


class RankError(IntvertError, ValueError):
    """The constraint matrix does not have full column rank."""


class BudgetError(IntvertError):
    """An enumeration would exceed its configured budget.

    Budgets are never applied silently: a truncated enumeration would make
    every downstream check meaningless.
    """

    def __init__(self, name, needed, limit):
        self.name = name
        self.needed = needed
        self.limit = limit
        super().__init__(f"budget '{name}' exceeded: need {needed}, limit {limit}")


class InfeasibleError(IntvertError):
    pass


class UnboundedError(IntvertError):
    pass


class EmptySetError(IntvertError, ValueError):
    pass


class GenerationError(IntvertError):
    pass


class InstanceParseError(IntvertError, ValueError):
    def __init__(self, message, line=None):
        self.line = line
        prefix = f"line {line}: " if line is not None else ""
        super().__init__(prefix + message)

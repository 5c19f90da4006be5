"""Exception types raised by the solver."""


class DynastyError(Exception):
    """Base class for all solver errors."""


class InvalidParams(DynastyError, ValueError):
    pass


class NoRoot(DynastyError):
    pass


class DegenerateLimit(DynastyError):
    pass


class NonPositive(DynastyError):
    pass


class NotApplicable(DynastyError):
    pass


class UnderflowError(DynastyError, ArithmeticError):
    pass


class EmptyStream(DynastyError, ValueError):
    pass


class DegenerateStream(DynastyError, ValueError):
    pass


class GridEscape(DynastyError):
    pass


class InfeasibleBox(DynastyError):
    pass


class ConfigError(DynastyError):
    pass

class DomainError(ValueError):
    """An argument lies outside the mathematical domain of an operation."""


class ConvergenceError(RuntimeError):
    """A root or extremum search failed to bracket its target."""


class InfeasibleError(ArithmeticError):
    """A truncated linear program has no feasible point."""

"""Exception types raised by qubit_thermometry."""


class DomainError(ValueError):
    """An argument lies outside the mathematical domain of an operation."""


class RootBracketError(RuntimeError):
    """A sign change could not be bracketed for a landmark root.

    Attributes:
        bracket: the last (lo, hi) interval examined.
        values: the function values at the ends of ``bracket``.
    """

    def __init__(self, message, bracket, values):
        super().__init__(f"{message} (bracket={bracket}, values={values})")
        self.bracket = bracket
        self.values = values


class ConvergenceError(RuntimeError):
    """An iterative solver failed to converge.

    Attributes:
        iterations: number of sweeps performed.
        residual: the convergence measure at termination.
    """

    def __init__(self, message, iterations, residual):
        super().__init__(f"{message} (iterations={iterations}, residual={residual:.3e})")
        self.iterations = iterations
        self.residual = residual

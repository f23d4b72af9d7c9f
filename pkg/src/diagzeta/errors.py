"""Exception hierarchy shared by the evaluators and the CLI."""


class DomainError(ValueError):
    """Argument outside the region where an evaluator is defined."""


class PoleError(DomainError):
    """Some j*s lands on the pole of the Riemann zeta function at 1."""

    def __init__(self, s, j):
        self.s = s
        self.j = j
        super().__init__(f"pole: {j}*s = 1 at s = {s!r}")


class DivergenceError(DomainError):
    """A truncated-series oracle was requested outside s > 1."""


class NoClosedFormError(DomainError):
    """No exact closed form exists at the requested argument (odd positive s)."""


class InconclusiveError(ArithmeticError):
    """A numeric sign certificate fell inside the error budget."""

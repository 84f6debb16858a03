"""Error types raised by the simulation core."""


class NoNullSpace(ValueError):
    """Fewer than two jammers: the null-steering weight vector is degenerate."""


class DegenerateChannel(ValueError):
    """A channel vector is identically zero where a direction is required."""


class DegenerateDenominator(ArithmeticError):
    """Ratio denominator is not strictly positive on the evaluation domain."""


class InfeasibleInterval(ValueError):
    """Search interval is empty (lower endpoint above upper endpoint)."""


class InfeasibleRate(ValueError):
    """Target rate cannot be met by any power split within the budget."""

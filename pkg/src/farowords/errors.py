class DomainError(ValueError):
    """An argument lies outside the domain of an operation."""


class PatternSyntaxError(ValueError):
    """Malformed step-pattern text."""

    def __init__(self, message: str, text: str, position: int):
        super().__init__(f"{message} at position {position} in {text!r}")
        self.text = text
        self.position = position


class SeriesError(ArithmeticError):
    """A power-series operation has no power-series result."""


class CapExceeded(ValueError):
    """A request is larger than the exhaustive-enumeration caps allow."""

"""Exception hierarchy.

``Refusal`` and its subclasses mark *mathematical* refusals: the input is
well-formed but violates a precondition of the requested computation (a
non-reduced divisor, a basis that is not logarithmic, ...).  The CLI maps
them to exit code 2.  Parse and I/O problems map to exit code 1.
"""


class LogdivError(Exception):
    pass


class ParseError(LogdivError):
    """Syntax or vocabulary error in polynomial / problem-file input."""

    def __init__(self, message: str, line: int | None = None, col: int | None = None):
        self.line = line
        self.col = col
        if line is not None:
            message = f"{message} (line {line}, column {col})"
        super().__init__(message)


class FieldMismatch(LogdivError):
    """Arithmetic between values over different coefficient fields."""


class Refusal(LogdivError):
    """A precondition of the requested operation does not hold."""


class NotHomogeneous(Refusal):
    pass


class NotSquarefree(Refusal):
    pass


class NotLogarithmic(Refusal):
    """A candidate derivation does not preserve the divisor ideal."""


class NotFree(Refusal):
    """No Saito-type certificate: the divisor is not certified free."""


class MixedDegrees(Refusal):
    """Generators of unequal degrees where a common degree is required."""


class GenericityFailure(Refusal):
    """Random choices kept producing degenerate geometry (retry budget hit)."""


class CurveInsideDivisor(Refusal):
    """A test curve lies inside the divisor, so pullbacks are undefined."""


class NonIntegralClass(Refusal):
    """A characteristic-class computation produced non-integer coefficients."""


class SaturationDiverged(LogdivError):
    """Quotient iteration failed to stabilise within the round bound."""

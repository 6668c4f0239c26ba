"""Exception hierarchy shared by the library and the command line."""


class BettiError(Exception):
    """Base class for every error raised by rncbetti."""

    code = "BettiError"

    def to_dict(self):
        return {"error": self.code, "message": str(self)}


class InvalidType(BettiError, ValueError):
    code = "InvalidType"


class DegreeMismatch(BettiError, ValueError):
    code = "DegreeMismatch"


class ParseError(BettiError, ValueError):
    code = "ParseError"

    def __init__(self, message, position=None):
        if position is not None:
            message = f"{message} (at position {position})"
        super().__init__(message)
        self.position = position

    def to_dict(self):
        out = super().to_dict()
        if self.position is not None:
            out["position"] = self.position
        return out


class NotFiniteLength(BettiError):
    """The Hilbert numerator of a table is not divisible by (1-t)^2."""

    code = "NotFiniteLength"


class NotFiniteColength(BettiError):
    code = "NotFiniteColength"


class UnsupportedShape(BettiError, ValueError):
    code = "UnsupportedShape"


class InfeasibleClass(BettiError, ValueError):
    code = "InfeasibleClass"


class NotInCone(BettiError):
    """Greedy decomposition got stuck.

    ``terms`` holds the (coefficient, type) pairs subtracted so far and
    ``remainder`` the table that could not be reduced further.
    """

    code = "NotInCone"

    def __init__(self, message, terms=(), remainder=None):
        super().__init__(message)
        self.terms = list(terms)
        self.remainder = remainder

    def to_dict(self):
        out = super().to_dict()
        out["terms"] = [[str(c), list(t.key())] for c, t in self.terms]
        if self.remainder is not None:
            out["remainder"] = [[i, j, str(v)] for (i, j), v in sorted(self.remainder.items())]
        return out

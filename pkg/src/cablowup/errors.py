class CABlowupError(Exception):
    pass


class InvalidInput(CABlowupError, ValueError):
    pass


class GermParseError(InvalidInput):
    """Raised for malformed germ or quotient literals; carries the offending position."""

    def __init__(self, message, text="", position=0):
        self.text = text
        self.position = position
        if text:
            message = f"{message} at position {position}: {text!r}"
        super().__init__(message)


class UnsupportedShape(CABlowupError):
    """A chart or surface configuration outside what the local analysis can decide."""


class Inconsistency(CABlowupError):
    """An internal identity failed (e.g. a non-integral resolved K^2)."""

"""Exception types shared across the engine."""


class AhpError(Exception):
    """Base class for all errors raised by this package."""


class ValidationError(AhpError):
    """A domain rule was violated (bad judgment, defective hierarchy, missing data).

    ``defects`` carries the structured defect list when the error came out of
    hierarchy validation; otherwise it is empty.
    """

    def __init__(self, message, defects=()):
        super().__init__(message)
        self.defects = tuple(defects)


class ConvergenceError(AhpError):
    """Power iteration failed to converge within the iteration cap."""

    def __init__(self, message, last_iterate, iterations):
        super().__init__(message)
        self.last_iterate = tuple(float(x) for x in last_iterate)
        self.iterations = int(iterations)


class SchemaError(AhpError):
    """A document could not be parsed or failed schema validation.

    ``line``/``column`` are set for syntax errors, ``path`` for schema
    violations (dotted field path into the document).
    """

    def __init__(self, message, line=None, column=None, path=None):
        super().__init__(message)
        self.line = line
        self.column = column
        self.path = path

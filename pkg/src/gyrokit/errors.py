"""Exception types shared across the package."""


class GyrokitError(Exception):
    """Base class for all package errors."""


class TableFormatError(GyrokitError):
    """Malformed input: wrong shape, out-of-range index, unparseable file.

    Distinct from axiom failure, which is reported through AxiomReport.
    """

    def __init__(self, message, line=None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class BudgetError(GyrokitError):
    """A closure or search exceeded its configured element budget."""


class InconsistencyError(GyrokitError):
    """An internal check failed that validated inputs make impossible.

    Raised instead of a report: such a state indicates a bug or a corrupted
    structure, never a property of the user's input.
    """

"""Exception hierarchy shared by the library and the command line front end.

Every error carries the process exit code the CLI maps it to, so ``main`` can
catch ``ContextiumError`` once and translate it.
"""


class ContextiumError(Exception):
    """Base class for all contextium failures."""

    exit_code = 1


class UsageError(ContextiumError):
    """Unknown names, missing files and malformed command-line values."""

    exit_code = 2


class DataValidationError(ContextiumError):
    """Input data violates a structural precondition."""

    exit_code = 3


class NonHermitianError(DataValidationError):
    pass


class InvalidStateError(DataValidationError):
    pass


class DimensionMismatchError(DataValidationError):
    pass


class NonCommutingError(DataValidationError):
    """Raised when a pair that must commute does not, carrying the offending norm."""

    def __init__(self, message: str, commutator_norm: float, tolerance: float):
        super().__init__(f"{message} (‖[A,B]‖_op = {commutator_norm:.3e} > tol {tolerance:.3e})")
        self.commutator_norm = commutator_norm
        self.tolerance = tolerance


class NumericalError(ContextiumError):
    """Eigensolver failures and quantities that leave their admissible range."""

    exit_code = 4

"""Exception types shared across the package."""


class StateValidationError(ValueError):
    """A matrix failed one of the density-matrix invariants."""


class NotHermitian(StateValidationError):
    def __init__(self, deviation, tol):
        self.deviation = deviation
        self.tol = tol
        super().__init__(
            f"matrix is not Hermitian: max entrywise deviation {deviation:.3e} "
            f"exceeds tolerance {tol:.3e}"
        )


class TraceNotOne(StateValidationError):
    def __init__(self, trace, tol):
        self.trace = trace
        self.tol = tol
        super().__init__(
            f"trace is not one: got {trace!r}, tolerance {tol:.3e}"
        )


class NotPositive(StateValidationError):
    def __init__(self, min_eigenvalue, tol):
        self.min_eigenvalue = min_eigenvalue
        self.tol = tol
        super().__init__(
            f"matrix is not positive semidefinite: smallest eigenvalue "
            f"{min_eigenvalue:.6e} below -{tol:.3e}"
        )


class LengthMismatch(ValueError):
    pass


class DimensionMismatch(ValueError):
    pass


class OutOfRange(ValueError):
    pass


class SpecViolation(ValueError):
    """An extremal-family parameter set violates its constraints."""


class IndexOutOfRange(IndexError):
    pass


class ConvergenceFailure(RuntimeError):
    def __init__(self, residual, steps):
        self.residual = residual
        self.steps = steps
        super().__init__(
            f"diagonal sweep did not converge after {steps} steps "
            f"(residual {residual:.3e})"
        )

"""Exception hierarchy shared by the arithmetic, solver and CLI layers."""


class Hilbert2pError(Exception):
    pass


class DomainError(Hilbert2pError, ValueError):
    """Argument outside the domain where an operation is defined."""


class InvariantViolation(Hilbert2pError):
    """An internal invariant failed; indicates a bug, not bad input."""


class UnsolvableError(Hilbert2pError):
    """The norm-form equation has no solution under the stated hypotheses."""


class SearchExhausted(Hilbert2pError):
    """No solution was found below the search limit (existence not refuted)."""

    def __init__(self, p: int, u_limit: int):
        super().__init__(f"no odd solution with u <= {u_limit} for p = {p}")
        self.p = p
        self.u_limit = u_limit


class IntegralizationError(Hilbert2pError):
    def __init__(self, g_plus: int, g_minus: int):
        super().__init__(
            f"cannot make r integral: gcd(t - 2fs, e) = {g_plus}, gcd(t + 2fs, e) = {g_minus}"
        )
        self.g_plus = g_plus
        self.g_minus = g_minus

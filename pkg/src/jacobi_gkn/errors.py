"""Exception hierarchy shared across the package."""


class JacobiGKNError(Exception):
    """Base class for all errors raised by this package."""


class DegenerateParameter(JacobiGKNError):
    """A second-kind germ was requested at an endpoint whose parameter is 0.

    The exact second solution then carries a logarithm, which lies outside
    the term algebra.
    """


class IndeterminateLimit(JacobiGKNError):
    """A boundary form diverged; the inputs are not both in the maximal domain."""


class PreconditionViolated(JacobiGKNError):
    pass


class SingularSystem(JacobiGKNError):
    """An exact linear system that should be uniquely solvable was not."""


class NotUnitary(JacobiGKNError):
    pass


class NoGlobalForm(JacobiGKNError):
    """Pointwise evaluation was requested for a germ-only function."""


class ToleranceNotMet(JacobiGKNError):
    pass

"""Exception hierarchy shared by every module."""


class GroverHashError(Exception):
    """Base class for all domain errors raised by this package."""


class CircuitError(GroverHashError):
    pass


class DeadQubit(CircuitError):
    pass


class OverlappingOperands(CircuitError):
    pass


class DoubleRelease(CircuitError):
    pass


class ReleaseNotZero(CircuitError):
    """A released qubit was not in the zero state (a broken uncompute)."""


class TempNotZero(CircuitError):
    pass


class UnbalancedAllocation(CircuitError):
    pass


class RotationOutOfRange(CircuitError):
    pass


class WidthMismatch(CircuitError):
    pass


class ConstantOutOfRange(CircuitError):
    pass


class RoundOutOfRange(CircuitError):
    pass


class NonClassicalGate(CircuitError):
    """Raised by the Toffoli simulator on gates that leave the basis (H, or Z when phases are not tracked)."""


class TooManyQubits(CircuitError):
    pass


class MalformedStream(CircuitError):
    pass


class InvalidTargetCount(GroverHashError):
    pass


class NoTargetExists(GroverHashError):
    """No input in the search space hashes to the requested digest."""


class RetriesExhausted(GroverHashError):
    pass


class UnsupportedHash(GroverHashError):
    pass

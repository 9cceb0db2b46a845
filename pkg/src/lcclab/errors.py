"""Exception types shared across the simulator and protocol builders."""


class LcclabError(Exception):
    """Base class for all package errors."""


class StepCapExceeded(LcclabError):
    """Execution did not reach quiescence within the step cap (livelock or bug)."""

    def __init__(self, steps: int):
        super().__init__(f"execution exceeded step cap after {steps} events")
        self.steps = steps


class SelfSend(LcclabError):
    """A transition tried to send a message to its own player."""


class EmptyPayload(LcclabError):
    """A transition tried to send an empty bit string."""


class NotQuiescent(LcclabError):
    """Operation requires a quiescent execution result."""


class EmptyPending(LcclabError):
    """Scheduler asked to pick from an empty pending set."""


class KOutOfRange(LcclabError):
    """Index parameter k outside its documented range."""


class NotPowerOfTwo(LcclabError):
    """Protocol requires the player count to be a power of two (>= 16)."""


class NotPrime(LcclabError):
    """Modulus is not prime."""


class DivisionByZero(LcclabError):
    """Oracle-side division by zero."""


class TableIncomplete(LcclabError):
    """Symmetric-function table does not cover every count 0..n."""


class WiringOverlap(LcclabError):
    """Role assignment gives one player two conflicting storage roles."""


class ValueOutOfRange(LcclabError):
    """Operand outside the protocol's documented range."""


class RoleMismatch(LcclabError):
    """Composition stages do not agree on operand/result roles."""


class UnknownProtocol(LcclabError):
    """CLI asked for a protocol name that is not registered."""


class InvalidConfig(LcclabError):
    """Run/sweep configuration is inconsistent or unsupported."""


class SweepTooLarge(LcclabError):
    """Exhaustive sweep would exceed the configured case limit."""

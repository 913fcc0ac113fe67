"""Exception types shared across the package."""


class TensorIndError(Exception):
    """Base class for all library errors."""


class ParameterError(TensorIndError, ValueError):
    """A generator or operation received parameters outside its domain."""


class DomainError(TensorIndError, ValueError):
    """An operation's precondition on its input graph does not hold."""


class SizeGuardError(TensorIndError):
    """A construction or search would exceed a configured size guard."""

    def __init__(self, what: str, size: int, limit: int):
        self.what = what
        self.size = size
        self.limit = limit
        super().__init__(f"{what}: size {size} exceeds guard limit {limit}")


class Graph6Error(TensorIndError, ValueError):
    """Malformed graph6 input; ``offset`` is the 0-based byte position."""

    def __init__(self, message: str, offset: int):
        self.offset = offset
        super().__init__(f"{message} (at byte {offset})")


class EdgeListError(TensorIndError, ValueError):
    """Malformed edge-list input; ``line`` is 1-based."""

    def __init__(self, message: str, line: int):
        self.line = line
        super().__init__(f"line {line}: {message}")


class InvariantViolation(TensorIndError, AssertionError):
    """A proven identity or inequality failed: this signals a bug, not a discovery."""


class SamplingError(TensorIndError):
    """A rejection sampler gave up after its attempt cap."""

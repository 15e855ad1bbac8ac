from typing import Any, Optional

class PolaritonError(Exception):
    """Base error of the package. ``int(error)`` is the process exit code the CLI reports."""
    exit_code = 1
    def __init__(self, error: str, raw: Optional[Any] = None, exit_code: Optional[int] = None):
        self.error = error
        self._raw = raw
        if exit_code is not None:
            self.exit_code = exit_code
    def __int__(self):
        return self.exit_code
    def __str__(self):
        return self.error
    @property
    def raw(self) -> Any:
        """Whatever value triggered the error (a key, a size, a pair of windows...)."""
        return self._raw

class InvalidParameters(PolaritonError, ValueError):
    exit_code = 2
class UnknownConfigKey(InvalidParameters):
    ...
class MissingUnitFlag(InvalidParameters):
    ...
class ConvergenceError(PolaritonError):
    exit_code = 2
class TruncationError(PolaritonError):
    exit_code = 2
class OracleSizeError(PolaritonError):
    exit_code = 2

class WindowOverlapError(PolaritonError):
    ...
class ConsistencyError(PolaritonError):
    ...
class ValidationFailed(PolaritonError):
    ...

from typing import Optional


class GroupError(ValueError):
    """Base class of every error raised by `opensubnormalizers`."""


class CapExceededError(GroupError):
    """
    Raised when a computation would exceed one of the configured caps.

    Attributes:
        cap (str): Name of the cap, e.g. `max_order` or `max_exhaustive`.
        limit (int): Configured value of the cap.
        value (int): The offending size.
    """

    def __init__(self, cap: str, limit: int, value: int, what: str = ""):
        self.cap = cap
        self.limit = limit
        self.value = value
        subject = f"{what}: " if what else ""
        super().__init__(
            f"{subject}group too large, size {value} exceeds "
            f"{cap}={limit}"
        )


class GroupDomainError(GroupError):
    """Raised when an operation's precondition does not hold."""


class GroupFormatError(GroupError):
    """
    Raised for malformed group text.

    Attributes:
        line (Optional[int]): 1-based line number of the offending line.
    """

    def __init__(self, message: str, line: Optional[int] = None):
        self.line = line
        prefix = f"line {line}: " if line is not None else ""
        super().__init__(f"{prefix}{message}")

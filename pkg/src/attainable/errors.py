class PreconditionError(ValueError):
    """Raised when an argument violates an operation's documented precondition."""

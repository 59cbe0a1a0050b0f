class DomainError(ValueError):
    """Arguments outside the range where a formula is stated."""

"""Errors raised while validating run parameters."""


class ConfigurationError(ValueError):
    """Raised when engine, grammar or evolution parameters are invalid."""

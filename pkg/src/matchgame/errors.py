"""Shared exception types, mapped to CLI exit codes and HTTP statuses."""


class MatchgameError(Exception):
    pass


class InvalidInput(MatchgameError, ValueError):
    """Malformed graph, family specifier, or game description."""


class CapExceeded(MatchgameError):
    """Instance larger than the configured exact-search cap."""


class StrategyError(MatchgameError):
    """A scripted strategy was asked to act outside its preconditions."""

"""Exception types shared across the library and the CLI."""


class KemtreeError(Exception):
    """Base class for all library-specific errors."""


class ParseError(KemtreeError):
    """Edge-list input could not be parsed; carries the offending line number."""

    def __init__(self, message, line=None):
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)
        self.line = line


class DisconnectedError(KemtreeError):
    """Operation requires a connected graph; names one unreachable pair."""

    def __init__(self, u, v):
        super().__init__(f"graph is disconnected: no path between {u} and {v}")
        self.pair = (u, v)


class NotATreeError(KemtreeError):
    """Graph failed tree validation; reason is 'cyclic' or 'disconnected'."""

    def __init__(self, reason):
        super().__init__(f"graph is not a tree ({reason})")
        self.reason = reason


class ResourceLimitError(KemtreeError):
    """Requested order exceeds the configured enumeration or oracle cap."""


class PathTooShortError(KemtreeError):
    """Contract-and-subdivide needs an endpoint path of length at least 2."""


class NotABridgeConfigError(KemtreeError):
    """Branch relocation target must lie outside the detached branch."""


class RouteRequiresTreeError(KemtreeError):
    """The requested Kemeny computation route is defined only on trees."""


class TheoremViolationError(KemtreeError):
    """A maximal element escaped the leaf-distance filter; indicates a bug."""

"""Shared exception types."""


class GraphError(ValueError):
    """Malformed graph construction input (loops, out-of-range endpoints, bad parameters)."""


class FormatError(ValueError):
    """Unreadable or corrupt serialized graph data."""


class CertificateError(ValueError):
    """A witness object failed validation against its defining invariants."""

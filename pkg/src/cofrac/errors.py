"""Exception types shared across the package."""


class ParseError(ValueError):
    """Malformed graph or certificate text."""

    def __init__(self, message, line=None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class CapabilityError(RuntimeError):
    """Instance exceeds a configured exact-search or enumeration limit."""


class CertificateError(RuntimeError):
    """An emitted certificate failed its own independent verification.

    Should never be raised; it signals an internal bug.
    """


class CrossCheckError(RuntimeError):
    """Two solution methods disagreed on the same instance."""

    def __init__(self, message, certificates=None):
        super().__init__(message)
        self.certificates = certificates or {}

"""Exception types shared across the package."""


class DomainError(ValueError):
    """An argument is outside the operation's documented domain."""


class CapabilityError(RuntimeError):
    """The request exceeds a configured desk-scale capability cap."""


class CertificateError(ValueError):
    """A supplied certificate fails its own validity check."""

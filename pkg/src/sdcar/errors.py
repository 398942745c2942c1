"""Exception types shared across the package."""


class DimensionMismatch(ValueError):
    """Operands live on different spaces or have incompatible shapes."""


class InvariantViolation(ValueError):
    """A structural invariant failed beyond its tolerance."""

    def __init__(self, message, report=None):
        super().__init__(message)
        self.report = report


class ZeroModeError(ValueError):
    """Spectral projection requested across a (near-)degenerate zero level."""


class VolumeElementError(RuntimeError):
    """Volume-element normalization failed; indicates an internal fault."""


class SchemaError(ValueError):
    """Input JSON does not match the expected schema."""

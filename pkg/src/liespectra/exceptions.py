"""Exception types shared across the package."""


class UnsupportedRootSystemError(ValueError):
    """Requested (family, rank) pair is not a supported simple type."""


class DatumMismatchError(ValueError):
    """Operands are bound to different root data."""


class ResourceLimitError(RuntimeError):
    """A configured safety bound (orbit size, module dimension) was exceeded."""

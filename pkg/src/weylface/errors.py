"""Exception types shared across the package.

The CLI maps these to exit codes: invalid input -> 2, resource cap -> 3,
verification failure -> 1 (reported, not raised).
"""


class InvalidParameterError(ValueError):
    """Family rank parameters outside the supported range."""


class InvalidDescriptorError(ValueError):
    """Descriptor violates one of its family's constraints."""


class ResourceLimitError(RuntimeError):
    """Orbit or subgroup enumeration would exceed the configured cap."""


class InternalConsistencyError(RuntimeError):
    """A cross-check between two independent constructions disagreed."""

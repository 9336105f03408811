"""Exception types. Each carries a short machine-readable ``code`` used by the CLI."""


class EquilatError(ValueError):
    code = "invalid-input"


class DimensionError(EquilatError):
    code = "dimension-mismatch"


class NotLinkedError(EquilatError):
    code = "not-linked"


class NotEquilateralError(EquilatError):
    code = "not-equilateral"


class DomainError(EquilatError):
    """A value lies outside the range an operation accepts."""

    code = "out-of-domain"


class CapExceededError(EquilatError):
    code = "cap-exceeded"


class SchemaError(EquilatError):
    code = "schema-violation"


class FreshCoordinateError(EquilatError):
    code = "coordinate-not-free"


class MalformedJSONError(SchemaError):
    code = "malformed-json"


class InputFileError(EquilatError):
    code = "io-error"


class UsageError(EquilatError):
    code = "usage"

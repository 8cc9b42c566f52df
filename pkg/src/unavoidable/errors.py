"""Exception hierarchy shared by all modules."""


class GeometryError(ValueError):
    """Base class for invalid geometric input."""


class DegenerateInput(GeometryError):
    pass


class ConvexityError(GeometryError):
    """Vertex list is not strictly convex; ``index`` names the offending vertex."""

    def __init__(self, message, index=None):
        super().__init__(message)
        self.index = index


class OriginNotInterior(GeometryError):
    pass


class SingularMap(GeometryError):
    pass


class DegenerateFacet(GeometryError):
    pass


class NotSymmetric(GeometryError):
    pass


class NotUnavoidable(GeometryError):
    pass


class NotReversible(GeometryError):
    pass


class UnsupportedLattice(GeometryError):
    pass


class DimensionTooLarge(GeometryError):
    pass


class ToleranceNotReached(RuntimeError):
    pass


class EnumerationFailed(RuntimeError):
    """Internal loop bound exceeded; always indicates a bug."""


class StepBudgetExceeded(RuntimeError):
    pass


class ConstraintUnsatisfiable(RuntimeError):
    pass


class ParseError(ValueError):
    def __init__(self, message, field=None, line=None):
        where = []
        if line is not None:
            where.append(f"line {line}")
        if field is not None:
            where.append(f"field {field!r}")
        super().__init__(f"{message} ({', '.join(where)})" if where else message)
        self.field = field
        self.line = line

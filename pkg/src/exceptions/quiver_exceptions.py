class QuiverError(Exception):
    """Base exception for quiver computations"""

    pass


class ClassificationError(QuiverError):
    """Raised for an invalid Dynkin (type, rank) pair"""

    pass


class UnsupportedGraphError(ClassificationError):
    """Raised when a tree is not a disjoint union of ADE diagrams"""

    pass


class DomainError(QuiverError):
    """Raised when an argument lies outside the operation's domain"""

    pass


class AdmissibilityError(QuiverError):
    """Raised when reflecting at a vertex that is neither a source nor a sink"""

    def __init__(self, message: str, vertex: int | None = None, position: int | None = None):
        super().__init__(message)
        self.vertex = vertex
        self.position = position


class InvariantViolation(QuiverError):
    """Raised when an internal mathematical invariant fails"""

    pass


class CompletenessViolation(InvariantViolation):
    """Raised when no cluster cone contains a lattice point"""

    pass


class ResourceCapError(QuiverError):
    """Raised when the rank exceeds the configured cap"""

    pass


class ConfigError(QuiverError):
    """Raised for invalid settings or verification configuration"""

    pass

"""Exception types shared across the package."""


class UberdhError(Exception):
    """Base class for all package-specific errors."""


class VertexOutOfRange(UberdhError):
    def __init__(self, v, m):
        super().__init__(f"vertex {v} out of range for {m} vertices")
        self.vertex = v


class GhostVertex(UberdhError):
    def __init__(self, v):
        super().__init__(f"vertex {v} belongs to no facet")
        self.vertex = v


class CycleTooSmall(UberdhError):
    def __init__(self, n):
        super().__init__(f"cycle needs at least 3 vertices, got {n}")


class NotAComplex(UberdhError):
    """d_out . d_in != 0."""


class NotChainMap(UberdhError):
    """The given matrix does not define a chain map."""


class NotCubeEdge(UberdhError):
    """Colourings do not differ by flipping a single 0-bit to 1."""


class TorsionObstruction(UberdhError):
    """Integral computation blocked by torsion; rerun over Q or F_p."""


class SizeCap(UberdhError):
    def __init__(self, msg):
        super().__init__(msg)


class IsSimplex(UberdhError):
    """Operation requires a complex that is not a standard simplex."""


class Disconnected(UberdhError):
    """Operation requires a connected input."""

"""Exception types shared across the package."""


class GraphError(Exception):
    """Base class for all graph construction and query errors."""


class AsymmetricAdjacency(GraphError):
    """u lists v but v does not list u."""

    def __init__(self, u: int, v: int):
        super().__init__(f"vertex {u} lists {v} but {v} does not list {u}")
        self.pair = (u, v)


class DuplicateNeighbor(GraphError):
    """A vertex lists the same neighbor more than once."""

    def __init__(self, u: int, v: int):
        super().__init__(f"vertex {u} lists neighbor {v} more than once")
        self.pair = (u, v)


class SelfLoop(GraphError):
    """A vertex lists itself as a neighbor."""

    def __init__(self, u: int):
        super().__init__(f"vertex {u} lists itself")
        self.pair = (u, u)


class UnknownVertex(GraphError):
    def __init__(self, v: int):
        super().__init__(f"unknown vertex id {v}")
        self.vertex = v


class KOutOfRange(GraphError):
    def __init__(self, k: int):
        super().__init__(f"cycle length {k} outside supported range 3..8")
        self.k = k


class MissingList(GraphError):
    def __init__(self, v: int):
        super().__init__(f"no color list supplied for vertex {v}")
        self.vertex = v


class TooManyVertices(GraphError):
    def __init__(self, n: int, limit: int):
        super().__init__(f"{n} vertices exceeds the exact-search limit of {limit}")
        self.n = n
        self.limit = limit


class OverlappingRoles(GraphError):
    """X and R are not disjoint, or a role set leaves the vertex range."""


class UnknownEdgeInY(GraphError):
    def __init__(self, u: int, v: int):
        super().__init__(f"edge ({u},{v}) in Y is not an edge of the graph")
        self.pair = (u, v)


class UnknownConfig(GraphError):
    def __init__(self, config_id: str):
        super().__init__(f"unknown configuration id {config_id!r}")
        self.config_id = config_id


class Disconnected(GraphError):
    """Charge accounting needs a connected graph."""


class NotBigFace(GraphError):
    def __init__(self, face: int, length: int):
        super().__init__(f"face {face} has length {length}; edge-level audit needs length >= 6")
        self.face = face
        self.length = length


class NOutOfRange(GraphError):
    def __init__(self, n: int):
        super().__init__(f"enumeration size {n} outside supported range 2..8")
        self.n = n

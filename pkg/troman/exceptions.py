class TromanError(Exception):
    pass


class GraphError(TromanError):
    pass


class VertexOutOfRange(GraphError):
    def __init__(self, vertex, n):
        message = 'vertex {} is out of range for a graph of order {}'.format(vertex, n)
        super().__init__(message)
        self.vertex = vertex
        self.n = n


class LoopEdge(GraphError):
    def __init__(self, vertex):
        message = 'loop at vertex {} rejected: graphs are simple'.format(vertex)
        super().__init__(message)


class NotAnEdge(GraphError):
    def __init__(self, u, v):
        message = '({}, {}) is not an edge of the graph'.format(u, v)
        super().__init__(message)


class EdgeExists(GraphError):
    def __init__(self, u, v):
        message = '({}, {}) is already an edge of the graph'.format(u, v)
        super().__init__(message)


class VertexCapExceeded(GraphError):
    def __init__(self, n, cap):
        message = 'graph of order {} exceeds the vertex cap of {}'.format(n, cap)
        super().__init__(message)


class DisconnectedGraph(GraphError):
    def __init__(self, operation):
        message = '{} requires a connected graph'.format(operation)
        super().__init__(message)


class Graph6Error(TromanError):
    def __init__(self, text, reason):
        message = 'malformed graph6 string {!r}: {}'.format(text, reason)
        super().__init__(message)


class EdgeListError(TromanError):
    def __init__(self, reason):
        super().__init__('malformed edge list: {}'.format(reason))


class IsolatedVertexError(TromanError):
    def __init__(self, invariant):
        message = '{} undefined: graph has an isolated vertex'.format(invariant)
        super().__init__(message)
        self.invariant = invariant


class LabelingError(TromanError):
    def __init__(self, reason):
        super().__init__('invalid vertex labeling: {}'.format(reason))


class CapExceeded(TromanError):
    def __init__(self, operation, n, cap):
        message = '{} is capped at order {}, got {}'.format(operation, cap, n)
        super().__init__(message)
        self.operation = operation
        self.n = n
        self.cap = cap


class FamilySpecError(TromanError):
    def __init__(self, text, reason):
        message = 'bad family spec {!r}: {}'.format(text, reason)
        super().__init__(message)


class DimacsError(TromanError):
    def __init__(self, reason, line=None):
        if line is not None:
            message = 'DIMACS line {}: {}'.format(line, reason)
        else:
            message = 'DIMACS: {}'.format(reason)
        super().__init__(message)
        self.line = line


class FormulaError(TromanError):
    def __init__(self, reason):
        super().__init__('invalid 3-CNF formula: {}'.format(reason))


class InconsistencyError(TromanError):
    """
    Raised when two independent computations of the same statement disagree.
    Such a disagreement would falsify a theorem, so the graph travels with it.
    """

    def __init__(self, statement, graph6):
        message = (
            'internal inconsistency in {}; counterexample graph6: {}'
            .format(statement, graph6))
        super().__init__(message)
        self.statement = statement
        self.graph6 = graph6


class UsageError(TromanError):
    def __init__(self, reason):
        super().__init__('usage: {}'.format(reason))

"""Exception hierarchy shared by every module in the package."""


class DistoughError(Exception):
    """Base class for all errors raised by distough."""


class GraphSizeError(DistoughError, ValueError):
    """Vertex count outside the supported range (1..62), or a size-dependent precondition failed."""


class ConnectivityError(DistoughError, ValueError):
    pass


class EmptyRemainderError(DistoughError, ValueError):
    """Deleting the vertex set would leave no vertices."""


class Graph6ParseError(DistoughError, ValueError):
    def __init__(self, message: str, offset: int):
        super().__init__(f"{message} (byte offset {offset})")
        self.offset = offset


class CapabilityError(DistoughError):
    """Input exceeds an enforced cap of an exact algorithm."""


class MatrixValidityError(DistoughError, ValueError):
    pass


class RootError(DistoughError, ArithmeticError):
    pass


class UndefinedToughnessError(DistoughError, ValueError):
    """Toughness is undefined on complete graphs."""


class ParameterError(DistoughError, ValueError):
    pass


class PartitionError(DistoughError, ValueError):
    pass

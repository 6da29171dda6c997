"""Exception hierarchy shared by every module of the package."""


class LatticeExitError(Exception):
    """Base class; the CLI maps it to exit code 1."""


class DimensionMismatch(LatticeExitError):
    pass


class NotDownward(LatticeExitError):
    def __init__(self, edge):
        self.edge = edge
        x, y = edge
        super().__init__(f"edge {x} -> {y} is not downward: max {max(x)} <= max {max(y)}")


class VertexNotInDomain(LatticeExitError):
    def __init__(self, z):
        self.vertex = z
        super().__init__(f"vertex {z} is not in the graph")


class TerminalSource(LatticeExitError):
    def __init__(self, z):
        self.vertex = z
        super().__init__(f"vertex {z} is terminal; use the max(z) convention")


class CubeNotContained(LatticeExitError):
    pass


class TooLarge(LatticeExitError):
    def __init__(self, budget):
        self.budget = budget
        super().__init__(f"path enumeration exceeded budget of {budget}")


class BudgetExceeded(LatticeExitError):
    """A counted budget ran out before the work finished (CLI exit code 2)."""

    def __init__(self, message, budget=None, exhausted_range=False):
        self.budget = budget
        self.exhausted_range = exhausted_range
        super().__init__(message)


class RhoBelowMin(LatticeExitError):
    def __init__(self, z, value):
        self.vertex = z
        self.value = value
        super().__init__(f"rho({z}) = {value} is below min = {min(z)}")


class SizeMismatch(LatticeExitError):
    pass


class MissingVertex(LatticeExitError):
    def __init__(self, z):
        self.vertex = z
        super().__init__(f"label map has no value for {z}")


class CubeNotInDomain(LatticeExitError):
    pass


class PreconditionFailed(LatticeExitError):
    pass


class NotRegular(LatticeExitError):
    pass


class PolicyViolatesRho(LatticeExitError):
    pass

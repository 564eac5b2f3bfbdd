"""Exception hierarchy shared by every toritrans module."""


class ToritransError(ValueError):
    """Base class for all library errors."""


class DegenerateInput(ToritransError):
    """Zero vectors, rank-0 fans and similar inputs with no meaningful answer."""


class UnsupportedCone(ToritransError):
    pass


class UnsupportedRank(ToritransError):
    pass


class RankMismatch(ToritransError):
    pass


class InvalidFan(ToritransError):
    def __init__(self, violations):
        self.violations = list(violations)
        super().__init__("invalid fan: " + "; ".join(self.violations))


class DegenerateFan(ToritransError):
    """Raised when a construction needs rays spanning the whole lattice."""


class InvalidSurfaceForm(ToritransError):
    pass


class InconsistentDeclaration(ToritransError):
    pass


class ParseError(ToritransError):
    pass


class SchemaError(ToritransError):
    pass

"""Exception hierarchy.

Every exception carries a stable ``code`` string; the command line prints it
so that scripts can match on it.
"""


class CDGammaError(Exception):
    code = "Error"


class NotGradedError(CDGammaError):
    code = "NotGraded"


class NoBoundedStructureError(CDGammaError):
    code = "NoBoundedStructure"


class CycleError(CDGammaError):
    code = "Cycle"


class BoundaryNotContainedError(CDGammaError):
    code = "BoundaryNotContained"


class LengthMismatchError(CDGammaError):
    code = "LengthMismatch"


class NotSymmetricError(CDGammaError):
    code = "NotSymmetric"


class NotCDExpressibleError(CDGammaError):
    code = "NotCDExpressible"

    def __init__(self, residual):
        self.residual = residual
        super().__init__(f"nonzero residual {residual}")


class NotSparseError(CDGammaError):
    code = "NotSparse"


class ImproperColoringError(CDGammaError):
    code = "ImproperColoring"


class TooManyLevelsError(CDGammaError):
    code = "TooManyLevels"


class BudgetExceededError(CDGammaError):
    code = "BudgetExceeded"


class NotKFFKError(CDGammaError):
    code = "NotKFFK"


class NotDominatedError(CDGammaError):
    code = "NotDominated"


class CollapseCollisionError(CDGammaError):
    code = "CollapseCollision"


class IndexOutOfRangeError(CDGammaError):
    code = "IndexOutOfRange"


class NotPureError(CDGammaError):
    code = "NotPure"


class BadShapeError(CDGammaError):
    code = "BadShape"


class ParseError(CDGammaError):
    code = "Parse"

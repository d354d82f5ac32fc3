class AlgPosError(Exception):
    """Base exception for algpos"""
    pass

class ConfigurationError(AlgPosError):
    """Configuration related errors"""
    pass

class ValidationError(AlgPosError):
    """Invalid input or broken construction invariant"""
    pass

class ParseError(ValidationError):
    """Matrix, pattern or template text that does not parse"""

    def __init__(self, message: str, token: str = ""):
        super().__init__(message)
        self.token = token

class DimensionMismatch(ValidationError):
    """Operands of different dimension"""
    pass

class DegenerateScale(ValidationError):
    """Affine closure transform with beta == 0"""
    pass

class NumericalError(AlgPosError):
    """Numerical routine failed to produce a trustworthy result"""
    pass

class RootFindingFailure(NumericalError):
    """Root finder did not converge within its iteration budget"""
    pass

class LpNumericalFailure(NumericalError):
    """Simplex exceeded its pivot budget or lost boundedness"""
    pass

class TableError(AlgPosError):
    """Classifier table related errors"""
    pass

class TableFormatError(TableError):
    """Malformed classifier table data"""
    pass

class TableMiss(TableError):
    """No table entry matches an irreducible 3x3 pattern"""

    def __init__(self, message: str, pattern: str = ""):
        super().__init__(message)
        self.pattern = pattern

class TemplateMismatch(TableError):
    """Matrix sign pattern does not match the entry template"""
    pass

class RecipeViolation(TableError):
    """Recipe polynomial failed to be entrywise positive"""

    def __init__(self, message: str, entry_id: str = "", inequality: str = ""):
        super().__init__(message)
        self.entry_id = entry_id
        self.inequality = inequality

class CensusMismatch(AlgPosError):
    """Digraph census disagrees with the expected group sizes"""
    pass

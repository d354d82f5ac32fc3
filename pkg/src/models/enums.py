from enum import Enum, IntEnum

class Sign(IntEnum):
    """Sign of a pattern cell; integer order gives Minus < Zero < Plus"""
    MINUS = -1
    ZERO = 0
    PLUS = 1

    @property
    def symbol(self) -> str:
        return {-1: "-", 0: "0", 1: "+"}[self.value]

    @classmethod
    def from_symbol(cls, symbol: str) -> "Sign":
        return {"-": cls.MINUS, "0": cls.ZERO, "+": cls.PLUS}[symbol]

class Verdict(Enum):
    """Requires / allows / does not allow algebraic positivity"""
    RAP = "RAP"
    AAP = "AAP"
    DNA = "DNA"

class EvidenceKind(Enum):
    """How a classification was established"""
    REDUCIBLE = "Reducible"
    ROW_COL_FAIL = "RowColFail"
    THEOREM4 = "Theorem4"
    UNIFORM_OFFDIAG = "UniformOffdiag"
    RECIPE = "Recipe"
    TABLE = "Table"
    SAMPLED_BOTH = "SampledBoth"
    SAMPLED_ALL_AP = "SampledAllAp"
    SAMPLED_NONE_AP = "SampledNoneAp"

class Agreement(Enum):
    """Reconciliation of the spectral and LP oracles"""
    AGREE = "Agree"
    EIGEN_ONLY = "EigenOnly"
    POLY_ONLY = "PolyOnly"
    BORDERLINE = "Borderline"

class ClosureKind(Enum):
    """Transforms that preserve algebraic positivity"""
    TRANSPOSE = "Transpose"
    NEGATE = "Negate"
    PERM_SIM = "PermSim"
    AFFINE = "Affine"

class ShiftRule(Enum):
    """Uniform diagonal shift rules for the scalar-shift subclass relation"""
    IDENTITY = "alpha=0"
    SMALL_POSITIVE = "small positive shift"
    SMALL_NEGATIVE = "small negative shift"
    LARGE_POSITIVE = "large positive shift"
    LARGE_NEGATIVE = "large negative shift"

class SubclassOutcome(Enum):
    """Three-valued answer of the subclass check"""
    HOLDS = "Holds"
    FAILS = "Fails"
    UNKNOWN = "Unknown"

class ReportFormat(Enum):
    """Report output formats"""
    JSON = "json"
    MARKDOWN = "md"

class DiscrepancyKind(Enum):
    """Atlas findings that contradict or qualify a table entry"""
    SUSPECT_ROW = "suspect_row"
    WITNESS_MISMATCH = "witness_mismatch"
    ORACLE_DISAGREEMENT = "oracle_disagreement"
    CONDITION_MISMATCH = "condition_mismatch"
    RECIPE_VIOLATION = "recipe_violation"
    LABEL_CONTRADICTION = "label_contradiction"
    DOUBLE_MATCH = "double_match"
    THEORY_CONFLICT = "theory_conflict"

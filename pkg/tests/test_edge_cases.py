import numpy as np
import pytest

from src.classify.classifier import classify
from src.classify.table import expand_template
from src.engine.oracles import is_ap
from src.exceptions.custom_exceptions import ValidationError
from src.models.enums import Agreement, EvidenceKind, Sign, Verdict
from src.models.matrix import RealMatrix
from src.models.pattern import SignPattern
from src.patterns.algebra import pattern_of, sample

class TestEdgeCases:
    """Test edge cases and boundary conditions"""

    def test_one_by_one_matrix_rejected(self):
        with pytest.raises(ValidationError):
            RealMatrix.from_rows([[5.0]])

    def test_non_finite_entries_rejected(self):
        with pytest.raises(ValidationError):
            RealMatrix(np.array([[1.0, np.nan], [0.0, 1.0]]))

    def test_rank_one_positive_matrix(self):
        """Test a zero eigenvalue does not disturb the Perron pair"""
        verdict = is_ap(RealMatrix.from_text("1 1; 1 1"))
        assert verdict.is_ap
        assert verdict.agreement == Agreement.AGREE

    def test_scalar_matrix_is_not_ap(self):
        """Test a repeated eigenvalue is never a certificate"""
        verdict = is_ap(RealMatrix.from_text("2 0; 0 2"))
        assert not verdict.is_ap
        assert verdict.agreement == Agreement.AGREE

    @pytest.mark.parametrize("scale", [1e-3, 1e3])
    def test_extreme_scales(self, positive_matrix, scale):
        """Test AP survives uniform rescaling of the entries"""
        verdict = is_ap(RealMatrix(positive_matrix.data * scale))
        assert verdict.is_ap
        assert verdict.poly is not None

    def test_zero_pattern_samples_to_zero(self):
        X = sample(SignPattern.zeros(3), 0)
        assert np.all(X.data == 0.0)
        assert pattern_of(X) == SignPattern.zeros(3)

    def test_zero_pattern_is_reducible(self, small_config):
        result = classify(SignPattern.zeros(3), small_config)
        assert result.verdict == Verdict.DNA
        assert result.evidence.kind == EvidenceKind.REDUCIBLE

    @pytest.mark.parametrize("sign", [Sign.PLUS, Sign.MINUS])
    def test_full_patterns_require_ap(self, small_config, sign):
        result = classify(SignPattern.full(3, sign), small_config)
        assert result.verdict == Verdict.RAP
        assert result.evidence.kind == EvidenceKind.UNIFORM_OFFDIAG

    def test_all_star_template(self):
        assert len(expand_template("***/***/***")) == 2 ** 9

    def test_pattern_of_tolerance(self):
        X = RealMatrix.from_rows([[1e-12, -1.0], [2.0, -1e-12]])
        assert pattern_of(X).to_text() == "+-/+-"
        assert pattern_of(X, zero_tol=1e-9).to_text() == "0-/+0"

    def test_whitespace_in_pattern_text(self):
        assert SignPattern.from_text("0+0 / 00+ / +00") == SignPattern.from_text("0+0/00+/+00")

    def test_trailing_semicolon_in_matrix_text(self):
        assert RealMatrix.from_text("1, 2; 3, 4;") == RealMatrix.from_rows([[1, 2], [3, 4]])

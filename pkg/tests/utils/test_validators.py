import pytest

from src.exceptions.custom_exceptions import ParseError
from src.utils.validators import MatrixTextValidator, PatternTextValidator

class TestMatrixTextValidator:
    """Test matrix text parsing"""

    @pytest.mark.parametrize("text,expected", [
        ("1 2; 3 4", [[1.0, 2.0], [3.0, 4.0]]),
        ("1,2;3,4", [[1.0, 2.0], [3.0, 4.0]]),
        ("  -1.5e-2  .5 ; +3 4.  ;", [[-0.015, 0.5], [3.0, 4.0]]),
        ("0 1 0; 0 0 1; 1 0 0", [[0.0, 1.0, 0.0], [0.0, 0.0, 1.0], [1.0, 0.0, 0.0]]),
    ])
    def test_parse_valid(self, text, expected):
        """Test separators, signs and exponents"""
        assert MatrixTextValidator.parse(text) == expected

    @pytest.mark.parametrize("text", [
        "",
        "   ",
        "1 2; 3",
        "1 2 3; 4 5 6",
        "1 x; 3 4",
        "1 2;; 3 4",
        "nan 1; 1 1",
        "inf 1; 1 1",
    ])
    def test_parse_invalid(self, text):
        """Test malformed matrix text raises ParseError"""
        with pytest.raises(ParseError):
            MatrixTextValidator.parse(text)

    def test_parse_error_carries_token(self):
        """Test the offending token is attached to the error"""
        with pytest.raises(ParseError) as excinfo:
            MatrixTextValidator.parse("1 abc; 3 4")
        assert excinfo.value.token == "abc"

    @pytest.mark.parametrize("text,expected", [
        ("1 1; 1 1", True),
        ("1 1; 1", False),
        ("", False),
    ])
    def test_is_valid_matrix_text(self, text, expected):
        """Test the non-raising check"""
        assert MatrixTextValidator.is_valid_matrix_text(text) == expected

class TestPatternTextValidator:
    """Test sign pattern text validation"""

    @pytest.mark.parametrize("text,expected", [
        ("0+0/+0-/+0+", True),
        ("+-/-+", True),
        ("0 + 0 / + 0 - / + 0 +", True),
        ("+", True),
        ("", False),
        ("0+0/+0-", False),
        ("0+0/+0-/+0", False),
        ("0+0/+0x/+0+", False),
        ("*+0/00+/+00", False),
        ("0+0//+0+", False),
    ])
    def test_is_valid_pattern_text(self, text, expected):
        """Test grammar and squareness"""
        assert PatternTextValidator.is_valid_pattern_text(text) == expected

    def test_split_rows(self):
        """Test rows are flattened row-major"""
        assert PatternTextValidator.split_rows("0+0/+0-/+0+") == (3, "0+0+0-+0+")

    def test_split_rows_star(self):
        """Test the wildcard is accepted only when asked for"""
        assert PatternTextValidator.split_rows("*+0/00+/+00", allow_star=True) == (3, "*+000++00")
        with pytest.raises(ParseError) as excinfo:
            PatternTextValidator.split_rows("*+0/00+/+00")
        assert excinfo.value.token == "*"

    def test_split_rows_not_square(self):
        """Test non-square text is rejected"""
        with pytest.raises(ParseError):
            PatternTextValidator.split_rows("0+/+0/00")

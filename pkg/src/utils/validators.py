import math
import re
from typing import List, Tuple

from ..exceptions.custom_exceptions import ParseError

class MatrixTextValidator:
    """Matrix text: rows separated by ';', entries by whitespace or ','"""

    ENTRY_SPLIT = re.compile(r'[\s,]+')
    NUMBER = re.compile(r'^[+-]?(\d+(\.\d*)?|\.\d+)([eE][+-]?\d+)?$')

    @staticmethod
    def is_valid_matrix_text(text: str) -> bool:
        """Check matrix text without raising"""
        try:
            MatrixTextValidator.parse(text)
        except ParseError:
            return False
        return True

    @staticmethod
    def parse(text: str) -> List[List[float]]:
        """Parse matrix text into square rows of floats"""
        if not text or not text.strip():
            raise ParseError("Empty matrix text")

        rows = []
        for raw_row in text.strip().strip(';').split(';'):
            tokens = [t for t in MatrixTextValidator.ENTRY_SPLIT.split(raw_row.strip()) if t]
            if not tokens:
                raise ParseError(f"Empty row in matrix text: {text!r}")
            row = []
            for token in tokens:
                if not MatrixTextValidator.NUMBER.match(token):
                    raise ParseError(f"Not a number: {token!r}", token=token)
                value = float(token)
                if not math.isfinite(value):
                    raise ParseError(f"Non-finite entry: {token!r}", token=token)
                row.append(value)
            rows.append(row)

        n = len(rows)
        for row in rows:
            if len(row) != n:
                raise ParseError(f"Matrix text is not square: {n} rows, a row of {len(row)}")
        return rows

class PatternTextValidator:
    """Sign pattern text: rows separated by '/', cells from {+,-,0}"""

    PATTERN = re.compile(r'^[+\-0]+(/[+\-0]+)*$')
    TEMPLATE = re.compile(r'^[+\-0*]+(/[+\-0*]+)*$')

    @staticmethod
    def is_valid_pattern_text(text: str) -> bool:
        """Validate pattern text format and squareness"""
        if not text:
            return False
        compact = text.replace(' ', '')
        if not PatternTextValidator.PATTERN.match(compact):
            return False
        rows = compact.split('/')
        return all(len(row) == len(rows) for row in rows)

    @staticmethod
    def split_rows(text: str, allow_star: bool = False) -> Tuple[int, str]:
        """Return (n, row-major cell string) for pattern or template text"""
        compact = (text or '').replace(' ', '')
        grammar = PatternTextValidator.TEMPLATE if allow_star else PatternTextValidator.PATTERN
        if not grammar.match(compact):
            bad = next((c for c in compact if c not in '+-0/' + ('*' if allow_star else '')), compact)
            raise ParseError(f"Invalid sign pattern text: {text!r}", token=bad)

        rows = compact.split('/')
        n = len(rows)
        for row in rows:
            if len(row) != n:
                raise ParseError(f"Sign pattern is not square: {text!r}")
        return n, ''.join(rows)

"""Loader and lookup for the 3x3 classification table.

The table is a versioned JSON file with one record per classified pattern.
Templates use ``*`` for a nonzero cell of either sign; conditions and recipe
bounds are small expressions over a11..a33 (and k1, k2 in recipes) compiled
once at load.
"""
import json
import logging
from collections import defaultdict
from functools import lru_cache
from itertools import product
from pathlib import Path
from typing import Any, Callable, Dict, Iterator, List, Optional, Sequence, Tuple, Union

import sympy

from ..exceptions.custom_exceptions import (
    ParseError,
    TableFormatError,
    TableMiss,
    TemplateMismatch,
)
from ..graphs.digraph import digraph_equivalent
from ..models.classification import Clause, Recipe, TableEntry, Witness
from ..models.digraph import Digraph
from ..models.enums import Verdict
from ..models.matrix import RealMatrix
from ..models.pattern import EquivTransform, SignPattern
from ..patterns.algebra import pattern_of
from ..patterns.equivalence import canonical_form
from ..utils.validators import PatternTextValidator

logger = logging.getLogger(__name__)

DEFAULT_TABLE_PATH = Path(__file__).parent / "data" / "classification_table.json"
FORMAT_VERSION = 1
OPERATORS = {'<': lambda a, b: a < b, '>': lambda a, b: a > b}

STAR = None
TemplateCells = Tuple[Optional[int], ...]

def parse_template(text: str) -> Tuple[int, TemplateCells]:
    """Cells of a template; ``*`` becomes STAR"""
    n, flat = PatternTextValidator.split_rows(text, allow_star=True)
    symbols = {'+': 1, '-': -1, '0': 0, '*': STAR}
    return n, tuple(symbols[c] for c in flat)

def expand_template(text: str) -> List[SignPattern]:
    """Concrete patterns covered by a template, ``*`` cells taking both signs"""
    n, cells = parse_template(text)
    options = [(1, -1) if c is STAR else (c,) for c in cells]
    return [SignPattern(n, combo) for combo in product(*options)]

def template_matches(text: str, S: SignPattern) -> bool:
    n, cells = parse_template(text)
    if n != S.n:
        return False
    return all(s != 0 if c is STAR else s == c for c, s in zip(cells, S.cells))

def template_digraph(text: str) -> Digraph:
    n, cells = parse_template(text)
    return Digraph(n, frozenset(
        (k // n + 1, k % n + 1) for k, c in enumerate(cells) if c is STAR or c != 0
    ))

class ClassifierTable:
    """Immutable table of classified patterns with an equivalence-aware index"""

    def __init__(self, entries: Sequence[TableEntry], symbols: Sequence[str]):
        self.symbols = tuple(symbols)
        self._sympy_symbols = sympy.symbols(' '.join(self.symbols))
        self._locals = dict(zip(self.symbols, self._sympy_symbols))
        self._compiled: Dict[str, Callable[..., float]] = {}

        self._entries: Dict[str, TableEntry] = {}
        for entry in entries:
            if entry.id in self._entries:
                raise TableFormatError(f"Duplicate table entry id {entry.id}")
            self._entries[entry.id] = entry
            self._compile_entry(entry)

        self._index = self._build_index()
        logger.debug(f"Loaded {len(self._entries)} table entries, {len(self._index)} indexed classes")

    @classmethod
    def load(cls, path: Optional[Union[str, Path]] = None) -> "ClassifierTable":
        path = Path(path) if path else DEFAULT_TABLE_PATH
        try:
            with open(path, 'r', encoding='utf-8') as handle:
                data = json.load(handle)
        except json.JSONDecodeError as e:
            raise TableFormatError(f"Table file {path} is not valid JSON: {e}")
        return cls.from_dict(data)

    @classmethod
    def from_dict(cls, data: Dict[str, Any]) -> "ClassifierTable":
        if data.get('format_version') != FORMAT_VERSION:
            raise TableFormatError(f"Unsupported table format version {data.get('format_version')}")
        symbols = data.get('symbols')
        if not symbols:
            raise TableFormatError("Table declares no symbols")
        entries = [_parse_entry(record, symbols) for record in data.get('entries', [])]
        return cls(entries, symbols)

    def __len__(self) -> int:
        return len(self._entries)

    def __iter__(self) -> Iterator[TableEntry]:
        return iter(self._entries.values())

    def get(self, entry_id: str) -> TableEntry:
        try:
            return self._entries[entry_id]
        except KeyError:
            raise TableMiss(f"No table entry with id {entry_id}")

    def by_digraph(self) -> Dict[int, List[TableEntry]]:
        groups: Dict[int, List[TableEntry]] = defaultdict(list)
        for entry in self:
            groups[entry.digraph].append(entry)
        return dict(sorted(groups.items()))

    def suspect_entries(self) -> List[TableEntry]:
        return [entry for entry in self if entry.suspect]

    def inconsistent_groups(self) -> List[str]:
        """Entries whose template digraph is not equivalent to the first one of their group"""
        problems = []
        for digraph_id, entries in self.by_digraph().items():
            reference = template_digraph(entries[0].template)
            for entry in entries[1:]:
                if not digraph_equivalent(reference, template_digraph(entry.template)):
                    problems.append(entry.id)
        if problems:
            logger.warning(f"Table entries outside their digraph group: {problems}")
        return problems

    def match_entries(self, S: SignPattern) -> List[Tuple[TableEntry, EquivTransform]]:
        """Every entry whose template covers a pattern equivalent to S.

        The returned transform carries S onto the covered template expansion.
        """
        canon, to_canon = canonical_form(S)
        matches = []
        for entry_id, from_expansion in self._index.get(canon, ()):
            transform = from_expansion.inverse().compose(to_canon)
            matches.append((self._entries[entry_id], transform))
        return matches

    def match_entry(self, S: SignPattern) -> Optional[Tuple[TableEntry, EquivTransform]]:
        matches = self.match_entries(S)
        if len(matches) > 1:
            logger.debug(f"Pattern {S} matches several entries: {[e.id for e, _ in matches]}")
        return matches[0] if matches else None

    def table_condition(self, entry: TableEntry, X: RealMatrix) -> Optional[bool]:
        """Printed AP condition evaluated on X, or None for rows without one"""
        if not template_matches(entry.template, pattern_of(X)):
            raise TemplateMismatch(f"Matrix pattern {pattern_of(X)} does not match template {entry.template}")
        if not entry.has_condition:
            return None
        return all(self._clause_holds(clause, X) for clause in entry.condition)

    def condition_for_member(self, S: SignPattern, X: RealMatrix) -> Optional[bool]:
        """Condition of the entry matching S, evaluated on X moved to the template orientation"""
        match = self.match_entry(S)
        if match is None:
            raise TableMiss(f"No table entry covers {S}", pattern=S.to_text())
        entry, transform = match
        return self.table_condition(entry, transform.apply_matrix(X))

    def evaluate(self, expression: str, X: RealMatrix, k1: float = 0.0, k2: float = 0.0) -> float:
        func = self._compiled.get(expression) or self._compile(expression)
        return float(func(*X.entries, k1, k2))

    def _clause_holds(self, clause: Clause, X: RealMatrix) -> bool:
        compare = OPERATORS[clause.op]
        lhs = [self.evaluate(e, X) for e in clause.lhs]
        rhs = [self.evaluate(e, X) for e in clause.rhs]
        return all(compare(a, b) for a in lhs for b in rhs)

    def _compile(self, expression: str) -> Callable[..., float]:
        try:
            parsed = sympy.sympify(expression, locals=self._locals)
        except (sympy.SympifyError, SyntaxError, TypeError) as e:
            raise TableFormatError(f"Cannot parse table expression {expression!r}: {e}")
        unknown = {str(s) for s in parsed.free_symbols} - set(self.symbols)
        if unknown:
            raise TableFormatError(f"Unknown symbols {sorted(unknown)} in {expression!r}")
        func = sympy.lambdify(self._sympy_symbols, parsed, modules='math')
        self._compiled[expression] = func
        return func

    def _compile_entry(self, entry: TableEntry) -> None:
        for clause in entry.condition:
            for expression in clause.lhs + clause.rhs:
                self._compile(expression)
        recipe = entry.recipe
        if recipe is not None:
            for expression in (recipe.ratio_lower, recipe.ratio_upper):
                if expression is not None:
                    self._compile(expression)
            if not recipe.diagonal_rule:
                for expression in recipe.k0:
                    self._compile(expression)

    def _build_index(self) -> Dict[SignPattern, List[Tuple[str, EquivTransform]]]:
        index: Dict[SignPattern, List[Tuple[str, EquivTransform]]] = defaultdict(list)
        for entry in self:
            for expansion in expand_template(entry.template):
                canon, to_canon = canonical_form(expansion)
                if all(entry_id != entry.id for entry_id, _ in index[canon]):
                    index[canon].append((entry.id, to_canon))
        return dict(index)

def _parse_entry(record: Dict[str, Any], symbols: Sequence[str]) -> TableEntry:
    try:
        entry_id = str(record['id'])
        template = record['template']
        label = Verdict(record['label'])
        digraph = int(record['digraph'])
    except (KeyError, ValueError) as e:
        raise TableFormatError(f"Malformed table record {record.get('id', '?')}: {e}")

    try:
        parse_template(template)
    except ParseError as e:
        raise TableFormatError(f"Entry {entry_id}: {e}")

    condition = tuple(_parse_clause(entry_id, c) for c in record.get('condition', []))
    recipe = _parse_recipe(entry_id, record['recipe']) if 'recipe' in record else None

    witnesses = []
    for source, raw in enumerate(record.get('witnesses', [])):
        witnesses.extend(_expand_witness(entry_id, template, raw, source, symbols))

    suspect = bool(record.get('suspect', False))
    notes = record.get('notes', '')
    if any(w.pattern_mismatch for w in witnesses):
        if not suspect:
            logger.warning(f"Entry {entry_id}: a witness does not match template {template}")
        suspect = True
        notes = (notes + '; ' if notes else '') + 'witness sign pattern differs from the template'

    return TableEntry(
        id=entry_id,
        digraph=digraph,
        template=template,
        label=label,
        condition=condition,
        recipe=recipe,
        witnesses=tuple(witnesses),
        suspect=suspect,
        notes=notes,
    )

def _parse_clause(entry_id: str, raw: Dict[str, Any]) -> Clause:
    op = raw.get('op')
    if op not in OPERATORS:
        raise TableFormatError(f"Entry {entry_id}: unsupported operator {op!r}")
    lhs, rhs = tuple(raw.get('lhs', [])), tuple(raw.get('rhs', []))
    if not lhs or not rhs:
        raise TableFormatError(f"Entry {entry_id}: condition clause needs both sides")
    return Clause(lhs=lhs, op=op, rhs=rhs)

def _parse_recipe(entry_id: str, raw: Dict[str, Any]) -> Recipe:
    k2_sign = raw.get('k2_sign')
    if k2_sign not in (1, -1):
        raise TableFormatError(f"Entry {entry_id}: k2_sign must be 1 or -1")
    fixed = raw.get('ratio_fixed')
    lower, upper = raw.get('ratio_lower'), raw.get('ratio_upper')
    if fixed is None and lower is None and upper is None:
        raise TableFormatError(f"Entry {entry_id}: recipe needs a ratio bound")

    k0 = raw.get('k0', 'diagonal')
    k0 = ('diagonal',) if k0 == 'diagonal' else tuple(k0)
    if not k0:
        raise TableFormatError(f"Entry {entry_id}: recipe needs a k0 rule")
    return Recipe(
        k2_sign=k2_sign,
        ratio_lower=lower,
        ratio_upper=upper,
        ratio_fixed=float(fixed) if fixed is not None else None,
        k0=k0,
        printed=raw.get('printed', ''),
    )

def _witness_options(value: Any) -> Tuple[float, ...]:
    if isinstance(value, str):
        text = value.strip()
        if text.startswith('±'):
            magnitude = float(text[1:])
            return (magnitude, -magnitude)
        return (float(text),)
    return (float(value),)

def _expand_witness(entry_id: str, template: str, raw: Dict[str, Any], source: int,
                    symbols: Sequence[str]) -> List[Witness]:
    n, cells = parse_template(template)
    named = raw.get('entries', {})
    unknown = set(named) - set(symbols)
    if unknown:
        raise TableFormatError(f"Entry {entry_id}: unknown witness symbols {sorted(unknown)}")
    if 'ap' not in raw:
        raise TableFormatError(f"Entry {entry_id}: witness {source} has no expected AP status")

    options = []
    for k, cell in enumerate(cells):
        name = f"a{k // n + 1}{k % n + 1}"
        if name in named:
            options.append(_witness_options(named[name]))
        elif cell is STAR:
            options.append((1.0, -1.0))
        else:
            options.append((float(cell),))

    witnesses = []
    for values in product(*options):
        mismatch = not template_matches(template, SignPattern(n, tuple(
            0 if v == 0 else (1 if v > 0 else -1) for v in values
        )))
        witnesses.append(Witness(values=tuple(values), ap=bool(raw['ap']), source=source,
                                 pattern_mismatch=mismatch))
    return witnesses

@lru_cache(maxsize=1)
def default_table() -> ClassifierTable:
    return ClassifierTable.load()

def match_entry(S: SignPattern, table: Optional[ClassifierTable] = None):
    return (table or default_table()).match_entry(S)

def table_condition(entry: TableEntry, X: RealMatrix, table: Optional[ClassifierTable] = None) -> Optional[bool]:
    return (table or default_table()).table_condition(entry, X)

def condition_for_member(S: SignPattern, X: RealMatrix, table: Optional[ClassifierTable] = None) -> Optional[bool]:
    return (table or default_table()).condition_for_member(S, X)

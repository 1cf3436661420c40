"""Embedded sequence data, OEIS b-file ingestion and the conjecture harness."""
import json
import logging
from dataclasses import dataclass
from functools import lru_cache
from pathlib import Path
from types import MappingProxyType
from typing import Callable, Dict, Iterable, List, Mapping, Optional, Sequence, Tuple, Union

from src.core.dyck import d_closed_form
from src.core.formulas import b_row, d_row, h_row, recurrence_b
from src.core.patterns import CountMethod, count_pf_avoiding
from src.models.permutation import PatternSet
from src.models.sequence import (
    ComparisonReport,
    IndexMatch,
    SequenceRecord,
    SequenceSource,
    TableGroup,
    Verdict,
)

logger = logging.getLogger(__name__)

__all__ = [
    'BFileParseError', 'UnknownSequenceError', 'UnknownConjectureError', 'Conjecture',
    'CONJECTURES', 'BFILE_ENV', 'normalize_id', 'builtin_registry', 'published_tables',
    'b_triangle_rows', 'table_group_for', 'parse_bfile', 'format_bfile', 'load_bfile',
    'resolve', 'compare', 'run_conjecture', 'conjecture_checks',
]

DATA_FILE = Path(__file__).parent / "data" / "pattern_tables.json"
BFILE_ENV = "PFAVOID_BFILE_DIR"
MAX_VALUE_DIGITS = 1000
# naive engine joins the cross-check up to here; perm_sum alone beyond
NAIVE_CHECK_MAX_N = 6


class BFileParseError(ValueError):
    """Malformed b-file text."""

    def __init__(self, message: str, line_number: int):
        super().__init__(f"line {line_number}: {message}")
        self.line_number = line_number


class UnknownSequenceError(LookupError):
    pass


class UnknownConjectureError(LookupError):
    pass


def normalize_id(sequence_id: str) -> str:
    """'a958' -> 'A000958'."""
    text = sequence_id.strip().upper()
    digits = text[1:] if text.startswith("A") else text
    if not digits.isdigit():
        raise UnknownSequenceError(f"Not an OEIS identifier: {sequence_id!r}")
    return "A" + digits.zfill(6)


@lru_cache(maxsize=1)
def _load_data() -> dict:
    with open(DATA_FILE, 'r', encoding='utf-8') as f:
        data = json.load(f)
    logger.debug(f"Loaded embedded tables from {DATA_FILE}")
    return data


@lru_cache(maxsize=1)
def published_tables() -> Mapping[int, Tuple[TableGroup, ...]]:
    """Published groups of Wilf-equivalent pattern sets for set sizes 1..5, values for n = 1..6."""
    tables = {}
    for size, groups in _load_data()['tables'].items():
        tables[int(size)] = tuple(
            TableGroup(
                pattern_sets=tuple(PatternSet.of(*texts) for texts in group['pattern_sets']),
                values=tuple(group['values']),
                oeis_id=group.get('oeis'),
                oeis_shift=group.get('oeis_shift', 0),
                note=group.get('note', ""),
            )
            for group in groups
        )
    return MappingProxyType(tables)


def b_triangle_rows() -> List[List[int]]:
    """Published b(n, k) rows for n = 1..10, each starting at k = 2."""
    return [list(row) for row in _load_data()['b_triangle']['rows']]


def table_group_for(sequence_id: str) -> Optional[TableGroup]:
    """Published table group carrying this OEIS id, if any."""
    sequence_id = normalize_id(sequence_id)
    for groups in published_tables().values():
        for group in groups:
            if group.oeis_id == sequence_id:
                return group
    return None


@lru_cache(maxsize=1)
def builtin_registry() -> Mapping[str, SequenceRecord]:
    """Records available offline.

    Table sequences are indexed by n starting at 1; A000958, A028364 and
    A033184 keep their OEIS indexing.
    """
    records: Dict[str, SequenceRecord] = {}
    for entry in _load_data()['sequences']:
        records[entry['id']] = SequenceRecord(
            id=entry['id'],
            offset=entry['offset'],
            values=tuple(entry['values']),
            source=SequenceSource.EMBEDDED,
            name=entry.get('name', ""),
        )
    for size in sorted(published_tables()):
        for group in published_tables()[size]:
            if group.oeis_id is None or group.oeis_id in records:
                continue
            records[group.oeis_id] = SequenceRecord(
                id=group.oeis_id,
                offset=1,
                values=group.values,
                source=SequenceSource.EMBEDDED,
                name=f"pf_n({group.pattern_sets[0].to_text()}) for n >= 1",
            )
    return MappingProxyType(records)


def parse_bfile(text: str, sequence_id: str = "", source: SequenceSource = SequenceSource.BFILE) -> SequenceRecord:
    """Parse "index value" lines; '#' lines and blank lines are skipped.

    Indices must be consecutive, not merely increasing: a SequenceRecord is an
    offset plus contiguous values and has no way to hold a gap.

    Raises:
        BFileParseError: malformed line, index not one past the previous,
            over-long value, or no data at all
    """
    offset = None
    previous = None
    values: List[int] = []
    lines = text.splitlines()
    for line_number, raw in enumerate(lines, 1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        if len(parts) != 2:
            raise BFileParseError(f"expected 'index value', got {line!r}", line_number)
        index_text, value_text = parts
        if len(value_text.lstrip("-")) > MAX_VALUE_DIGITS:
            raise BFileParseError(f"value longer than {MAX_VALUE_DIGITS} digits", line_number)
        try:
            index = int(index_text)
            value = int(value_text)
        except ValueError:
            raise BFileParseError(f"non-integer field in {line!r}", line_number)
        if previous is not None and index <= previous:
            raise BFileParseError(f"non-monotone index {index} after {previous}", line_number)
        if previous is not None and index != previous + 1:
            raise BFileParseError(f"gap between index {previous} and {index}", line_number)
        if offset is None:
            offset = index
        previous = index
        values.append(value)
    if offset is None:
        raise BFileParseError("no data lines", len(lines))
    return SequenceRecord(id=sequence_id, offset=offset, values=tuple(values), source=source)


def format_bfile(record: SequenceRecord) -> str:
    """Inverse of parse_bfile, with a '# id name' header."""
    lines = [f"# {record.id} {record.name}".rstrip()] if record.id else []
    lines.extend(f"{record.offset + i} {value}" for i, value in enumerate(record.values))
    return "\n".join(lines) + "\n"


def load_bfile(directory: Union[str, Path], sequence_id: str) -> Optional[SequenceRecord]:
    """Read b<digits>.txt from directory, or None when the file is absent."""
    sequence_id = normalize_id(sequence_id)
    path = Path(directory) / f"b{sequence_id[1:]}.txt"
    if not path.exists():
        logger.debug(f"No b-file at {path}")
        return None
    try:
        record = parse_bfile(path.read_text(encoding='utf-8'), sequence_id)
    except BFileParseError as e:
        logger.error(f"Failed to parse {path}: {e}")
        raise
    logger.info(f"Loaded {len(record.values)} terms of {sequence_id} from {path}")
    return record


def resolve(sequence_id: str, bfile_dir: Optional[Union[str, Path]] = None) -> SequenceRecord:
    """b-file when one is present in bfile_dir, else the embedded record.

    Raises:
        UnknownSequenceError: neither source knows the id
    """
    sequence_id = normalize_id(sequence_id)
    if bfile_dir:
        record = load_bfile(bfile_dir, sequence_id)
        if record is not None:
            return record
    record = builtin_registry().get(sequence_id)
    if record is None:
        raise UnknownSequenceError(f"No data for {sequence_id}; supply a b-file")
    return record


def compare(computed: Sequence[int], start_n: int, record: SequenceRecord, name: str = "") -> ComparisonReport:
    """Align computed[i] with record index start_n + i and check the overlap."""
    matches = []
    for i, value in enumerate(computed):
        expected = record.value_at(start_n + i)
        if expected is not None:
            matches.append(IndexMatch(start_n + i, value, expected))
    name = name or record.id
    if not matches:
        return ComparisonReport(name, record.id, (), Verdict.INSUFFICIENT_DATA)
    for match in matches:
        if not match.ok:
            return ComparisonReport(name, record.id, tuple(matches), Verdict.MISMATCH, match.index)
    return ComparisonReport(name, record.id, tuple(matches), Verdict.FULL_MATCH)


@dataclass(frozen=True)
class Conjecture:
    """Named family of comparisons against one reference sequence."""
    name: str
    record_id: str
    description: str
    default_max_n: int
    runner: Callable[..., List[ComparisonReport]]


def _flatten(rows: Iterable[Sequence[int]]) -> List[int]:
    return [value for row in rows for value in row]


def _pf_counts(pattern_set: PatternSet, max_n: int, threads: int) -> List[int]:
    counts = []
    for n in range(1, max_n + 1):
        method = CountMethod.BOTH if n <= NAIVE_CHECK_MAX_N else CountMethod.PERM_SUM
        counts.append(count_pf_avoiding(n, pattern_set, method=method, threads=threads))
    return counts


def _b_row_sums_check(max_n: int, bfile_dir=None, threads: int = 1) -> List[ComparisonReport]:
    record = resolve("A000958", bfile_dir)
    sums = [sum(b_row(n)) for n in range(1, max_n + 1)]
    corner = [recurrence_b(n + 2, 2) for n in range(1, max_n + 1)]
    return [
        compare(sums, 2, record, "sum_k b(n,k)"),
        compare(corner, 2, record, "b(n+2,2)"),
    ]


def _h_triangle_check(max_n: int, bfile_dir=None, threads: int = 1) -> List[ComparisonReport]:
    record = resolve("A028364", bfile_dir)
    values = _flatten(h_row(n) for n in range(1, max_n + 1))
    return [compare(values, record.offset, record, "h(n,m) rows")]


def _d_triangle_check(max_n: int, bfile_dir=None, threads: int = 1) -> List[ComparisonReport]:
    record = resolve("A033184", bfile_dir)
    recurrence = _flatten(d_row(n) for n in range(1, max_n + 1))
    closed = _flatten([d_closed_form(n, k) for k in range(n)] for n in range(1, max_n + 1))
    return [
        compare(recurrence, record.offset, record, "d(n,k) recurrence"),
        compare(closed, record.offset, record, "d(n,k) closed form"),
    ]


def _single_pattern_check(max_n: int, bfile_dir=None, threads: int = 1) -> List[ComparisonReport]:
    record = resolve("A243688", bfile_dir)
    return [
        compare(_pf_counts(PatternSet.of(text), max_n, threads), 1, record, f"pf_n({text})")
        for text in ("132", "231")
    ]


def _b_sum_vs_count_check(max_n: int, bfile_dir=None, threads: int = 1) -> List[ComparisonReport]:
    sums = [sum(b_row(n)) for n in range(1, max_n + 1)]
    record = SequenceRecord("sum_k b(n,k)", 1, tuple(sums), SequenceSource.COMPUTED)
    counts = _pf_counts(PatternSet.of("123", "132"), max_n, threads)
    return [compare(counts, 1, record, "pf_n(123,132)")]


CONJECTURES: Mapping[str, Conjecture] = MappingProxyType({
    conjecture.name: conjecture
    for conjecture in (
        Conjecture("b-A000958", "A000958",
                   "row sums of b(n,k) and b(n+2,2) against A000958 shifted by one", 10,
                   _b_row_sums_check),
        Conjecture("h-A028364", "A028364", "h(n,m) triangle read by rows", 9, _h_triangle_check),
        Conjecture("d-A033184", "A033184", "d(n,k) triangle read by rows", 9, _d_triangle_check),
        Conjecture("pf132-A243688", "A243688", "single patterns 132 and 231", 8,
                   _single_pattern_check),
        Conjecture("b-pf123132", "sum_k b(n,k)",
                   "b(n,k) row sums against counted {123,132}-avoiders", 7, _b_sum_vs_count_check),
    )
})


def run_conjecture(
    name: str,
    max_n: Optional[int] = None,
    bfile_dir: Optional[Union[str, Path]] = None,
    threads: int = 1,
) -> List[ComparisonReport]:
    """Run one named check; never raises on disagreement, the verdicts carry it.

    Raises:
        UnknownConjectureError: name is not registered
    """
    conjecture = CONJECTURES.get(name)
    if conjecture is None:
        raise UnknownConjectureError(
            f"Unknown conjecture {name!r}; choose from {', '.join(CONJECTURES)}"
        )
    max_n = max_n or conjecture.default_max_n
    logger.info(f"Running conjecture {name} up to n={max_n}")
    reports = conjecture.runner(max_n, bfile_dir=bfile_dir, threads=threads)
    for report in reports:
        if report.verdict is Verdict.MISMATCH:
            logger.warning(f"{name}: {report.name} {report.verdict_label}")
    return reports


def conjecture_checks(
    max_n: Optional[int] = None,
    bfile_dir: Optional[Union[str, Path]] = None,
    threads: int = 1,
) -> List[ComparisonReport]:
    """Run every registered conjecture."""
    reports = []
    for name in CONJECTURES:
        reports.extend(run_conjecture(name, max_n, bfile_dir, threads))
    return reports

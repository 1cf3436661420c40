"""Integer sequence records and comparison reports."""
from dataclasses import dataclass, field
from enum import Enum
from typing import Optional, Tuple

from src.models.permutation import PatternSet


class SequenceSource(Enum):
    """Where a sequence record came from."""
    EMBEDDED = "embedded"
    BFILE = "bfile"
    COMPUTED = "computed"


class Verdict(Enum):
    """Outcome of comparing computed values with a record."""
    FULL_MATCH = "full_match"
    MISMATCH = "mismatch"
    INSUFFICIENT_DATA = "insufficient_data"


@dataclass(frozen=True)
class SequenceRecord:
    """Integer sequence with identifier and starting index."""

    id: str
    offset: int
    values: Tuple[int, ...]
    source: SequenceSource = SequenceSource.EMBEDDED
    name: str = ""

    def __post_init__(self):
        object.__setattr__(self, 'values', tuple(self.values))
        if not self.values:
            raise ValueError(f"Sequence {self.id} has no values")

    @property
    def last_index(self) -> int:
        return self.offset + len(self.values) - 1

    def value_at(self, index: int) -> Optional[int]:
        """Value at an index, or None outside the record."""
        if self.offset <= index <= self.last_index:
            return self.values[index - self.offset]
        return None


@dataclass(frozen=True)
class IndexMatch:
    """One aligned index of a comparison."""
    index: int
    computed: int
    expected: int

    @property
    def ok(self) -> bool:
        return self.computed == self.expected


@dataclass(frozen=True)
class ComparisonReport:
    """Per-index comparison over the overlap of a computed sequence and a record."""

    name: str
    record_id: str
    matches: Tuple[IndexMatch, ...]
    verdict: Verdict
    mismatch_index: Optional[int] = None

    @property
    def checked_range(self) -> Optional[Tuple[int, int]]:
        if not self.matches:
            return None
        return self.matches[0].index, self.matches[-1].index

    @property
    def verdict_label(self) -> str:
        if self.verdict is Verdict.MISMATCH:
            return f"mismatch_at({self.mismatch_index})"
        return self.verdict.value

    def to_dict(self) -> dict:
        checked = self.checked_range
        return {
            'name': self.name,
            'record': self.record_id,
            'verdict': self.verdict.value,
            'mismatch_index': self.mismatch_index,
            'checked_range': list(checked) if checked else None,
            'matches': [
                {
                    'index': match.index,
                    'computed': str(match.computed),
                    'expected': str(match.expected),
                    'ok': match.ok,
                }
                for match in self.matches
            ],
        }


@dataclass(frozen=True)
class TableGroup:
    """Pattern sets sharing one enumeration sequence in a published table."""

    pattern_sets: Tuple[PatternSet, ...]
    values: Tuple[int, ...]
    oeis_id: Optional[str] = None
    oeis_shift: int = 0
    note: str = field(default="")

    def label(self) -> str:
        return "; ".join(pattern_set.to_text() for pattern_set in self.pattern_sets)

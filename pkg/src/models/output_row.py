"""Result rows emitted by the command-line surface."""
from dataclasses import dataclass
from typing import Optional, Tuple

from src.models.permutation import PatternSet
from src.models.sequence import TableGroup

CSV_HEADER = ("patterns", "n", "value", "method", "agrees")


@dataclass(frozen=True)
class OutputRow:
    """One count, possibly computed by several methods."""

    pattern_set: PatternSet
    n: int
    results: Tuple[Tuple[str, int], ...]
    oeis_id: Optional[str] = None

    @property
    def methods(self) -> Tuple[str, ...]:
        return tuple(method for method, _ in self.results)

    @property
    def value(self) -> Optional[int]:
        return self.results[0][1] if self.results else None

    @property
    def agrees(self) -> bool:
        return len({value for _, value in self.results}) <= 1

    def csv_fields(self) -> Tuple[str, ...]:
        """Fields in CSV_HEADER order."""
        value = "" if self.value is None else str(self.value)
        return (
            self.pattern_set.to_text(),
            str(self.n),
            value,
            "+".join(self.methods),
            "true" if self.agrees else "false",
        )

    def to_dict(self) -> dict:
        return {
            'patterns': self.pattern_set.labels(),
            'n': self.n,
            'value': None if self.value is None else str(self.value),
            'methods': {method: str(value) for method, value in self.results},
            'agrees': self.agrees,
            'oeis_id': self.oeis_id,
        }

    @staticmethod
    def from_dict(data: dict) -> 'OutputRow':
        """Inverse of to_dict."""
        return OutputRow(
            pattern_set=PatternSet.of(*data['patterns']),
            n=int(data['n']),
            results=tuple((method, int(value)) for method, value in data['methods'].items()),
            oeis_id=data.get('oeis_id'),
        )


@dataclass(frozen=True)
class BijectionReport:
    """Verification summary for one bijection at one size."""

    name: str
    n: int
    domain_size: int
    output_count: int
    all_valid: bool
    injective: bool
    image_matches: Optional[bool] = None
    expected_count: Optional[int] = None

    @property
    def passed(self) -> bool:
        checks = [self.all_valid, self.injective]
        if self.image_matches is not None:
            checks.append(self.image_matches)
        if self.expected_count is not None:
            checks.append(self.expected_count == self.output_count)
        return all(checks)

    def to_dict(self) -> dict:
        return {
            'name': self.name,
            'n': self.n,
            'domain_size': self.domain_size,
            'outputs': self.output_count,
            'all_valid': self.all_valid,
            'injective': self.injective,
            'image_matches': self.image_matches,
            'expected_count': None if self.expected_count is None else str(self.expected_count),
            'passed': self.passed,
        }


@dataclass(frozen=True)
class TableLine:
    """Computed counts for one published group of Wilf-equivalent pattern sets."""

    group: TableGroup
    computed: Tuple[Tuple[int, ...], ...]

    @property
    def values(self) -> Tuple[int, ...]:
        return self.computed[0] if self.computed else ()

    @property
    def agrees(self) -> bool:
        """Every set in the group produced the same sequence."""
        return len(set(self.computed)) <= 1

    @property
    def matches_published(self) -> bool:
        published = self.group.values[:len(self.values)]
        return self.agrees and self.values[:len(published)] == published

    def to_dict(self) -> dict:
        return {
            'pattern_sets': [pattern_set.labels() for pattern_set in self.group.pattern_sets],
            'values': [str(value) for value in self.values],
            'oeis_id': self.group.oeis_id,
            'agrees': self.agrees,
            'matches_published': self.matches_published,
        }

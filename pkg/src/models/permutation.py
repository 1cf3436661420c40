"""Permutation and pattern set models."""
from dataclasses import dataclass
from typing import List, Tuple


class PermutationError(ValueError):
    """Raised when entries are not a permutation of 1..n."""
    pass


@dataclass(frozen=True, order=True)
class Permutation:
    """Permutation of {1..n} in one-line notation."""

    entries: Tuple[int, ...]

    def __post_init__(self):
        entries = tuple(self.entries)
        object.__setattr__(self, 'entries', entries)
        if sorted(entries) != list(range(1, len(entries) + 1)):
            raise PermutationError(f"Not a permutation of 1..{len(entries)}: {entries}")

    def __len__(self) -> int:
        return len(self.entries)

    def __iter__(self):
        return iter(self.entries)

    def __getitem__(self, index):
        return self.entries[index]

    def to_text(self) -> str:
        """No separators up to length 9, commas above."""
        if len(self.entries) <= 9:
            return "".join(str(value) for value in self.entries)
        return ",".join(str(value) for value in self.entries)

    def __str__(self) -> str:
        return self.to_text()

    @staticmethod
    def from_text(text: str) -> 'Permutation':
        text = text.strip()
        if "," in text:
            return Permutation(tuple(int(part) for part in text.split(",")))
        if not text.isdigit():
            raise PermutationError(f"Cannot parse permutation {text!r}")
        return Permutation(tuple(int(char) for char in text))


@dataclass(frozen=True)
class PatternSet:
    """Canonical set of patterns: deduplicated and sorted by (length, entries)."""

    patterns: Tuple[Permutation, ...]

    def __post_init__(self):
        canonical = tuple(sorted(set(self.patterns), key=lambda p: (len(p), p.entries)))
        object.__setattr__(self, 'patterns', canonical)

    def __len__(self) -> int:
        return len(self.patterns)

    def __iter__(self):
        return iter(self.patterns)

    def labels(self) -> List[str]:
        return [pattern.to_text() for pattern in self.patterns]

    def to_text(self) -> str:
        return ",".join(self.labels())

    def __str__(self) -> str:
        return "{" + self.to_text() + "}"

    @staticmethod
    def of(*texts: str) -> 'PatternSet':
        return PatternSet(tuple(Permutation.from_text(text) for text in texts))

    @staticmethod
    def from_text(text: str) -> 'PatternSet':
        """Parse a comma-separated list of short one-line notations, e.g. "231,321"."""
        parts = [part for part in text.replace(" ", "").split(",") if part]
        if not parts:
            raise PermutationError("Empty pattern list")
        return PatternSet(tuple(Permutation.from_text(part) for part in parts))

"""Dyck path data models."""
from dataclasses import dataclass
from typing import Tuple

NORTH = "N"
EAST = "E"


class DyckPathError(ValueError):
    """Raised when a step sequence is not a Dyck path."""
    pass


@dataclass(frozen=True)
class DyckPath:
    """Lattice path of N/E steps that never drops below the diagonal."""

    steps: str

    def __post_init__(self):
        height = 0
        for position, step in enumerate(self.steps, 1):
            if step == NORTH:
                height += 1
            elif step == EAST:
                height -= 1
                if height < 0:
                    raise DyckPathError(f"Path crosses below the diagonal at step {position}")
            else:
                raise DyckPathError(f"Invalid step {step!r} at position {position}")
        if height != 0:
            raise DyckPathError(f"Path ends {height} steps above the diagonal")

    @property
    def semilength(self) -> int:
        return len(self.steps) // 2

    @property
    def is_empty(self) -> bool:
        return not self.steps

    def to_text(self) -> str:
        return self.steps

    def __str__(self) -> str:
        return self.steps

    @staticmethod
    def from_text(text: str) -> 'DyckPath':
        """Parse the canonical N/E string, ignoring whitespace and case."""
        return DyckPath("".join(text.split()).upper())

    @staticmethod
    def empty() -> 'DyckPath':
        return DyckPath("")


@dataclass(frozen=True)
class RunComposition:
    """Lengths of the maximal north runs of a path, bottom to top."""

    lengths: Tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, 'lengths', tuple(self.lengths))
        if any(length < 1 for length in self.lengths):
            raise ValueError(f"Run lengths must be positive: {self.lengths}")

    @property
    def total(self) -> int:
        return sum(self.lengths)

    def __len__(self) -> int:
        return len(self.lengths)

    def __iter__(self):
        return iter(self.lengths)

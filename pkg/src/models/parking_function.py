"""Parking function data models in block notation."""
from dataclasses import dataclass
from typing import Iterable, List, Sequence, Tuple

EMPTY_BLOCK_MARKS = ("", "∅")


class ParkingFunctionError(ValueError):
    """Base error for invalid parking functions.

    Attributes:
        index: First offending index (1-based)
    """

    def __init__(self, message: str, index: int):
        super().__init__(message)
        self.index = index


class LabelSetError(ParkingFunctionError):
    """Labels are not exactly {1..n}."""
    pass


class BlockCountError(ParkingFunctionError):
    """Number of blocks differs from the number of labels."""
    pass


class PrefixConditionError(ParkingFunctionError):
    """Fewer than i labels sit in the first i blocks."""
    pass


class RunOrderError(ParkingFunctionError):
    """A word is not increasing inside a north run."""
    pass


def _check_labels(labels: Sequence[int]):
    for position, label in enumerate(sorted(labels), 1):
        if label != position:
            raise LabelSetError(
                f"Label multiset is not {{1..{len(labels)}}}: first problem at label {position}",
                position,
            )


def _check_prefix(sizes: Sequence[int], n: int):
    filled = 0
    for i, size in enumerate(sizes[:n], 1):
        filled += size
        if filled < i:
            raise PrefixConditionError(f"Prefix condition fails at i={i}", i)


@dataclass(frozen=True)
class ParkingFunction:
    """Ordered collection of n label sets; block i holds the cars preferring spot i."""

    blocks: Tuple[Tuple[int, ...], ...]

    def __post_init__(self):
        blocks = tuple(tuple(sorted(block)) for block in self.blocks)
        object.__setattr__(self, 'blocks', blocks)

        labels = [label for block in blocks for label in block]
        n = len(labels)
        _check_labels(labels)
        _check_prefix([len(block) for block in blocks], n)
        if len(blocks) != n or n == 0:
            raise BlockCountError(
                f"Expected {n} blocks, found {len(blocks)}", min(len(blocks), n) + 1
            )

    @property
    def size(self) -> int:
        return len(self.blocks)

    def __len__(self) -> int:
        return len(self.blocks)

    def block_sizes(self) -> List[int]:
        return [len(block) for block in self.blocks]

    def to_text(self) -> str:
        """Block notation, e.g. "{1,2}|{}"."""
        return "|".join("{" + ",".join(str(label) for label in block) + "}" for block in self.blocks)

    def __str__(self) -> str:
        return self.to_text()

    @staticmethod
    def from_text(text: str) -> 'ParkingFunction':
        """Parse block notation; "{}" and "∅" both denote an empty block."""
        blocks = []
        for part in text.strip().split("|"):
            body = part.strip()
            if body.startswith("{") and body.endswith("}"):
                body = body[1:-1]
            body = body.strip()
            if body in EMPTY_BLOCK_MARKS:
                blocks.append(())
            else:
                blocks.append(tuple(int(label) for label in body.split(",")))
        return ParkingFunction(tuple(blocks))

    @staticmethod
    def from_blocks(blocks: Iterable[Iterable[int]]) -> 'ParkingFunction':
        return ParkingFunction(tuple(tuple(block) for block in blocks))

    def to_dict(self) -> list:
        """JSON form: list of lists of integers."""
        return [list(block) for block in self.blocks]

    @staticmethod
    def from_dict(data: list) -> 'ParkingFunction':
        return ParkingFunction.from_blocks(data)


@dataclass(frozen=True)
class PreferenceVector:
    """Preferred spot of each car, prefs[i-1] for car i."""

    prefs: Tuple[int, ...]

    def __post_init__(self):
        prefs = tuple(self.prefs)
        object.__setattr__(self, 'prefs', prefs)
        n = len(prefs)
        for car, spot in enumerate(prefs, 1):
            if not 1 <= spot <= n:
                raise PrefixConditionError(f"Car {car} prefers spot {spot} outside 1..{n}", car)
        counts = [0] * n
        for spot in prefs:
            counts[spot - 1] += 1
        _check_prefix(counts, n)

    def __len__(self) -> int:
        return len(self.prefs)

    def to_text(self) -> str:
        return "(" + ",".join(str(spot) for spot in self.prefs) + ")"

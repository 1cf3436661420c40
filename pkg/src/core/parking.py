"""Parking functions: validation, view conversions and exhaustive enumeration."""
import logging
from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from itertools import chain, combinations
from typing import Dict, Iterable, Iterator, List, Optional, Sequence, Tuple, Union

from src.core.dyck import block_sizes, enumerate_dyck_paths
from src.models.dyck_path import DyckPath
from src.models.parking_function import (
    BlockCountError,
    LabelSetError,
    ParkingFunction,
    ParkingFunctionError,
    PreferenceVector,
    PrefixConditionError,
    RunOrderError,
)
from src.models.permutation import Permutation

logger = logging.getLogger(__name__)

__all__ = [
    'BlockCountError', 'LabelSetError', 'ParkingFunctionError', 'PrefixConditionError',
    'RunOrderError', 'validate', 'to_dyck', 'reading_permutation', 'from_path_and_word',
    'to_preferences', 'from_preferences', 'park', 'enumerate_parking_functions',
    'reading_permutation_histogram',
]

Blocks = Tuple[Tuple[int, ...], ...]

_histograms: Dict[int, Dict[Permutation, int]] = {}


def validate(blocks: Iterable[Iterable[int]]) -> ParkingFunction:
    """Build a parking function from raw blocks.

    Raises:
        LabelSetError: labels are not {1..n}
        PrefixConditionError: fewer than i labels in the first i blocks
        BlockCountError: number of blocks differs from n
    """
    return ParkingFunction.from_blocks(blocks)


def to_dyck(pf: ParkingFunction) -> DyckPath:
    """Underlying Dyck path: one run N^|B_i| E per block."""
    return DyckPath("".join("N" * len(block) + "E" for block in pf.blocks))


def reading_permutation(pf: ParkingFunction) -> Permutation:
    """Labels read block by block, bottom to top."""
    return Permutation(tuple(chain.from_iterable(pf.blocks)))


def from_path_and_word(path: DyckPath, word: Permutation) -> ParkingFunction:
    """Label the north steps of path with word, bottom to top.

    Raises:
        ValueError: lengths differ
        RunOrderError: word decreases inside a north run (names the run, 1-based)
    """
    if len(word) != path.semilength:
        raise ValueError(f"Word of length {len(word)} does not fit semilength {path.semilength}")
    blocks = []
    position = 0
    run_index = 0
    for size in block_sizes(path):
        block = word.entries[position:position + size]
        if size:
            run_index += 1
            if any(a > b for a, b in zip(block, block[1:])):
                raise RunOrderError(f"Run {run_index} is not increasing", run_index)
        blocks.append(block)
        position += size
    return ParkingFunction(tuple(blocks))


def to_preferences(pf: ParkingFunction) -> PreferenceVector:
    """Car i prefers the spot of the block holding label i."""
    prefs = [0] * pf.size
    for spot, block in enumerate(pf.blocks, 1):
        for label in block:
            prefs[label - 1] = spot
    return PreferenceVector(tuple(prefs))


def from_preferences(vector: Union[PreferenceVector, Sequence[int]]) -> ParkingFunction:
    """Group cars by preferred spot; rejects vectors that fail the prefix condition."""
    if not isinstance(vector, PreferenceVector):
        vector = PreferenceVector(tuple(vector))
    blocks: List[List[int]] = [[] for _ in vector.prefs]
    for car, spot in enumerate(vector.prefs, 1):
        blocks[spot - 1].append(car)
    return ParkingFunction.from_blocks(blocks)


def park(prefs: Sequence[int]) -> Optional[Tuple[int, ...]]:
    """Run the one-way street: each car takes the first free spot at or after its preference.

    Returns:
        Spot of each car, or None if some car drives off the end
    """
    n = len(prefs)
    taken = [False] * (n + 1)
    spots = []
    for preference in prefs:
        spot = preference
        while spot <= n and taken[spot]:
            spot += 1
        if spot > n or spot < 1:
            return None
        taken[spot] = True
        spots.append(spot)
    return tuple(spots)


def _labelings(sizes: Sequence[int], remaining: Tuple[int, ...]) -> Iterator[Blocks]:
    if not sizes:
        yield ()
        return
    size, rest = sizes[0], sizes[1:]
    for chosen in combinations(remaining, size):
        left = tuple(label for label in remaining if label not in chosen)
        for tail in _labelings(rest, left):
            yield (chosen,) + tail


def enumerate_parking_functions(n: int) -> Iterator[ParkingFunction]:
    """Every parking function of size n exactly once.

    Outer loop over Dyck paths in canonical order, inner loop over words
    increasing inside each run, in lexicographic order.
    """
    if n < 1:
        raise ValueError(f"Parking functions need n >= 1, got {n}")
    labels = tuple(range(1, n + 1))
    for path in enumerate_dyck_paths(n):
        for blocks in _labelings(block_sizes(path), labels):
            yield ParkingFunction(blocks)


def _path_histogram(steps: str) -> Counter:
    path = DyckPath(steps)
    labels = tuple(range(1, path.semilength + 1))
    return Counter(
        tuple(chain.from_iterable(blocks)) for blocks in _labelings(block_sizes(path), labels)
    )


def reading_permutation_histogram(n: int, threads: int = 1) -> Dict[Permutation, int]:
    """Number of size-n parking functions per reading permutation, from a full enumeration.

    Cached per n; with threads > 1 the paths are split over a process pool.
    """
    if n < 1:
        raise ValueError(f"Parking functions need n >= 1, got {n}")
    if n in _histograms:
        return _histograms[n]

    words = [path.steps for path in enumerate_dyck_paths(n)]
    total: Counter = Counter()
    if threads > 1:
        with ProcessPoolExecutor(max_workers=threads) as pool:
            for partial in pool.map(_path_histogram, words, chunksize=max(1, len(words) // (4 * threads))):
                total.update(partial)
    else:
        for word in words:
            total.update(_path_histogram(word))

    histogram = {Permutation(entries): count for entries, count in sorted(total.items())}
    _histograms[n] = histogram
    logger.info(f"Enumerated {sum(histogram.values())} parking functions of size {n}")
    return histogram

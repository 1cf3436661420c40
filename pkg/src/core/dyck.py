"""Dyck path enumeration, decomposition and path statistics."""
import logging
from functools import lru_cache
from typing import List, Tuple

from src.core.numbers import binomial, catalan, exact_div
from src.models.dyck_path import EAST, NORTH, DyckPath, DyckPathError, RunComposition

logger = logging.getLogger(__name__)


class NoDecompositionError(DyckPathError):
    """The empty path has no first-return decomposition."""
    pass


@lru_cache(maxsize=None)
def _dyck_words(n: int) -> Tuple[str, ...]:
    words: List[str] = []

    def extend(prefix: str, north: int, east: int):
        if north == n and east == n:
            words.append(prefix)
            return
        if north < n:
            extend(prefix + NORTH, north + 1, east)
        if east < north:
            extend(prefix + EAST, north, east + 1)

    extend("", 0, 0)
    logger.debug(f"Generated {len(words)} Dyck words of semilength {n}")
    return tuple(words)


def enumerate_dyck_paths(n: int) -> List[DyckPath]:
    """All Dyck paths of semilength n, lexicographic with N < E.

    Args:
        n: Semilength, n >= 0 (n = 0 gives the single empty path)

    Returns:
        List of C_n paths
    """
    if n < 0:
        raise ValueError(f"Semilength must be non-negative, got {n}")
    return [DyckPath(word) for word in _dyck_words(n)]


def first_return_split(path: DyckPath) -> Tuple[DyckPath, DyckPath]:
    """Split path = N inner E tail at the first return to the diagonal."""
    if path.is_empty:
        raise NoDecompositionError("The empty path has no first return")
    height = 0
    for position, step in enumerate(path.steps):
        height += 1 if step == NORTH else -1
        if height == 0:
            return DyckPath(path.steps[1:position]), DyckPath(path.steps[position + 1:])
    raise NoDecompositionError(f"Path {path} never returns to the diagonal")


def compose(inner: DyckPath, tail: DyckPath) -> DyckPath:
    """Inverse of first_return_split."""
    return DyckPath(NORTH + inner.steps + EAST + tail.steps)


def north_run_lengths(path: DyckPath) -> RunComposition:
    """Lengths of the maximal north runs, bottom to top."""
    return RunComposition(tuple(len(run) for run in path.steps.split(EAST) if run))


def block_sizes(path: DyckPath) -> List[int]:
    """Number of north steps on each vertical line x = 0..n-1, empty lines included."""
    return [len(run) for run in path.steps.split(EAST)[:path.semilength]]


def trailing_singleton_norths(path: DyckPath) -> int:
    """Count trailing north runs of length exactly one.

    The path (NE)^n counts n - 1: its first north step is never counted.
    """
    if path.is_empty:
        raise DyckPathError("trailing_singleton_norths needs a non-empty path")
    runs = north_run_lengths(path).lengths
    if all(length == 1 for length in runs):
        return path.semilength - 1
    count = 0
    for length in reversed(runs):
        if length != 1:
            break
        count += 1
    return count


def mth_north_followed_by_east(path: DyckPath, m: int) -> bool:
    """True when the m-th north step is directly followed by an east step."""
    if not 1 <= m <= path.semilength:
        raise DyckPathError(f"North step index {m} outside 1..{path.semilength}")
    seen = 0
    for position, step in enumerate(path.steps):
        if step == NORTH:
            seen += 1
            if seen == m:
                return path.steps[position + 1] == EAST
    raise DyckPathError(f"Path {path} has fewer than {m} north steps")


@lru_cache(maxsize=None)
def count_h(n: int, m: int) -> int:
    """Number of semilength-n paths whose m-th north step is followed by an east step."""
    if n < 1 or m < 1 or m > n:
        return 0
    if m == 1:
        return catalan(n - 1)
    if m == n:
        return catalan(n)
    below = sum(catalan(i - 1) * count_h(n - i, m - i) for i in range(1, m))
    above = sum(count_h(i - 1, m - 1) * catalan(n - i) for i in range(m, n + 1))
    return below + above


@lru_cache(maxsize=None)
def count_d(n: int, k: int) -> int:
    """Number of semilength-n paths with exactly k trailing singleton north runs."""
    if n < 1 or k < 0 or k > n - 1:
        return 0
    if (n, k) in ((1, 0), (2, 0), (2, 1)):
        return 1
    return count_d(n - 1, k - 1) + sum(
        catalan(n - i - 1) * count_d(i, k) for i in range(k + 1, n)
    )


def d_closed_form(n: int, k: int) -> int:
    """(k + 1) binomial(2n - 2 - k, n - 1 - k) / n."""
    if n < 1 or k < 0 or k > n - 1:
        return 0
    return exact_div((k + 1) * binomial(2 * n - 2 - k, n - 1 - k), n)

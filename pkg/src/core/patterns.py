"""Classical pattern containment and the two pattern-avoiding parking function counters."""
import logging
from concurrent.futures import ProcessPoolExecutor
from enum import Enum
from functools import partial
from itertools import combinations, permutations
from typing import Callable, Dict, FrozenSet, List, Sequence, Tuple, Union

from src.core.parking import reading_permutation_histogram
from src.models.permutation import PatternSet, Permutation, PermutationError

logger = logging.getLogger(__name__)

NAIVE_CAP = 8
BRUTE_FORCE_CAP = 10
COMPATIBLE_PATH_CAP = 60


class CapExceededError(ValueError):
    """Requested size is beyond the configured brute-force cap."""
    pass


class EngineMismatchError(RuntimeError):
    """The naive and permutation-sum engines returned different counts."""

    def __init__(self, message: str, naive: int, perm_sum: int):
        super().__init__(message)
        self.naive = naive
        self.perm_sum = perm_sum


class ShiftPreconditionError(ValueError):
    """Permutation is not of the form J_k ⊕ J_(n-k)."""
    pass


class CountMethod(Enum):
    """Counting engine selector."""
    NAIVE = "naive"
    PERM_SUM = "perm_sum"
    BOTH = "both"


def standardize(values: Sequence[int]) -> Permutation:
    """The permutation order-isomorphic to a sequence of distinct values."""
    return Permutation(_ranks(values))


def _ranks(values: Sequence[int]) -> Tuple[int, ...]:
    ranks = [0] * len(values)
    for rank, position in enumerate(sorted(range(len(values)), key=values.__getitem__), 1):
        ranks[position] = rank
    return tuple(ranks)


def contains(perm: Permutation, pattern: Permutation) -> bool:
    """True when some subsequence of perm is order-isomorphic to pattern."""
    if len(pattern) > len(perm):
        return False
    target = pattern.entries
    return any(_ranks(values) == target for values in combinations(perm.entries, len(pattern)))


def count_occurrences(perm: Permutation, pattern: Permutation) -> int:
    """Number of occurrences of pattern in perm."""
    if len(pattern) > len(perm):
        return 0
    target = pattern.entries
    return sum(1 for values in combinations(perm.entries, len(pattern)) if _ranks(values) == target)


def avoids(perm: Permutation, pattern_set: PatternSet) -> bool:
    """True when perm contains none of the patterns."""
    return not any(contains(perm, pattern) for pattern in pattern_set)


def _occurs_through(entries: Tuple[int, ...], position: int, target: Tuple[int, ...]) -> bool:
    """True if some occurrence of target uses the entry at position."""
    others = [i for i in range(len(entries)) if i != position]
    for chosen in combinations(others, len(target) - 1):
        indices = sorted(chosen + (position,))
        if _ranks([entries[i] for i in indices]) == target:
            return True
    return False


def enumerate_avoiders(n: int, pattern_set: PatternSet, cap: int = BRUTE_FORCE_CAP) -> List[Permutation]:
    """S_n(pattern_set) in lexicographic order.

    Grown one size at a time by inserting the new maximum into each avoider
    of the previous size; deleting the maximum never creates an occurrence,
    so this is the same set as filtering all of S_n.

    Raises:
        CapExceededError: n above cap
    """
    if n > cap:
        raise CapExceededError(
            f"n={n} exceeds the brute-force cap {cap}; the permutation-sum engine is unavailable"
        )
    level: List[Tuple[int, ...]] = [()]
    for size in range(1, n + 1):
        targets = [pattern.entries for pattern in pattern_set if len(pattern) <= size]
        grown = []
        for entries in level:
            for position in range(size):
                candidate = entries[:position] + (size,) + entries[position:]
                if not any(_occurs_through(candidate, position, target) for target in targets):
                    grown.append(candidate)
        level = grown
    return [Permutation(entries) for entries in sorted(level)]


def direct_sum(alpha: Permutation, beta: Permutation) -> Permutation:
    """alpha followed by beta shifted above it."""
    shift = len(alpha)
    return Permutation(alpha.entries + tuple(value + shift for value in beta.entries))


def skew_sum(alpha: Permutation, beta: Permutation) -> Permutation:
    """alpha shifted above, followed by beta."""
    shift = len(beta)
    return Permutation(tuple(value + shift for value in alpha.entries) + beta.entries)


def identity(n: int) -> Permutation:
    """I_n = 12...n."""
    return Permutation(tuple(range(1, n + 1)))


def reverse_identity(n: int) -> Permutation:
    """J_n = n...21."""
    return Permutation(tuple(range(n, 0, -1)))


def ascent_set(perm: Permutation) -> FrozenSet[int]:
    """Positions i (1-based) with perm_i < perm_(i+1)."""
    entries = perm.entries
    return frozenset(i for i in range(1, len(entries)) if entries[i - 1] < entries[i])


def compatible_path_count(perm: Permutation, cap: int = COMPATIBLE_PATH_CAP) -> int:
    """Number of Dyck paths whose north steps perm can label, increasing within runs.

    DP over (north steps placed, east steps placed): between north steps i and
    i+1 at least one east step is forced when i is a descent.
    """
    n = len(perm)
    if n > cap:
        raise CapExceededError(f"Permutation length {n} exceeds the path-count cap {cap}")
    if n == 0:
        return 1
    ascents = ascent_set(perm)
    # ways[j]: partial paths ending with north step i after j east steps
    ways = [1]
    for i in range(1, n):
        forced = 0 if i in ascents else 1
        grown = [0] * (i + 1)
        running = 0
        for east in range(i + 1):
            source = east - forced
            if 0 <= source < len(ways):
                running += ways[source]
            grown[east] = running
        ways = grown
    return sum(ways)


def _count_naive(n: int, pattern_set: PatternSet, cap: int, threads: int) -> int:
    if n > cap:
        raise CapExceededError(f"n={n} exceeds the naive enumeration cap {cap}")
    histogram = reading_permutation_histogram(n, threads)
    return sum(count for perm, count in histogram.items() if avoids(perm, pattern_set))


def _count_perm_sum(n: int, pattern_set: PatternSet, cap: int, threads: int,
                    path_cap: int = COMPATIBLE_PATH_CAP) -> int:
    avoiders = enumerate_avoiders(n, pattern_set, cap)
    paths = partial(compatible_path_count, cap=path_cap)
    if threads > 1 and len(avoiders) > 1:
        with ProcessPoolExecutor(max_workers=threads) as pool:
            chunk = max(1, len(avoiders) // (4 * threads))
            return sum(pool.map(paths, avoiders, chunksize=chunk))
    return sum(paths(perm) for perm in avoiders)


def count_pf_avoiding(
    n: int,
    pattern_set: PatternSet,
    method: Union[CountMethod, str] = CountMethod.BOTH,
    naive_cap: int = NAIVE_CAP,
    brute_force_cap: int = BRUTE_FORCE_CAP,
    threads: int = 1,
    path_cap: int = COMPATIBLE_PATH_CAP,
) -> int:
    """pf_n(pattern_set): parking functions of size n whose reading permutation avoids the set.

    Args:
        n: Size, n >= 1
        pattern_set: Patterns to avoid
        method: naive, perm_sum, or both (both raises on disagreement)
        naive_cap: Largest n for the naive engine
        brute_force_cap: Largest n for enumerating avoiders
        threads: Worker processes; the total does not depend on it
        path_cap: Largest permutation length for compatible_path_count

    Returns:
        The count

    Raises:
        CapExceededError: n is beyond the cap of a requested engine
        EngineMismatchError: method=both and the engines disagree
    """
    if n < 1:
        raise ValueError(f"Parking functions need n >= 1, got {n}")
    method = CountMethod(method)
    if method is CountMethod.NAIVE:
        return _count_naive(n, pattern_set, naive_cap, threads)
    if method is CountMethod.PERM_SUM:
        return _count_perm_sum(n, pattern_set, brute_force_cap, threads, path_cap)

    naive = _count_naive(n, pattern_set, naive_cap, threads)
    perm_sum = _count_perm_sum(n, pattern_set, brute_force_cap, threads, path_cap)
    if naive != perm_sum:
        logger.error(f"Engines disagree for {pattern_set} at n={n}: naive={naive}, perm_sum={perm_sum}")
        raise EngineMismatchError(
            f"Engines disagree for {pattern_set} at n={n}: {naive} != {perm_sum}", naive, perm_sum
        )
    return naive


def ascent_preserving_shift(perm: Permutation) -> Permutation:
    """Move J_k ⊕ J_(n-k) to J_(k-1) ⊖ (1 ⊕ J_(n-k)) keeping every ascent.

    Digits before 1 go up by n - k, digits after 1 go down by k - 1, where k
    is the position of 1.
    """
    if not avoids(perm, PatternSet.of("123", "231", "312")):
        raise ShiftPreconditionError(f"{perm} does not avoid 123, 231 and 312")
    n = len(perm)
    k = perm.entries.index(1) + 1
    shifted = (
        tuple(value + n - k for value in perm.entries[:k - 1])
        + (1,)
        + tuple(value - (k - 1) for value in perm.entries[k:])
    )
    return Permutation(shifted)


def admissible_pattern_sets(size: int) -> List[PatternSet]:
    """Sets of `size` length-3 patterns not holding both 123 and 321."""
    patterns = [Permutation(entries) for entries in permutations(range(1, 4))]
    forbidden = {Permutation((1, 2, 3)), Permutation((3, 2, 1))}
    return [
        PatternSet(chosen)
        for chosen in combinations(patterns, size)
        if not forbidden.issubset(chosen)
    ]


def wilf_classes(
    pattern_sets: Sequence[PatternSet],
    max_n: int,
    counter: Callable[[int, PatternSet], int],
) -> List[List[PatternSet]]:
    """Group pattern sets with identical counts for n = 1..max_n, in first-appearance order."""
    groups: Dict[Tuple[int, ...], List[PatternSet]] = {}
    for pattern_set in pattern_sets:
        signature = tuple(counter(n, pattern_set) for n in range(1, max_n + 1))
        groups.setdefault(signature, []).append(pattern_set)
    return list(groups.values())


__all__ = [
    'PermutationError', 'CapExceededError', 'EngineMismatchError', 'ShiftPreconditionError',
    'CountMethod', 'standardize', 'contains', 'count_occurrences', 'avoids',
    'enumerate_avoiders', 'direct_sum', 'skew_sum', 'identity', 'reverse_identity',
    'ascent_set', 'compatible_path_count', 'count_pf_avoiding', 'ascent_preserving_shift',
    'admissible_pattern_sets', 'wilf_classes',
]

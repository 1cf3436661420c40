"""Closed forms and recurrences for pf_n over pattern sets, keyed by PatternSet."""
import logging
from dataclasses import dataclass
from enum import Enum
from functools import lru_cache, reduce
from operator import mul
from types import MappingProxyType
from typing import Callable, List, Mapping, Optional, Sequence

from src.core.dyck import count_d, count_h, enumerate_dyck_paths, north_run_lengths
from src.core.numbers import binomial, catalan, exact_div
from src.models.permutation import PatternSet

logger = logging.getLogger(__name__)

__all__ = [
    'FormulaDomainError', 'FormulaKind', 'FormulaEntry', 'catalan', 'binomial',
    'recurrence_b', 'recurrence_f', 'triangle_a', 'super_catalan', 'avoiding_123_sum',
    'leafy_tree_count', 'catalan_pair_sum', 'b_row', 'a_row', 'd_row', 'h_row',
    'registry', 'closed_form',
]


class FormulaDomainError(ValueError):
    """Argument outside the domain where a formula is defined."""
    pass


class FormulaKind(Enum):
    CLOSED_FORM = "closed_form"
    RECURRENCE = "recurrence"
    BIJECTIVE_COUNT = "bijective_count"


@dataclass(frozen=True)
class FormulaEntry:
    """Registered count for one pattern set."""

    key: PatternSet
    kind: FormulaKind
    evaluator: Callable[[int], int]
    refs: str
    oeis_id: Optional[str] = None

    def evaluate(self, n: int) -> int:
        """Value at n; raises FormulaDomainError for n < 1."""
        if n < 1:
            raise FormulaDomainError(f"Formulas are defined for n >= 1, got {n}")
        return self.evaluator(n)


@lru_cache(maxsize=None)
def recurrence_b(n: int, k: int) -> int:
    """b(n, k) for the {123,132} analysis, 0 outside 2 <= k <= n + 1."""
    if n < 1 or k < 2 or k > n + 1:
        return 0
    if k == 2 and n in (1, 2):
        return 1
    return 2 * recurrence_b(n - 1, k - 1) + sum(recurrence_b(n - 2, j) for j in range(k - 1, n))


@lru_cache(maxsize=None)
def recurrence_f(n: int) -> int:
    """f(n) for {123,213}; equals C_(n+1) - C_n."""
    if n < 0:
        raise FormulaDomainError(f"f is defined for n >= 0, got {n}")
    if n <= 1:
        return 1
    nested = sum(
        recurrence_f(i - k) * recurrence_f(n - i - j)
        for i in range(2, n + 1)
        for j in range(0, n - i + 1)
        for k in range(2, i + 1)
    )
    return nested + sum(recurrence_f(n - 1 - j) for j in range(n))


@lru_cache(maxsize=None)
def triangle_a(n: int, k: int) -> int:
    """a(n, k): parking functions whose reading permutation is I_(k-1) ⊕ J_(n-k+1).

    Raises:
        FormulaDomainError: k outside 1..n
    """
    if not 1 <= k <= n:
        raise FormulaDomainError(f"a(n, k) needs 1 <= k <= n, got n={n}, k={k}")
    if k == 1:
        return 1
    if k == n:
        return catalan(n)
    return triangle_a(n - 1, k) + triangle_a(n, k - 1)


@lru_cache(maxsize=None)
def super_catalan(n: int) -> int:
    """pf_n(132,213) recurrence seeded with value 1 at n = 0."""
    if n < 0:
        raise FormulaDomainError(f"super_catalan is defined for n >= 0, got {n}")
    if n == 0:
        return 1
    return super_catalan(n - 1) + 2 * sum(
        super_catalan(i) * super_catalan(n - i - 1) for i in range(1, n)
    )


def avoiding_123_sum(n: int) -> int:
    """pf_n(123) = sum over k >= n/2 of C_k binomial(n,k) binomial(k,n-k) / (n-k+1)."""
    if n < 1:
        raise FormulaDomainError(f"pf_n(123) is defined for n >= 1, got {n}")
    return sum(
        exact_div(catalan(k) * binomial(n, k) * binomial(k, n - k), n - k + 1)
        for k in range((n + 1) // 2, n + 1)
    )


@lru_cache(maxsize=None)
def leafy_tree_count(edges: int) -> int:
    """Rooted ordered trees with this many edges whose internal vertices all have a leaf child."""
    if edges < 1:
        return 0
    leafy = [0] * (edges + 1)
    # child sequences by total edge weight: any children / no leaf child
    sequences = [1] + [0] * edges
    leafless = [1] + [0] * edges
    for e in range(1, edges + 1):
        sequences[e] = sequences[e - 1] + sum(leafy[t] * sequences[e - 1 - t] for t in range(1, e))
        leafless[e] = sum(leafy[t] * leafless[e - 1 - t] for t in range(1, e))
        leafy[e] = sequences[e] - leafless[e]
    return leafy[edges]


def catalan_pair_sum(n: int) -> int:
    """Sum over 1 <= k <= n and i < k of C_i C_(n-i-1); equals binomial(2n-1, n)."""
    return sum(catalan(i) * catalan(n - i - 1) for k in range(1, n + 1) for i in range(k))


def b_row(n: int) -> List[int]:
    """b(n, k) for k = 2..n+1."""
    return [recurrence_b(n, k) for k in range(2, n + 2)]


def a_row(n: int) -> List[int]:
    """a(n, k) for k = 1..n."""
    return [triangle_a(n, k) for k in range(1, n + 1)]


def d_row(n: int) -> List[int]:
    """d(n, k) for k = 0..n-1."""
    return [count_d(n, k) for k in range(n)]


def h_row(n: int) -> List[int]:
    """h(n, m) for m = 1..n."""
    return [count_h(n, m) for m in range(1, n + 1)]


def _decreasing_only(n: int) -> int:
    return 3 if n == 2 else 1


def _catalan_except_two(n: int) -> int:
    return 3 if n == 2 else catalan(n)


def _three_after_one(n: int) -> int:
    return 1 if n == 1 else 3


def _successor(n: int) -> int:
    return 1 if n == 1 else n + 1


def _catalan_plus_one(n: int) -> int:
    return 1 if n == 1 else catalan(n) + 1


def _catalan_plus_previous(n: int) -> int:
    return 1 if n == 1 else catalan(n) + catalan(n - 1)


def _twice_catalan_minus_previous(n: int) -> int:
    return 2 * catalan(n) - catalan(n - 1)


def _odd(n: int) -> int:
    return 2 * n - 1


def _triangular(n: int) -> int:
    return binomial(n + 1, 2)


def _centered_polygonal(n: int) -> int:
    return n * (n - 1) + 1


def _catalan_partial_sum(n: int) -> int:
    return sum(catalan(i) for i in range(1, n + 1))


def _catalan_difference(n: int) -> int:
    return catalan(n + 1) - catalan(n)


def _catalan_plus_weighted_previous(n: int) -> int:
    return catalan(n) + (n - 1) * catalan(n - 1)


def _half_central_binomial(n: int) -> int:
    return binomial(2 * n - 1, n)


def _weighted_catalan_difference(n: int) -> int:
    return n * catalan(n) - (n - 1) * catalan(n - 1)


def _dissection_sum(n: int) -> int:
    total = sum(binomial(2 * n - k, n + k) * binomial(n + k, k) for k in range(n // 2 + 1))
    return exact_div(total, n + 1)


def _pair_123_231(n: int) -> int:
    return binomial(n + 1, 3) + binomial(n, 2) + 1


def _pair_123_312(n: int) -> int:
    return 2 * binomial(n + 1, 3) + 1


def _b_row_sum(n: int) -> int:
    return sum(b_row(n))


def _binomial_catalan_sum(n: int) -> int:
    return sum(binomial(n - 1, k) * catalan(n - k) for k in range(n))


def _h_weighted_low(n: int) -> int:
    return catalan(n) + sum((n - m) * count_h(n, m) for m in range(1, n))


def _h_weighted_high(n: int) -> int:
    return catalan(n) + sum(m * count_h(n, m) for m in range(1, n))


def _d_weighted(n: int) -> int:
    return sum(
        sum(binomial(n - 1, i) for i in range(k + 1)) * count_d(n, k) for k in range(n)
    )


def _ternary_trees(n: int) -> int:
    return exact_div(binomial(3 * n, n), 2 * n + 1)


def _run_product_sum(n: int) -> int:
    total = 0
    for path in enumerate_dyck_paths(n):
        runs = north_run_lengths(path).lengths
        total += reduce(mul, (length + 1 for length in runs[:-1]), 1)
    return total


def _single_labeling(n: int) -> int:
    return 1


def _leafy_trees(n: int) -> int:
    return leafy_tree_count(n + 1)


# (pattern sets, kind, evaluator, refs, oeis id)
_DEFINITIONS = [
    ((("123", "132", "213", "231", "312"),), FormulaKind.CLOSED_FORM, _decreasing_only,
     "only decreasing labels survive; n=2 keeps all three", None),
    ((("132", "213", "231", "312", "321"),), FormulaKind.CLOSED_FORM, _catalan_except_two,
     "only increasing labels survive; n=2 keeps all three", None),
    ((("123", "132", "213", "231"), ("123", "132", "231", "312")), FormulaKind.CLOSED_FORM,
     _three_after_one, "constant 3 from n=2", "A122553"),
    ((("123", "132", "213", "312"), ("123", "213", "231", "312")), FormulaKind.CLOSED_FORM,
     _successor, "n+1 from n=2", "A065475"),
    ((("132", "213", "231", "312"),), FormulaKind.CLOSED_FORM, _catalan_plus_one,
     "C_n + 1 from n=2", None),
    ((("132", "213", "231", "321"), ("132", "231", "312", "321")), FormulaKind.CLOSED_FORM,
     _catalan_plus_previous, "C_n + C_(n-1) from n=2", "A071716"),
    ((("132", "213", "312", "321"), ("213", "231", "312", "321")), FormulaKind.CLOSED_FORM,
     _twice_catalan_minus_previous, "2C_n - C_(n-1)", "A000782"),
    ((("123", "132", "231"),), FormulaKind.CLOSED_FORM, _odd, "2n - 1", "A005408"),
    ((("123", "132", "312"), ("123", "213", "231"), ("123", "231", "312")),
     FormulaKind.CLOSED_FORM, _triangular, "binomial(n+1, 2)", "A000217"),
    ((("123", "213", "312"),), FormulaKind.CLOSED_FORM, _centered_polygonal,
     "n(n-1) + 1", "A002061"),
    ((("123", "132", "213"),), FormulaKind.BIJECTIVE_COUNT, _leafy_trees,
     "trees with n+1 edges whose vertices are leaves or adjacent to leaves", "A143363"),
    ((("132", "213", "231"), ("132", "231", "312")), FormulaKind.CLOSED_FORM,
     _catalan_partial_sum, "C_1 + ... + C_n", "A014138"),
    ((("132", "213", "312"), ("213", "231", "312")), FormulaKind.CLOSED_FORM,
     _catalan_difference, "C_(n+1) - C_n; row sums of a(n, k)", "A000245"),
    ((("132", "231", "321"),), FormulaKind.CLOSED_FORM, _catalan_plus_weighted_previous,
     "C_n + (n-1)C_(n-1)", "A077587"),
    ((("132", "213", "321"), ("132", "312", "321"), ("213", "231", "321")),
     FormulaKind.CLOSED_FORM, _half_central_binomial, "binomial(2n-1, n)", "A001700"),
    ((("213", "312", "321"),), FormulaKind.CLOSED_FORM, _weighted_catalan_difference,
     "nC_n - (n-1)C_(n-1)", "A076540"),
    ((("231", "312", "321"),), FormulaKind.CLOSED_FORM, _dissection_sum,
     "polygon dissections: sum binomial(2n-k, n+k) binomial(n+k, k) / (n+1)", "A001002"),
    ((("123", "231"),), FormulaKind.CLOSED_FORM, _pair_123_231,
     "binomial(n+1, 3) + binomial(n, 2) + 1", "A105163"),
    ((("123", "312"),), FormulaKind.CLOSED_FORM, _pair_123_312,
     "2 binomial(n+1, 3) + 1", "A064999"),
    ((("123", "132"),), FormulaKind.RECURRENCE, _b_row_sum,
     "sum of b(n, k) over 2 <= k <= n+1", "A000958"),
    ((("123", "213"),), FormulaKind.CLOSED_FORM, _catalan_difference,
     "C_(n+1) - C_n, also the f(n) recurrence", "A000245"),
    ((("132", "231"),), FormulaKind.CLOSED_FORM, _binomial_catalan_sum,
     "sum binomial(n-1, k) C_(n-k)", "A002212"),
    ((("132", "213"), ("132", "312"), ("213", "231"), ("231", "312")),
     FormulaKind.RECURRENCE, super_catalan, "first-return recurrence", "A001003"),
    ((("132", "321"),), FormulaKind.RECURRENCE, _h_weighted_low,
     "C_n + sum (n-m) h(n, m)", None),
    ((("213", "321"),), FormulaKind.RECURRENCE, _h_weighted_high,
     "C_n + sum m h(n, m)", None),
    ((("213", "312"),), FormulaKind.RECURRENCE, _d_weighted,
     "sum over k of binomial prefix sums times d(n, k)", None),
    ((("231", "321"),), FormulaKind.CLOSED_FORM, _ternary_trees,
     "non-crossing trees: binomial(3n, n) / (2n+1)", "A001764"),
    ((("312", "321"),), FormulaKind.BIJECTIVE_COUNT, _run_product_sum,
     "sum over Dyck paths of products of (run length + 1) over non-final runs", None),
    ((("12",),), FormulaKind.CLOSED_FORM, _single_labeling, "only the all-decreasing labeling", None),
    ((("21",),), FormulaKind.CLOSED_FORM, catalan, "only increasing labels: C_n", "A000108"),
    ((("123",),), FormulaKind.CLOSED_FORM, avoiding_123_sum,
     "sum over k of C_k binomial(n,k) binomial(k,n-k) / (n-k+1)", None),
]


@lru_cache(maxsize=1)
def registry() -> Mapping[PatternSet, FormulaEntry]:
    """Read-only map from every registered pattern set to its formula."""
    entries = {}
    for keys, kind, evaluator, refs, oeis_id in _DEFINITIONS:
        for texts in keys:
            key = PatternSet.of(*texts)
            if key in entries:
                raise ValueError(f"Duplicate formula key {key}")
            entries[key] = FormulaEntry(key, kind, evaluator, refs, oeis_id)
    logger.debug(f"Formula registry holds {len(entries)} pattern sets")
    return MappingProxyType(entries)


def closed_form(pattern_set: PatternSet, n: int) -> Optional[int]:
    """Registered value of pf_n(pattern_set), or None when nothing is registered."""
    entry = registry().get(pattern_set)
    if entry is None:
        return None
    return entry.evaluate(n)


def registered_sets(sizes: Sequence[int] = (1, 2, 3, 4, 5)) -> List[PatternSet]:
    """Registered pattern sets whose size is in sizes."""
    return [key for key in registry() if len(key) in sizes]

import logging
from typing import Callable, Dict, List, Optional

from src.core.config import AppConfig
from src.core.database import ResultStore
from src.core.formulas import a_row, b_row, closed_form, d_row, h_row, registry
from src.core.oeis import b_triangle_rows, published_tables
from src.core.parking import enumerate_parking_functions, reading_permutation
from src.core.patterns import (
    CapExceededError,
    CountMethod,
    admissible_pattern_sets,
    avoids,
    count_pf_avoiding,
    wilf_classes,
)
from src.models.output_row import OutputRow, TableLine
from src.models.parking_function import ParkingFunction
from src.models.permutation import PatternSet

logger = logging.getLogger(__name__)

METHODS = ("naive", "permsum", "formula", "all")

TRIANGLES: Dict[str, Callable[[int], List[int]]] = {
    "a": a_row,
    "b": b_row,
    "d": d_row,
    "h": h_row,
}


class CountController:
    """Controller for counts, published tables, listings and triangles."""

    def __init__(self, config: AppConfig, store: Optional[ResultStore] = None, threads: int = 1):
        self.config = config
        self.store = store
        self.threads = threads
        self.naive_cap = config.get("naive_cap")
        self.brute_force_cap = config.get("brute_force_cap")
        self.path_cap = config.get("compatible_path_cap")
        logger.info("CountController initialized")

    def _engine(self, pattern_set: PatternSet, n: int, method: str) -> Optional[int]:
        key = pattern_set.to_text()
        if self.store is not None:
            cached = self.store.get_count(key, n, method)
            if cached is not None:
                logger.debug(f"Cache hit for {key} n={n} {method}")
                return cached

        if method == "formula":
            value = closed_form(pattern_set, n)
            if value is None:
                return None
        else:
            engine = CountMethod.NAIVE if method == "naive" else CountMethod.PERM_SUM
            value = count_pf_avoiding(
                n, pattern_set, method=engine,
                naive_cap=self.naive_cap, brute_force_cap=self.brute_force_cap,
                threads=self.threads, path_cap=self.path_cap,
            )

        if self.store is not None:
            self.store.put_count(key, n, method, value)
        return value

    def feasible_methods(self, pattern_set: PatternSet, n: int) -> List[str]:
        """Methods whose caps admit n, in naive, permsum, formula order."""
        methods = []
        if n <= self.naive_cap:
            methods.append("naive")
        if n <= min(self.brute_force_cap, self.path_cap):
            methods.append("permsum")
        if pattern_set in registry():
            methods.append("formula")
        return methods

    def count(self, pattern_set: PatternSet, n: int, method: str = "all") -> OutputRow:
        """
        Count pf_n(pattern_set) with one method or every feasible one.

        Args:
            pattern_set: Patterns to avoid
            n: Size
            method: naive, permsum, formula or all

        Returns:
            OutputRow whose agrees flag reports disagreement between methods

        Raises:
            CapExceededError: no requested method can handle n
            LookupError: method=formula and no formula is registered
        """
        if method not in METHODS:
            raise ValueError(f"Unknown method {method!r}; choose from {', '.join(METHODS)}")
        try:
            methods = self.feasible_methods(pattern_set, n) if method == "all" else [method]
            if not methods:
                raise CapExceededError(
                    f"n={n} is beyond every engine cap and {pattern_set} has no formula"
                )
            results = []
            for name in methods:
                value = self._engine(pattern_set, n, name)
                if value is None:
                    raise LookupError(f"No formula registered for {pattern_set}")
                results.append((name, value))
            row = OutputRow(pattern_set, n, tuple(results), self._oeis_id(pattern_set))
            if not row.agrees:
                logger.error(f"Methods disagree for {pattern_set} at n={n}: {results}")
            return row
        except Exception as e:
            logger.error(f"Failed to count {pattern_set} at n={n}: {e}")
            raise

    def _oeis_id(self, pattern_set: PatternSet) -> Optional[str]:
        entry = registry().get(pattern_set)
        return entry.oeis_id if entry else None

    def _values(self, pattern_set: PatternSet, max_n: int, method: str) -> tuple:
        values = []
        for n in range(1, max_n + 1):
            row = self.count(pattern_set, n, method)
            if not row.agrees:
                raise ValueError(f"Methods disagree for {pattern_set} at n={n}")
            values.append(row.value)
        return tuple(values)

    def table(self, set_size: int, max_n: int = 6, method: str = "all") -> List[TableLine]:
        """Recompute the published table for sets of `set_size` patterns, one line per group."""
        tables = published_tables()
        if set_size not in tables:
            raise ValueError(f"Set size must be one of {sorted(tables)}, got {set_size}")
        lines = []
        for group in tables[set_size]:
            computed = tuple(
                self._values(pattern_set, max_n, method) for pattern_set in group.pattern_sets
            )
            lines.append(TableLine(group, computed))
        logger.info(f"Table for {set_size} patterns: {len(lines)} sequences")
        return lines

    def wilf(self, set_size: int, max_n: int = 6, method: str = "permsum") -> List[List[PatternSet]]:
        """Group every admissible set of this size by its computed counts."""
        return wilf_classes(
            admissible_pattern_sets(set_size),
            max_n,
            lambda n, pattern_set: self.count(pattern_set, n, method).value,
        )

    def published_grouping(self, set_size: int) -> List[List[PatternSet]]:
        """Published Wilf classes for this set size."""
        return [list(group.pattern_sets) for group in published_tables()[set_size]]

    def enumerate(self, n: int, pattern_set: Optional[PatternSet] = None) -> List[ParkingFunction]:
        """Deterministic listing of size-n parking functions avoiding pattern_set."""
        if n > self.naive_cap:
            raise CapExceededError(f"n={n} exceeds the enumeration cap {self.naive_cap}")
        return [
            pf for pf in enumerate_parking_functions(n)
            if pattern_set is None or avoids(reading_permutation(pf), pattern_set)
        ]

    def triangle(self, name: str, max_n: int) -> List[List[int]]:
        """Rows 1..max_n of a named triangle."""
        if name not in TRIANGLES:
            raise ValueError(f"Unknown triangle {name!r}; choose from {', '.join(TRIANGLES)}")
        return [TRIANGLES[name](n) for n in range(1, max_n + 1)]

    def published_b_rows(self, max_n: int) -> List[List[int]]:
        """Get the printed b(n, k) rows."""
        return b_triangle_rows()[:max_n]

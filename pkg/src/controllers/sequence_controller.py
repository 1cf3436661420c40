import logging
from pathlib import Path
from typing import List, Optional

from src.controllers.count_controller import CountController
from src.core.dyck import d_closed_form
from src.core.formulas import b_row, h_row
from src.core.oeis import (
    UnknownSequenceError,
    compare,
    normalize_id,
    resolve,
    run_conjecture,
    table_group_for,
)
from src.models.sequence import ComparisonReport

logger = logging.getLogger(__name__)


class SequenceController:
    """Controller for OEIS comparisons and conjecture checks."""

    def __init__(self, counts: CountController, bfile_dir: Optional[Path] = None, threads: int = 1,
                 default_max_n: Optional[int] = None):
        self.counts = counts
        self.default_max_n = default_max_n
        self.bfile_dir = bfile_dir
        self.threads = threads
        logger.info("SequenceController initialized")

    def conjecture(self, name: str, max_n: Optional[int] = None) -> List[ComparisonReport]:
        """Run one named check up to max_n, else the configured range, else its own default."""
        try:
            return run_conjecture(name, max_n or self.default_max_n, self.bfile_dir, self.threads)
        except Exception as e:
            logger.error(f"Failed to run conjecture {name}: {e}")
            raise

    def oeis(self, sequence_id: str, max_n: Optional[int] = None) -> ComparisonReport:
        """
        Compare an OEIS entry with what this package computes for it.

        Table sequences are recomputed from their first pattern set, the
        triangles from their recurrences.

        Args:
            sequence_id: e.g. A001003
            max_n: Largest n to compute; defaults to the published range

        Returns:
            ComparisonReport over the overlap
        """
        try:
            sequence_id = normalize_id(sequence_id)
            record = resolve(sequence_id, self.bfile_dir)
            if sequence_id == "A028364":
                rows = [h_row(n) for n in range(1, (max_n or 9) + 1)]
                return compare([v for row in rows for v in row], record.offset, record)
            if sequence_id == "A033184":
                rows = [[d_closed_form(n, k) for k in range(n)] for n in range(1, (max_n or 9) + 1)]
                return compare([v for row in rows for v in row], record.offset, record)

            group = table_group_for(sequence_id)
            if group is None:
                raise UnknownSequenceError(f"Nothing here computes {sequence_id}")
            max_n = max_n or len(group.values)
            pattern_set = group.pattern_sets[0]
            if sequence_id == "A000958":
                computed = [sum(b_row(n)) for n in range(1, max_n + 1)]
            else:
                computed = [
                    self.counts.count(pattern_set, n, self._cheapest(pattern_set, n)).value
                    for n in range(1, max_n + 1)
                ]
            return compare(computed, 1 + group.oeis_shift, record, f"pf_n({pattern_set.to_text()})")
        except Exception as e:
            logger.error(f"Failed to compare {sequence_id}: {e}")
            raise

    def _cheapest(self, pattern_set, n: int) -> str:
        """Cheapest feasible method for one count."""
        methods = self.counts.feasible_methods(pattern_set, n)
        for method in ("formula", "permsum", "naive"):
            if method in methods:
                return method
        return "all"

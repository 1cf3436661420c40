"""Render results as text, CSV, JSON, Markdown or HTML."""
import csv
import io
import json
import logging
from typing import Any, List, Optional, Sequence

import markdown

from src.models.output_row import CSV_HEADER, BijectionReport, OutputRow, TableLine
from src.models.parking_function import ParkingFunction
from src.models.permutation import PatternSet
from src.models.sequence import ComparisonReport, Verdict
from src.ui.theme_manager import ThemeManager

logger = logging.getLogger(__name__)

FORMATS = ("text", "csv", "json", "markdown", "html")


class Renderer:
    """Turns controller results into one output string in the chosen format."""

    def __init__(self, fmt: str = "text", theme: Optional[ThemeManager] = None):
        if fmt not in FORMATS:
            raise ValueError(f"Unknown format {fmt!r}; choose from {', '.join(FORMATS)}")
        self.fmt = fmt
        self.theme = theme or ThemeManager(color="never")

    def grid(self, headers: Sequence[str], rows: Sequence[Sequence[str]], payload: Any = None) -> str:
        """Generic table; payload replaces the row dicts in JSON output."""
        if self.fmt == "json":
            if payload is None:
                payload = [dict(zip(headers, row)) for row in rows]
            return self.theme.highlight_json(json.dumps(payload, indent=2, ensure_ascii=False))
        if self.fmt == "csv":
            buffer = io.StringIO()
            writer = csv.writer(buffer, lineterminator="\n")
            writer.writerow(headers)
            writer.writerows(rows)
            return buffer.getvalue().rstrip("\n")
        if self.fmt in ("markdown", "html"):
            lines = [
                "| " + " | ".join(headers) + " |",
                "|" + "|".join("---" for _ in headers) + "|",
            ]
            lines.extend("| " + " | ".join(row) + " |" for row in rows)
            text = "\n".join(lines)
            if self.fmt == "html":
                return markdown.markdown(text, extensions=['tables'])
            return text

        widths = [len(header) for header in headers]
        for row in rows:
            widths = [max(width, len(cell)) for width, cell in zip(widths, row)]
        lines = ["  ".join(header.ljust(width) for header, width in zip(headers, widths)).rstrip()]
        lines.extend(
            "  ".join(cell.ljust(width) for cell, width in zip(row, widths)).rstrip() for row in rows
        )
        return "\n".join(lines)

    def _flag(self, ok: bool, yes: str = "yes", no: str = "NO") -> str:
        if self.fmt != "text":
            return "true" if ok else "false"
        return self.theme.paint('ok', yes) if ok else self.theme.paint('fail', no)

    def count_rows(self, rows: List[OutputRow]) -> str:
        """Render count results."""
        if self.fmt == "csv":
            return self.grid(CSV_HEADER, [row.csv_fields() for row in rows])
        body = [
            (
                row.pattern_set.to_text(),
                str(row.n),
                str(row.value),
                "+".join(row.methods),
                self._flag(row.agrees),
            )
            for row in rows
        ]
        return self.grid(CSV_HEADER, body, [row.to_dict() for row in rows])

    def table_lines(self, lines: List[TableLine]) -> str:
        """Render a recomputed table, one line per group."""
        headers = ("patterns", "values", "oeis", "agrees", "published")
        body = [
            (
                line.group.label(),
                ", ".join(str(value) for value in line.values),
                line.group.oeis_id or "new",
                self._flag(line.agrees),
                self._flag(line.matches_published),
            )
            for line in lines
        ]
        return self.grid(headers, body, [line.to_dict() for line in lines])

    def wilf(self, classes: List[List[PatternSet]], published: List[List[PatternSet]]) -> str:
        """Render computed Wilf classes against the published grouping."""
        expected = {frozenset(group) for group in published}
        headers = ("class", "pattern sets", "published")
        body = [
            (
                str(index),
                "; ".join(pattern_set.to_text() for pattern_set in group),
                self._flag(frozenset(group) in expected),
            )
            for index, group in enumerate(classes, 1)
        ]
        payload = [
            {
                'pattern_sets': [pattern_set.labels() for pattern_set in group],
                'published': frozenset(group) in expected,
            }
            for group in classes
        ]
        return self.grid(headers, body, payload)

    def listing(self, pfs: List[ParkingFunction]) -> str:
        """Render parking functions in block notation."""
        if self.fmt == "json":
            payload = {'count': len(pfs), 'parking_functions': [pf.to_dict() for pf in pfs]}
            return self.grid((), (), payload)
        if self.fmt == "text":
            return "\n".join([pf.to_text() for pf in pfs] + [f"count: {len(pfs)}"])
        return self.grid(("index", "blocks"), [(str(i), pf.to_text()) for i, pf in enumerate(pfs, 1)])

    def triangle(self, name: str, rows: List[List[int]], first_k: int,
                 published: Optional[List[List[int]]] = None) -> str:
        """Render triangle rows; first_k labels the first column."""
        width = max((len(row) for row in rows), default=0)
        headers = ["n"] + [str(first_k + k) for k in range(width)]
        body = [
            [str(n)] + [str(value) for value in row] + [""] * (width - len(row))
            for n, row in enumerate(rows, 1)
        ]
        payload = {
            'triangle': name,
            'first_k': first_k,
            'rows': [[str(value) for value in row] for row in rows],
        }
        if published is not None:
            payload['matches_published'] = rows[:len(published)] == published[:len(rows)]
        text = self.grid(headers, body, payload)
        if published is not None and self.fmt == "text":
            text += "\npublished rows: " + self._flag(payload['matches_published'], "match", "MISMATCH")
        return text

    def _verdict(self, report: ComparisonReport) -> str:
        label = report.verdict_label
        if self.fmt != "text":
            return label
        role = {
            Verdict.FULL_MATCH: 'ok',
            Verdict.MISMATCH: 'fail',
            Verdict.INSUFFICIENT_DATA: 'warn',
        }[report.verdict]
        return self.theme.paint(role, label)

    def comparisons(self, reports: List[ComparisonReport]) -> str:
        """Render comparison reports."""
        headers = ("check", "sequence", "range", "verdict")
        body = []
        for report in reports:
            checked = report.checked_range
            body.append((
                report.name,
                report.record_id,
                f"{checked[0]}..{checked[1]}" if checked else "-",
                self._verdict(report),
            ))
        return self.grid(headers, body, [report.to_dict() for report in reports])

    def bijection(self, report: BijectionReport) -> str:
        """Render a bijection report."""
        headers = ("bijection", "n", "domain", "outputs", "valid", "injective", "image", "passed")
        image = "-" if report.image_matches is None else self._flag(report.image_matches)
        body = [(
            report.name,
            str(report.n),
            str(report.domain_size),
            str(report.output_count),
            self._flag(report.all_valid),
            self._flag(report.injective),
            image,
            self._flag(report.passed),
        )]
        return self.grid(headers, body, report.to_dict())

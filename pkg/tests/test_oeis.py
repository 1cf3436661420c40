import tempfile
import unittest
from pathlib import Path

from src.core.oeis import (
    CONJECTURES,
    BFileParseError,
    UnknownConjectureError,
    UnknownSequenceError,
    builtin_registry,
    compare,
    format_bfile,
    load_bfile,
    normalize_id,
    published_tables,
    parse_bfile,
    resolve,
    run_conjecture,
    table_group_for,
)
from src.models.sequence import SequenceRecord, SequenceSource, Verdict

TABLE_IDS = [
    "A122553", "A065475", "A071716", "A000782", "A005408", "A000217", "A002061", "A143363",
    "A014138", "A000245", "A077587", "A001700", "A076540", "A001002", "A105163", "A064999",
    "A000958", "A002212", "A001003", "A001764", "A243688",
]


class TestEmbeddedData(unittest.TestCase):

    def test_registry_ids(self):
        records = builtin_registry()
        for sequence_id in TABLE_IDS + ["A028364", "A033184"]:
            self.assertIn(sequence_id, records)

    def test_table_values(self):
        records = builtin_registry()
        self.assertEqual(records["A001003"].values[:6], (1, 3, 11, 45, 197, 903))
        self.assertEqual(records["A001764"].values[:6], (1, 3, 12, 55, 273, 1428))
        self.assertEqual(records["A005408"].values[:6], (1, 3, 5, 7, 9, 11))

    def test_a000958_keeps_its_indexing(self):
        record = builtin_registry()["A000958"]
        self.assertEqual(record.offset, 1)
        self.assertEqual(len(record.values), 13)
        self.assertEqual(record.value_at(7), 243)

    def test_records_equal_their_tables(self):
        records = builtin_registry()
        for groups in published_tables().values():
            for group in groups:
                if group.oeis_id is None:
                    continue
                record = records[group.oeis_id]
                start = 1 + group.oeis_shift
                values = tuple(record.value_at(start + i) for i in range(len(group.values)))
                self.assertEqual(values, group.values, group.oeis_id)

    def test_table_shapes(self):
        tables = published_tables()
        self.assertEqual({size: len(groups) for size, groups in tables.items()},
                         {1: 4, 2: 11, 3: 10, 4: 5, 5: 2})
        set_counts = {size: sum(len(g.pattern_sets) for g in groups) for size, groups in tables.items()}
        self.assertEqual(set_counts, {1: 6, 2: 14, 3: 16, 4: 9, 5: 2})

    def test_table_group_lookup(self):
        self.assertEqual(len(table_group_for("A001003").pattern_sets), 4)
        self.assertIsNone(table_group_for("A000001"))

    def test_normalize_id(self):
        self.assertEqual(normalize_id("a958"), "A000958")
        with self.assertRaises(UnknownSequenceError):
            normalize_id("B12")


class TestBFiles(unittest.TestCase):

    def test_parse(self):
        record = parse_bfile("1 1\n2 3\n3 11")
        self.assertEqual(record.offset, 1)
        self.assertEqual(record.values, (1, 3, 11))

    def test_comments_and_crlf(self):
        record = parse_bfile("# comment\r\n0 1\r\n1 1\r\n\r\n")
        self.assertEqual(record.offset, 0)
        self.assertEqual(record.values, (1, 1))

    def test_non_monotone(self):
        with self.assertRaises(BFileParseError) as context:
            parse_bfile("1 1\n1 2")
        self.assertEqual(context.exception.line_number, 2)

    def test_malformed_lines(self):
        with self.assertRaises(BFileParseError):
            parse_bfile("1 1\n2")
        with self.assertRaises(BFileParseError):
            parse_bfile("1 x")
        with self.assertRaises(BFileParseError):
            parse_bfile("1 1\n3 2")
        with self.assertRaises(BFileParseError):
            parse_bfile("# nothing\n")

    def test_gap_is_rejected(self):
        with self.assertRaises(BFileParseError) as context:
            parse_bfile("1 1\n2 3\n4 45")
        self.assertEqual(context.exception.line_number, 3)
        self.assertIn("gap", str(context.exception))

    def test_overlong_value(self):
        with self.assertRaises(BFileParseError):
            parse_bfile("1 " + "9" * 1001)

    def test_big_values(self):
        big = 10 ** 40 + 7
        self.assertEqual(parse_bfile(f"5 {big}").values, (big,))

    def test_format_inverts_parse(self):
        for record in builtin_registry().values():
            parsed = parse_bfile(format_bfile(record), record.id)
            self.assertEqual((parsed.offset, parsed.values), (record.offset, record.values))

    def test_load_and_resolve(self):
        with tempfile.TemporaryDirectory() as directory:
            Path(directory, "b001764.txt").write_text("0 1\n1 1\n2 3\n3 12\n", encoding="utf-8")
            record = load_bfile(directory, "A001764")
            self.assertEqual(record.source, SequenceSource.BFILE)
            self.assertEqual(record.offset, 0)
            self.assertIsNone(load_bfile(directory, "A001003"))
            self.assertEqual(resolve("A001003", directory).source, SequenceSource.EMBEDDED)
            self.assertEqual(resolve("A001764", directory).values, (1, 1, 3, 12))

    def test_unknown_sequence(self):
        with self.assertRaises(UnknownSequenceError):
            resolve("A999999")


class TestCompare(unittest.TestCase):

    def setUp(self):
        self.record = builtin_registry()["A001764"]

    def test_full_match_over_overlap(self):
        report = compare([1, 3, 12], 1, self.record)
        self.assertEqual(report.verdict, Verdict.FULL_MATCH)
        self.assertEqual(report.checked_range, (1, 3))

    def test_mismatch(self):
        report = compare([1, 3, 13], 1, self.record)
        self.assertEqual(report.verdict, Verdict.MISMATCH)
        self.assertEqual(report.verdict_label, "mismatch_at(3)")

    def test_no_overlap(self):
        report = compare([1, 2], 50, self.record)
        self.assertEqual(report.verdict, Verdict.INSUFFICIENT_DATA)
        self.assertIsNone(report.checked_range)

    def test_partial_overlap(self):
        short = SequenceRecord("X", 1, (1, 3, 12))
        report = compare([1, 3, 12, 55, 273], 1, short)
        self.assertEqual(report.verdict, Verdict.FULL_MATCH)
        self.assertEqual(len(report.matches), 3)

    def test_report_dict(self):
        data = compare([1, 3, 13], 1, self.record, "demo").to_dict()
        self.assertEqual(data['verdict'], "mismatch")
        self.assertEqual(data['mismatch_index'], 3)
        self.assertEqual(data['matches'][2]['computed'], "13")


class TestConjectures(unittest.TestCase):

    def assertAllMatch(self, reports):
        self.assertTrue(reports)
        for report in reports:
            self.assertEqual(report.verdict, Verdict.FULL_MATCH, report.name)

    def test_b_row_sums(self):
        reports = run_conjecture("b-A000958", 12)
        self.assertAllMatch(reports)
        self.assertEqual(reports[0].checked_range, (2, 13))

    def test_h_triangle(self):
        self.assertAllMatch(run_conjecture("h-A028364", 9))

    def test_d_triangle(self):
        self.assertAllMatch(run_conjecture("d-A033184", 9))

    def test_single_patterns(self):
        reports = run_conjecture("pf132-A243688", 6)
        self.assertAllMatch(reports)
        self.assertEqual([m.computed for m in reports[0].matches], [1, 3, 13, 69, 417, 2759])

    def test_single_patterns_beyond_table(self):
        reports = run_conjecture("pf132-A243688", 8)
        self.assertAllMatch(reports)
        self.assertEqual(reports[0].checked_range, (1, 6))

    def test_b_against_counts(self):
        reports = run_conjecture("b-pf123132", 6)
        self.assertAllMatch(reports)
        self.assertEqual([m.computed for m in reports[0].matches], [1, 3, 8, 24, 75, 243])

    def test_names(self):
        self.assertEqual(len(CONJECTURES), 5)
        with self.assertRaises(UnknownConjectureError):
            run_conjecture("nope")


if __name__ == '__main__':
    unittest.main()

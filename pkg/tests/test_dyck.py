import unittest

from src.core.dyck import (
    NoDecompositionError,
    block_sizes,
    compose,
    count_d,
    count_h,
    d_closed_form,
    enumerate_dyck_paths,
    first_return_split,
    mth_north_followed_by_east,
    north_run_lengths,
    trailing_singleton_norths,
)
from src.core.numbers import InexactDivisionError, binomial, catalan, exact_div, parking_function_total
from src.models.dyck_path import DyckPath, DyckPathError


class TestNumbers(unittest.TestCase):

    def test_catalan_values(self):
        self.assertEqual([catalan(n) for n in range(8)], [1, 1, 2, 5, 14, 42, 132, 429])

    def test_binomial_outside_range_is_zero(self):
        self.assertEqual(binomial(4, 5), 0)
        self.assertEqual(binomial(4, -1), 0)
        self.assertEqual(binomial(6, 3), 20)

    def test_exact_div(self):
        self.assertEqual(exact_div(42, 6), 7)
        with self.assertRaises(InexactDivisionError):
            exact_div(43, 6)

    def test_parking_function_total(self):
        self.assertEqual([parking_function_total(n) for n in range(1, 6)], [1, 3, 16, 125, 1296])


class TestDyckPath(unittest.TestCase):

    def test_rejects_paths_below_diagonal(self):
        with self.assertRaises(DyckPathError):
            DyckPath("EN")

    def test_rejects_unbalanced_and_bad_steps(self):
        with self.assertRaises(DyckPathError):
            DyckPath("NNE")
        with self.assertRaises(DyckPathError):
            DyckPath("NX")

    def test_from_text_normalizes(self):
        self.assertEqual(DyckPath.from_text(" nn ee "), DyckPath("NNEE"))
        self.assertEqual(DyckPath("NENE").semilength, 2)


class TestEnumeration(unittest.TestCase):

    def test_counts_are_catalan(self):
        for n in range(8):
            self.assertEqual(len(enumerate_dyck_paths(n)), catalan(n))

    def test_semilength_three_order(self):
        paths = [path.steps for path in enumerate_dyck_paths(3)]
        self.assertEqual(paths[0], "NNNEEE")
        self.assertEqual(paths[-1], "NENENE")
        self.assertEqual(paths, sorted(paths, key=lambda word: word.replace("N", "0").replace("E", "1")))

    def test_empty_path(self):
        self.assertEqual(enumerate_dyck_paths(0), [DyckPath("")])

    def test_negative_semilength(self):
        with self.assertRaises(ValueError):
            enumerate_dyck_paths(-1)


class TestDecomposition(unittest.TestCase):

    def test_first_return_split(self):
        self.assertEqual(first_return_split(DyckPath("NNEENE")), (DyckPath("NE"), DyckPath("NE")))
        self.assertEqual(first_return_split(DyckPath("NE")), (DyckPath(""), DyckPath("")))

    def test_compose_inverts_split(self):
        for path in enumerate_dyck_paths(5):
            self.assertEqual(compose(*first_return_split(path)), path)

    def test_empty_path_has_no_split(self):
        with self.assertRaises(NoDecompositionError):
            first_return_split(DyckPath.empty())

    def test_block_sizes_keep_empty_lines(self):
        self.assertEqual(block_sizes(DyckPath("NNENEE")), [2, 1, 0])
        self.assertEqual(block_sizes(DyckPath("NENENE")), [1, 1, 1])

    def test_run_lengths(self):
        self.assertEqual(north_run_lengths(DyckPath("NNENEE")).lengths, (2, 1))


class TestStatistics(unittest.TestCase):

    def test_trailing_singletons(self):
        self.assertEqual(trailing_singleton_norths(DyckPath("NENENE")), 2)
        self.assertEqual(trailing_singleton_norths(DyckPath("NNEENE")), 1)
        self.assertEqual(trailing_singleton_norths(DyckPath("NNNEEE")), 0)
        self.assertEqual(trailing_singleton_norths(DyckPath("NE")), 0)

    def test_trailing_singletons_needs_steps(self):
        with self.assertRaises(DyckPathError):
            trailing_singleton_norths(DyckPath.empty())

    def test_mth_north(self):
        path = DyckPath("NNEENE")
        self.assertFalse(mth_north_followed_by_east(path, 1))
        self.assertTrue(mth_north_followed_by_east(path, 2))
        self.assertTrue(mth_north_followed_by_east(path, 3))
        for m in (0, 4):
            with self.assertRaises(DyckPathError):
                mth_north_followed_by_east(path, m)

    def test_h_matches_enumeration(self):
        for n in range(1, 8):
            paths = enumerate_dyck_paths(n)
            for m in range(1, n + 1):
                brute = sum(mth_north_followed_by_east(path, m) for path in paths)
                self.assertEqual(count_h(n, m), brute, (n, m))

    def test_d_matches_enumeration(self):
        for n in range(1, 8):
            paths = enumerate_dyck_paths(n)
            for k in range(n):
                brute = sum(trailing_singleton_norths(path) == k for path in paths)
                self.assertEqual(count_d(n, k), brute, (n, k))

    def test_d_recurrence_equals_closed_form(self):
        for n in range(1, 21):
            for k in range(n):
                self.assertEqual(count_d(n, k), d_closed_form(n, k), (n, k))

    def test_d_rows_sum_to_catalan(self):
        for n in range(1, 12):
            self.assertEqual(sum(count_d(n, k) for k in range(n)), catalan(n))


if __name__ == '__main__':
    unittest.main()

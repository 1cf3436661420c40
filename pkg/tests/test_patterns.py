import unittest
from itertools import permutations as all_orders

from hypothesis import given
from hypothesis.strategies import permutations, sampled_from

from src.core.patterns import (
    CapExceededError,
    CountMethod,
    ShiftPreconditionError,
    admissible_pattern_sets,
    ascent_preserving_shift,
    ascent_set,
    avoids,
    compatible_path_count,
    contains,
    count_occurrences,
    count_pf_avoiding,
    direct_sum,
    enumerate_avoiders,
    identity,
    reverse_identity,
    skew_sum,
    standardize,
    wilf_classes,
)
from src.core.numbers import catalan
from src.core.parking import reading_permutation_histogram
from src.models.permutation import PatternSet, Permutation, PermutationError

LENGTH_THREE = ["123", "132", "213", "231", "312", "321"]


def perm(text: str) -> Permutation:
    return Permutation.from_text(text)


class TestPermutationModel(unittest.TestCase):

    def test_rejects_non_permutations(self):
        with self.assertRaises(PermutationError):
            Permutation((1, 3))
        with self.assertRaises(PermutationError):
            Permutation.from_text("12a")

    def test_long_permutations_use_commas(self):
        self.assertEqual(identity(10).to_text(), "1,2,3,4,5,6,7,8,9,10")
        self.assertEqual(Permutation.from_text("1,2,3,4,5,6,7,8,9,10"), identity(10))

    def test_pattern_set_is_canonical(self):
        self.assertEqual(PatternSet.of("321", "231", "231"), PatternSet.of("231", "321"))
        self.assertEqual(PatternSet.from_text("321, 12").labels(), ["12", "321"])
        self.assertEqual(str(PatternSet.of("231", "321")), "{231,321}")


class TestContainment(unittest.TestCase):

    def test_standardize(self):
        self.assertEqual(standardize([5, 2, 9]), perm("213"))

    def test_contains(self):
        self.assertTrue(contains(perm("2413"), perm("132")))
        self.assertFalse(contains(perm("2413"), perm("123")))
        self.assertFalse(contains(perm("12"), perm("123")))

    def test_count_occurrences(self):
        self.assertEqual(count_occurrences(perm("1234"), perm("123")), 4)
        self.assertEqual(count_occurrences(perm("4321"), perm("123")), 0)

    def test_avoids_every_pattern(self):
        self.assertTrue(avoids(perm("321"), PatternSet.of("12")))
        self.assertFalse(avoids(perm("2413"), PatternSet.of("123", "132")))

    @given(permutations(list(range(1, 8))), sampled_from(LENGTH_THREE))
    def test_avoidance_is_absence_of_occurrences(self, entries, pattern):
        p = Permutation(tuple(entries))
        self.assertEqual(avoids(p, PatternSet.of(pattern)), count_occurrences(p, perm(pattern)) == 0)

    @given(permutations(list(range(1, 8))))
    def test_standardize_fixes_permutations(self, entries):
        p = Permutation(tuple(entries))
        self.assertEqual(standardize(p.entries), p)


class TestAvoiders(unittest.TestCase):

    def test_single_patterns_give_catalan(self):
        for pattern in LENGTH_THREE:
            counts = [len(enumerate_avoiders(n, PatternSet.of(pattern))) for n in range(1, 8)]
            self.assertEqual(counts, [catalan(n) for n in range(1, 8)], pattern)

    def test_monotone_pair_dies_out(self):
        self.assertEqual(enumerate_avoiders(5, PatternSet.of("123", "321")), [])

    def test_growth_equals_filter(self):
        for texts in (("132",), ("213", "321"), ("123", "231", "312"), ("12",)):
            pattern_set = PatternSet.of(*texts)
            for n in range(1, 7):
                filtered = sorted(
                    Permutation(entries) for entries in all_orders(range(1, n + 1))
                    if avoids(Permutation(entries), pattern_set)
                )
                self.assertEqual(enumerate_avoiders(n, pattern_set), filtered, (texts, n))

    def test_cap(self):
        with self.assertRaises(CapExceededError):
            enumerate_avoiders(11, PatternSet.of("123"))


class TestBuilders(unittest.TestCase):

    def test_sums(self):
        self.assertEqual(direct_sum(perm("12"), perm("21")), perm("1243"))
        self.assertEqual(skew_sum(perm("12"), perm("21")), perm("3421"))
        self.assertEqual(reverse_identity(3), perm("321"))

    def test_ascent_set(self):
        self.assertEqual(ascent_set(perm("1432")), frozenset({1}))
        self.assertEqual(ascent_set(perm("2143")), frozenset({2}))

    def test_shift_keeps_ascents(self):
        shifted = ascent_preserving_shift(perm("2143"))
        self.assertEqual(shifted, perm("4132"))
        self.assertEqual(ascent_set(shifted), ascent_set(perm("2143")))

    def test_shift_precondition(self):
        with self.assertRaises(ShiftPreconditionError):
            ascent_preserving_shift(perm("123"))

    def test_shift_keeps_ascents_on_every_eligible_permutation(self):
        for n in range(1, 9):
            domain = enumerate_avoiders(n, PatternSet.of("123", "231", "312"))
            images = [ascent_preserving_shift(p) for p in domain]
            for p, shifted in zip(domain, images):
                self.assertEqual(ascent_set(shifted), ascent_set(p), p)
            self.assertEqual(len(set(images)), len(domain), n)

    def test_shift_counting_consequence(self):
        source = PatternSet.of("123", "231", "312")
        target = PatternSet.of("123", "132", "312")
        for n in range(1, 8):
            self.assertEqual(count_pf_avoiding(n, source), count_pf_avoiding(n, target), n)
            shifted_total = sum(
                compatible_path_count(ascent_preserving_shift(p)) for p in enumerate_avoiders(n, source)
            )
            self.assertEqual(shifted_total, count_pf_avoiding(n, source), n)


class TestCompatiblePaths(unittest.TestCase):

    def test_extremes(self):
        for n in range(1, 8):
            self.assertEqual(compatible_path_count(identity(n)), catalan(n))
            self.assertEqual(compatible_path_count(reverse_identity(n)), 1)

    def test_sum_over_all_permutations(self):
        for n in range(1, 9):
            total = sum(compatible_path_count(Permutation(entries)) for entries in all_orders(range(1, n + 1)))
            self.assertEqual(total, (n + 1) ** (n - 1), n)

    def test_cap(self):
        with self.assertRaises(CapExceededError):
            compatible_path_count(identity(5), cap=4)

    def test_depends_only_on_ascent_set(self):
        for n in range(1, 8):
            by_ascents = {}
            for entries in all_orders(range(1, n + 1)):
                p = Permutation(entries)
                by_ascents.setdefault(ascent_set(p), set()).add(compatible_path_count(p))
            for ascents, counts in by_ascents.items():
                self.assertEqual(len(counts), 1, (n, sorted(ascents)))

    def test_matches_reading_permutation_histogram(self):
        for n in range(1, 7):
            histogram = reading_permutation_histogram(n)
            for entries in all_orders(range(1, n + 1)):
                p = Permutation(entries)
                self.assertEqual(compatible_path_count(p), histogram.get(p, 0), p)


class TestCounting(unittest.TestCase):

    def test_published_values(self):
        self.assertEqual(count_pf_avoiding(6, PatternSet.of("231", "321")), 1428)
        self.assertEqual(count_pf_avoiding(6, PatternSet.of("123")), 1207)
        self.assertEqual(count_pf_avoiding(6, PatternSet.of("132", "213", "231", "312")), 133)
        self.assertEqual(count_pf_avoiding(6, PatternSet.of("213", "312", "321")), 582)
        self.assertEqual(count_pf_avoiding(6, PatternSet.of("312", "321")), 1736)

    def test_length_two_patterns(self):
        self.assertEqual(count_pf_avoiding(5, PatternSet.of("12")), 1)
        self.assertEqual(count_pf_avoiding(5, PatternSet.of("21")), catalan(5))

    def test_engines_agree_on_admissible_sets(self):
        for size in range(1, 6):
            for pattern_set in admissible_pattern_sets(size):
                for n in range(1, 8):
                    naive = count_pf_avoiding(n, pattern_set, method=CountMethod.NAIVE)
                    perm_sum = count_pf_avoiding(n, pattern_set, method="perm_sum")
                    self.assertEqual(naive, perm_sum, (pattern_set, n))

    def test_naive_cap(self):
        with self.assertRaises(CapExceededError):
            count_pf_avoiding(9, PatternSet.of("123"), method=CountMethod.NAIVE)

    def test_perm_sum_beyond_naive_cap(self):
        self.assertEqual(count_pf_avoiding(9, PatternSet.of("21"), method=CountMethod.PERM_SUM), catalan(9))

    def test_rejects_size_zero(self):
        with self.assertRaises(ValueError):
            count_pf_avoiding(0, PatternSet.of("123"))


class TestPatternSets(unittest.TestCase):

    def test_admissible_counts(self):
        self.assertEqual([len(admissible_pattern_sets(size)) for size in range(1, 6)], [6, 14, 16, 9, 2])

    def test_admissible_excludes_monotone_pair(self):
        for pattern_set in admissible_pattern_sets(3):
            self.assertFalse({"123", "321"}.issubset(pattern_set.labels()))

    def test_wilf_classes_of_four_patterns(self):
        classes = wilf_classes(
            admissible_pattern_sets(4), 6,
            lambda n, pattern_set: count_pf_avoiding(n, pattern_set, method=CountMethod.PERM_SUM),
        )
        self.assertEqual(len(classes), 5)
        self.assertIn(
            [PatternSet.of("123", "132", "213", "231"), PatternSet.of("123", "132", "231", "312")],
            classes,
        )


if __name__ == '__main__':
    unittest.main()

import unittest
from modules.oracle.exceptions.cutoff_exceeded_exception import CutoffExceededException
from modules.oracle.managers.oracle_manager import OracleManager
from modules.structure.managers.order_manager import OrderManager
from modules.structure.managers.structure_manager import StructureManager


class OracleManagerTest(unittest.TestCase):

    def setUp(self) -> None:
        self.structure_manager: StructureManager = StructureManager()
        self.oracle_manager: OracleManager = OracleManager(
            structure_manager=self.structure_manager,
            order_manager=OrderManager(structure_manager=self.structure_manager),
            cutoff=12,
            census_cutoff=10
        )

    def __texts(self, structures):
        return [structure.get_text() for structure in structures]

    def test_enumerate_secondary_small_sizes(self):
        self.assertEqual(["."], self.__texts(self.oracle_manager.enumerate_secondary(1)))
        self.assertEqual(["(.)", "..."], self.__texts(self.oracle_manager.enumerate_secondary(3)))

    def test_enumerate_secondary_counts(self):
        counts = [len(self.oracle_manager.enumerate_secondary(n)) for n in range(1, 9)]

        self.assertEqual([1, 1, 2, 4, 8, 17, 37, 82], counts)

    def test_enumerate_secondary_is_sorted_and_distinct(self):
        texts = self.__texts(self.oracle_manager.enumerate_secondary(7))
        key = str.maketrans("(.)", "abc")

        self.assertEqual(sorted(texts, key=lambda text: text.translate(key)), texts)
        self.assertEqual(len(set(texts)), len(texts))

    def test_enumerate_saturated_small_sizes(self):
        self.assertEqual(["."], self.__texts(self.oracle_manager.enumerate_saturated(1)))
        self.assertEqual([".."], self.__texts(self.oracle_manager.enumerate_saturated(2)))
        self.assertEqual(["(.)"], self.__texts(self.oracle_manager.enumerate_saturated(3)))
        self.assertEqual(["(..)", "(.).", ".(.)"], self.__texts(self.oracle_manager.enumerate_saturated(4)))

    def test_enumerate_saturated_counts(self):
        counts = [len(self.oracle_manager.enumerate_saturated(n)) for n in range(1, 9)]

        self.assertEqual([1, 1, 1, 3, 5, 8, 18, 36], counts)

    def test_enumerate_fails_beyond_cutoff(self):
        with self.assertRaises(CutoffExceededException):
            self.oracle_manager.enumerate_secondary(13)
            self.fail("Did not fail beyond cutoff")
        with self.assertRaises(CutoffExceededException):
            self.oracle_manager.enumerate_saturated(0)
            self.fail("Did not fail on size zero")

    def test_census(self):
        self.assertEqual({0: 1}, self.oracle_manager.census(1).get_by_order())
        self.assertEqual({1: 3}, self.oracle_manager.census(4).get_by_order())

        census = self.oracle_manager.census(8)

        self.assertEqual({1: 35, 2: 1}, census.get_by_order())
        self.assertEqual(36, census.get_total_saturated())
        self.assertEqual(82, census.get_total_secondary())
        self.assertEqual(1, census.at_least(2))
        self.assertEqual(36, census.at_least(1))

    def test_census_fails_beyond_census_cutoff(self):
        with self.assertRaises(CutoffExceededException):
            self.oracle_manager.census(11)
            self.fail("Did not fail beyond census cutoff")

    def test_census_get_dict(self):
        self.assertEqual(
            {"n": 4, "total_secondary": 4, "total_saturated": 3, "by_order": {1: 3}},
            self.oracle_manager.census(4).get_dict()
        )

    def test_closure_check_counts_extensions(self):
        self.assertEqual(1, self.oracle_manager.closure_check(3))
        self.assertEqual(3, self.oracle_manager.closure_check(4))

    def test_saturated_structures_have_no_addable_pairs(self):
        for structure in self.oracle_manager.enumerate_saturated(10):
            self.assertEqual([], self.structure_manager.addable_pairs(structure))

    def test_wrapping_keeps_saturation_both_ways(self):
        for n in range(1, 11):
            wrapped = {"(" + structure.get_text() + ")" for structure in self.oracle_manager.enumerate_saturated(n)}
            closed = {
                structure.get_text() for structure in self.oracle_manager.enumerate_saturated(n + 2)
                if structure.get_partner(1) == n + 2
            }

            self.assertEqual(closed, wrapped, n)

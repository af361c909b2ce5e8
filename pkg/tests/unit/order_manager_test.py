import unittest
from modules.structure.managers.order_manager import OrderManager
from modules.structure.managers.structure_manager import StructureManager
from modules.util.exceptions.domain_exception import DomainException


class OrderManagerTest(unittest.TestCase):

    def setUp(self) -> None:
        self.structure_manager: StructureManager = StructureManager()
        self.order_manager: OrderManager = OrderManager(
            structure_manager=self.structure_manager
        )

    def __order_both(self, text: str):
        structure = self.structure_manager.parse(text)
        return self.order_manager.order(structure), OrderManager.order_fast(structure)

    def test_order_of_unpaired_structure_is_zero(self):
        self.assertEqual((0, 0), self.__order_both("...."))

    def test_order_of_hairpin_is_one(self):
        self.assertEqual((1, 1), self.__order_both("(.)"))

    def test_order_of_stacked_hairpin_is_one(self):
        self.assertEqual((1, 1), self.__order_both(".((.))."))

    def test_order_of_side_by_side_hairpins_is_one(self):
        self.assertEqual((1, 1), self.__order_both("(.)(.).(..)"))

    def test_order_of_long_stemmed_example_is_one(self):
        self.assertEqual((1, 1), self.__order_both("((..(((......))).))"))

    def test_order_of_branching_pair_is_two(self):
        self.assertEqual((2, 2), self.__order_both("((.)(.))"))

    def test_order_with_unequal_branches(self):
        self.assertEqual((2, 2), self.__order_both("(((.)(.))(.))"))
        self.assertEqual((3, 3), self.__order_both("(((.)(.))((.)(.)))"))

    def test_order_deletes_only_matching_stack_depth(self):
        self.assertEqual((2, 2), self.__order_both("(((.)).(.))"))

    def test_order_fast_agrees_with_order_on_every_small_structure(self):
        texts = [""]
        for _ in range(9):
            texts = [text + character for text in texts for character in ".()"]
        checked = 0
        for text in texts:
            try:
                structure = self.structure_manager.parse(text)
            except DomainException:
                continue
            self.assertEqual(self.order_manager.order(structure), OrderManager.order_fast(structure), text)
            checked += 1
        self.assertEqual(185, checked)

import unittest
from unittest.mock import MagicMock, patch
from modules.oracle.managers.cross_check_manager import CrossCheckManager
from modules.oracle.managers.oracle_manager import OracleManager
from modules.series.managers.solver_manager import SolverManager
from modules.series.objects.series import Series
from modules.structure.managers.order_manager import OrderManager


class CrossCheckManagerTest(unittest.TestCase):

    @patch("modules.oracle.managers.oracle_manager.OracleManager")
    @patch("modules.series.managers.solver_manager.SolverManager")
    @patch("modules.structure.managers.order_manager.OrderManager")
    def setUp(self, order_manager: OrderManager, solver_manager: SolverManager, oracle_manager: OracleManager) -> None:
        self.order_manager = order_manager
        self.solver_manager = solver_manager
        self.oracle_manager = oracle_manager
        self.cross_check_manager: CrossCheckManager = CrossCheckManager(
            oracle_manager=self.oracle_manager,
            order_manager=self.order_manager,
            solver_manager=self.solver_manager
        )

    def test_check_counts_passes_on_matching_counts(self):
        self.solver_manager.solve_saturated = MagicMock(return_value=Series([0, 1, 1]))
        self.solver_manager.solve_secondary = MagicMock(return_value=Series([0, 1, 1]))
        self.oracle_manager.enumerate_saturated = MagicMock(return_value=["x"])
        self.oracle_manager.enumerate_secondary = MagicMock(return_value=["x"])

        results = self.cross_check_manager.check_counts(2)

        self.assertEqual(4, len(results))
        self.assertTrue(all(result.is_ok() for result in results))
        self.solver_manager.solve_saturated.assert_called_once_with(2)

    def test_check_counts_reports_mismatch(self):
        self.solver_manager.solve_saturated = MagicMock(return_value=Series([0, 1, 2]))
        self.solver_manager.solve_secondary = MagicMock(return_value=Series([0, 1, 1]))
        self.oracle_manager.enumerate_saturated = MagicMock(return_value=["x"])
        self.oracle_manager.enumerate_secondary = MagicMock(return_value=["x"])

        results = [result for result in self.cross_check_manager.check_counts(2) if not result.is_ok()]

        self.assertEqual(1, len(results))
        self.assertEqual("saturated_count", results[0].get_check())
        self.assertEqual(2, results[0].get_n())
        self.assertEqual({"check": "saturated_count", "n": 2, "expected": 1, "actual": 2, "ok": False},
                         results[0].get_dict())

    def test_check_order_implementations_counts_disagreements(self):
        self.oracle_manager.enumerate_secondary = MagicMock(return_value=["a", "b", "c"])
        self.order_manager.order = MagicMock(side_effect=[1, 2, 3])
        self.order_manager.order_fast = MagicMock(side_effect=[1, 0, 3])

        results = self.cross_check_manager.check_order_implementations(1)

        self.assertEqual(1, results[0].get_actual())
        self.assertFalse(results[0].is_ok())

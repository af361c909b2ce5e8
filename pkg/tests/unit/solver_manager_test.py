import unittest
from modules.series.managers.series_manager import SeriesManager
from modules.series.managers.solver_manager import SolverManager
from modules.series.objects.series import Series

SATURATED = [0, 1, 1, 1, 3, 5, 8, 18, 36]
SECONDARY = [0, 1, 1, 2, 4, 8, 17, 37, 82, 185, 423, 978, 2283, 5373, 12735, 30372, 72832]


class SolverManagerTest(unittest.TestCase):

    def setUp(self) -> None:
        self.series_manager: SeriesManager = SeriesManager()
        self.solver_manager: SolverManager = SolverManager(
            series_manager=self.series_manager
        )
        self.fixed_point_solver_manager: SolverManager = SolverManager(
            series_manager=self.series_manager,
            strategy="fixed_point"
        )

    def test_solve_saturated_gives_known_counts(self):
        saturated = self.solver_manager.solve_saturated(8)

        self.assertEqual(tuple(SATURATED), saturated.get_coefficients())

    def test_solve_saturated_at_truncation_one(self):
        self.assertEqual(Series([0, 1]), self.solver_manager.solve_saturated(1))

    def test_solve_secondary_gives_known_counts(self):
        secondary = self.solver_manager.solve_secondary(16)

        self.assertEqual(tuple(SECONDARY), secondary.get_coefficients())

    def test_strategies_agree(self):
        self.assertEqual(
            self.solver_manager.solve_saturated(60),
            self.fixed_point_solver_manager.solve_saturated(60)
        )
        self.assertEqual(
            self.solver_manager.solve_secondary(40),
            self.fixed_point_solver_manager.solve_secondary(40)
        )

    def test_solve_saturated_extends_lower_truncation(self):
        low = self.solver_manager.solve_saturated(30)
        high = self.solver_manager.solve_saturated(90)

        self.assertEqual(low, high.resize(30))

    def test_square_of_saturated_series(self):
        saturated = self.solver_manager.solve_saturated(5)

        square = self.series_manager.multiply(saturated, saturated)

        self.assertEqual(3, square.get_coefficient(4))

    def test_r_from_s_shifts_by_two(self):
        saturated = self.solver_manager.solve_saturated(8)

        r = SolverManager.r_from_s(saturated)

        self.assertEqual((0, 0, 0, 1, 1, 1, 3, 5, 8), r.get_coefficients())

    def test_residuals_vanish_on_solution(self):
        saturated = self.solver_manager.solve_saturated(128)
        secondary = self.solver_manager.solve_secondary(128)

        self.assertTrue(self.solver_manager.saturated_residual(saturated).is_zero())
        self.assertTrue(self.solver_manager.decomposition_residual(saturated).is_zero())
        self.assertTrue(self.solver_manager.secondary_residual(secondary).is_zero())

    def test_residual_detects_wrong_coefficient(self):
        coefficients = list(self.solver_manager.solve_saturated(10).get_coefficients())
        coefficients[6] += 1

        residual = self.solver_manager.saturated_residual(Series(coefficients))

        self.assertEqual(6, residual.valuation())

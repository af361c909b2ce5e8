import json
import unittest
from fractions import Fraction
import mpmath
from modules.asymptotics.data.asymptotics_data import AsymptoticsData
from modules.asymptotics.objects.expectation_row import ExpectationRow
from modules.order.data.order_data import OrderData
from modules.order.managers.distribution_manager import DistributionManager
from modules.order.managers.spectrum_manager import SpectrumManager
from modules.series.data.series_data import SeriesData
from modules.series.managers.series_manager import SeriesManager
from modules.series.managers.solver_manager import SolverManager
from modules.series.objects.series import Series
from modules.util.data.table_data import TableData


class ExportDataTest(unittest.TestCase):

    def setUp(self) -> None:
        self.table_data: TableData = TableData()
        series_manager = SeriesManager()
        self.spectrum_manager: SpectrumManager = SpectrumManager(
            series_manager=series_manager,
            solver_manager=SolverManager(series_manager=series_manager)
        )

    def test_series_to_csv(self):
        series_data = SeriesData(table_data=self.table_data)

        self.assertEqual("n,coefficient\n0,0\n1,1\n2,1\n", series_data.to_csv(Series([0, 1, 1])))

    def test_series_to_json_keeps_every_digit(self):
        decoded = json.loads(SeriesData.to_json(Series([0, 3 ** 90])))

        self.assertEqual(["0", str(3 ** 90)], decoded)

    def test_series_rows(self):
        rows = SeriesData.rows(Series([0, 1, 1, 1, 3]), 1, 10)

        self.assertEqual([(1, 1), (2, 1), (3, 1), (4, 3)], [(row["n"], row["coefficient"]) for row in rows])

    def test_series_export_window(self):
        series_data = SeriesData(table_data=self.table_data)
        series = Series([0, 1, 1, 1, 3, 5])

        self.assertEqual("n,coefficient\n1,1\n2,1\n3,1\n4,3\n", series_data.to_csv(series, 1, 4))
        self.assertEqual(["1", "1", "1", "3"], json.loads(series_data.render(series, "json", 1, 4)))
        self.assertEqual("n=4 coefficient=3\n", series_data.render(series, "text", 4, 4))

    def test_spectrum_rows_for_one_level(self):
        spectrum = self.spectrum_manager.build(12)

        rows = OrderData.spectrum_rows(spectrum, 12, 2)

        self.assertEqual({2}, {row["p"] for row in rows})
        self.assertEqual(8, rows[0]["n"])
        self.assertEqual([], OrderData.spectrum_rows(spectrum, 12, 7))

    def test_tail_bound_for_rational_deviation(self):
        self.assertEqual(Fraction(1, 8), OrderData.bound(3))
        self.assertAlmostEqual(0.7071067811865476, float(OrderData.bound(Fraction(1, 2))))

    def test_distribution_row_beyond_largest_order(self):
        spectrum = self.spectrum_manager.build(8)
        distribution = DistributionManager().distribution(spectrum, 8)

        self.assertEqual({"n": 8, "p": 2, "count": 1, "probability": Fraction(1, 36)}, distribution.get_row(2))
        self.assertEqual({"n": 8, "p": 5, "count": 0, "probability": Fraction(0)}, distribution.get_row(5))

    def test_spectrum_rows_skip_zero_counts(self):
        spectrum = self.spectrum_manager.build(8)

        rows = OrderData.spectrum_rows(spectrum, 8)

        self.assertIn({"n": 8, "p": 2, "count": 1}, rows)
        self.assertNotIn(2, [row["p"] for row in rows if row["n"] < 8])
        self.assertIn({"n": 2, "p": 0, "count": 1}, rows)

    def test_tail_rows(self):
        spectrum = self.spectrum_manager.build(8)
        order_data = OrderData(distribution_manager=DistributionManager())

        rows = order_data.tail_rows(spectrum, 8, [0, 1])

        self.assertEqual(
            [
                {"n": 8, "x": 0, "probability": Fraction(1), "bound": Fraction(1)},
                {"n": 8, "x": 1, "probability": Fraction(0), "bound": Fraction(1, 2)}
            ],
            rows
        )

    def test_expectation_csv(self):
        asymptotics_data = AsymptoticsData(table_data=self.table_data)
        rows = [ExpectationRow(4, Fraction(1), mpmath.mpf(1))]

        self.assertEqual(
            "n,E,log4n,ratio,difference\n4,1,1.0,1.0,0.0\n",
            asymptotics_data.expectation_csv(rows)
        )

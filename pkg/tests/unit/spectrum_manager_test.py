import unittest
from modules.order.managers.spectrum_manager import SpectrumManager
from modules.series.managers.series_manager import SeriesManager
from modules.series.managers.solver_manager import SolverManager
from modules.series.objects.series import Series


class SpectrumManagerTest(unittest.TestCase):

    def setUp(self) -> None:
        self.series_manager: SeriesManager = SeriesManager()
        self.solver_manager: SolverManager = SolverManager(
            series_manager=self.series_manager
        )
        self.spectrum_manager: SpectrumManager = SpectrumManager(
            series_manager=self.series_manager,
            solver_manager=self.solver_manager
        )

    def test_build_stops_after_last_nonzero_level(self):
        spectrum = self.spectrum_manager.build(8)

        self.assertEqual(3, spectrum.get_stop())
        self.assertEqual([1, 2, 3], [level.get_p() for level in spectrum.get_levels()])
        self.assertTrue(spectrum.get_s_series(3).is_zero())
        self.assertTrue(spectrum.get_s_series(7).is_zero())

    def test_build_first_level_drops_unpaired_structures(self):
        spectrum = self.spectrum_manager.build(16)
        saturated = spectrum.get_base()

        expected = saturated - Series.polynomial(16, {1: 1, 2: 1})

        self.assertEqual(expected, spectrum.get_s_series(1))
        self.assertEqual(SolverManager.r_from_s(saturated), spectrum.get_levels()[0].get_r_series())

    def test_build_counts_branching_structure(self):
        spectrum = self.spectrum_manager.build(8)

        self.assertEqual(1, spectrum.get_count(2, 8))
        self.assertEqual(0, spectrum.get_count(2, 7))
        self.assertEqual(36, spectrum.get_count(1, 8))
        self.assertEqual(36, spectrum.get_count(0, 8))

    def test_build_levels_are_decreasing(self):
        spectrum = self.spectrum_manager.build(64)

        for p in range(1, spectrum.get_stop() + 1):
            above = spectrum.get_s_series(p).get_coefficients()
            below = spectrum.get_s_series(p - 1).get_coefficients()
            self.assertTrue(all(a <= b for a, b in zip(above, below)), p)

    def test_minimal_sizes(self):
        spectrum = self.spectrum_manager.build(40)

        self.assertEqual({0: 1, 1: 3, 2: 8, 3: 18, 4: 38}, SpectrumManager.minimal_sizes(spectrum))

    def test_next_r_matches_built_level(self):
        spectrum = self.spectrum_manager.build(30)
        r = spectrum.get_r_series()

        r_2 = self.spectrum_manager.next_r(r, r)

        self.assertEqual(spectrum.get_levels()[1].get_r_series(), r_2.as_counting())
        self.assertEqual(spectrum.get_s_series(2), self.spectrum_manager.s_from_r(r, r_2).as_counting())

    def test_closed_level_starts_at_branching_pair(self):
        spectrum = self.spectrum_manager.build(12)

        closed = spectrum.get_levels()[1].get_r_series()

        self.assertEqual(8, closed.valuation())
        self.assertEqual(1, closed.get_coefficient(8))

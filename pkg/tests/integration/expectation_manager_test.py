import unittest
from modules.asymptotics.managers.expectation_manager import ExpectationManager
from modules.order.managers.distribution_manager import DistributionManager
from modules.order.managers.spectrum_manager import SpectrumManager
from tests.integration.setup.integration_setup import IntegrationSetup, SLOW_TESTS

DEVIATIONS = [1, 2, 3, 4, 5]


class ExpectationManagerTest(IntegrationSetup):
    spectrum = None

    @classmethod
    def setUpClass(cls) -> None:
        super().setUpClass()
        cls.expectation_manager: ExpectationManager = cls.service_locator.get(ExpectationManager.__name__)
        cls.distribution_manager: DistributionManager = cls.service_locator.get(DistributionManager.__name__)
        cls.spectrum_manager: SpectrumManager = cls.service_locator.get(SpectrumManager.__name__)
        cls.spectrum = cls.spectrum_manager.build(1024)

    def __assert_expectation_near_log4(self, spectrum, sizes):
        rows = self.expectation_manager.report(spectrum, [256] + sizes, reference=256)
        for row in rows:
            if row.get_n() in sizes:
                self.assertTrue(0.9 <= row.get_ratio() <= 1.1, row.get_dict())
        self.assertTrue(ExpectationManager.trend_holds(rows, 256))

    def test_report_at_size_four(self):
        rows = self.expectation_manager.report(self.spectrum, [4])

        self.assertEqual(1, rows[0].get_expectation())
        self.assertEqual(1, rows[0].get_log4())

    def test_expectation_tracks_log4_through_1024(self):
        self.__assert_expectation_near_log4(self.spectrum, [512, 1024])

    @unittest.skipUnless(SLOW_TESTS, "set SATURNA_SLOW_TESTS=1 for the N = 2048 spectrum")
    def test_expectation_tracks_log4_through_2048(self):
        spectrum = self.spectrum_manager.build(2048)

        self.__assert_expectation_near_log4(spectrum, [512, 1024, 2048])

    def test_tail_decays_geometrically_at_1024(self):
        constant = self.distribution_manager.tail_constant(self.spectrum, 1024, DEVIATIONS)

        self.assertLessEqual(constant, 8)
        for x in DEVIATIONS:
            probability = self.distribution_manager.tail_probability(self.spectrum, 1024, x)
            self.assertLessEqual(probability, constant / 2 ** x)

    def test_distribution_at_1024_is_normalized(self):
        distribution = self.distribution_manager.distribution(self.spectrum, 1024)

        self.assertEqual(distribution.get_total(), sum(distribution.get_counts()))
        self.assertEqual(0, distribution.get_counts()[0])

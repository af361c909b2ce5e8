from collections import Counter
from scipy.stats import chisquare
from modules.oracle.managers.oracle_manager import OracleManager
from modules.order.managers.distribution_manager import DistributionManager
from modules.order.managers.spectrum_manager import SpectrumManager
from modules.sampler.managers.sampler_manager import SamplerManager
from modules.structure.managers.order_manager import OrderManager
from tests.integration.setup.integration_setup import IntegrationSetup


class SamplerManagerTest(IntegrationSetup):
    sampler_manager: SamplerManager = None

    @classmethod
    def setUpClass(cls) -> None:
        super().setUpClass()
        cls.sampler_manager = cls.service_locator.get(SamplerManager.__name__)
        cls.oracle_manager: OracleManager = cls.service_locator.get(OracleManager.__name__)
        cls.spectrum_manager: SpectrumManager = cls.service_locator.get(SpectrumManager.__name__)
        cls.distribution_manager: DistributionManager = cls.service_locator.get(DistributionManager.__name__)
        cls.tables = cls.sampler_manager.build_tables(200)

    def test_sample_is_uniform_at_size_twelve(self):
        structures = [structure.get_text() for structure in self.oracle_manager.enumerate_saturated(12)]
        draws = Counter(
            structure.get_text() for structure in self.sampler_manager.sample_many(self.tables, 12, 99, 100000)
        )

        self.assertTrue(set(draws).issubset(structures))
        self.assertGreater(chisquare([draws[text] for text in structures]).pvalue, 1e-3)

    def __assert_orders_match(self, draws: int):
        spectrum = self.spectrum_manager.build(200)
        probabilities = self.distribution_manager.distribution(spectrum, 200).get_probabilities()
        orders = Counter(
            OrderManager.order_fast(structure)
            for structure in self.sampler_manager.sample_many(self.tables, 200, 5, draws)
        )

        support = set(range(len(probabilities))) | set(orders)
        distance = sum(
            abs(orders[p] / draws - (float(probabilities[p]) if p < len(probabilities) else 0.0))
            for p in support
        ) / 2

        self.assertLess(distance, 0.02)

    def test_sample_orders_match_distribution_at_200(self):
        self.__assert_orders_match(100000)

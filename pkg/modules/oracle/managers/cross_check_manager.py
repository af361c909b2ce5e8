import logging
from typing import List
from modules.oracle.managers.oracle_manager import OracleManager
from modules.oracle.objects.check_result import CheckResult
from modules.order.managers.distribution_manager import DistributionManager
from modules.order.managers.spectrum_manager import SpectrumManager
from modules.series.managers.solver_manager import SolverManager
from modules.structure.managers.order_manager import OrderManager

logger = logging.getLogger(__name__)


class CrossCheckManager:
    """ Manager comparing brute-force enumeration with the generating functions
    """
    def __init__(self, **kwargs):
        """ Constructor for CrossCheckManager
        Args:
            **kwargs:           Dependencies
                oracle_manager (OracleManager)              - Brute-force enumeration
                order_manager (OrderManager)                - Order by rewriting and by one pass
                solver_manager (SolverManager)              - Series solver
                spectrum_manager (SpectrumManager)          - Order-filtered series
                distribution_manager (DistributionManager)  - Exact distributions
        """
        self.__oracle_manager: OracleManager = kwargs.get("oracle_manager")
        self.__order_manager: OrderManager = kwargs.get("order_manager")
        self.__solver_manager: SolverManager = kwargs.get("solver_manager")
        self.__spectrum_manager: SpectrumManager = kwargs.get("spectrum_manager")
        self.__distribution_manager: DistributionManager = kwargs.get("distribution_manager")

    def check_counts(self, high: int) -> List[CheckResult]:
        """ Compare enumeration sizes with [z^n]S and [z^n]T for n = 1..high
        Args:
            high (int):
        Returns:
            List[CheckResult]
        """
        saturated = self.__solver_manager.solve_saturated(high)
        secondary = self.__solver_manager.solve_secondary(high)
        results = []
        for n in range(1, high + 1):
            results.append(CheckResult(
                "saturated_count", n, len(self.__oracle_manager.enumerate_saturated(n)), saturated.get_coefficient(n)
            ))
            results.append(CheckResult(
                "secondary_count", n, len(self.__oracle_manager.enumerate_secondary(n)), secondary.get_coefficient(n)
            ))
        return results

    def check_orders(self, high: int) -> List[CheckResult]:
        """ Compare the census by order with S_p(n) - S_{p+1}(n) for n = 1..high
        Args:
            high (int):
        Returns:
            List[CheckResult]
        """
        spectrum = self.__spectrum_manager.build(high)
        results = []
        for n in range(1, high + 1):
            census = self.__oracle_manager.census(n)
            counts = self.__distribution_manager.distribution(spectrum, n).get_counts()
            results.append(CheckResult(
                "order_census", n, census.get_by_order(), {p: c for p, c in enumerate(counts) if c}
            ))
            results.extend(
                CheckResult(f"order_at_least_{p}", n, census.at_least(p), spectrum.get_count(p, n))
                for p in range(1, spectrum.get_stop() + 1)
            )
        return results

    def check_order_implementations(self, high: int) -> List[CheckResult]:
        """ Compare rewriting order with one-pass order over every structure of size 1..high
        Args:
            high (int):
        Returns:
            List[CheckResult]
        """
        results = []
        for n in range(1, high + 1):
            structures = self.__oracle_manager.enumerate_secondary(n)
            mismatches = sum(
                1 for structure in structures
                if self.__order_manager.order(structure) != self.__order_manager.order_fast(structure)
            )
            results.append(CheckResult("order_implementations", n, 0, mismatches))
        return results

    def run(self, high: int) -> List[CheckResult]:
        """ Run every cross-check up to size high
        Args:
            high (int):
        Returns:
            List[CheckResult]
        """
        results = self.check_counts(high) + self.check_orders(high) + self.check_order_implementations(high)
        failed = [result for result in results if not result.is_ok()]
        for result in failed:
            logger.warning(
                "Cross-check %s failed at n=%d: expected %s, got %s",
                result.get_check(), result.get_n(), result.get_expected(), result.get_actual()
            )
        logger.info("%d cross-checks, %d failed", len(results), len(failed))
        return results

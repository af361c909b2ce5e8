import logging
from typing import Iterable, List
import mpmath
from modules.asymptotics.objects.expectation_row import ExpectationRow
from modules.order.managers.distribution_manager import DistributionManager
from modules.order.objects.order_spectrum import OrderSpectrum
from modules.util.exceptions.out_of_range_exception import OutOfRangeException

logger = logging.getLogger(__name__)


class ExpectationManager:
    """ Manager comparing the exact expected order with log_4 n
    """
    def __init__(self, **kwargs):
        """ Constructor for ExpectationManager
        Args:
            **kwargs:           Dependencies
                distribution_manager (DistributionManager)      - Exact expectations
        """
        self.__distribution_manager: DistributionManager = kwargs.get("distribution_manager")

    def report(self, spectrum: OrderSpectrum, sizes: Iterable[int], reference: int = None) -> List[ExpectationRow]:
        """ Get rows (n, E, log_4 n, ratio, difference)
        Args:
            spectrum (OrderSpectrum):
            sizes (Iterable[int]):      Sizes up to the truncation
            reference (int):            Size whose |difference| must not be exceeded at the largest size
        Returns:
            List[ExpectationRow]
        """
        sizes = sorted(set(sizes))
        for n in sizes:
            if not 1 <= n <= spectrum.get_truncation():
                raise OutOfRangeException(f"Size {n} outside 1..{spectrum.get_truncation()}")
        rows = [
            ExpectationRow(n, self.__distribution_manager.expected_order(spectrum, n), mpmath.log(n, 4))
            for n in sizes
        ]
        if reference is not None and not self.trend_holds(rows, reference):
            logger.warning("Expected order drifts from log4 n: |E - log4 n| grows beyond n=%d", reference)
        return rows

    @classmethod
    def trend_holds(cls, rows: List[ExpectationRow], reference: int) -> bool:
        """ Check |E - log_4 n| at the largest size does not exceed its value at the reference size
        Args:
            rows (List[ExpectationRow]):
            reference (int):
        Returns:
            bool
        """
        by_size = {row.get_n(): row for row in rows}
        if reference not in by_size:
            raise OutOfRangeException(f"Reference size {reference} missing from the report")
        largest = by_size[max(by_size)]
        return abs(largest.get_difference()) <= abs(by_size[reference].get_difference())

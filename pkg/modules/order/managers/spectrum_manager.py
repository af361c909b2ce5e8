import logging
from typing import Dict
from modules.order.objects.order_level import OrderLevel
from modules.order.objects.order_spectrum import OrderSpectrum
from modules.order.objects.recurrence_terms import RecurrenceTerms
from modules.series.exceptions.no_convergence_exception import NoConvergenceException
from modules.series.managers.series_manager import SeriesManager
from modules.series.managers.solver_manager import SolverManager
from modules.series.objects.series import Series

logger = logging.getLogger(__name__)


class SpectrumManager:
    """ Manager for the order-filtered series S_p and R_p
    """
    def __init__(self, **kwargs):
        """ Constructor for SpectrumManager
        Args:
            **kwargs:           Dependencies
                series_manager (SeriesManager)      - Series arithmetic
                solver_manager (SolverManager)      - Functional equation solver
        """
        self.__series_manager: SeriesManager = kwargs.get("series_manager")
        self.__solver_manager: SolverManager = kwargs.get("solver_manager")

    def next_r(self, r: Series, r_p: Series) -> Series:
        """ Get R_{p+1} from R and R_p
        Args:
            r (Series):         R = z^2 S
            r_p (Series):       Closed structures of order >= p
        Returns:
            Series
        """
        return self.__next_r(self.terms(r), r_p)

    def s_from_r(self, r: Series, r_p: Series) -> Series:
        """ Get S_p from R and R_p
        Args:
            r (Series):
            r_p (Series):
        Returns:
            Series
        """
        return self.__s_from_r(self.terms(r), r_p)

    def build(self, truncation: int) -> OrderSpectrum:
        """ Build every level until S_p vanishes through z^N
        Args:
            truncation (int):       N >= 1
        Returns:
            OrderSpectrum
        """
        base = self.__solver_manager.solve_saturated(truncation)
        r = self.__solver_manager.r_from_s(base)
        terms = self.terms(r)

        levels = []
        r_p = r
        p = 1
        while True:
            s_p = self.__s_from_r(terms, r_p).as_counting()
            levels.append(OrderLevel(p, s_p, r_p))
            logger.info("Order level %d through z^%d, lowest size %s", p, truncation, s_p.valuation())
            if s_p.is_zero():
                break
            if p > truncation + 1:
                raise NoConvergenceException(f"Order levels did not vanish through z^{truncation}")
            r_p = self.__next_r(terms, r_p).as_counting()
            p += 1
        return OrderSpectrum(base, r, levels)

    @classmethod
    def minimal_sizes(cls, spectrum: OrderSpectrum) -> Dict[int, int]:
        """ Get m(p), the smallest size with a saturated structure of order p
        Args:
            spectrum (OrderSpectrum):
        Returns:
            Dict[int, int]
        """
        sizes = {0: spectrum.get_base().valuation()}
        for level in spectrum.get_levels():
            if not level.get_s_series().is_zero():
                sizes[level.get_p()] = level.get_s_series().valuation()
        return sizes

    def terms(self, r: Series) -> RecurrenceTerms:
        """ Precompute the R-only factors of the recurrences
        Args:
            r (Series):
        Returns:
            RecurrenceTerms
        """
        multiply = self.__series_manager.multiply
        truncation = r.get_truncation()
        z = Series.monomial(truncation, 1)
        z2 = Series.monomial(truncation, 2)
        r2 = multiply(r, r)
        rz2 = r.shift(2)
        p_r = 3 * r2 + 2 * rz2 - 4 * r + (1 - z2)
        return RecurrenceTerms(
            r=r,
            cubic=-r - z2,
            quadratic=-3 * r + 3 * r2 + 3 * rz2 - z2,
            denominator_quadratic=3 * r - 3,
            denominator_linear=6 * r - 3 - 3 * r2 + z2,
            denominator_constant=multiply(r - 1, p_r),
            s_constant=1 + 2 * z2 + 2 * z - 2 * r - 2 * r.shift(1) - 2 * rz2 + r2,
            s_linear=1 + z + z2 - r,
            s_denominator=multiply(r - 1, r - 1)
        )

    def __next_r(self, terms: RecurrenceTerms, r_p: Series) -> Series:
        multiply = self.__series_manager.multiply
        r_p2 = multiply(r_p, r_p)
        r_p3 = multiply(r_p2, r_p)
        numerator = multiply(terms.get("cubic"), r_p3) + multiply(terms.get("quadratic"), r_p2)
        denominator = (
            -r_p3
            + multiply(terms.get("denominator_quadratic"), r_p2)
            + multiply(terms.get("denominator_linear"), r_p)
            + terms.get("denominator_constant")
        )
        return self.__series_manager.divide(numerator, denominator)

    def __s_from_r(self, terms: RecurrenceTerms, r_p: Series) -> Series:
        multiply = self.__series_manager.multiply
        numerator = multiply(r_p, terms.get("s_constant") + multiply(terms.get("s_linear"), r_p))
        remainder = terms.get("r") - r_p - 1
        denominator = multiply(terms.get("s_denominator"), multiply(remainder, remainder))
        return self.__series_manager.divide(numerator, denominator)

from fractions import Fraction
from numbers import Rational
from typing import Dict, Iterable, List
import mpmath
from modules.order.managers.distribution_manager import DistributionManager
from modules.order.objects.order_spectrum import OrderSpectrum


class OrderData:
    """ Export layer for spectra, expectations and tails
    """
    def __init__(self, **kwargs):
        """ Constructor for OrderData
        Args:
            **kwargs:           Dependencies
                distribution_manager (DistributionManager)      - Distribution queries
        """
        self.__distribution_manager: DistributionManager = kwargs.get("distribution_manager")

    @classmethod
    def spectrum_rows(cls, spectrum: OrderSpectrum, high: int = None, level: int = None) -> List[Dict[str, any]]:
        """ Rows (n, p, S_p(n)) for nonzero counts
        Args:
            spectrum (OrderSpectrum):
            high (int):             Largest n, N when omitted
            level (int):            Only this p when given
        Returns:
            List[Dict[str, any]]
        """
        high = spectrum.get_truncation() if high is None else min(high, spectrum.get_truncation())
        levels = range(spectrum.get_stop()) if level is None else [level]
        rows = []
        for n in range(1, high + 1):
            for p in levels:
                count = spectrum.get_count(p, n)
                if count:
                    rows.append({"n": n, "p": p, "count": count})
        return rows

    def tail_rows(self, spectrum: OrderSpectrum, n: int, deviations: Iterable[Rational]) -> List[Dict[str, any]]:
        """ Rows (n, x, probability, bound 2^-x)
        Args:
            spectrum (OrderSpectrum):
            n (int):
            deviations (Iterable[Rational]):
        Returns:
            List[Dict[str, any]]
        """
        return [
            {
                "n": n,
                "x": Fraction(x),
                "probability": self.__distribution_manager.tail_probability(spectrum, n, x),
                "bound": self.bound(x)
            }
            for x in deviations
        ]

    @classmethod
    def bound(cls, x: Rational) -> Fraction or mpmath.mpf:
        """ Get 2^-x, exact for integer x
        Args:
            x (Rational):
        Returns:
            Fraction or mpmath.mpf
        """
        x = Fraction(x)
        if x.denominator == 1:
            return Fraction(1, 2 ** x.numerator)
        return mpmath.power(2, -mpmath.mpf(x.numerator) / x.denominator)

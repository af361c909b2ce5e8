from fractions import Fraction
from numbers import Rational
from typing import Iterable
from modules.order.objects.order_distribution import OrderDistribution
from modules.order.objects.order_spectrum import OrderSpectrum
from modules.util.exceptions.out_of_range_exception import OutOfRangeException


class DistributionManager:
    """ Manager for exact order distributions, expectations and tails
    """

    def distribution(self, spectrum: OrderSpectrum, n: int) -> OrderDistribution:
        """ Get distribution of the order at size n
        Args:
            spectrum (OrderSpectrum):
            n (int):
        Returns:
            OrderDistribution
        """
        self.__check_size(spectrum, n)
        counts = [
            spectrum.get_count(p, n) - spectrum.get_count(p + 1, n)
            for p in range(spectrum.get_stop())
        ]
        return OrderDistribution(n, counts, spectrum.get_count(0, n))

    def expected_order(self, spectrum: OrderSpectrum, n: int) -> Fraction:
        """ Get E[order] = sum_{p >= 1} S_p(n) / S(n)
        Args:
            spectrum (OrderSpectrum):
            n (int):
        Returns:
            Fraction
        """
        self.__check_size(spectrum, n)
        total = spectrum.get_count(0, n)
        return Fraction(sum(spectrum.get_count(p, n) for p in range(1, spectrum.get_stop())), total)

    def tail_probability(self, spectrum: OrderSpectrum, n: int, x: Rational) -> Fraction:
        """ Get P(|order - E order| >= x)
        Args:
            spectrum (OrderSpectrum):
            n (int):
            x (Rational):       Nonnegative deviation
        Returns:
            Fraction
        """
        x = Fraction(x)
        if x < 0:
            raise OutOfRangeException(f"Deviation must be nonnegative, got {x}")
        distribution = self.distribution(spectrum, n)
        mean = self.expected_order(spectrum, n)
        mass = sum(
            count for p, count in enumerate(distribution.get_counts())
            if abs(p - mean) >= x
        )
        return Fraction(mass, distribution.get_total())

    def tail_constant(self, spectrum: OrderSpectrum, n: int, deviations: Iterable[int]) -> Fraction:
        """ Get smallest C with P(|order - E order| >= x) <= C 2^-x over the given x
        Args:
            spectrum (OrderSpectrum):
            n (int):
            deviations (Iterable[int]):
        Returns:
            Fraction
        """
        return max(
            (self.tail_probability(spectrum, n, x) * 2 ** x for x in deviations),
            default=Fraction(0)
        )

    @classmethod
    def __check_size(cls, spectrum: OrderSpectrum, n: int):
        if not 1 <= n <= spectrum.get_truncation():
            raise OutOfRangeException(f"Size {n} outside 1..{spectrum.get_truncation()}")

from fractions import Fraction
from typing import Dict
import mpmath


class ExpectationRow:
    """ Object representing one row of the expected order table
    """
    def __init__(self, n: int, expectation: Fraction, log4: mpmath.mpf):
        """ Constructor for ExpectationRow
        Args:
            n (int):                    Size
            expectation (Fraction):     Exact expected order
            log4 (mpmath.mpf):          log_4 n
        """
        self.__n: int = n
        self.__expectation: Fraction = expectation
        self.__log4: mpmath.mpf = log4

    def get_n(self) -> int:
        return self.__n

    def get_expectation(self) -> Fraction:
        return self.__expectation

    def get_log4(self) -> mpmath.mpf:
        return self.__log4

    def get_ratio(self) -> mpmath.mpf or None:
        """ Get E / log_4 n, None at n = 1
        Returns:
            mpmath.mpf or None
        """
        if not self.__log4:
            return None
        return self.__real() / self.__log4

    def get_difference(self) -> mpmath.mpf:
        """ Get E - log_4 n
        Returns:
            mpmath.mpf
        """
        return self.__real() - self.__log4

    def get_dict(self) -> Dict[str, any]:
        return {
            "n": self.__n,
            "E": self.__expectation,
            "log4n": self.__log4,
            "ratio": self.get_ratio(),
            "difference": self.get_difference()
        }

    def __real(self) -> mpmath.mpf:
        return mpmath.mpf(self.__expectation.numerator) / self.__expectation.denominator

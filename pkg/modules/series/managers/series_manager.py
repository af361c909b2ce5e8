import operator
from fractions import Fraction
from typing import List, Tuple
import mpmath
from modules.series.exceptions.non_unit_divisor_exception import NonUnitDivisorException
from modules.series.exceptions.truncation_mismatch_exception import TruncationMismatchException
from modules.series.objects.series import Series


class SeriesManager:
    """ Manager for exact truncated power series arithmetic
    """
    SPARSE_TERMS = 16

    def multiply(self, a: Series, b: Series) -> Series:
        """ Cauchy product truncated at z^N
        Args:
            a (Series):
            b (Series):
        Returns:
            Series
        """
        truncation = self.__check(a, b)
        sparse_a = self.__nonzero(a)
        sparse_b = self.__nonzero(b)
        if not sparse_a or not sparse_b:
            return Series.zero(truncation)
        if len(sparse_b) < len(sparse_a):
            a, b = b, a
            sparse_a, sparse_b = sparse_b, sparse_a
        if len(sparse_a) <= self.SPARSE_TERMS:
            return self.__multiply_sparse(sparse_a, b)

        left = a.get_coefficients()
        reversed_right = b.get_coefficients()[::-1]
        low_a, low_b = sparse_a[0][0], sparse_b[0][0]
        coefficients = [0] * (truncation + 1)
        for n in range(low_a + low_b, truncation + 1):
            high = n - low_b
            offset = truncation - n
            coefficients[n] = sum(map(
                operator.mul,
                left[low_a:high + 1],
                reversed_right[offset + low_a:offset + high + 1]
            ))
        return Series(coefficients)

    def divide(self, a: Series, b: Series) -> Series:
        """ Quotient q with q * b = a through z^N
        Args:
            a (Series):
            b (Series):     Divisor with nonzero constant term
        Returns:
            Series
        """
        truncation = self.__check(a, b)
        unit = b.get_coefficient(0)
        if unit == 0:
            raise NonUnitDivisorException("Divisor has zero constant term")
        integral_unit = unit in (1, -1)
        numerator = a.get_coefficients()
        divisor = b.get_coefficients()
        sparse = [(i, c) for i, c in self.__nonzero(b) if i > 0]
        quotient: List = []
        for n in range(truncation + 1):
            if len(sparse) <= self.SPARSE_TERMS:
                carried = sum(c * quotient[n - i] for i, c in sparse if i <= n)
            else:
                carried = sum(map(operator.mul, divisor[1:n + 1], quotient[n - 1::-1])) if n else 0
            remainder = numerator[n] - carried
            if integral_unit:
                quotient.append(remainder * unit)
            else:
                quotient.append(Fraction(remainder) / unit)
        return Series(quotient)

    def power(self, a: Series, k: int) -> Series:
        """ Get a^k for k >= 0 by repeated squaring
        Args:
            a (Series):
            k (int):
        Returns:
            Series
        """
        result = Series.monomial(a.get_truncation(), 0)
        base = a
        while k > 0:
            if k & 1:
                result = self.multiply(result, base)
            k >>= 1
            if k:
                base = self.multiply(base, base)
        return result

    @classmethod
    def evaluate(cls, a: Series, x: mpmath.mpf) -> mpmath.mpf:
        """ Evaluate the truncated series at x with Horner's rule
        Args:
            a (Series):
            x (mpmath.mpf):
        Returns:
            mpmath.mpf
        """
        total = mpmath.mpf(0)
        for coefficient in reversed(a.get_coefficients()):
            total = total * x + mpmath.mpf(Fraction(coefficient).numerator) / Fraction(coefficient).denominator
        return total

    @classmethod
    def __check(cls, a: Series, b: Series) -> int:
        if a.get_truncation() != b.get_truncation():
            raise TruncationMismatchException(
                f"Truncation orders differ: {a.get_truncation()} and {b.get_truncation()}"
            )
        return a.get_truncation()

    @classmethod
    def __nonzero(cls, a: Series) -> List[Tuple[int, any]]:
        return [(i, c) for i, c in enumerate(a.get_coefficients()) if c]

    @classmethod
    def __multiply_sparse(cls, terms: List[Tuple[int, any]], b: Series) -> Series:
        truncation = b.get_truncation()
        dense = b.get_coefficients()
        coefficients = [0] * (truncation + 1)
        for i, c in terms:
            for n in range(i, truncation + 1):
                coefficients[n] += c * dense[n - i]
        return Series(coefficients)

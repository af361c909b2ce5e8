from fractions import Fraction
from numbers import Rational
from typing import Dict, Sequence, Tuple
from modules.series.exceptions.non_integral_coefficient_exception import NonIntegralCoefficientException
from modules.series.exceptions.truncation_mismatch_exception import TruncationMismatchException


class Series:
    """ Object representing a power series truncated after z^N
    Coefficients are exact: Python integers, or Fractions where a quotient is not integral.
    """
    def __init__(self, coefficients: Sequence[Rational]):
        """ Constructor for Series
        Args:
            coefficients (Sequence[Rational]):      Coefficients of z^0..z^N
        """
        self.__coefficients: Tuple[Rational, ...] = tuple(coefficients)

    @classmethod
    def zero(cls, truncation: int) -> "Series":
        return cls([0] * (truncation + 1))

    @classmethod
    def polynomial(cls, truncation: int, terms: Dict[int, Rational]) -> "Series":
        """ Build truncated polynomial
        Args:
            truncation (int):
            terms (Dict[int, Rational]):    Exponent to coefficient, exponents above N dropped
        Returns:
            Series
        """
        coefficients = [0] * (truncation + 1)
        for exponent, coefficient in terms.items():
            if exponent <= truncation:
                coefficients[exponent] += coefficient
        return cls(coefficients)

    @classmethod
    def monomial(cls, truncation: int, exponent: int, coefficient: Rational = 1) -> "Series":
        return cls.polynomial(truncation, {exponent: coefficient})

    def get_truncation(self) -> int:
        """ Get truncation order N
        Returns:
            int
        """
        return len(self.__coefficients) - 1

    def get_coefficients(self) -> Tuple[Rational, ...]:
        """ Get coefficients of z^0..z^N
        Returns:
            Tuple[Rational, ...]
        """
        return self.__coefficients

    def get_coefficient(self, exponent: int) -> Rational:
        """ Get coefficient of z^exponent, zero outside 0..N
        Args:
            exponent (int):
        Returns:
            Rational
        """
        if 0 <= exponent < len(self.__coefficients):
            return self.__coefficients[exponent]
        return 0

    def valuation(self) -> int or None:
        """ Get lowest exponent with nonzero coefficient, None for the zero series
        Returns:
            int or None
        """
        for exponent, coefficient in enumerate(self.__coefficients):
            if coefficient:
                return exponent
        return None

    def is_zero(self) -> bool:
        return not any(self.__coefficients)

    def resize(self, truncation: int) -> "Series":
        """ Truncate or zero-extend to a new truncation order
        Args:
            truncation (int):
        Returns:
            Series
        """
        coefficients = list(self.__coefficients[:truncation + 1])
        coefficients.extend([0] * (truncation + 1 - len(coefficients)))
        return Series(coefficients)

    def shift(self, k: int) -> "Series":
        """ Multiply by z^k keeping the truncation order
        Args:
            k (int):
        Returns:
            Series
        """
        truncation = self.get_truncation()
        if k >= truncation + 1:
            return Series.zero(truncation)
        return Series([0] * k + list(self.__coefficients[:truncation + 1 - k]))

    def is_integral(self) -> bool:
        return all(
            isinstance(coefficient, int) or coefficient.denominator == 1
            for coefficient in self.__coefficients
        )

    def as_counting(self) -> "Series":
        """ Get copy with plain integer coefficients, asserting a counting series
        Returns:
            Series
        """
        coefficients = []
        for exponent, coefficient in enumerate(self.__coefficients):
            if not isinstance(coefficient, int):
                if coefficient.denominator != 1:
                    raise NonIntegralCoefficientException(
                        f"Coefficient of z^{exponent} is not integral: {coefficient}"
                    )
                coefficient = coefficient.numerator
            if coefficient < 0:
                raise NonIntegralCoefficientException(f"Coefficient of z^{exponent} is negative: {coefficient}")
            coefficients.append(coefficient)
        return Series(coefficients)

    def __check(self, other: "Series"):
        if other.get_truncation() != self.get_truncation():
            raise TruncationMismatchException(
                f"Truncation orders differ: {self.get_truncation()} and {other.get_truncation()}"
            )

    def __add__(self, other) -> "Series":
        if isinstance(other, Series):
            self.__check(other)
            return Series([a + b for a, b in zip(self.__coefficients, other.get_coefficients())])
        if isinstance(other, Rational):
            return Series((self.__coefficients[0] + other,) + self.__coefficients[1:])
        return NotImplemented

    def __radd__(self, other) -> "Series":
        return self.__add__(other)

    def __neg__(self) -> "Series":
        return Series([-a for a in self.__coefficients])

    def __sub__(self, other) -> "Series":
        if isinstance(other, (Series, Rational)):
            return self + (-other)
        return NotImplemented

    def __rsub__(self, other) -> "Series":
        return (-self).__add__(other)

    def __mul__(self, other) -> "Series":
        # scalar only; series products go through SeriesManager.multiply
        if isinstance(other, Rational):
            return Series([a * other for a in self.__coefficients])
        return NotImplemented

    def __rmul__(self, other) -> "Series":
        return self.__mul__(other)

    def __eq__(self, other) -> bool:
        return isinstance(other, Series) and self.__coefficients == other.get_coefficients()

    def __hash__(self) -> int:
        return hash(self.__coefficients)

    def __repr__(self) -> str:
        shown = ", ".join(str(Fraction(a)) for a in self.__coefficients[:8])
        suffix = ", ..." if len(self.__coefficients) > 8 else ""
        return f"Series(N={self.get_truncation()}: {shown}{suffix})"

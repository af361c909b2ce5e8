import logging
from typing import Callable
from modules.series.exceptions.no_convergence_exception import NoConvergenceException
from modules.series.managers.series_manager import SeriesManager
from modules.series.objects.series import Series

logger = logging.getLogger(__name__)


class SolverManager:
    """ Manager solving the functional equations of saturated and secondary structures
    """
    def __init__(self, **kwargs):
        """ Constructor for SolverManager
        Args:
            **kwargs:           Dependencies
                series_manager (SeriesManager)      - Series arithmetic
                strategy (str)                      - newton or fixed_point, newton when omitted
        """
        self.__series_manager: SeriesManager = kwargs.get("series_manager")
        self.__strategy: str = kwargs.get("strategy") or "newton"

    def solve_saturated(self, truncation: int) -> Series:
        """ Solve the cubic equation of saturated structures
        -z^4 S^3 - z^2 (z^2 - 2) S^2 + (z^2 - 1) S + z + z^2 = 0
        Args:
            truncation (int):       N >= 1
        Returns:
            Series
        """
        logger.info("Solving saturated series through z^%d (%s)", truncation, self.__strategy)
        if self.__strategy == "fixed_point":
            solution = self.__fixed_point(truncation, self.__saturated_step)
        else:
            solution = self.__newton(truncation, self.saturated_residual, self.__saturated_derivative)
        return solution.as_counting()

    def solve_secondary(self, truncation: int) -> Series:
        """ Solve T = z + z T + z^2 T + z^2 T^2
        Args:
            truncation (int):       N >= 1
        Returns:
            Series
        """
        logger.info("Solving secondary series through z^%d (%s)", truncation, self.__strategy)
        if self.__strategy == "fixed_point":
            solution = self.__fixed_point(truncation, self.__secondary_step)
        else:
            solution = self.__newton(truncation, self.secondary_residual, self.__secondary_derivative)
        return solution.as_counting()

    @classmethod
    def r_from_s(cls, saturated: Series) -> Series:
        """ Get R = z^2 S, the structures closed by an outermost pair
        Args:
            saturated (Series):
        Returns:
            Series
        """
        return saturated.shift(2)

    def saturated_residual(self, s: Series) -> Series:
        """ Left side of the cubic equation evaluated at s
        Args:
            s (Series):
        Returns:
            Series
        """
        truncation = s.get_truncation()
        square = self.__series_manager.multiply(s, s)
        cube = self.__series_manager.multiply(square, s)
        z2 = Series.monomial(truncation, 2)
        return (
            -cube.shift(4)
            - self.__series_manager.multiply(square.shift(2), z2 - 2)
            + self.__series_manager.multiply(s, z2 - 1)
            + Series.polynomial(truncation, {1: 1, 2: 1})
        )

    def decomposition_residual(self, s: Series) -> Series:
        """ S - R/(1-R) - (z+z^2)/(1-R)^2 with R = z^2 S
        Args:
            s (Series):
        Returns:
            Series
        """
        truncation = s.get_truncation()
        r = self.r_from_s(s)
        sequences = self.__series_manager.divide(Series.monomial(truncation, 0), 1 - r)
        blocks = self.__series_manager.multiply(r, sequences)
        dotted = self.__series_manager.multiply(
            Series.polynomial(truncation, {1: 1, 2: 1}),
            self.__series_manager.multiply(sequences, sequences)
        )
        return s - blocks - dotted

    def secondary_residual(self, t: Series) -> Series:
        """ z + z T + z^2 T + z^2 T^2 - T evaluated at t
        Args:
            t (Series):
        Returns:
            Series
        """
        return self.__secondary_step(t) - t

    def __saturated_step(self, s: Series) -> Series:
        truncation = s.get_truncation()
        square = self.__series_manager.multiply(s, s)
        cube = self.__series_manager.multiply(square, s)
        return (
            Series.polynomial(truncation, {1: 1, 2: 1})
            + s.shift(2)
            + 2 * square.shift(2)
            - square.shift(4)
            - cube.shift(4)
        )

    def __saturated_derivative(self, s: Series) -> Series:
        truncation = s.get_truncation()
        z2 = Series.monomial(truncation, 2)
        square = self.__series_manager.multiply(s, s)
        return (
            -3 * square.shift(4)
            - 2 * self.__series_manager.multiply(s.shift(2), z2 - 2)
            + (z2 - 1)
        )

    def __secondary_step(self, t: Series) -> Series:
        truncation = t.get_truncation()
        square = self.__series_manager.multiply(t, t)
        return Series.monomial(truncation, 1) + t.shift(1) + t.shift(2) + square.shift(2)

    def __secondary_derivative(self, t: Series) -> Series:
        truncation = t.get_truncation()
        return 2 * t.shift(2) + Series.polynomial(truncation, {0: -1, 1: 1, 2: 1})

    def __fixed_point(self, truncation: int, step: Callable[[Series], Series]) -> Series:
        current = Series.zero(truncation)
        for passes in range(1, truncation + 3):
            following = step(current)
            if following == current:
                logger.debug("Fixed point reached after %d passes", passes)
                return current
            current = following
        raise NoConvergenceException(f"Fixed point iteration did not settle within {truncation + 2} passes")

    def __newton(
            self,
            truncation: int,
            residual: Callable[[Series], Series],
            derivative: Callable[[Series], Series]
    ) -> Series:
        # each step doubles the number of correct coefficients
        current = Series.zero(0)
        precision = 0
        while precision < truncation:
            precision = min(2 * precision + 1, truncation)
            guess = current.resize(precision)
            current = guess - self.__series_manager.divide(residual(guess), derivative(guess))
        for _ in range(2):
            following = current - self.__series_manager.divide(residual(current), derivative(current))
            if following == current:
                return current
            current = following
        raise NoConvergenceException(f"Newton lifting did not settle through z^{truncation}")

import logging
from typing import List, Tuple
import mpmath
import numpy
import sympy
from modules.asymptotics.exceptions.singularity_not_found_exception import SingularityNotFoundException
from modules.asymptotics.objects.singularity_report import SingularityReport
from modules.series.managers.solver_manager import SolverManager
from modules.series.objects.series import Series
from modules.util.exceptions.out_of_range_exception import OutOfRangeException

logger = logging.getLogger(__name__)

Z, R = sympy.symbols("z R")
# P(z, R(z)) = 0 for R = z^2 S
POLYNOMIAL = R ** 3 + (Z ** 2 - 2) * R ** 2 + (1 - Z ** 2) * R - Z ** 3 - Z ** 4


class SingularityManager:
    """ Manager locating the dominant singularity of S and the constant of its coefficient asymptotics
    """
    MIN_PRECISION = 6

    def __init__(self, **kwargs):
        """ Constructor for SingularityManager
        Args:
            **kwargs:           Dependencies
                solver_manager (SolverManager)      - Solver for the exact coefficients of S
                working_dps (int)                   - Minimum decimal digits for refinement, 64 when omitted
                fit_low (int)                       - Lowest n of the gamma fit, 200 when omitted
                fit_high (int)                      - Highest n of the gamma fit, 400 when omitted
        """
        self.__solver_manager: SolverManager = kwargs.get("solver_manager")
        self.__working_dps: int = kwargs.get("working_dps") or 64
        self.__fit_low: int = kwargs.get("fit_low") or 200
        self.__fit_high: int = kwargs.get("fit_high") or 400
        self.__p = sympy.lambdify((Z, R), POLYNOMIAL, "mpmath")
        self.__p_r = sympy.lambdify((Z, R), sympy.diff(POLYNOMIAL, R), "mpmath")
        self.__p_z = sympy.lambdify((Z, R), sympy.diff(POLYNOMIAL, Z), "mpmath")
        self.__p_rr = sympy.lambdify((Z, R), sympy.diff(POLYNOMIAL, R, 2), "mpmath")

    def locate_point(self, precision: int) -> Tuple[mpmath.mpf, mpmath.mpf]:
        """ Solve P = P_R = 0 for the smallest z > 0 with R real positive
        Args:
            precision (int):        Decimal digits, at least 6
        Returns:
            Tuple[mpmath.mpf, mpmath.mpf]:      (z0, r0)
        """
        if precision < self.MIN_PRECISION:
            raise OutOfRangeException(f"Precision must be at least {self.MIN_PRECISION}, got {precision}")
        dps = max(precision + 10, self.__working_dps)
        with mpmath.workdps(dps):
            for z_start, r_start in self.__candidates(dps):
                try:
                    solution = mpmath.findroot([self.__p, self.__p_r], (z_start, r_start))
                except (ValueError, ZeroDivisionError) as e:
                    logger.debug("Refinement from z=%s failed: %s", mpmath.nstr(z_start, 8), e)
                    continue
                z0, r0 = solution[0], solution[1]
                if not (0 < z0 < 1 and r0 > 0):
                    continue
                tolerance = mpmath.mpf(10) ** -precision
                if abs(self.__p(z0, r0)) < tolerance and abs(self.__p_r(z0, r0)) < tolerance:
                    logger.info("Singularity z0=%s r0=%s", mpmath.nstr(z0, precision), mpmath.nstr(r0, precision))
                    return +z0, +r0
        raise SingularityNotFoundException(f"No positive real solution of P = P_R = 0 at precision {precision}")

    def locate_singularity(self, precision: int, saturated: Series = None) -> SingularityReport:
        """ Locate the singularity and fit the coefficient constant
        Args:
            precision (int):        Decimal digits
            saturated (Series):     Solved S through at least the fit window, solved on demand when omitted
        Returns:
            SingularityReport
        """
        z0, r0 = self.locate_point(precision)
        with mpmath.workdps(max(precision + 10, self.__working_dps)):
            pz = self.__p_z(z0, r0)
            prr = self.__p_rr(z0, r0)
            if not pz or not prr:
                raise SingularityNotFoundException("Degenerate singularity: P_z or P_RR vanishes")
            gamma_normalization = mpmath.sqrt(z0 * pz / (2 * mpmath.pi * prr))
            gamma_formula = gamma_normalization / z0 ** 2

            if saturated is None or saturated.get_truncation() < self.__fit_high:
                saturated = self.__solver_manager.solve_saturated(self.__fit_high)
            gamma_fit = self.fit_gamma(z0, saturated, self.__fit_low, self.__fit_high)

        report = SingularityReport(
            z0=z0,
            r0=r0,
            pz=pz,
            prr=prr,
            gamma_fit=gamma_fit,
            gamma_formula=gamma_formula,
            gamma_normalization=gamma_normalization,
            precision=precision
        )
        if report.is_disagreeing():
            logger.warning(
                "Fitted gamma %s and closed-form gamma %s differ by more than 2%%",
                mpmath.nstr(gamma_fit, 8),
                mpmath.nstr(gamma_formula, 8)
            )
        return report

    @classmethod
    def fit_gamma(cls, z0: mpmath.mpf, saturated: Series, low: int, high: int) -> mpmath.mpf:
        """ Fit g_n = [z^n]S n^{3/2} z0^n = gamma + c / n by least squares over low..high
        Args:
            z0 (mpmath.mpf):
            saturated (Series):
            low (int):
            high (int):
        Returns:
            mpmath.mpf:     Intercept gamma
        """
        if not 1 <= low < high <= saturated.get_truncation():
            raise OutOfRangeException(f"Fit window {low}..{high} outside 1..{saturated.get_truncation()}")
        sizes = range(low, high + 1)
        scaled = [
            float(mpmath.mpf(saturated.get_coefficient(n)) * mpmath.mpf(n) ** 1.5 * z0 ** n)
            for n in sizes
        ]
        inverse = numpy.array([1.0 / n for n in sizes])
        slope, intercept = numpy.polyfit(inverse, numpy.array(scaled), 1)
        logger.debug("Gamma fit over %d..%d: intercept %.10f slope %.6f", low, high, intercept, slope)
        return mpmath.mpf(float(intercept))

    @classmethod
    def asymptotic_count(cls, report: SingularityReport, n: int) -> mpmath.mpf:
        """ Get gamma n^{-3/2} z0^{-n}
        Args:
            report (SingularityReport):
            n (int):
        Returns:
            mpmath.mpf
        """
        if n < 1:
            raise OutOfRangeException(f"Size must be positive, got {n}")
        return report.get_gamma() * mpmath.mpf(n) ** -1.5 * report.get_z0() ** -n

    def count_ratio(self, report: SingularityReport, saturated: Series, n: int) -> mpmath.mpf:
        """ Get exact [z^n]S over the asymptotic count
        Args:
            report (SingularityReport):
            saturated (Series):
            n (int):
        Returns:
            mpmath.mpf
        """
        if n > saturated.get_truncation():
            raise OutOfRangeException(f"Size {n} beyond truncation {saturated.get_truncation()}")
        return mpmath.mpf(saturated.get_coefficient(n)) / self.asymptotic_count(report, n)

    def __candidates(self, dps: int) -> List[Tuple[mpmath.mpf, mpmath.mpf]]:
        # R eliminated; each positive root z of the resultant paired with the roots of P_R(z, .)
        resultant = sympy.Poly(sympy.resultant(POLYNOMIAL, sympy.diff(POLYNOMIAL, R), R), Z)
        candidates = []
        for root in resultant.real_roots():
            z_value = mpmath.mpf(str(root.evalf(dps)))
            if not 0 < z_value < 1:
                continue
            quadratic = [3, 2 * (z_value ** 2 - 2), 1 - z_value ** 2]
            r_values = [
                mpmath.re(value) for value in mpmath.polyroots(quadratic, extraprec=dps)
                if abs(mpmath.im(value)) < mpmath.mpf(10) ** (-dps // 2)
            ]
            r_values = [value for value in r_values if value > 0]
            r_values.sort(key=lambda value: abs(self.__p(z_value, value)))
            candidates.extend((z_value, value) for value in r_values[:1])
        return candidates

from typing import Dict
import mpmath


class SingularityReport:
    """ Object representing the dominant singularity of S and the coefficient constant
    """
    TOLERANCE = 0.02

    def __init__(self, **kwargs):
        """ Constructor for SingularityReport
        Args:
            **kwargs:               Report fields
                z0 (mpmath.mpf)                     - Dominant singularity
                r0 (mpmath.mpf)                     - R at z0
                pz (mpmath.mpf)                     - dP/dz at (z0, r0)
                prr (mpmath.mpf)                    - d2P/dR2 at (z0, r0)
                gamma_fit (mpmath.mpf)              - Fitted constant of [z^n]S ~ gamma n^-3/2 z0^-n
                gamma_formula (mpmath.mpf)          - Square-root transfer constant
                gamma_normalization (mpmath.mpf)    - Inverse of the proof normalization
                precision (int)                     - Decimal digits
        """
        self.__z0: mpmath.mpf = kwargs.get("z0")
        self.__r0: mpmath.mpf = kwargs.get("r0")
        self.__pz: mpmath.mpf = kwargs.get("pz")
        self.__prr: mpmath.mpf = kwargs.get("prr")
        self.__gamma_fit: mpmath.mpf = kwargs.get("gamma_fit")
        self.__gamma_formula: mpmath.mpf = kwargs.get("gamma_formula")
        self.__gamma_normalization: mpmath.mpf = kwargs.get("gamma_normalization")
        self.__precision: int = kwargs.get("precision")

    def get_z0(self) -> mpmath.mpf:
        return self.__z0

    def get_r0(self) -> mpmath.mpf:
        return self.__r0

    def get_pz(self) -> mpmath.mpf:
        return self.__pz

    def get_prr(self) -> mpmath.mpf:
        return self.__prr

    def get_gamma(self) -> mpmath.mpf:
        """ Get authoritative gamma, the fitted value when present
        Returns:
            mpmath.mpf
        """
        return self.__gamma_fit if self.__gamma_fit is not None else self.__gamma_formula

    def get_gamma_fit(self) -> mpmath.mpf:
        return self.__gamma_fit

    def get_gamma_formula(self) -> mpmath.mpf:
        return self.__gamma_formula

    def get_gamma_normalization(self) -> mpmath.mpf:
        return self.__gamma_normalization

    def get_precision(self) -> int:
        return self.__precision

    def is_disagreeing(self) -> bool:
        """ Check whether fitted and closed-form gamma differ by more than 2%
        Returns:
            bool
        """
        if self.__gamma_fit is None:
            return False
        return abs(self.__gamma_fit / self.__gamma_formula - 1) > self.TOLERANCE

    def get_dict(self) -> Dict[str, any]:
        """ Get dict of object, reals as decimal strings
        Returns:
            Dict[str, any]
        """
        digits = self.__precision

        def text(value):
            return None if value is None else mpmath.nstr(value, digits)

        return {
            "z0": text(self.__z0),
            "r0": text(self.__r0),
            "pz": text(self.__pz),
            "prr": text(self.__prr),
            "gamma_fit": text(self.__gamma_fit),
            "gamma_formula": text(self.__gamma_formula),
            "gamma_normalization": text(self.__gamma_normalization),
            "disagreement": self.is_disagreeing(),
            "precision": self.__precision
        }

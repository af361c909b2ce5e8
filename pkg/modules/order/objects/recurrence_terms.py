from modules.series.objects.series import Series


class RecurrenceTerms:
    """ Object holding the R-only factors shared by every level of the order recurrences
    """
    def __init__(self, **kwargs):
        """ Constructor for RecurrenceTerms
        Args:
            **kwargs:               Precomputed series
                r (Series)                      - R
                cubic (Series)                  - -R - z^2, factor of R_p^3
                quadratic (Series)              - -3R + 3R^2 + 3Rz^2 - z^2, factor of R_p^2
                denominator_quadratic (Series)  - 3R - 3
                denominator_linear (Series)     - 6R - 3 - 3R^2 + z^2
                denominator_constant (Series)   - (R - 1) P_R
                s_constant (Series)             - 1 + 2z^2 + 2z - 2R - 2Rz - 2Rz^2 + R^2
                s_linear (Series)               - 1 + z + z^2 - R
                s_denominator (Series)          - (R - 1)^2
        """
        self.__terms = dict(kwargs)

    def get(self, name: str) -> Series:
        return self.__terms[name]

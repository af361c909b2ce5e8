from modules.series.objects.series import Series


class OrderLevel:
    """ Object representing the order-filtered series of one level p
    """
    def __init__(self, p: int, s_series: Series, r_series: Series):
        """ Constructor for OrderLevel
        Args:
            p (int):                Order threshold
            s_series (Series):      S_p, saturated structures of order >= p
            r_series (Series):      R_p, closed structures of order >= p
        """
        self.__p: int = p
        self.__s_series: Series = s_series
        self.__r_series: Series = r_series

    def get_p(self) -> int:
        return self.__p

    def get_s_series(self) -> Series:
        return self.__s_series

    def get_r_series(self) -> Series:
        return self.__r_series
